use alloc::format;
use alloc::vec::Vec;

use crate::exactnum::Cyclotomic;
use crate::matgroup::{FiniteMatrixGroup, Subgroup};
use crate::reptheory::HomogeneousPolynomial;
use crate::{Error, Result};

/// A permutation of the four triangles, `perm[i] = j` meaning `g·t_i ∝ t_j`.
pub type TrianglePermutation = [u8; 4];

/// The two normal subgroups of the Hessian group cut out by its action on
/// the four singular members of the Hesse pencil.
#[derive(Clone, Debug)]
pub struct HesseSubgroups {
    /// Preimage of `{1, (t1 t2)(t3 t4)}`.
    pub e_108: FiniteMatrixGroup,
    /// Preimage of the Klein four-group.
    pub f_216: FiniteMatrixGroup,
    /// Triangle permutation of every element of the Hessian group, by position.
    pub triangle_permutations: Vec<TrianglePermutation>,
}

/// The four triangles `x1·x2·x3` and, for `i = 0, 1, 2`,
/// `(x1 + x2 + ω^i x3)(x1 + ω x2 + ω^{2+i} x3)(x1 + ω² x2 + ω^{1+i} x3)`.
pub fn triangles(g: &FiniteMatrixGroup) -> Result<[HomogeneousPolynomial; 4]> {
    let field = g.field();
    let n = i64::from(field.conductor());
    if n % 3 != 0 {
        return Err(Error::CatalogConstruction(format!("conductor {n} does not contain cube roots of unity")));
    }
    let omega = |k: i64| Cyclotomic::zeta_pow(field, k * n / 3);
    let line = |c: [Cyclotomic; 3]| {
        HomogeneousPolynomial::from_terms(field, 3, c.into_iter().enumerate().map(|(i, x)| {
            let mut e = alloc::vec![0; 3];
            e[i] = 1;
            (e, x)
        }))
    };
    let x = |i| HomogeneousPolynomial::variable(field, 3, i);
    let t1 = x(0).mul(&x(1)).mul(&x(2));
    let other = |i: i64| -> Result<HomogeneousPolynomial> {
        Ok(line([omega(0), omega(0), omega(i)])?
            .mul(&line([omega(0), omega(1), omega(2 + i)])?)
            .mul(&line([omega(0), omega(2), omega(1 + i)])?))
    };
    Ok([t1, other(0)?, other(1)?, other(2)?])
}

fn permutation_of(g: &FiniteMatrixGroup, pos: usize, ts: &[HomogeneousPolynomial; 4]) -> Result<TrianglePermutation> {
    let monic: Vec<HomogeneousPolynomial> = ts.iter().map(HomogeneousPolynomial::monic).collect();
    let inv = g.element(g.inverse_of(pos));
    let mut perm = [0u8; 4];
    for (i, t) in ts.iter().enumerate() {
        let image = t.compose(inv).monic();
        let j = monic.iter().position(|m| *m == image).ok_or_else(|| {
            Error::CatalogConstruction(format!("element {pos} does not permute the four triangles"))
        })?;
        perm[i] = j as u8;
    }
    Ok(perm)
}

/// Splits the Hessian group of order 648 by its action on the triangles.
pub fn hesse_subgroups(g648: &FiniteMatrixGroup) -> Result<HesseSubgroups> {
    let ts = triangles(g648)?;
    let perms: Vec<TrianglePermutation> =
        (0..g648.order()).map(|p| permutation_of(g648, p, &ts)).collect::<Result<_>>()?;

    let mut image: Vec<TrianglePermutation> = perms.clone();
    image.sort_unstable();
    image.dedup();
    let even = |p: &TrianglePermutation| {
        let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        inversions % 2 == 0
    };
    if image.len() != 12 || !image.iter().all(even) {
        return Err(Error::CatalogConstruction(format!(
            "image in the symmetric group has order {} and is not the alternating group",
            image.len()
        )));
    }

    let klein_four = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
    let members = |allowed: &[TrianglePermutation]| -> Vec<usize> {
        (0..g648.order()).filter(|&p| allowed.contains(&perms[p])).collect()
    };
    let e = Subgroup::from_sorted(g648, members(&klein_four[..2]));
    let f = Subgroup::from_sorted(g648, members(&klein_four));
    let e_108 = e.to_group()?;
    let f_216 = f.to_group()?;
    for (grp, want) in [(&e_108, 108), (&f_216, 216)] {
        if grp.order() != want {
            return Err(Error::CatalogConstruction(format!("expected a subgroup of order {want}, got {}", grp.order())));
        }
    }
    Ok(HesseSubgroups { e_108, f_216, triangle_permutations: perms })
}
