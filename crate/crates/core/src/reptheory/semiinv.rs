use alloc::format;
use alloc::vec::Vec;

use super::invariants::{check_work, invariant_space, EchelonSpace};
use super::molien::invariant_dimension;
use super::poly::{HomogeneousPolynomial, SubstitutionTable};
use crate::exactnum::Cyclotomic;
use crate::linalg::{self, Rows};
use crate::matgroup::{commutator_subgroup, element_order, FiniteMatrixGroup, GroupView, SquareMatrix, Subgroup};
use crate::{Error, Result};

/// Semiinvariants of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiinvariantDegree {
    /// The degree `d`.
    pub degree: usize,
    /// `s_d`, the dimension of the span of all degree-`d` semiinvariants.
    pub dimension: u64,
    /// A basis of semiinvariants, grouped by character. Empty when only
    /// dimensions were requested.
    pub basis: Vec<HomogeneousPolynomial>,
    /// For each basis element, `χ(g)` for every generator `g` in order.
    pub characters: Vec<Vec<Cyclotomic>>,
}

/// Per-degree semiinvariant data.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SemiinvariantReport {
    /// One record per degree, in increasing order.
    pub degrees: Vec<SemiinvariantDegree>,
}

impl SemiinvariantReport {
    /// `s_d`, if degree `d` was computed.
    pub fn dimension(&self, d: usize) -> Option<u64> {
        self.degrees.iter().find(|r| r.degree == d).map(|r| r.dimension)
    }

    /// Least computed degree with `s_d > 0`.
    pub fn first_nonzero(&self) -> Option<&SemiinvariantDegree> {
        self.degrees.iter().find(|r| r.dimension > 0)
    }
}

/// `s_d = dim (Sym^d V*)^{[G,G]}`.
///
/// The invariants of the derived subgroup form a representation of the
/// abelian quotient `G/[G,G]`, which splits into one-dimensional character
/// spaces. Each of those lines is spanned by a semiinvariant of `G`, and
/// every semiinvariant is `[G,G]`-invariant, so this is the dimension of the
/// span of all degree-`d` semiinvariants.
pub fn semiinv_dimension(g: &FiniteMatrixGroup, d: usize) -> Result<u64> {
    invariant_dimension(&commutator_subgroup(g), d)
}

/// Least `d ≤ max_degree` with `s_d > 0`.
pub fn first_semiinvariant_degree(g: &FiniteMatrixGroup, max_degree: usize) -> Result<Option<usize>> {
    let derived = commutator_subgroup(g);
    let dims = super::molien_prefix(&derived, max_degree)?;
    Ok((1..=max_degree).find(|&d| dims[d] > 0))
}

/// A basis of degree-`d` semiinvariants with their characters.
pub fn semiinv_basis(g: &FiniteMatrixGroup, d: usize, work_bound: u128) -> Result<SemiinvariantDegree> {
    semiinv_basis_with(g, &commutator_subgroup(g), d, work_bound)
}

/// Semiinvariant report for degrees `1..=max_degree`; with `with_basis`
/// false only dimensions are filled in.
pub fn semiinvariant_report(
    g: &FiniteMatrixGroup,
    max_degree: usize,
    with_basis: bool,
    work_bound: u128,
) -> Result<SemiinvariantReport> {
    let derived = commutator_subgroup(g);
    let dims = super::molien_prefix(&derived, max_degree)?;
    if with_basis && max_degree > 0 {
        check_work(monomial_count(g.dim(), max_degree), derived.size(), max_degree, work_bound)?;
    }
    let mut degrees = Vec::with_capacity(max_degree);
    for d in 1..=max_degree {
        if with_basis && dims[d] > 0 {
            degrees.push(semiinv_basis_with(g, &derived, d, work_bound)?);
        } else {
            degrees.push(SemiinvariantDegree { degree: d, dimension: dims[d], basis: Vec::new(), characters: Vec::new() });
        }
    }
    Ok(SemiinvariantReport { degrees })
}

fn monomial_count(n: usize, d: usize) -> usize {
    (1..n).fold(1usize, |acc, k| acc.saturating_mul(d + k) / k)
}

struct Piece {
    vectors: Rows,
    character: Vec<Cyclotomic>,
}

fn combine(vectors: &[Vec<Cyclotomic>], coeffs: &[Cyclotomic], zero: &Cyclotomic) -> Vec<Cyclotomic> {
    let mut out = alloc::vec![zero.clone(); vectors[0].len()];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (slot, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *slot = &*slot + &(c * x);
            }
        }
    }
    out
}

/// Matrix of `f ↦ f∘g⁻¹` on the echelon coordinates of an invariant space.
fn restricted_action(space: &EchelonSpace, g: &SquareMatrix) -> Result<Rows> {
    let table = SubstitutionTable::new(g.dim(), space.basis.degree());
    let images = table.images(&g.inverse()?);
    let zero = Cyclotomic::zero(g.field());
    let r = space.rows.len();
    let mut a: Rows = alloc::vec![alloc::vec![zero.clone(); r]; r];
    for (j, row) in space.rows.iter().enumerate() {
        let moved = combine(&images, row, &zero);
        let coords = space
            .coordinates(&moved)
            .ok_or_else(|| Error::InternalArithmetic(format!("invariant space of the derived subgroup is not stable")))?;
        for (i, c) in coords.into_iter().enumerate() {
            a[i][j] = c;
        }
    }
    Ok(a)
}

fn semiinv_basis_with(
    g: &FiniteMatrixGroup,
    derived: &Subgroup<'_>,
    d: usize,
    work_bound: u128,
) -> Result<SemiinvariantDegree> {
    let space = invariant_space(derived, d, work_bound)?;
    let field = g.field();
    let zero = Cyclotomic::zero(field);
    let r = space.rows.len();
    let empty = SemiinvariantDegree { degree: d, dimension: 0, basis: Vec::new(), characters: Vec::new() };
    if r == 0 {
        return Ok(empty);
    }

    let identity: Rows = SquareMatrix::identity(field, r).rows();
    let mut pieces = alloc::vec![Piece { vectors: identity, character: Vec::new() }];
    for gen in g.generators() {
        let a = restricted_action(&space, gen)?;
        let a_mat = SquareMatrix::from_rows(a.clone())?;
        let k = element_order(&a_mat, g.order())?;
        let step = i64::from(field.conductor() / k);
        let mut next = Vec::new();
        for piece in pieces {
            let images: Rows = piece.vectors.iter().map(|v| linalg::mat_vec(&a, v, field)).collect();
            let mut found = 0;
            for j in 0..k {
                let lambda = Cyclotomic::zeta_pow(field, step * i64::from(j));
                // columns (A − λ)s_l, one per vector of the piece
                let cols: Rows = images
                    .iter()
                    .zip(&piece.vectors)
                    .map(|(img, v)| img.iter().zip(v).map(|(x, y)| x - &(&lambda * y)).collect())
                    .collect();
                let system = linalg::transpose(&cols, r);
                let kernel = linalg::nullspace(&system, piece.vectors.len(), field)?;
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                let vectors = kernel.iter().map(|c| combine(&piece.vectors, c, &zero)).collect();
                let mut character = piece.character.clone();
                character.push(lambda);
                next.push(Piece { vectors, character });
            }
            if found != piece.vectors.len() {
                return Err(Error::InternalArithmetic(format!(
                    "eigenspaces of an abelian action cover {found} of {} dimensions",
                    piece.vectors.len()
                )));
            }
        }
        pieces = next;
    }

    let mut basis = Vec::with_capacity(r);
    let mut characters = Vec::with_capacity(r);
    for piece in pieces {
        let mut polys: Rows = piece.vectors.iter().map(|c| combine(&space.rows, c, &zero)).collect();
        linalg::rref(&mut polys, space.basis.len())?;
        for row in polys {
            basis.push(HomogeneousPolynomial::from_vector(field, &space.basis, &row));
            characters.push(piece.character.clone());
        }
    }
    if basis.len() != r {
        return Err(Error::InternalArithmetic(format!("split {} of {r} semiinvariant dimensions", basis.len())));
    }
    let out = SemiinvariantDegree { degree: d, dimension: r as u64, basis, characters };
    verify_semiinvariants(g, &out)?;
    Ok(out)
}

/// Checks `g·f = χ(g)·f` for every basis element and generator.
pub fn verify_semiinvariants(g: &FiniteMatrixGroup, entry: &SemiinvariantDegree) -> Result<()> {
    for (idx, gen) in g.generators().enumerate() {
        let inv = gen.inverse()?;
        for (f, chi) in entry.basis.iter().zip(&entry.characters) {
            if f.compose(&inv) != f.scale(&chi[idx]) {
                return Err(Error::InternalArithmetic(format!(
                    "{f} is not a semiinvariant with character {} under generator {idx}",
                    chi[idx]
                )));
            }
        }
    }
    Ok(())
}
