use alloc::format;
use alloc::vec::Vec;

use super::poly::{HomogeneousPolynomial, MonomialBasis, SubstitutionTable};
use super::molien::invariant_dimension;
use crate::exactnum::Cyclotomic;
use crate::linalg::{self, Rows};
use crate::matgroup::GroupView;
use crate::{Error, Result};

/// Default limit on `|monomials|²·|H|` for explicit bases.
pub const DEFAULT_WORK_BOUND: u128 = 100_000_000;

/// An invariant subspace of `Sym^d V*` in reduced row echelon form on the
/// monomial basis.
#[derive(Clone, Debug)]
pub(crate) struct EchelonSpace {
    pub basis: MonomialBasis,
    pub rows: Rows,
    pub pivots: Vec<usize>,
}

impl EchelonSpace {
    /// Coordinates of `v` on `rows`, or `None` when `v` is not in the span.
    pub fn coordinates(&self, v: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
        let coords: Vec<Cyclotomic> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let field = v.first()?.field();
        let mut rebuilt = alloc::vec![Cyclotomic::zero(field); v.len()];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in rebuilt.iter_mut().zip(row) {
                if !x.is_zero() {
                    *slot = &*slot + &(c * x);
                }
            }
        }
        (rebuilt == v).then_some(coords)
    }
}

pub(crate) fn check_work(monomials: usize, group: usize, degree: usize, bound: u128) -> Result<()> {
    let work = (monomials as u128) * (monomials as u128) * (group as u128);
    if work > bound {
        return Err(Error::DegreeTooLarge { degree, work, bound });
    }
    Ok(())
}

/// Reynolds projection of every monomial, reduced to echelon form.
pub(crate) fn invariant_space<H: GroupView + ?Sized>(h: &H, d: usize, work_bound: u128) -> Result<EchelonSpace> {
    let g = h.group();
    let table = SubstitutionTable::new(g.dim(), d as u32);
    let n = table.basis().len();
    check_work(n, h.size(), d, work_bound)?;
    let zero = Cyclotomic::zero(g.field());
    let mut acc: Rows = alloc::vec![alloc::vec![zero; n]; n];
    for &pos in h.positions() {
        let images = table.images(g.element(pos));
        for (acc_row, img) in acc.iter_mut().zip(&images) {
            for (slot, x) in acc_row.iter_mut().zip(img) {
                if !x.is_zero() {
                    *slot = &*slot + x;
                }
            }
        }
    }
    let pivots = linalg::rref(&mut acc, n)?;
    let expected = invariant_dimension(h, d)?;
    if pivots.len() as u64 != expected {
        return Err(Error::InternalArithmetic(format!(
            "Reynolds image has dimension {} but the Molien count is {expected}",
            pivots.len()
        )));
    }
    Ok(EchelonSpace { basis: table.basis().clone(), rows: acc, pivots })
}

/// A basis of `(Sym^d V*)^H` by exact Reynolds projection.
///
/// The basis is the reduced row echelon form of the projected monomials, so
/// each polynomial has a distinct leading monomial with coefficient 1.
pub fn invariant_basis<H: GroupView + ?Sized>(h: &H, d: usize, work_bound: u128) -> Result<Vec<HomogeneousPolynomial>> {
    let space = invariant_space(h, d, work_bound)?;
    let field = h.group().field();
    Ok(space.rows.iter().map(|r| HomogeneousPolynomial::from_vector(field, &space.basis, r)).collect())
}
