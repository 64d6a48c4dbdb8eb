//! Exact Gaussian elimination over a cyclotomic field.
//!
//! Matrices are plain row vectors of [`Cyclotomic`]; callers pass the field
//! and column count so that empty matrices are still well-typed.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::exactnum::{Cyclotomic, CyclotomicField};
use crate::Result;

/// Dense row-major matrix as rows.
pub type Rows = Vec<Vec<Cyclotomic>>;

/// Reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns. Zero rows are dropped.
pub fn rref(rows: &mut Rows, ncols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv()?;
        if !inv.is_one() {
            for x in rows[r][col..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(below.iter_mut()) {
            let factor = other[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, p) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Ok(pivots)
}

/// Rank of a matrix.
pub fn rank(rows: &[Vec<Cyclotomic>], ncols: usize) -> Result<usize> {
    let mut m = rows.to_vec();
    Ok(rref(&mut m, ncols)?.len())
}

/// A basis of `{v : A v = 0}` (column vectors), one vector per free column,
/// each with a 1 in its free position.
pub fn nullspace(rows: &[Vec<Cyclotomic>], ncols: usize, field: &Arc<CyclotomicField>) -> Result<Rows> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols)?;
    let mut basis = Vec::new();
    let mut is_pivot = alloc::vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = alloc::vec![Cyclotomic::zero(field); ncols];
        v[free] = Cyclotomic::one(field);
        for (row, &p) in m.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -&row[free];
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Row space basis in reduced echelon form, together with pivot columns.
pub fn row_space(rows: &[Vec<Cyclotomic>], ncols: usize) -> Result<(Rows, Vec<usize>)> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols)?;
    Ok((m, pivots))
}

/// Transpose of an `nrows × ncols` matrix.
pub fn transpose(rows: &[Vec<Cyclotomic>], ncols: usize) -> Rows {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

/// Matrix product `A B`.
pub fn mat_mul(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>], field: &Arc<CyclotomicField>) -> Rows {
    let ncols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    let mut acc = Cyclotomic::zero(field);
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(x * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Matrix-vector product `A v`.
pub fn mat_vec(a: &[Vec<Cyclotomic>], v: &[Cyclotomic], field: &Arc<CyclotomicField>) -> Vec<Cyclotomic> {
    a.iter()
        .map(|row| {
            let mut acc = Cyclotomic::zero(field);
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}

/// True when the two row sets span the same subspace.
pub fn same_row_space(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>], ncols: usize) -> Result<bool> {
    let (ra, _) = row_space(a, ncols)?;
    let (rb, _) = row_space(b, ncols)?;
    Ok(ra == rb)
}
