use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::exactnum::{Cyclotomic, CyclotomicField};
use crate::linalg::{self, Rows};
use crate::{Error, Result};

/// A square matrix over a cyclotomic field, row-major.
///
/// Ordering and equality are structural on the canonical entries, which is
/// what the group closure uses as its lookup key.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl SquareMatrix {
    /// From rows; all entries must share one field.
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Shape(format!("empty matrix")));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::Shape(format!("row {i} has {} entries, expected {dim}", r.len())));
        }
        let entries: Vec<Cyclotomic> = rows.into_iter().flatten().collect();
        let n = entries[0].conductor();
        if let Some(bad) = entries.iter().find(|e| e.conductor() != n) {
            return Err(Error::ConductorMismatch { left: n, right: bad.conductor() });
        }
        Ok(SquareMatrix { dim, entries })
    }

    /// Identity of size `dim`.
    pub fn identity(field: &Arc<CyclotomicField>, dim: usize) -> Self {
        Self::scalar(&Cyclotomic::one(field), dim)
    }

    /// `λ·I`.
    pub fn scalar(lambda: &Cyclotomic, dim: usize) -> Self {
        let zero = Cyclotomic::zero(lambda.field());
        let mut entries = vec![zero; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = lambda.clone();
        }
        SquareMatrix { dim, entries }
    }

    /// Diagonal matrix.
    pub fn diagonal(diag: &[Cyclotomic]) -> Self {
        let dim = diag.len();
        let zero = Cyclotomic::zero(diag[0].field());
        let mut entries = vec![zero; dim * dim];
        for (i, d) in diag.iter().enumerate() {
            entries[i * dim + i] = d.clone();
        }
        SquareMatrix { dim, entries }
    }

    /// The permutation matrix sending basis vector `e_j` to `e_{perm[j]}`.
    pub fn permutation(field: &Arc<CyclotomicField>, perm: &[usize]) -> Self {
        let dim = perm.len();
        let mut entries = vec![Cyclotomic::zero(field); dim * dim];
        for (j, &i) in perm.iter().enumerate() {
            entries[i * dim + j] = Cyclotomic::one(field);
        }
        SquareMatrix { dim, entries }
    }

    /// Size.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The field of the entries.
    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.entries[0].field()
    }

    /// Conductor of the entry field.
    pub fn conductor(&self) -> u32 {
        self.entries[0].conductor()
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    /// Copy as rows.
    pub fn rows(&self) -> Rows {
        self.entries.chunks(self.dim).map(<[Cyclotomic]>::to_vec).collect()
    }

    /// Product with a shape and field check.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Shape(format!("cannot multiply {0}x{0} by {1}x{1}", self.dim, other.dim)));
        }
        if self.conductor() != other.conductor() {
            return Err(Error::ConductorMismatch { left: self.conductor(), right: other.conductor() });
        }
        let d = self.dim;
        let field = self.field();
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Cyclotomic::zero(field);
                for k in 0..d {
                    let (a, b) = (&self.entries[i * d + k], &other.entries[k * d + j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(SquareMatrix { dim: d, entries })
    }

    /// `M v` for a column vector.
    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        linalg::mat_vec(&self.rows(), v, self.field())
    }

    /// Trace.
    pub fn trace(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.field());
        for i in 0..self.dim {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Cyclotomic {
        let d = self.dim;
        if d == 1 {
            return self.entries[0].clone();
        }
        if d == 2 {
            return &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0));
        }
        let field = self.field().clone();
        let mut m = self.rows();
        let mut det = Cyclotomic::one(&field);
        for col in 0..d {
            let Some(p) = (col..d).find(|&i| !m[i][col].is_zero()) else {
                return Cyclotomic::zero(&field);
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            det = &det * &m[col][col];
            let inv = m[col][col].inv().expect("pivot is nonzero");
            for r in col + 1..d {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..d {
                    let t = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
        det
    }

    /// Inverse, or an error for singular matrices.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.dim;
        let field = self.field().clone();
        let mut aug: Rows = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..d).map(|j| if i == j { Cyclotomic::one(&field) } else { Cyclotomic::zero(&field) }));
                row
            })
            .collect();
        let pivots = linalg::rref(&mut aug, 2 * d)?;
        if pivots.len() < d || pivots[d - 1] >= d {
            return Err(Error::DivByZero);
        }
        let entries = aug.into_iter().flat_map(|row| row.into_iter().skip(d)).collect();
        Ok(SquareMatrix { dim: d, entries })
    }

    /// Non-negative power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.field(), self.dim);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|s| s.is_one())
    }

    /// `Some(λ)` when the matrix is `λ·I`.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        let d = self.dim;
        let lambda = &self.entries[0];
        for i in 0..d {
            for j in 0..d {
                let e = &self.entries[i * d + j];
                let ok = if i == j { e == lambda } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(lambda.clone())
    }

    /// `M − λ·I`.
    pub fn minus_scalar(&self, lambda: &Cyclotomic) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            let k = i * self.dim + i;
            out.entries[k] = &out.entries[k] - lambda;
        }
        out
    }

    /// Multiplies every entry by `λ`.
    pub fn scale(&self, lambda: &Cyclotomic) -> Self {
        SquareMatrix { dim: self.dim, entries: self.entries.iter().map(|e| e * lambda).collect() }
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows(), self.dim).expect("nonzero pivots are invertible")
    }

    /// Same matrix over `ℚ(ζ_m)` with `n | m`.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Result<Self> {
        let entries = self.entries.iter().map(|e| e.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(SquareMatrix { dim: self.dim, entries })
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let entries = (0..d * d).map(|k| self.entries[(k % d) * d + k / d].clone()).collect();
        SquareMatrix { dim: d, entries }
    }
}

impl Mul<&SquareMatrix> for &SquareMatrix {
    type Output = SquareMatrix;
    /// Panics on shape or field mismatch; see [`SquareMatrix::checked_mul`].
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        match self.checked_mul(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "] over Q(z{})", self.conductor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field;

    #[test]
    fn det_inverse_and_powers() {
        let f = field(3).unwrap();
        let w = Cyclotomic::zeta_pow(&f, 1);
        let kappa = SquareMatrix::diagonal(&[Cyclotomic::one(&f), w.clone(), &w * &w]);
        assert!(kappa.det().is_one());
        assert!(kappa.pow(3).is_identity());
        assert!(!kappa.pow(2).is_identity());
        let c = SquareMatrix::permutation(&f, &[1, 2, 0]);
        assert!(c.det().is_one());
        let m = &kappa * &c;
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let swap = SquareMatrix::permutation(&f, &[0, 2, 1]);
        assert_eq!(swap.det(), Cyclotomic::from_integer(&f, -1));
        assert_eq!(swap.transpose(), swap);
    }

    #[test]
    fn singular_and_malformed() {
        let f = field(1).unwrap();
        let one = Cyclotomic::one(&f);
        let zero = Cyclotomic::zero(&f);
        let m = SquareMatrix::from_rows(vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]]).unwrap();
        assert!(m.det().is_zero());
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_err());
        assert!(SquareMatrix::from_rows(vec![vec![one.clone(), zero]]).is_err());
    }
}
