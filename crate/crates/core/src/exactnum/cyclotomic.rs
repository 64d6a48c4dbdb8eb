use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{fits_small, is_positive, CyclotomicField};
use super::Rational;
use crate::{Error, Result};

/// An exact element of `ℚ(ζ_n)`.
///
/// Stored as an integer vector on the power basis over a positive common
/// denominator, with the content of the numerator coprime to the
/// denominator. The representation is canonical, so structural equality,
/// ordering and hashing are all exact.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    /// Zero of `field`.
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic { field: field.clone(), num: vec![BigInt::zero(); field.degree()], den: BigInt::one() }
    }

    /// One of `field`.
    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_integer(field, 1)
    }

    /// An integer constant.
    pub fn from_integer(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = BigInt::from(k);
        z
    }

    /// A rational constant.
    pub fn from_rational(field: &Arc<CyclotomicField>, r: &Rational) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// `ζ_n^e`; negative exponents are fine.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, e: i64) -> Self {
        let rep = field.zeta_power(e);
        Cyclotomic {
            field: field.clone(),
            num: rep.iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// `Σ cᵢ ζ_n^{eᵢ}`, reduced.
    pub fn from_terms(field: &Arc<CyclotomicField>, terms: &[(Rational, i64)]) -> Self {
        let mut acc = Self::zero(field);
        for (c, e) in terms {
            if c.is_zero() {
                continue;
            }
            let term = Self::zeta_pow(field, *e).mul_rational(c);
            acc = &acc + &term;
        }
        acc
    }

    /// Builds directly from power-basis rationals (`φ(n)` of them).
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != field.degree() {
            return Err(Error::Shape(alloc::format!(
                "expected {} coefficients, got {}",
                field.degree(),
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut z = Cyclotomic { field: field.clone(), num, den };
        z.normalize();
        Ok(z)
    }

    /// The field this value lives in.
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Conductor of the field.
    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    /// Power-basis coefficients as reduced rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|c| Rational::new(c.clone(), self.den.clone())).collect()
    }

    /// Coefficient of `ζ^i` on the power basis.
    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    /// Exact zero test.
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// Exact test for the value one.
    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if every non-constant coefficient vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// If this value is `ζ_n^e`, returns the least such `e`.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        (0..self.conductor()).find(|&e| {
            let rep = self.field.zeta_power(i64::from(e));
            rep.iter().zip(&self.num).all(|(&a, b)| *b == BigInt::from(a))
        })
    }

    fn normalize(&mut self) {
        if self.den.is_one() {
            return;
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for c in &mut self.num {
                if !c.is_zero() {
                    *c /= &g;
                }
            }
            self.den /= &g;
        }
        if !is_positive(&self.den) {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.conductor() == other.conductor() {
            Ok(())
        } else {
            Err(Error::ConductorMismatch { left: self.conductor(), right: other.conductor() })
        }
    }

    /// Checked addition.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other, false))
    }

    /// Checked subtraction.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other, true))
    }

    /// Checked multiplication.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Checked division.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let num: Vec<BigInt> = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        let mut z = Cyclotomic { field: self.field.clone(), num, den };
        z.normalize();
        z
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let phi = self.field.degree();
        let num = match (small_vec(&self.num), small_vec(&other.num)) {
            (Some(a), Some(b)) => mul_small(&self.field, &a, &b),
            _ => None,
        }
        .unwrap_or_else(|| {
            let mut prod = vec![BigInt::zero(); 2 * phi - 1];
            for (i, a) in self.num.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.num.iter().enumerate() {
                    if !b.is_zero() {
                        prod[i + j] += a * b;
                    }
                }
            }
            self.field.reduce_big(&mut prod);
            prod
        });
        let den = if self.den.is_one() && other.den.is_one() {
            BigInt::one()
        } else {
            &self.den * &other.den
        };
        let mut z = Cyclotomic { field: self.field.clone(), num, den };
        z.normalize();
        z
    }

    /// Multiplies by a rational scalar.
    pub fn mul_rational(&self, r: &Rational) -> Self {
        let mut z = Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        };
        z.normalize();
        z
    }

    /// Multiplicative inverse as `∏_{σ≠1} σ(a) / N(a)`.
    ///
    /// The product over nontrivial Galois automorphisms is accumulated along
    /// a chain of subgroups of `(ℤ/n)^×` with cyclic quotients, so only a
    /// few dozen multiplications are needed even for large `φ(n)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, &r.recip()));
        }
        let mut norm = self.clone();
        let mut cofactor = Self::one(&self.field);
        for &(k, m) in self.field.galois_tower() {
            let mut conj = norm.clone();
            let mut q = Self::one(&self.field);
            for _ in 1..m {
                conj = conj.galois(i64::from(k));
                q = q.mul_unchecked(&conj);
            }
            norm = norm.mul_unchecked(&q);
            cofactor = cofactor.mul_unchecked(&q);
        }
        let norm = norm.as_rational().ok_or_else(|| {
            Error::InternalArithmetic(alloc::string::String::from("field norm is not rational"))
        })?;
        Ok(cofactor.mul_rational(&norm.recip()))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Applies the Galois automorphism `ζ ↦ ζ^k` (`k` coprime to `n`).
    pub fn galois(&self, k: i64) -> Self {
        let mut acc = vec![BigInt::zero(); self.field.degree()];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let rep = self.field.zeta_power(k * i as i64);
            for (a, &r) in acc.iter_mut().zip(rep.iter()) {
                if r != 0 {
                    *a += c * r;
                }
            }
        }
        let mut z = Cyclotomic { field: self.field.clone(), num: acc, den: self.den.clone() };
        z.normalize();
        z
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The same complex number inside `ℚ(ζ_m)`, where `n | m`.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Result<Self> {
        let (n, m) = (self.conductor(), target.conductor());
        if m % n != 0 {
            return Err(Error::Embed { from: n, to: m });
        }
        if n == m {
            return Ok(Cyclotomic { field: target.clone(), num: self.num.clone(), den: self.den.clone() });
        }
        let step = i64::from(m / n);
        let mut acc = vec![BigInt::zero(); target.degree()];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let rep = target.zeta_power(step * i as i64);
            for (a, &r) in acc.iter_mut().zip(rep.iter()) {
                if r != 0 {
                    *a += c * r;
                }
            }
        }
        let mut z = Cyclotomic { field: target.clone(), num: acc, den: self.den.clone() };
        z.normalize();
        Ok(z)
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }
}

fn small_vec(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(fits_small).collect()
}

fn mul_small(field: &CyclotomicField, a: &[i64], b: &[i64]) -> Option<Vec<BigInt>> {
    let phi = field.degree();
    let mut prod = vec![0i128; 2 * phi - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                prod[i + j] += i128::from(x) * i128::from(y);
            }
        }
    }
    field.reduce_small(&mut prod)?;
    Some(prod.into_iter().map(BigInt::from).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclotomic {}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor()
            .cmp(&other.conductor())
            .then_with(|| self.den.cmp(&other.den))
            .then_with(|| self.num.cmp(&other.num))
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.den.hash(state);
        self.num.hash(state);
    }
}

impl core::fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Cyclotomic<{}>({})", self.conductor(), self)
    }
}

// Operator forms panic on conductor mismatch; use the `checked_*` methods
// when operands may come from different fields.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(n: u32) -> Arc<CyclotomicField> {
        CyclotomicField::new(n).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_of_rational_and_irrational() {
        let f = field(7);
        let z = Cyclotomic::zeta_pow(&f, 1);
        let half_plus_z = &Cyclotomic::from_rational(&f, &q(1, 2)) + &z;
        let inv = half_plus_z.inv().unwrap();
        assert!((&inv * &half_plus_z).is_one());
        assert_eq!(Cyclotomic::zero(&f).inv().unwrap_err(), Error::DivByZero);
    }

    #[test]
    fn big_path_matches_small_path() {
        let f = field(5);
        let huge = Cyclotomic::from_terms(&f, &[(Rational::from_integer(BigInt::from(1u64 << 50)), 1)]);
        let sq = &huge * &huge;
        // (2^50 ζ)^2 = 2^100 ζ^2
        let expected = Cyclotomic::from_terms(&f, &[(Rational::from_integer(BigInt::one() << 100), 2)]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn root_of_unity_exponent() {
        let f = field(12);
        assert_eq!(Cyclotomic::zeta_pow(&f, 7).root_of_unity_exponent(), Some(7));
        assert_eq!(Cyclotomic::from_integer(&f, 2).root_of_unity_exponent(), None);
        assert_eq!(Cyclotomic::from_integer(&f, -1).root_of_unity_exponent(), Some(6));
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Cyclotomic::one(&field(3));
        let b = Cyclotomic::one(&field(4));
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::ConductorMismatch { left: 3, right: 4 });
    }
}
