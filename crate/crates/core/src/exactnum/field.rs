use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Largest conductor accepted. Φ_n is built by repeated exact division,
/// which is quadratic in `n`.
pub const MAX_CONDUCTOR: u32 = 10_000;

/// Conductors up to this size keep a table of reduced powers of ζ.
const POWER_TABLE_LIMIT: u32 = 1024;

/// The cyclotomic field `ℚ(ζ_n)` with its defining polynomial Φ_n.
///
/// Elements are residues of polynomials in ζ modulo Φ_n, stored on the power
/// basis `1, ζ, …, ζ^{φ(n)-1}`. Fields are shared behind an [`Arc`] so every
/// element can reach Φ_n without a global cache.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    phi: usize,
    /// Φ_n, low degree first, monic, `phi + 1` coefficients.
    modulus: Vec<i64>,
    /// `powers[e]` is ζ^e on the power basis, for `e < conductor`.
    powers: Vec<Vec<i64>>,
    /// `(k, m)` pairs: `k` generates `(ℤ/n)^×` modulo the units listed before
    /// it, and `m` is its order modulo them.
    galois_tower: Vec<(u32, u32)>,
}

impl CyclotomicField {
    /// Builds `ℚ(ζ_n)`.
    pub fn new(conductor: u32) -> Result<Arc<Self>> {
        if conductor == 0 || conductor > MAX_CONDUCTOR {
            return Err(Error::InvalidConductor(conductor.into()));
        }
        let big = cyclotomic_polynomial(conductor);
        let modulus = big
            .iter()
            .map(|c| c.to_i64().ok_or(Error::InvalidConductor(conductor.into())))
            .collect::<Result<Vec<_>>>()?;
        let phi = modulus.len() - 1;
        let galois_tower = unit_tower(conductor, phi);
        let mut field = CyclotomicField { conductor, phi, modulus, powers: Vec::new(), galois_tower };
        if conductor <= POWER_TABLE_LIMIT {
            let mut table = Vec::with_capacity(conductor as usize);
            let mut cur = vec![0i64; phi];
            cur[0] = 1;
            for _ in 0..conductor {
                table.push(cur.clone());
                cur = field.times_zeta(&cur);
            }
            field.powers = table;
        }
        Ok(Arc::new(field))
    }

    /// The conductor `n`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `φ(n)`, the degree of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Coefficients of Φ_n, constant term first.
    pub fn cyclotomic_polynomial(&self) -> &[i64] {
        &self.modulus
    }

    /// Generators of `(ℤ/n)^×` with their relative orders along the
    /// subgroup chain they generate.
    pub(crate) fn galois_tower(&self) -> &[(u32, u32)] {
        &self.galois_tower
    }

    /// Multiplies a reduced vector by ζ and reduces again.
    fn times_zeta(&self, v: &[i64]) -> Vec<i64> {
        let phi = self.phi;
        let top = v[phi - 1];
        let mut out = vec![0i64; phi];
        out[1..phi].copy_from_slice(&v[..phi - 1]);
        if top != 0 {
            for (o, m) in out.iter_mut().zip(&self.modulus[..phi]) {
                *o -= top * m;
            }
        }
        out
    }

    /// ζ^e on the power basis; `e` is taken modulo the conductor.
    pub(crate) fn zeta_power(&self, e: i64) -> Cow<'_, [i64]> {
        let e = e.rem_euclid(i64::from(self.conductor)) as usize;
        if let Some(row) = self.powers.get(e) {
            return Cow::Borrowed(row);
        }
        let mut cur = vec![0i64; self.phi];
        if e < self.phi {
            cur[e] = 1;
            return Cow::Owned(cur);
        }
        cur[self.phi - 1] = 1;
        for _ in self.phi - 1..e {
            cur = self.times_zeta(&cur);
        }
        Cow::Owned(cur)
    }

    /// Reduces a dense big-integer polynomial modulo Φ_n in place and
    /// truncates it to `φ(n)` coefficients.
    pub(crate) fn reduce_big(&self, v: &mut Vec<BigInt>) {
        let phi = self.phi;
        if v.len() < phi {
            v.resize(phi, BigInt::zero());
        }
        for i in (phi..v.len()).rev() {
            let c = core::mem::take(&mut v[i]);
            if c.is_zero() {
                continue;
            }
            for (j, &m) in self.modulus[..phi].iter().enumerate() {
                match m {
                    0 => {}
                    1 => v[i - phi + j] -= &c,
                    -1 => v[i - phi + j] += &c,
                    _ => v[i - phi + j] -= &c * m,
                }
            }
        }
        v.truncate(phi);
    }

    /// Same as [`reduce_big`](Self::reduce_big) on machine integers; `None` on
    /// overflow.
    pub(crate) fn reduce_small(&self, v: &mut Vec<i128>) -> Option<()> {
        let phi = self.phi;
        if v.len() < phi {
            v.resize(phi, 0);
        }
        for i in (phi..v.len()).rev() {
            let c = core::mem::take(&mut v[i]);
            if c == 0 {
                continue;
            }
            for (j, &m) in self.modulus[..phi].iter().enumerate() {
                if m != 0 {
                    let t = c.checked_mul(i128::from(m))?;
                    v[i - phi + j] = v[i - phi + j].checked_sub(t)?;
                }
            }
        }
        v.truncate(phi);
        Some(())
    }
}

fn unit_tower(n: u32, phi: usize) -> Vec<(u32, u32)> {
    let n64 = u64::from(n);
    let mut member = vec![false; n as usize];
    member[(1 % n) as usize] = true;
    let mut elements = vec![1 % n];
    let mut tower = Vec::new();
    for k in 2..n {
        if elements.len() == phi {
            break;
        }
        if k.gcd(&n) != 1 || member[k as usize] {
            continue;
        }
        let mut m = 1u32;
        let mut power = u64::from(k);
        while !member[power as usize] {
            m += 1;
            power = power * u64::from(k) % n64;
        }
        let base = elements.clone();
        let mut shift = 1u64;
        for _ in 1..m {
            shift = shift * u64::from(k) % n64;
            for &h in &base {
                let x = (shift * u64::from(h) % n64) as usize;
                member[x] = true;
                elements.push(x as u32);
            }
        }
        tower.push((k, m));
    }
    tower
}

/// Φ_n with integer coefficients, constant term first, from
/// `Φ_n = (x^n − 1) / ∏_{d | n, d < n} Φ_d` by exact division.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut memo: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    for &d in &divisors {
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = -BigInt::one();
        poly[d as usize] = BigInt::one();
        for (&e, phi_e) in memo.iter() {
            if d % e == 0 && e < d {
                poly = exact_div_monic(&poly, phi_e);
            }
        }
        memo.insert(d, poly);
    }
    memo.remove(&n).expect("n divides itself")
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// Euler's totient.
pub fn totient(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Least common multiple on `u32`, `None` on overflow.
pub fn lcm(a: u32, b: u32) -> Option<u32> {
    let l = u64::from(a).lcm(&u64::from(b));
    u32::try_from(l).ok()
}

pub(crate) fn fits_small(v: &BigInt) -> Option<i64> {
    const BOUND: i64 = 1 << 40;
    let x = v.to_i64()?;
    (x.abs() < BOUND).then_some(x)
}

pub(crate) fn is_positive(v: &BigInt) -> bool {
    v.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: u32) -> Vec<i64> {
        cyclotomic_polynomial(n).iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(small(1), [-1, 1]);
        assert_eq!(small(2), [1, 1]);
        assert_eq!(small(3), [1, 1, 1]);
        assert_eq!(small(4), [1, 0, 1]);
        assert_eq!(small(8), [1, 0, 0, 0, 1]);
        assert_eq!(small(12), [1, 0, -1, 0, 1]);
        // first conductor with a coefficient of absolute value 2
        assert!(small(105).contains(&-2));
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..200 {
            let f = CyclotomicField::new(n).unwrap();
            assert_eq!(f.degree() as u32, totient(n), "n = {n}");
        }
    }

    #[test]
    fn zeta_to_the_conductor_is_one() {
        for n in [1, 2, 3, 5, 9, 12, 36, 84] {
            let f = CyclotomicField::new(n).unwrap();
            let mut cur = f.zeta_power(0).into_owned();
            for _ in 0..n {
                cur = f.times_zeta(&cur);
            }
            assert_eq!(cur, f.zeta_power(0).as_ref());
        }
    }

    #[test]
    fn rejects_bad_conductors() {
        assert_eq!(CyclotomicField::new(0).unwrap_err(), Error::InvalidConductor(0));
        assert!(CyclotomicField::new(MAX_CONDUCTOR + 1).is_err());
    }
}
