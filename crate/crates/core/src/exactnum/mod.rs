//! Exact arithmetic over ℚ and the cyclotomic fields `ℚ(ζ_n)`.

mod cyclotomic;
mod field;
mod literal;

use alloc::sync::Arc;

pub use cyclotomic::Cyclotomic;
pub use field::{cyclotomic_polynomial, lcm, totient, CyclotomicField, MAX_CONDUCTOR};

use crate::Result;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Field operation selector for [`cyc_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    /// `a + b`
    Add,
    /// `a - b`
    Sub,
    /// `a · b`
    Mul,
    /// `a / b`
    Div,
}

/// `Σ cᵢ ζ_n^{eᵢ}` in canonical form.
pub fn cyc_make(conductor: u32, terms: &[(Rational, i64)]) -> Result<Cyclotomic> {
    let field = CyclotomicField::new(conductor)?;
    Ok(Cyclotomic::from_terms(&field, terms))
}

/// Exact field arithmetic on two values of the same conductor.
pub fn cyc_arith(a: &Cyclotomic, b: &Cyclotomic, op: ArithOp) -> Result<Cyclotomic> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// Convenience: a field by conductor.
pub fn field(conductor: u32) -> Result<Arc<CyclotomicField>> {
    CyclotomicField::new(conductor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use alloc::vec::Vec;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn int(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let i = cyc_make(4, &[(int(1), 1)]).unwrap();
        let sq = cyc_arith(&i, &i, ArithOp::Mul).unwrap();
        assert_eq!(sq.as_rational(), Some(int(-1)));
    }

    #[test]
    fn sum_of_cube_roots_vanishes() {
        let a = cyc_make(3, &[(int(1), 1)]).unwrap();
        let b = cyc_make(3, &[(int(1), 2)]).unwrap();
        let c = cyc_make(3, &[(int(1), 0)]).unwrap();
        let s = cyc_arith(&cyc_arith(&a, &b, ArithOp::Add).unwrap(), &c, ArithOp::Add).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.as_rational(), Some(Rational::zero()));
    }

    #[test]
    fn conductor_zero_is_invalid() {
        assert_eq!(cyc_make(0, &[]).unwrap_err(), Error::InvalidConductor(0));
    }

    /// Expands a polynomial in ζ_7 with integer coefficients by hand,
    /// independent of the field code: reduce exponents mod 7, then use
    /// ζ^6 = −(1 + ζ + … + ζ^5).
    fn brute_mod_phi7(exps: &[(i64, usize)]) -> [i64; 6] {
        let mut full = [0i64; 7];
        for &(c, e) in exps {
            full[e % 7] += c;
        }
        let mut out = [0i64; 6];
        for i in 0..6 {
            out[i] = full[i] - full[6];
        }
        out
    }

    #[test]
    fn gauss_period_of_seven() {
        let f = field(7).unwrap();
        let eta = cyc_make(7, &[(int(1), 1), (int(1), 2), (int(1), 4)]).unwrap();
        let eta_bar = eta.conj();
        // conj(η) = ζ^3 + ζ^5 + ζ^6
        let expected: Vec<Rational> = brute_mod_phi7(&[(1, 3), (1, 5), (1, 6)]).iter().map(|&c| int(c)).collect();
        assert_eq!(eta_bar.coeffs(), expected);
        assert_eq!(eta_bar, &(-&eta) - &Cyclotomic::one(&f));
        let sum = &eta + &eta_bar;
        assert_eq!(sum.as_rational(), Some(int(-1)));
        // η·η̄ expands to nine terms ζ^{a-b}
        let mut prod_terms = Vec::new();
        for a in [1, 2, 4] {
            for b in [1, 2, 4] {
                prod_terms.push((1, (7 + a - b) as usize));
            }
        }
        let brute: Vec<Rational> = brute_mod_phi7(&prod_terms).iter().map(|&c| int(c)).collect();
        let prod = &eta * &eta_bar;
        assert_eq!(prod.coeffs(), brute);
        assert_eq!(prod.as_rational(), Some(int(2)));
    }

    #[test]
    fn arith_examples() {
        let f3 = field(3).unwrap();
        let z3 = Cyclotomic::zeta_pow(&f3, 1);
        let z3sq = Cyclotomic::zeta_pow(&f3, 2);
        assert!((&z3 * &z3sq).is_one());
        assert_eq!((&z3 + &z3sq).as_rational(), Some(int(-1)));
        assert_eq!(z3.conj(), &(-&z3) - &Cyclotomic::one(&f3));

        let f8 = field(8).unwrap();
        let inv = cyc_arith(&Cyclotomic::one(&f8), &Cyclotomic::zeta_pow(&f8, 1), ArithOp::Div).unwrap();
        assert_eq!(inv, Cyclotomic::zeta_pow(&f8, 7));
        assert_eq!(inv, -Cyclotomic::zeta_pow(&f8, 3));
        let zero = Cyclotomic::zero(&f8);
        assert_eq!(cyc_arith(&inv, &zero, ArithOp::Div).unwrap_err(), Error::DivByZero);
    }

    #[test]
    fn embed_examples() {
        let f12 = field(12).unwrap();
        let z3 = cyc_make(3, &[(int(1), 1)]).unwrap();
        assert_eq!(z3.embed(&f12).unwrap(), Cyclotomic::zeta_pow(&f12, 4));
        let half = cyc_make(5, &[(Rational::new(5.into(), 2.into()), 0)]).unwrap();
        assert_eq!(half.embed(&field(35).unwrap()).unwrap().as_rational(), Some(Rational::new(5.into(), 2.into())));
        let minus = cyc_make(2, &[(int(1), 1)]).unwrap();
        let f6 = field(6).unwrap();
        assert_eq!(minus.embed(&f6).unwrap(), Cyclotomic::from_integer(&f6, -1));
        assert_eq!(Cyclotomic::zeta_pow(&f6, 3), Cyclotomic::from_integer(&f6, -1));
        assert_eq!(z3.embed(&field(10).unwrap()).unwrap_err(), Error::Embed { from: 3, to: 10 });
    }

    #[test]
    fn as_rational_examples() {
        assert_eq!(cyc_make(5, &[(int(1), 1)]).unwrap().as_rational(), None);
        let all: Vec<(Rational, i64)> = (1..7).map(|e| (int(1), e)).collect();
        assert_eq!(cyc_make(7, &all).unwrap().as_rational(), Some(int(-1)));
        let conj_rational = cyc_make(9, &[(Rational::new(3.into(), 7.into()), 0)]).unwrap();
        assert_eq!(conj_rational.conj(), conj_rational);
    }

    const CONDUCTORS: [u32; 6] = [3, 4, 5, 7, 9, 12];

    fn arb_pair() -> impl Strategy<Value = (u32, Vec<(i64, i64, i64)>, Vec<(i64, i64, i64)>)> {
        let term = (-5i64..=5, 1i64..=4, 0i64..24);
        (
            prop::sample::select(CONDUCTORS.to_vec()),
            prop::collection::vec(term.clone(), 0..5),
            prop::collection::vec(term, 0..5),
        )
    }

    fn build(n: u32, terms: &[(i64, i64, i64)]) -> Cyclotomic {
        let t: Vec<(Rational, i64)> =
            terms.iter().map(|&(p, q, e)| (Rational::new(p.into(), q.into()), e)).collect();
        cyc_make(n, &t).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn field_axioms((n, a, b) in arb_pair(), c in prop::collection::vec((-3i64..=3, 1i64..=3, 0i64..24), 0..4)) {
            let (a, b, c) = (build(n, &a), build(n, &b), build(n, &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(cyc_arith(&(&a * &b), &b, ArithOp::Div).unwrap(), a.clone());
            }
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism((n, a, b) in arb_pair()) {
            let (a, b) = (build(n, &a), build(n, &b));
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn roots_of_unity_have_norm_one(n in prop::sample::select(CONDUCTORS.to_vec()), e in -50i64..50) {
            let f = field(n).unwrap();
            let z = Cyclotomic::zeta_pow(&f, e);
            prop_assert!((&z * &z.conj()).is_one());
        }

        #[test]
        fn embedding_is_a_ring_homomorphism((n, a, b) in arb_pair(), k in 2u32..4) {
            let (a, b) = (build(n, &a), build(n, &b));
            let target = field(n * k).unwrap();
            let ea = a.embed(&target).unwrap();
            let eb = b.embed(&target).unwrap();
            prop_assert_eq!((&a * &b).embed(&target).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).embed(&target).unwrap(), &ea + &eb);
            prop_assert_eq!(a.conj().embed(&target).unwrap(), ea.conj());
        }

        #[test]
        fn literal_round_trip((n, a, _b) in arb_pair()) {
            let a = build(n, &a);
            let f = a.field().clone();
            let text = alloc::format!("{a}");
            prop_assert_eq!(Cyclotomic::parse_literal(&text, &f).unwrap(), a);
        }
    }

    #[test]
    fn one_is_one() {
        assert!(Cyclotomic::one(&field(1).unwrap()).is_one());
        assert!(Rational::one().is_one());
    }
}
