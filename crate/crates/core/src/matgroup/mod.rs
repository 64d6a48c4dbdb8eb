//! Finite matrix groups over `ℚ(ζ_N)`: closure from generators, structural
//! subgroups, reflections and element spectra.

mod group;
mod matrix;
mod spectral;
mod subgroup;

pub use group::{closure, element_order, FiniteMatrixGroup, DEFAULT_CLOSURE_CAP};
pub use matrix::SquareMatrix;
pub use spectral::{eigen_multiplicities, in_special_linear, monomial_system, reflections, MonomialSystem, Spectrum};
pub use subgroup::{center_and_scalars, commutator_subgroup, commutator_subgroup_all_pairs, GroupView, Subgroup};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{field, Cyclotomic, CyclotomicField};
    use alloc::sync::Arc;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn z(f: &Arc<CyclotomicField>, e: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(f, e)
    }

    fn quaternion() -> FiniteMatrixGroup {
        let f = field(4).unwrap();
        let i = SquareMatrix::diagonal(&[z(&f, 1), z(&f, 3)]);
        let j = SquareMatrix::from_rows(vec![
            vec![Cyclotomic::zero(&f), Cyclotomic::one(&f)],
            vec![Cyclotomic::from_integer(&f, -1), Cyclotomic::zero(&f)],
        ])
        .unwrap();
        closure(&[i, j], DEFAULT_CLOSURE_CAP).unwrap()
    }

    #[test]
    fn quaternion_structure() {
        let q = quaternion();
        assert_eq!(q.order(), 8);
        let d = commutator_subgroup(&q);
        assert_eq!(d.order(), 2);
        // brute force over all 64 commutators
        assert_eq!(commutator_subgroup_all_pairs(&q).member_positions(), d.member_positions());
        let (center, scalars) = center_and_scalars(&q);
        assert_eq!(center.member_positions(), scalars.member_positions());
        assert_eq!(scalars.order(), 2);
        assert!(in_special_linear(&q));
        assert!(reflections(&q).is_empty());
    }

    #[test]
    fn abelian_groups() {
        let f = field(7).unwrap();
        let g = closure(&[SquareMatrix::diagonal(&[z(&f, 1), z(&f, 2), z(&f, 4)])], 100).unwrap();
        assert_eq!(commutator_subgroup(&g).order(), 1);
        let (center, scalars) = center_and_scalars(&g);
        assert_eq!(center.order(), g.order());
        assert_eq!(scalars.order(), 1);
        let sys = monomial_system(&g).unwrap().unwrap();
        assert_eq!(sys.orbit_sizes, vec![1, 1, 1]);
        assert_eq!(sys.lines[0], vec![Cyclotomic::one(&f), Cyclotomic::zero(&f), Cyclotomic::zero(&f)]);
    }

    #[test]
    fn reflection_examples() {
        let f = field(3).unwrap();
        let one = Cyclotomic::one(&f);
        let refl = SquareMatrix::diagonal(&[one.clone(), one.clone(), z(&f, 1)]);
        assert_eq!(reflections(&closure(&[refl], 10).unwrap()).len(), 2);
        let minus = SquareMatrix::scalar(&Cyclotomic::from_integer(&f, -1), 3);
        assert!(reflections(&closure(&[minus], 10).unwrap()).is_empty());
        let swap = SquareMatrix::permutation(&f, &[0, 2, 1]);
        assert_eq!(reflections(&closure(&[swap.clone()], 10).unwrap()), vec![1]);
        assert!(!in_special_linear(&closure(&[swap], 10).unwrap()));
    }

    #[test]
    fn special_linear_detects_determinant() {
        let f = field(5).unwrap();
        let g = closure(&[SquareMatrix::diagonal(&[z(&f, 1), z(&f, 1)])], 10).unwrap();
        assert!(!in_special_linear(&g));
    }

    #[test]
    fn spectra() {
        let f = field(7).unwrap();
        let one = Cyclotomic::one(&f);
        let m = |a: &SquareMatrix| eigen_multiplicities(a, 100).unwrap();
        assert_eq!(m(&SquareMatrix::identity(&f, 3)), Spectrum { order: 1, multiplicities: vec![(0, 3)] });
        let minus = Cyclotomic::from_integer(&f, -1);
        let d = SquareMatrix::diagonal(&[one.clone(), minus.clone(), minus]);
        assert_eq!(m(&d), Spectrum { order: 2, multiplicities: vec![(0, 1), (1, 2)] });
        let k = SquareMatrix::diagonal(&[z(&f, 1), z(&f, 2), z(&f, 4)]);
        assert_eq!(m(&k), Spectrum { order: 7, multiplicities: vec![(1, 1), (2, 1), (4, 1)] });
        // rational matrix with eigenvalues ±i needs Q(i)
        let f1 = field(1).unwrap();
        let rot = SquareMatrix::from_rows(vec![
            vec![Cyclotomic::zero(&f1), Cyclotomic::from_integer(&f1, -1)],
            vec![Cyclotomic::one(&f1), Cyclotomic::zero(&f1)],
        ])
        .unwrap();
        assert_eq!(m(&rot), Spectrum { order: 4, multiplicities: vec![(1, 1), (3, 1)] });
    }

    #[test]
    fn dihedral_monomial_system() {
        let f = field(5).unwrap();
        let d = SquareMatrix::diagonal(&[z(&f, 1), z(&f, 4)]);
        let swap = SquareMatrix::from_rows(vec![
            vec![Cyclotomic::zero(&f), Cyclotomic::one(&f)],
            vec![Cyclotomic::one(&f), Cyclotomic::zero(&f)],
        ])
        .unwrap();
        let g = closure(&[d, swap], 100).unwrap();
        let sys = monomial_system(&g).unwrap().unwrap();
        assert!(sys.is_transitive());
        let f10 = g.field();
        let axes = vec![
            vec![Cyclotomic::one(f10), Cyclotomic::zero(f10)],
            vec![Cyclotomic::zero(f10), Cyclotomic::one(f10)],
        ];
        assert_eq!(sys.lines, axes);
    }

    #[test]
    fn closure_is_idempotent() {
        let q = quaternion();
        let again = closure(q.elements(), DEFAULT_CLOSURE_CAP).unwrap();
        let mut a: Vec<_> = q.elements().to_vec();
        let mut b: Vec<_> = again.elements().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn products_and_inverses_are_members(a in 0usize..8, b in 0usize..8) {
            let q = quaternion();
            let p = q.element(a) * q.element(b);
            prop_assert!(q.position(&p).is_some());
            let inv = q.element(a).inverse().unwrap();
            prop_assert_eq!(q.position(&inv), Some(q.inverse_of(a)));
        }
    }
}
