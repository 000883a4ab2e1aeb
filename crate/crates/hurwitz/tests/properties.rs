//! Property tests for the algebraic invariants: everything here is an
//! exact identity, so a single counterexample is a bug.

use hurwitz::algebra::{multiply, norm_form, AlgebraSignature, Element, SignVector};
use hurwitz::dio::{solution_from_seed, DiophantineFamily, FamilyId};
use hurwitz::matrix;
use hurwitz::transform::{apply, quadratic_forms, verify_norm_power, TransformSpec};
use hurwitz::{Int, Rat};
use num_traits::Zero;
use proptest::prelude::*;

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn elem(v: &[i64]) -> Element {
    Element::from_ints(v).unwrap()
}

fn sig_strategy() -> impl Strategy<Value = AlgebraSignature> {
    prop::sample::select(AlgebraSignature::all())
}

fn coeffs(dim: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_bilinear(sig in sig_strategy(), a in -9i64..=9,
                                  u1 in coeffs(8), u2 in coeffs(8), v in coeffs(8)) {
        let d = sig.dim();
        let (u1, u2, v) = (elem(&u1[..d]), elem(&u2[..d]), elem(&v[..d]));
        let lhs = multiply(&u1.scale(&rat(a)).add(&u2), &v, &sig).unwrap();
        let rhs = multiply(&u1, &v, &sig).unwrap().scale(&rat(a))
            .add(&multiply(&u2, &v, &sig).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn norm_is_multiplicative(sig in sig_strategy(), u in coeffs(8), v in coeffs(8)) {
        let d = sig.dim();
        let (u, v) = (elem(&u[..d]), elem(&v[..d]));
        let w = multiply(&u, &v, &sig).unwrap();
        prop_assert_eq!(
            norm_form(&w, &sig).unwrap(),
            norm_form(&u, &sig).unwrap() * norm_form(&v, &sig).unwrap()
        );
    }

    #[test]
    fn conjugation_reverses_products(sig in sig_strategy(), u in coeffs(8), v in coeffs(8)) {
        let d = sig.dim();
        let (u, v) = (elem(&u[..d]), elem(&v[..d]));
        let j0 = SignVector::conjugation(d);
        let lhs = j0.apply(&multiply(&u, &v, &sig).unwrap());
        let rhs = multiply(&j0.apply(&v), &j0.apply(&u), &sig).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn low_dims_are_associative(dim in prop::sample::select(vec![2usize, 4]),
                                bits in 0u8..4,
                                u in coeffs(4), v in coeffs(4), w in coeffs(4)) {
        let c: Vec<i8> = (0..dim.trailing_zeros())
            .map(|i| if bits & (1 << i) != 0 { 1 } else { -1 })
            .collect();
        let sig = AlgebraSignature::new(dim, &c).unwrap();
        let (u, v, w) = (elem(&u[..dim]), elem(&v[..dim]), elem(&w[..dim]));
        let lhs = multiply(&multiply(&u, &v, &sig).unwrap(), &w, &sig).unwrap();
        let rhs = multiply(&u, &multiply(&v, &w, &sig).unwrap(), &sig).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dim8_is_alternative(bits in 0u8..8, u in coeffs(8), v in coeffs(8)) {
        let c: Vec<i8> = (0..3).map(|i| if bits & (1 << i) != 0 { 1 } else { -1 }).collect();
        let sig = AlgebraSignature::new(8, &c).unwrap();
        let (u, v) = (elem(&u), elem(&v));
        let uu = multiply(&u, &u, &sig).unwrap();
        let lhs = multiply(&u, &multiply(&u, &v, &sig).unwrap(), &sig).unwrap();
        let rhs = multiply(&uu, &v, &sig).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = multiply(&multiply(&v, &u, &sig).unwrap(), &u, &sig).unwrap();
        let rhs = multiply(&v, &uu, &sig).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quadratic_forms_match_apply(sig in sig_strategy(), mask in 0u8..128, u in coeffs(8)) {
        let d = sig.dim();
        let eps = SignVector::from_mask(d, mask & ((1 << (d - 1)) - 1));
        let spec = TransformSpec::new(1, sig, eps).unwrap();
        let u = elem(&u[..d]);
        let forms = quadratic_forms(&spec).unwrap();
        prop_assert_eq!(forms.evaluate(&u), apply(&spec, &u).unwrap());
        // vanishing components really vanish
        let x = apply(&spec, &u).unwrap();
        for &k in forms.vanishing() {
            prop_assert!(x.coeff(k).is_zero());
        }
    }

    #[test]
    fn restriction_consistency(c in prop::collection::vec(prop::sample::select(vec![-1i8, 1]), 3),
                               u in coeffs(4)) {
        // the dim-4 matrix is the principal block of the dim-8 one on
        // elements with no upper-half components
        let sig4 = AlgebraSignature::new(4, &c[..2]).unwrap();
        let sig8 = AlgebraSignature::new(8, &c).unwrap();
        let u4 = elem(&u);
        let mut padded = u.clone();
        padded.extend_from_slice(&[0, 0, 0, 0]);
        let u8v = elem(&padded);
        let h4 = matrix::hurwitz(&u4, &sig4).unwrap();
        let h8 = matrix::hurwitz(&u8v, &sig8).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(h4.get(i, j), h8.get(i, j));
            }
        }
    }

    #[test]
    fn norm_power_law(sig in sig_strategy(), mask in 0u8..128, n in -3i64..=3, u in coeffs(8)) {
        let d = sig.dim();
        let u = elem(&u[..d]);
        prop_assume!(!norm_form(&u, &sig).unwrap().is_zero());
        let eps = SignVector::from_mask(d, mask & ((1 << (d - 1)) - 1));
        let spec = TransformSpec::new(n, sig, eps).unwrap();
        verify_norm_power(&spec, &u).unwrap();
    }

    #[test]
    fn diophantine_homogeneity(t in 1i64..=6, u in coeffs(4)) {
        // degree-2 families scale by t^2
        let fam = DiophantineFamily::new(FamilyId::Eq39Dim4, &[1, -1], 1).unwrap();
        let seed: Vec<Int> = u.iter().map(|&x| Int::from(x)).collect();
        let scaled: Vec<Int> = u.iter().map(|&x| Int::from(x * t)).collect();
        let base = solution_from_seed(&fam, &seed).unwrap();
        let big = solution_from_seed(&fam, &scaled).unwrap();
        let t2 = Int::from(t * t);
        for (b, s) in base.values.iter().zip(&big.values) {
            prop_assert_eq!(b * &t2, s.clone());
        }
    }

    #[test]
    fn degree_n_family_homogeneity(t in 1i64..=4, n in 2i64..=4, c1 in prop::sample::select(vec![-1i8, 1]),
                                   u0 in -6i64..=6, u1 in -6i64..=6) {
        // A, B scale by t^{N+1}; C scales by t^2
        let fam = DiophantineFamily::new(FamilyId::Eq47, &[c1], n).unwrap();
        let base = solution_from_seed(&fam, &[Int::from(u0), Int::from(u1)]).unwrap();
        let big = solution_from_seed(&fam, &[Int::from(u0 * t), Int::from(u1 * t)]).unwrap();
        let tn1 = num_traits::pow::pow(Int::from(t), (n + 1) as usize);
        prop_assert_eq!(&base.values[0] * &tn1, big.values[0].clone());
        prop_assert_eq!(&base.values[1] * &tn1, big.values[1].clone());
        prop_assert_eq!(&base.values[2] * Int::from(t * t), big.values[2].clone());
    }
}
