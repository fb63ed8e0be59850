use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use realforms::autgroup::{
    conjugate, gl2z_involution_class, is_cocycle, pgl2_cocycle_epsilon, reduce_halftorus_cocycle, GroupElement,
    HalfTorusAut, InvolutionClass, Mat2, MonomialAut, PsiElement,
};
use realforms::invariants::{iso_test, Field};
use realforms::poly::{parse_poly, sturm_count, Interval};
use realforms::{sample, CycloNum, UniPoly};

fn seeded() -> impl Strategy<Value = ChaCha8Rng> {
    any::<u64>().prop_map(ChaCha8Rng::seed_from_u64)
}

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]), prop::collection::vec((-5i64..=5, 1i64..=4), 1..5)).prop_map(
        |(order, terms)| {
            terms.iter().enumerate().fold(CycloNum::zero(), |acc, (k, &(n, d))| {
                &acc + &(&CycloNum::zeta_pow(order, k as i64).unwrap() * &CycloNum::from_ratio(n, d))
            })
        },
    )
}

fn int_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-4i64..=4, 1..7).prop_map(|c| UniPoly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn json_round_trip_of_scalars(a in cyclo()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<CycloNum>(&text).unwrap(), a);
    }

    #[test]
    fn display_reparses(p in int_poly(), k in 0i64..4) {
        let p = p.scale(&CycloNum::zeta_pow(4, k).unwrap());
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn sturm_counts_distinct_rational_roots(roots in prop::collection::vec(-6i64..=6, 1..6)) {
        let p = roots.iter().fold(UniPoly::one(), |acc, &r| &acc * &UniPoly::from_ints(&[-r, 1]));
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(sturm_count(&p, &Interval::WholeLine).unwrap(), distinct.len());
    }

    #[test]
    fn isomorphism_is_found_for_affine_images(p in int_poly(), a in 1i64..4, b in -3i64..=3, l in 1i64..5) {
        prop_assume!(p.degree().unwrap_or(0) >= 2);
        let (a, b, l) = (CycloNum::from_int(a), CycloNum::from_ratio(b, 2), CycloNum::from_int(l));
        let q = p.compose_affine(&a, &b).scale(&l);
        let w = iso_test(&p, &q, Field::Rationals).unwrap().expect("isomorphic");
        prop_assert!(w.verify(&p, &q));
        let w = iso_test(&q, &p, Field::GaussianRationals).unwrap().expect("isomorphic");
        prop_assert!(w.verify(&q, &p));
    }

    #[test]
    fn gl2z_round_trip(mut rng in seeded(), k in 0usize..4) {
        let class = [InvolutionClass::Identity, InvolutionClass::Sigma1, InvolutionClass::Sigma2, InvolutionClass::Sigma3][k];
        let b = sample::gl2z(&mut rng);
        let m = b.mul(&class.matrix()).mul(&b.inverse());
        let (got, p) = gl2z_involution_class(&m).unwrap();
        prop_assert_eq!(got, class);
        prop_assert_eq!(p.inverse().mul(&m).mul(&p), class.matrix());
    }

    #[test]
    fn epsilon_is_conjugation_invariant(mut rng in seeded(), twisted in any::<bool>(), k in 0i64..8) {
        let a = if twisted { Mat2::from_ints(0, -1, 1, 0) } else { Mat2::identity() };
        let b = Mat2::new(sample::gaussian(&mut rng), sample::gaussian(&mut rng), sample::gaussian(&mut rng), sample::gaussian(&mut rng));
        prop_assume!(!b.det().is_zero());
        let mu = CycloNum::zeta_pow(8, k).unwrap();
        let moved = b.inverse().unwrap().mul(&a).mul(&b.conj()).scale(&mu);
        let base = pgl2_cocycle_epsilon(&a).unwrap();
        let r = pgl2_cocycle_epsilon(&moved).unwrap();
        prop_assert_eq!(r.epsilon, base.epsilon);
        prop_assert_eq!(r.epsilon, if twisted { -1 } else { 1 });
    }

    #[test]
    fn psi_json_and_inverse(mut rng in seeded()) {
        let p = UniPoly::from_ints(&[0, 1, 0, 1]);
        let f = sample::psi(&mut rng, &p, 2).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<PsiElement>(&text).unwrap(), f.clone());
        prop_assert!(f.compose(&f.inverse()).is_identity());
        prop_assert!(f.inverse().compose(&f).is_identity());
    }

    #[test]
    fn torus_elements_act_as_maps(mut rng in seeded()) {
        let (f, g) = (sample::monomial(&mut rng), sample::monomial(&mut rng));
        let pt = (CycloNum::from_ratio(2, 3), CycloNum::from_int(-3));
        let (u, v) = g.eval(&pt.0, &pt.1).unwrap();
        prop_assert_eq!(f.eval(&u, &v).unwrap(), f.compose(&g).eval(&pt.0, &pt.1).unwrap());
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<MonomialAut>(&text).unwrap(), f);
    }

    #[test]
    fn halftorus_elements_act_as_maps(mut rng in seeded()) {
        let (f, g) = (sample::halftorus(&mut rng), sample::halftorus(&mut rng));
        let pt = (CycloNum::from_ratio(1, 2), CycloNum::from_int(3));
        let (u, v) = g.eval(&pt.0, &pt.1).unwrap();
        prop_assert_eq!(f.eval(&u, &v).unwrap(), f.compose(&g).eval(&pt.0, &pt.1).unwrap());
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<HalfTorusAut>(&text).unwrap(), f);
    }

    #[test]
    fn halftorus_reduction_is_class_invariant(mut rng in seeded()) {
        let nu = HalfTorusAut { c: sample::laurent(&mut rng), ..HalfTorusAut::translation(Default::default()) };
        // (x + c, y) is a cocycle exactly when c is purely imaginary
        let nu = HalfTorusAut { c: &nu.c - &nu.c.conj(), ..nu };
        prop_assert!(is_cocycle(&nu));
        let theta = sample::halftorus(&mut rng);
        let a = reduce_halftorus_cocycle(&nu).unwrap();
        let b = reduce_halftorus_cocycle(&conjugate(&theta, &nu)).unwrap();
        prop_assert_eq!(a.class, b.class);
    }
}
