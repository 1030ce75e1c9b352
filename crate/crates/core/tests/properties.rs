use hopfforge::catalog::catalog_get;
use hopfforge::degeneration::fitting_decompose;
use hopfforge::hopf::double_dual_map;
use hopfforge::invariants::check_isomorphism;
use hopfforge::linalg::Matrix;
use hopfforge::random::{random_transport, rng_from_seed};
use hopfforge::scalars::{parse_scalar, Conductor, CycScalar, Rational};
use proptest::prelude::*;

const CONDUCTORS: [u32; 8] = [1, 2, 3, 4, 5, 6, 8, 12];

fn scalar(c: Conductor) -> impl Strategy<Value = CycScalar> {
    prop::collection::vec((-20i64..=20, 1i64..=6), c.degree()).prop_map(move |parts| {
        let coeffs: Vec<Rational> = parts.into_iter().map(|(n, d)| Rational::new(n, d)).collect();
        CycScalar::from_coeffs(c, &coeffs)
    })
}

fn triple() -> impl Strategy<Value = (CycScalar, CycScalar, CycScalar)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|m| {
        let c = Conductor::new(m);
        (scalar(c), scalar(c), scalar(c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            let inv = a.checked_inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn scalar_text_round_trip((a, _, _) in triple()) {
        let text = a.to_string();
        prop_assert_eq!(parse_scalar(&text, a.conductor()).unwrap(), a);
    }

    #[test]
    fn fitting_invariants(entries in prop::collection::vec(-2i64..=2, 25), rank_cut in 0usize..5) {
        let c = Conductor::new(1);
        // Zero out trailing rows to force singular maps often.
        let phi = Matrix::from_fn(c, 5, 5, |i, j| {
            if i >= 5 - rank_cut { CycScalar::zero(c) } else { CycScalar::from_int(c, entries[i * 5 + j]) }
        });
        let fit = fitting_decompose(&phi);
        let id = Matrix::<CycScalar>::identity(c, 5);
        prop_assert_eq!(fit.p_r.add(&fit.p_n), id);
        prop_assert_eq!(fit.p_r.mul(&fit.p_r), fit.p_r.clone());
        prop_assert!(fit.p_r.mul(&fit.p_n).is_zero());
        prop_assert_eq!(phi.mul(&fit.p_r), fit.p_r.mul(&phi));
        prop_assert_eq!(fit.psi.mul(&phi), fit.p_r.clone());
        prop_assert_eq!(phi.mul(&fit.psi), fit.p_r.clone());
        let nil = fit.p_n.mul(&phi);
        if fit.q == 0 {
            prop_assert!(fit.p_n.is_zero());
        } else {
            prop_assert!(nil.pow(fit.q as u32).is_zero());
            prop_assert!(!nil.pow(fit.q as u32 - 1).mul(&fit.p_n).is_zero());
        }
    }
}

const SMALL: [&str; 8] = ["KZ_3", "KZ_4", "KZ2xZ2", "KS_3", "T_4", "T_9", "KS_3_dual", "Aprime_C4"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transport_preserves_axioms_and_composes(seed in any::<u64>(), which in 0usize..SMALL.len()) {
        let h = catalog_get(SMALL[which]).unwrap();
        let mut rng = rng_from_seed(seed);
        let f = random_transport(&mut rng, h.conductor(), h.dim());
        let g = random_transport(&mut rng, h.conductor(), h.dim());
        let hf = h.transport(&f).unwrap();
        prop_assert!(hf.verify().passed());
        prop_assert_eq!(h.transport(&f.mul(&g)).unwrap(), hf.transport(&g).unwrap());
        prop_assert!(check_isomorphism(&f, &h, &hf).unwrap());
    }

    #[test]
    fn double_dual_returns_home(seed in any::<u64>(), which in 0usize..SMALL.len()) {
        let h = catalog_get(SMALL[which]).unwrap();
        let mut rng = rng_from_seed(seed);
        let h = h.transport(&random_transport(&mut rng, h.conductor(), h.dim())).unwrap();
        let (d1, g1) = h.dual_with_map().unwrap();
        let (d2, g2) = d1.dual_with_map().unwrap();
        prop_assert!(d1.verify().passed());
        let f = double_dual_map(&g1, &g2).unwrap();
        prop_assert!(check_isomorphism(&f, &d2, &h).unwrap());
    }
}
