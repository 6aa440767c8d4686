use proptest::prelude::*;

use polybn_core::toric_bn::{
    gonality_bound_theorem, min_degree_nonneg_rho, plane_curve_profile, reduce_to_low_rank, rho,
    serre_dual, DivisorHypothesis,
};

fn h(g: i64, d: i64, r: i64) -> DivisorHypothesis {
    DivisorHypothesis::new(g, d, r)
}

#[test]
fn duality_preserves_rho() {
    for g in 0..=20 {
        for d in 0..=(2 * g - 2).max(0) {
            for r in 0..=d {
                let x = h(g, d, r);
                assert_eq!(rho(&serre_dual(&x)), rho(&x), "{x:?}");
                assert_eq!(serre_dual(&serre_dual(&x)), x);
            }
        }
    }
}

#[test]
fn reduction_is_sound() {
    for g in 0..=6 {
        for d in 0..=(2 * g - 2).max(0) {
            for r in 1..=d {
                let x = h(g, d, r);
                match reduce_to_low_rank(&x) {
                    Ok(y) => {
                        assert!(rho(&x) < 0);
                        assert!(rho(&y) < 0, "{x:?} -> {y:?}");
                        assert_eq!(y.g, g);
                        assert!(
                            y.r >= 1 && y.r <= if g < 5 { 1 } else { 2 },
                            "{x:?} -> {y:?}"
                        );
                    }
                    Err(_) => assert!(rho(&x) >= 0, "{x:?}"),
                }
            }
        }
    }
}

#[test]
fn thresholds() {
    for g in 0..=100 {
        assert_eq!(min_degree_nonneg_rho(g, 1), (g + 1) / 2 + 1);
    }
    assert_eq!(rho(&h(5, 4, 2)), -4);
    assert_eq!(gonality_bound_theorem(3).unwrap(), 3);
    assert_eq!(gonality_bound_theorem(12).unwrap(), 7);
    assert_eq!(gonality_bound_theorem(13).unwrap(), 7);
    assert!(gonality_bound_theorem(2).is_err());
    assert!(plane_curve_profile(0).is_err());
}

#[test]
fn plane_curves_respect_the_bound() {
    for d in 4..=40 {
        let (g, gon) = plane_curve_profile(d).unwrap();
        assert!(gon <= gonality_bound_theorem(g).unwrap(), "d = {d}");
    }
}

proptest! {
    #[test]
    fn bound_is_the_largest_integer_below_the_root(g in 3i64..100_000) {
        let b = gonality_bound_theorem(g).unwrap();
        prop_assert!(3 * (b - 2) * (b - 2) <= 8 * g - 20);
        prop_assert!(3 * (b - 1) * (b - 1) > 8 * g - 20);
    }

    #[test]
    fn threshold_is_minimal(g in 0i64..500, r in 1i64..8) {
        let d = min_degree_nonneg_rho(g, r);
        prop_assert!(rho(&h(g, d, r)) >= 0);
        prop_assert!(rho(&h(g, d - 1, r)) < 0);
    }
}
