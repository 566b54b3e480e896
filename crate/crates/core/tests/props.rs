//! Property-based tests: scale invariance of the orthogonality relation,
//! exactness of the p = 2 evaluation, sphere-point normalization, and float
//! formatting round trips.

use mgeo_core::jsonfmt::format_f64;
use mgeo_core::orthogonality::classify;
use mgeo_core::spaces::{builtin_space, sphere_point_2d, NormedSpace, Vector};
use mgeo_core::Tolerances;
use proptest::prelude::*;

fn space_strategy() -> impl Strategy<Value = NormedSpace> {
    prop_oneof![
        Just(builtin_space("l1").unwrap()),
        Just(builtin_space("l2").unwrap()),
        Just(builtin_space("linf").unwrap()),
        Just(builtin_space("lp:3").unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Birkhoff orthogonality is scale-invariant: classification of
    /// (αx, βy) equals that of (x, y) for nonzero α, β.
    #[test]
    fn relation_is_scale_invariant(
        space in space_strategy(),
        theta in 0.0..std::f64::consts::PI,
        offset in 0.05..3.0f64,
        alpha in prop_oneof![0.05..5.0f64, -5.0..-0.05f64],
        beta in prop_oneof![0.05..5.0f64, -5.0..-0.05f64],
    ) {
        let tol = Tolerances::default();
        let x = sphere_point_2d(&space, theta).unwrap();
        let y = sphere_point_2d(&space, theta + offset).unwrap();
        let base = classify(&space, &x, &y, &tol).unwrap();
        let scaled = classify(&space, &x.scale(alpha), &y.scale(beta), &tol).unwrap();
        prop_assert_eq!(base.relation, scaled.relation);
    }

    /// For an exactly flat minimum the sublevel interval endpoints rescale
    /// by α/β (here the sup-norm pair with plateau [0, 2]).
    #[test]
    fn flat_interval_rescales_on_plateaus(
        alpha in 0.1..4.0f64,
        beta in 0.1..4.0f64,
    ) {
        let linf = builtin_space("linf").unwrap();
        let tol = Tolerances::default();
        let x = Vector::xy(1.0, 1.0).unwrap().scale(alpha);
        let y = Vector::xy(-1.0, 0.0).unwrap().scale(beta);
        let v = classify(&linf, &x, &y, &tol).unwrap();
        let (lo, hi) = v.min_result.flat_interval.unwrap();
        let r = alpha / beta;
        prop_assert!((lo - 0.0).abs() <= 1e-6 * (1.0 + r));
        prop_assert!((hi - 2.0 * r).abs() <= 1e-6 * (1.0 + r));
    }

    /// The general-p evaluation path at p = 2 matches the explicit
    /// Euclidean formula.
    #[test]
    fn p2_matches_explicit_euclidean(
        coords in prop::collection::vec(-100.0..100.0f64, 1..6),
    ) {
        let space = NormedSpace::lp(2.0, coords.len()).unwrap();
        let v = Vector::new(coords.clone()).unwrap();
        let explicit = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        let got = space.norm(&v).unwrap();
        prop_assert!((got - explicit).abs() <= 1e-12 * (1.0 + explicit));
    }

    /// Sphere points stay on the sphere for any angle.
    #[test]
    fn sphere_points_are_unit(
        which in 0usize..4,
        theta in -50.0..50.0f64,
    ) {
        let names = ["l2", "linf", "lp:1.5", "stadium"];
        let space = builtin_space(names[which]).unwrap();
        let p = sphere_point_2d(&space, theta).unwrap();
        prop_assert!((space.norm(&p).unwrap() - 1.0).abs() <= 1e-10);
    }

    /// 17-significant-digit formatting round-trips every finite f64.
    #[test]
    fn float_formatting_round_trips(x in prop::num::f64::NORMAL) {
        let back: f64 = format_f64(x).parse().unwrap();
        prop_assert_eq!(back, x);
    }
}
