//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them). Every tolerance is pinned here.

use mgeo_core::basis::{
    max_coefficient, strongly_orthonormal_criterion, strongly_orthonormal_direct, Basis,
};
use mgeo_core::bounds::{bounds_survey, line_min, segment_min};
use mgeo_core::convexity::strict_convexity_probe;
use mgeo_core::orthogonality::{classify, is_birkhoff, orthogonal_companion_2d, Relation};
use mgeo_core::planar::{exhaustive_pair_scan, is_radon};
use mgeo_core::spaces::{
    builtin_space, sphere_point_2d, validate_gauge_convexity, validate_norm, NormedSpace, Vector,
};
use mgeo_core::Tolerances;
use mgeo_oracle::{closed_form_lp_min, grid_min, GridSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

const BUILTINS: [&str; 8] = [
    "l1",
    "l2",
    "linf",
    "lp:1.5",
    "lp:3",
    "lp:4",
    "stadium",
    "quartic_cubic",
];

fn v2(x: f64, y: f64) -> Vector {
    Vector::xy(x, y).unwrap()
}

fn finish(n: u32, desc: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {n}: PASS — {desc}");
    } else {
        println!("criterion {n}: FAIL — {desc}");
        for f in &failures {
            println!("  - {f}");
        }
        panic!("criterion {n} failed:\n{}", failures.join("\n"));
    }
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl Into<String>) {
    if !ok {
        failures.push(msg.into());
    }
}

#[test]
fn criterion_01_paper_golden_numbers() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let linf = builtin_space("linf").unwrap();
    let x = v2(1.0, 1.0);
    let y = v2(-1.0, 0.0);

    let orth = is_birkhoff(&linf, &x, &y, 1e-9).unwrap();
    check(&mut failures, orth, "(1,1) ⊥_B (−1,0) must hold");

    let (t, sv) = segment_min(&linf, &x, &y).unwrap();
    check(
        &mut failures,
        (sv - 1.0 / 3.0).abs() <= 1e-7,
        format!("segment min {sv} ≠ 1/3 ± 1e-7"),
    );
    check(
        &mut failures,
        (t - 1.0 / 3.0).abs() <= 1e-6,
        format!("segment argmin {t} ≠ 1/3 ± 1e-6"),
    );

    let (l, lv) = line_min(&linf, &x, &y).unwrap();
    check(
        &mut failures,
        (lv - 0.5).abs() <= 1e-7,
        format!("line min {lv} ≠ 1/2 ± 1e-7"),
    );
    check(
        &mut failures,
        (l - 0.5).abs() <= 1e-6,
        format!("line argmin {l} ≠ 1/2 ± 1e-6"),
    );

    let elapsed = start.elapsed();
    check(
        &mut failures,
        elapsed.as_secs_f64() < 1.0,
        format!("runtime {elapsed:?} ≥ 1 s"),
    );
    finish(1, "sup-norm golden numbers 1/3 and 1/2", failures);
}

#[test]
fn criterion_02_strong_orthogonality_counterexample() {
    let mut failures = Vec::new();
    let linf = builtin_space("linf").unwrap();
    let verdict = classify(&linf, &v2(1.0, 0.0), &v2(0.0, 1.0), &Tolerances::default()).unwrap();
    check(
        &mut failures,
        verdict.relation == Relation::BirkhoffOnly,
        format!("expected BirkhoffOnly, got {:?}", verdict.relation),
    );
    let (lo, hi) = verdict.min_result.flat_interval.unwrap();
    check(
        &mut failures,
        (lo + 1.0).abs() <= 1e-6 && (hi - 1.0).abs() <= 1e-6,
        format!("flat interval [{lo}, {hi}] ≠ [−1, 1] ± 1e-6"),
    );
    finish(
        2,
        "(1,0) vs (0,1) in the sup norm: Birkhoff but not strongly",
        failures,
    );
}

#[test]
fn criterion_03_strict_convexity_strongness_dichotomy() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let tol = Tolerances::default();
    let pairs = 1000;

    for p in ["lp:1.5", "l2", "lp:3", "lp:4"] {
        let space = builtin_space(p).unwrap();
        let mut strong = 0usize;
        for i in 0..pairs {
            let theta = std::f64::consts::PI * i as f64 / pairs as f64;
            let x = sphere_point_2d(&space, theta).unwrap();
            let y = orthogonal_companion_2d(&space, &x).unwrap();
            let verdict = classify(&space, &x, &y, &tol).unwrap();
            if verdict.relation == Relation::StronglyBirkhoff {
                strong += 1;
            }
        }
        check(
            &mut failures,
            strong == pairs,
            format!("{p}: only {strong}/{pairs} pairs strongly Birkhoff"),
        );
    }

    for p in ["linf", "l1"] {
        let space = builtin_space(p).unwrap();
        let mut birkhoff_only = 0usize;
        for i in 0..pairs {
            let theta = std::f64::consts::PI * i as f64 / pairs as f64;
            let x = sphere_point_2d(&space, theta).unwrap();
            let y = orthogonal_companion_2d(&space, &x).unwrap();
            let verdict = classify(&space, &x, &y, &tol).unwrap();
            check(
                &mut failures,
                verdict.relation != Relation::NotOrthogonal,
                format!("{p}: generated pair at θ index {i} not orthogonal"),
            );
            if verdict.relation == Relation::BirkhoffOnly {
                birkhoff_only += 1;
            }
        }
        check(
            &mut failures,
            birkhoff_only >= 1,
            format!("{p}: no BirkhoffOnly pair among {pairs}"),
        );
    }

    let elapsed = start.elapsed();
    check(
        &mut failures,
        elapsed.as_secs_f64() < 30.0,
        format!("runtime {elapsed:?} ≥ 30 s"),
    );
    finish(
        3,
        "strictly convex ℓp: B ⇒ SB on 1000 pairs; ℓ∞/ℓ₁ show BirkhoffOnly",
        failures,
    );
}

#[test]
fn criterion_04_bounds_floors_and_euclidean_sharpness() {
    let mut failures = Vec::new();
    for name in BUILTINS {
        let space = builtin_space(name).unwrap();
        let survey = bounds_survey(&space, 720).unwrap();
        check(
            &mut failures,
            survey.floor_violations.is_empty(),
            format!(
                "{name}: {} records below the 1/3 or 1/2 floors",
                survey.floor_violations.len()
            ),
        );
        check(
            &mut failures,
            survey.global_segment_min >= 1.0 / 3.0 - 1e-9,
            format!("{name}: global segment min {}", survey.global_segment_min),
        );
        check(
            &mut failures,
            survey.global_line_min >= 0.5 - 1e-9,
            format!("{name}: global line min {}", survey.global_line_min),
        );
        if name == "l2" {
            for r in &survey.records {
                check(
                    &mut failures,
                    (r.segment_min - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-6,
                    format!("l2 segment min {} ≠ 1/√2", r.segment_min),
                );
                check(
                    &mut failures,
                    (r.line_min - 1.0).abs() <= 1e-9,
                    format!("l2 line min {} ≠ 1", r.line_min),
                );
            }
        }
    }
    finish(
        4,
        "1/3 and 1/2 floors over 720 surveyed pairs per builtin; ℓ₂ sharp",
        failures,
    );
}

#[test]
fn criterion_05_basis_criterion_agreement() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let tol = Tolerances::default();

    for p in ["1.5", "2", "3"] {
        for dim in 2..=4 {
            let space = builtin_space(&format!("lp:{p},dim={dim}")).unwrap();
            let basis = Basis::standard(&space).unwrap();
            let direct = strongly_orthonormal_direct(&space, &basis, 4, &tol).unwrap();
            let criterion = strongly_orthonormal_criterion(&space, &basis, 100_000, 7).unwrap();
            check(
                &mut failures,
                direct.ok && criterion.ok,
                format!("lp:{p} dim {dim}: direct {} criterion {}", direct.ok, criterion.ok),
            );
            for i in 0..dim {
                let mc = max_coefficient(&space, &basis, i, 100_000, 7).unwrap();
                check(
                    &mut failures,
                    (mc.value - 1.0).abs() <= 1e-6,
                    format!("lp:{p} dim {dim} index {i}: max Sᵢ = {}", mc.value),
                );
            }
        }
    }

    let l2 = builtin_space("l2").unwrap();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let skew = Basis::new(&l2, vec![v2(1.0, 0.0), v2(s, s)]).unwrap();
    let mc = max_coefficient(&l2, &skew, 0, 100_000, 7).unwrap();
    check(
        &mut failures,
        (mc.value - std::f64::consts::SQRT_2).abs() <= 1e-5,
        format!("skew basis max S₁ = {} ≠ √2 ± 1e-5", mc.value),
    );
    let direct = strongly_orthonormal_direct(&l2, &skew, 4, &tol).unwrap();
    let criterion = strongly_orthonormal_criterion(&l2, &skew, 100_000, 7).unwrap();
    check(
        &mut failures,
        !direct.ok && !criterion.ok,
        format!("skew basis: direct {} criterion {}", direct.ok, criterion.ok),
    );

    let elapsed = start.elapsed();
    check(
        &mut failures,
        elapsed.as_secs_f64() < 60.0,
        format!("runtime {elapsed:?} ≥ 60 s"),
    );
    finish(
        5,
        "max Sᵢ = 1 criterion agrees with the direct definition",
        failures,
    );
}

#[test]
fn criterion_06_stadium_flat_but_line_bound_strict() {
    let mut failures = Vec::new();
    let stadium = builtin_space("stadium").unwrap();

    let probe = strict_convexity_probe(&stadium, 10_000, 1e-9, 0.05, 1);
    check(&mut failures, probe.found_flat(), "no flat found on the stadium");
    if let Some((u, v)) = &probe.flat_witness {
        let on_lid = (u.coords()[1].abs() - 1.0).abs() <= 1e-6
            && (v.coords()[1].abs() - 1.0).abs() <= 1e-6;
        check(
            &mut failures,
            on_lid,
            format!("witness not on y = ±1: {u:?}, {v:?}"),
        );
    }

    let survey = bounds_survey(&stadium, 720).unwrap();
    check(
        &mut failures,
        survey.global_line_min > 0.5,
        format!("line-min global {} not strictly above 1/2", survey.global_line_min),
    );
    finish(
        6,
        "stadium: flat segment found, yet line minima stay above 1/2",
        failures,
    );
}

#[test]
fn criterion_07_quartic_cubic_sphere_scan() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let space = builtin_space("quartic_cubic").unwrap();

    let convexity =
        validate_gauge_convexity(space.gauge().unwrap().boundary(), 0.1_f64.to_radians())
            .unwrap();
    check(
        &mut failures,
        convexity.passed,
        format!("gauge convexity walk failed: {:?}", convexity.witness),
    );

    let scan = exhaustive_pair_scan(&space, 0.25, 1e-6).unwrap();
    check(
        &mut failures,
        scan.conjugate_count >= 1,
        "no mutually B-orthogonal pair found",
    );
    check(
        &mut failures,
        scan.strongly_conjugate_count == 0,
        format!(
            "{} mutually strongly orthogonal pairs found, expected none",
            scan.strongly_conjugate_count
        ),
    );

    let elapsed = start.elapsed();
    check(
        &mut failures,
        elapsed.as_secs_f64() < 300.0,
        format!("runtime {elapsed:?} ≥ 5 min"),
    );
    finish(
        7,
        "quartic/cubic sphere: conjugate pair exists, no strongly orthonormal basis at 0.25°",
        failures,
    );
}

#[test]
fn criterion_08_radon_discrimination() {
    let mut failures = Vec::new();
    let l2 = builtin_space("l2").unwrap();
    let r2 = is_radon(&l2, 720, 1e-6).unwrap();
    check(
        &mut failures,
        r2.radon,
        format!("ℓ₂ not detected as Radon (worst {})", r2.worst_residual),
    );

    let l4 = builtin_space("lp:4").unwrap();
    let r4 = is_radon(&l4, 720, 1e-6).unwrap();
    check(&mut failures, !r4.radon, "ℓ₄ wrongly detected as Radon");
    check(
        &mut failures,
        r4.worst_residual > 1e-3,
        format!("ℓ₄ worst back-residual {} ≤ 1e-3", r4.worst_residual),
    );
    finish(8, "Radon test separates ℓ₂ from ℓ₄", failures);
}

#[test]
fn criterion_09_oracle_equivalence() {
    let mut failures = Vec::new();
    let tol = Tolerances::default();

    for name in BUILTINS {
        let space = builtin_space(name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xbeef);
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let (x, y) = random_pair(&space, &mut rng);
            let dm = mgeo_core::orthogonality::directional_min(&space, &x, &y, &tol).unwrap();
            let bracket = 2.0 * space.norm(&x).unwrap() / space.norm(&y).unwrap();
            let grid = GridSpec::new(-bracket, bracket, 10_000, 3).unwrap();
            let (_, gv) = grid_min(&space, &x, &y, grid).unwrap();
            worst = worst.max((dm.min_value - gv).abs());
        }
        check(
            &mut failures,
            worst <= 1e-6,
            format!("{name}: worst grid-oracle deviation {worst:.3e}"),
        );
    }

    for p in [1.0, 2.0, f64::INFINITY] {
        let space = NormedSpace::lp(p, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let (x, y) = random_pair(&space, &mut rng);
            let dm = mgeo_core::orthogonality::directional_min(&space, &x, &y, &tol).unwrap();
            let (_, cv) = closed_form_lp_min(p, &x, &y).unwrap();
            worst = worst.max((dm.min_value - cv).abs());
        }
        check(
            &mut failures,
            worst <= 1e-9,
            format!("p = {p}: worst closed-form deviation {worst:.3e}"),
        );
    }
    finish(
        9,
        "directional minimization agrees with grid and closed-form oracles",
        failures,
    );
}

fn random_pair(space: &NormedSpace, rng: &mut ChaCha8Rng) -> (Vector, Vector) {
    loop {
        let dim = space.dim();
        let x = Vector::new((0..dim).map(|_| rng.random_range(-2.0..2.0)).collect()).unwrap();
        let y = Vector::new((0..dim).map(|_| rng.random_range(-2.0..2.0)).collect()).unwrap();
        let (nx, ny) = (space.norm(&x).unwrap(), space.norm(&y).unwrap());
        if nx > 0.1 && ny > 0.1 {
            // keep norms near 1 so grid cells resolve kinked minima uniformly
            let sx: f64 = rng.random_range(0.5..2.0);
            let sy: f64 = rng.random_range(0.5..2.0);
            return (x.scale(sx / nx), y.scale(sy / ny));
        }
    }
}

#[test]
fn criterion_10_norm_axiom_property_suite() {
    let mut failures = Vec::new();
    for name in BUILTINS {
        let space = builtin_space(name).unwrap();
        let report = validate_norm(&space, 10_000, 1e-10, 99);
        check(
            &mut failures,
            report.homogeneity.passed,
            format!(
                "{name}: homogeneity violation {:.3e}",
                report.homogeneity.worst_violation
            ),
        );
        check(
            &mut failures,
            report.triangle.passed,
            format!(
                "{name}: triangle violation {:.3e}",
                report.triangle.worst_violation
            ),
        );
        check(&mut failures, report.positive_definite.passed, format!("{name}: pd failed"));
    }

    // deliberately non-convex star gauge must fail with a genuine witness
    let star = NormedSpace::gauge2d(star_boundary()).unwrap();
    let report = validate_norm(&star, 10_000, 1e-10, 99);
    check(&mut failures, !report.triangle.passed, "star gauge passed triangle");
    match &report.triangle.witness {
        Some(mgeo_core::spaces::ViolationWitness::Triangle { u, v }) => {
            let lhs = star.norm(&u.add(v)).unwrap();
            let rhs = star.norm(u).unwrap() + star.norm(v).unwrap();
            check(
                &mut failures,
                lhs > rhs,
                format!("witness does not re-check: {lhs} ≤ {rhs}"),
            );
        }
        w => failures.push(format!("missing triangle witness: {w:?}")),
    }
    finish(
        10,
        "norm axioms hold on builtins at 1e-10; star gauge fails with witness",
        failures,
    );
}

fn star_boundary() -> mgeo_core::spaces::Gauge2DBoundary {
    use mgeo_core::spaces::BoundaryPiece;
    let outer = 1.5;
    let inner = 0.4;
    let c45 = std::f64::consts::FRAC_PI_4.cos();
    mgeo_core::spaces::Gauge2DBoundary {
        pieces: vec![
            BoundaryPiece::Segment {
                from: (outer, 0.0),
                to: (inner * c45, inner * c45),
            },
            BoundaryPiece::Segment {
                from: (inner * c45, inner * c45),
                to: (0.0, outer),
            },
            BoundaryPiece::Segment {
                from: (0.0, outer),
                to: (-inner * c45, inner * c45),
            },
            BoundaryPiece::Segment {
                from: (-inner * c45, inner * c45),
                to: (-outer, 0.0),
            },
        ],
        symmetric: true,
    }
}
