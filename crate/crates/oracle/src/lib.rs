//! Brute-force reference implementations for validating the optimized
//! routines in `mgeo-core`. Everything here is O(grid) and meant for the test
//! surface only; keep it out of production call paths.

use mgeo_core::spaces::{sphere_point_2d, NormedSpace, Vector};
use mgeo_core::Error;

/// Grid description for [`grid_min`].
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
    pub refinement_rounds: usize,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, steps: usize, refinement_rounds: usize) -> Result<Self, Error> {
        if !(lo < hi) {
            return Err(Error::InvalidParameter(format!(
                "grid needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        if steps < 2 {
            return Err(Error::InvalidParameter("grid needs ≥ 2 steps".into()));
        }
        // steps·refinement cost must stay test-sized
        if steps.saturating_mul(refinement_rounds.max(1)) > 50_000_000 {
            return Err(Error::InvalidParameter("grid budget exceeded".into()));
        }
        Ok(GridSpec {
            lo,
            hi,
            steps,
            refinement_rounds,
        })
    }
}

/// Evaluates `f(λ) = ‖x + λy‖` on the grid and zooms 10× around the best
/// cell for each refinement round. For convex `f` the result is within
/// `(hi−lo)/steps/10^rounds` of a true minimizer.
pub fn grid_min(
    space: &NormedSpace,
    x: &Vector,
    y: &Vector,
    grid: GridSpec,
) -> Result<(f64, f64), Error> {
    let f = |l: f64| -> Result<f64, Error> { space.norm(&x.add_scaled(l, y)) };
    let mut lo = grid.lo;
    let mut hi = grid.hi;
    let mut best_l = lo;
    let mut best_v = f64::INFINITY;
    for round in 0..=grid.refinement_rounds {
        for k in 0..=grid.steps {
            let l = lo + (hi - lo) * k as f64 / grid.steps as f64;
            let v = f(l)?;
            if v < best_v {
                best_v = v;
                best_l = l;
            }
        }
        if round < grid.refinement_rounds {
            let cell = (hi - lo) / grid.steps as f64;
            lo = best_l - cell;
            hi = best_l + cell;
        }
    }
    Ok((best_l, best_v))
}

/// Closed-form minimizer of `λ ↦ ‖x + λy‖` for `p ∈ {1, 2, ∞}`.
///
/// `p = 2` uses the inner-product formula. For `p = 1` the objective is a
/// convex piecewise-linear sum, minimized at a breakpoint `λ = −xᵢ/yᵢ`. For
/// `p = ∞` it is a max of affine pieces, minimized where two pieces cross
/// (or at a breakpoint); all pairwise crossings are enumerated.
pub fn closed_form_lp_min(p: f64, x: &Vector, y: &Vector) -> Result<(f64, f64), Error> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    let xs = x.coords();
    let ys = y.coords();
    if ys.iter().all(|c| *c == 0.0) {
        return Err(Error::ZeroVector);
    }

    if p == 2.0 {
        let yy = y.dot(y);
        let arg = -x.dot(y) / yy;
        let val = (x.dot(x) - x.dot(y) * x.dot(y) / yy).max(0.0).sqrt();
        return Ok((arg, val));
    }

    let eval: Box<dyn Fn(f64) -> f64> = if p == 1.0 {
        Box::new(move |l: f64| xs.iter().zip(ys).map(|(a, b)| (a + l * b).abs()).sum())
    } else if p.is_infinite() {
        Box::new(move |l: f64| {
            xs.iter()
                .zip(ys)
                .map(|(a, b)| (a + l * b).abs())
                .fold(0.0, f64::max)
        })
    } else {
        return Err(Error::InvalidParameter(format!(
            "no closed form for p = {p}"
        )));
    };

    let mut candidates = vec![0.0];
    if p == 1.0 {
        for (a, b) in xs.iter().zip(ys) {
            if *b != 0.0 {
                candidates.push(-a / b);
            }
        }
    } else {
        // crossings of the affine pieces ±(xᵢ + λyᵢ) = ±(xⱼ + λyⱼ)
        for i in 0..xs.len() {
            for j in (i + 1)..xs.len() {
                for s in [1.0, -1.0] {
                    let db = ys[i] - s * ys[j];
                    if db != 0.0 {
                        candidates.push(-(xs[i] - s * xs[j]) / db);
                    }
                }
            }
        }
        for (a, b) in xs.iter().zip(ys) {
            if *b != 0.0 {
                candidates.push(-a / b);
            }
        }
    }

    let mut best = (0.0, eval(0.0));
    for l in candidates {
        if !l.is_finite() {
            continue;
        }
        let v = eval(l);
        if v < best.1 {
            best = (l, v);
        }
    }
    Ok(best)
}

/// Angle-sweep oracle for the maximal `i`-th coefficient on a 2-D sphere:
/// evaluates `c · P(θ)` on a dense grid and zooms around the best angle.
pub fn max_coefficient_sweep_2d(
    space: &NormedSpace,
    functional: &Vector,
    steps: usize,
    refinement_rounds: usize,
) -> Result<(f64, Vector), Error> {
    if space.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: space.dim(),
        });
    }
    let mut lo = 0.0;
    let mut hi = std::f64::consts::TAU;
    let mut best_t = 0.0;
    let mut best_v = f64::NEG_INFINITY;
    for round in 0..=refinement_rounds {
        for k in 0..=steps {
            let t = lo + (hi - lo) * k as f64 / steps as f64;
            let p = sphere_point_2d(space, t)?;
            let v = functional.dot(&p);
            if v > best_v {
                best_v = v;
                best_t = t;
            }
        }
        if round < refinement_rounds {
            let cell = (hi - lo) / steps as f64;
            lo = best_t - cell;
            hi = best_t + cell;
        }
    }
    Ok((best_v, sphere_point_2d(space, best_t)?))
}
