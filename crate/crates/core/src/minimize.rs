//! Derivative-free univariate minimization used throughout the crate:
//! golden-section shrinkage for convex objectives plus bisection helpers for
//! sublevel-set boundaries and sign changes.

/// Inverse golden ratio squared: the interior-point fraction of golden-section search.
const INVPHI2: f64 = 0.381_966_011_250_105_1;

pub(crate) struct GoldenOutcome {
    pub xmin: f64,
    pub fmin: f64,
    /// Final enclosing bracket (for convexity sanity checks).
    pub bracket: (f64, f64),
}

/// Golden-section search on `[a, b]`, tracking the best value over *all*
/// probes (for kinked minima the best probe beats the final bracket ends).
/// Converges for any convex `f`; no derivative information is used.
pub(crate) fn golden_min(
    f: &mut impl FnMut(f64) -> f64,
    mut a: f64,
    mut b: f64,
    xtol: f64,
) -> GoldenOutcome {
    debug_assert!(a <= b);
    let mut best_x = a;
    let mut best_f = f64::INFINITY;
    let record = |x: f64, fx: f64, best_x: &mut f64, best_f: &mut f64| {
        if fx < *best_f {
            *best_f = fx;
            *best_x = x;
        }
    };

    let fa = f(a);
    record(a, fa, &mut best_x, &mut best_f);
    let fb = f(b);
    record(b, fb, &mut best_x, &mut best_f);

    let mut x1 = a + INVPHI2 * (b - a);
    let mut x2 = b - INVPHI2 * (b - a);
    let mut f1 = f(x1);
    record(x1, f1, &mut best_x, &mut best_f);
    let mut f2 = f(x2);
    record(x2, f2, &mut best_x, &mut best_f);

    while b - a > xtol {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + INVPHI2 * (b - a);
            f1 = f(x1);
            record(x1, f1, &mut best_x, &mut best_f);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - INVPHI2 * (b - a);
            f2 = f(x2);
            record(x2, f2, &mut best_x, &mut best_f);
        }
    }

    GoldenOutcome {
        xmin: best_x,
        fmin: best_f,
        bracket: (a, b),
    }
}

/// Boundary of the sublevel set `{f ≤ level}` between a point inside it and a
/// point outside it. For convex `f` the sublevel set is an interval, so the
/// predicate changes sign exactly once; the returned abscissa is the last
/// probed point *inside* the set.
pub(crate) fn sublevel_boundary(
    f: &mut impl FnMut(f64) -> f64,
    level: f64,
    mut inside: f64,
    mut outside: f64,
    xtol: f64,
) -> f64 {
    debug_assert!(xtol > 0.0);
    while (outside - inside).abs() > xtol {
        let mid = 0.5 * (inside + outside);
        if f(mid) <= level {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    inside
}

/// Bisection on a boolean predicate that flips from `true` at `lo` to `false`
/// at `hi`; returns the crossing point to within `xtol`.
pub(crate) fn bisect_flip(
    pred: &mut impl FnMut(f64) -> bool,
    mut lo: f64,
    mut hi: f64,
    xtol: f64,
) -> f64 {
    while (hi - lo).abs() > xtol {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
