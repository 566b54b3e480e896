//! Birkhoff-James orthogonality decisions.
//!
//! `x ⊥_B y` holds iff `‖x‖ ≤ ‖x + λy‖` for every scalar `λ`, and the strong
//! variant `x ⊥_SB y` additionally requires the inequality to be strict for
//! `λ ≠ 0`. Because a norm restricted to a line is convex, both reduce to
//! global minimization of `f(λ) = ‖x + λy‖`:
//!
//! - the minimizer is bracketed analytically inside `|λ| ≤ 2‖x‖/‖y‖` (outside
//!   that interval `f(λ) ≥ |λ|‖y‖ − ‖x‖ > ‖x‖ ≥ f(0)`),
//! - golden-section shrinkage locates a global minimizer without derivatives
//!   (correct for convex `f` even at kinks),
//! - bisection then expands the sublevel set `{f ≤ min + flat}` around the
//!   minimizer; its width separates minima attained on a segment from minima
//!   attained at a point, which is the numerical surrogate for strongness.

use crate::error::Error;
use crate::minimize::{bisect_flip, golden_min, sublevel_boundary};
use crate::spaces::{sphere_point_2d, NormedSpace, Vector};
use crate::Tolerances;
use serde::Serialize;

/// Step used for one-sided difference quotients of `λ ↦ ‖x + λy‖` at 0.
const COMPANION_H: f64 = 1e-6;

/// Outcome of minimizing `λ ↦ ‖x + λy‖`.
#[derive(Debug, Clone, Serialize)]
pub struct MinimizationResult {
    /// A global minimizer (the point `λ = 0` is preferred on exact ties, so
    /// B-orthogonal pairs report argmin 0 rather than an arbitrary flat point).
    pub argmin: f64,
    pub min_value: f64,
    /// Closed interval on which `f` stays within `flat` of the minimum.
    pub flat_interval: Option<(f64, f64)>,
    /// Number of norm evaluations spent.
    pub evaluations: usize,
    /// Tolerances the result was computed with.
    pub tolerances: Tolerances,
}

impl MinimizationResult {
    /// Width of the flat interval (0 when absent).
    pub fn flat_width(&self) -> f64 {
        match self.flat_interval {
            Some((lo, hi)) => hi - lo,
            None => 0.0,
        }
    }
}

/// Classification of an ordered pair `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// `min_λ ‖x + λy‖ < ‖x‖`: not Birkhoff-orthogonal.
    NotOrthogonal,
    /// Birkhoff-orthogonal, but the minimum is attained on a whole segment.
    BirkhoffOnly,
    /// Birkhoff-orthogonal with the minimum attained only at `λ = 0`.
    StronglyBirkhoff,
}

/// Full orthogonality verdict with the minimization evidence and a witness:
/// for [`Relation::NotOrthogonal`] a `λ` with `‖x + λy‖ < ‖x‖ − tol`, for
/// [`Relation::BirkhoffOnly`] a `λ₀ ≠ 0` with `‖x + λ₀y‖ ≤ ‖x‖ + tol`.
#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalityVerdict {
    pub relation: Relation,
    pub min_result: MinimizationResult,
    pub witness: Option<f64>,
}

/// Reusable evaluator for `f(λ) = ‖x + λy‖` that counts evaluations and
/// avoids per-call allocation.
pub(crate) struct LineEval<'a> {
    space: &'a NormedSpace,
    x: &'a [f64],
    y: &'a [f64],
    buf: Vec<f64>,
    pub evals: usize,
}

impl<'a> LineEval<'a> {
    pub fn new(space: &'a NormedSpace, x: &'a Vector, y: &'a Vector) -> Self {
        LineEval {
            space,
            x: x.coords(),
            y: y.coords(),
            buf: vec![0.0; x.dim()],
            evals: 0,
        }
    }

    pub fn eval(&mut self, lambda: f64) -> f64 {
        for i in 0..self.buf.len() {
            self.buf[i] = self.x[i] + lambda * self.y[i];
        }
        self.evals += 1;
        self.space.norm_slice(&self.buf)
    }
}

fn check_pair(space: &NormedSpace, x: &Vector, y: &Vector) -> Result<(f64, f64), Error> {
    let nx = space.norm(x)?;
    let ny = space.norm(y)?;
    if nx < 1e-300 || ny < 1e-300 {
        return Err(Error::ZeroVector);
    }
    Ok((nx, ny))
}

/// Globally minimizes `f(λ) = ‖x + λy‖`.
///
/// The returned flat interval is the sublevel set `{f ≤ min + flat}`,
/// computed by bisection against an analytic outer enclosure; by convexity it
/// is a genuine interval containing the argmin.
pub fn directional_min(
    space: &NormedSpace,
    x: &Vector,
    y: &Vector,
    tol: &Tolerances,
) -> Result<MinimizationResult, Error> {
    let (nx, ny) = check_pair(space, x, y)?;
    let bracket = 2.0 * nx / ny;
    let mut line = LineEval::new(space, x, y);

    let f0 = line.eval(0.0);
    let g = golden_min(&mut |l| line.eval(l), -bracket, bracket, tol.arg);
    let (mut argmin, mut min_value) = (g.xmin, g.fmin);
    if f0 <= min_value {
        argmin = 0.0;
        min_value = f0;
    }

    // Convexity sanity on the final bracket: a violation means the
    // "norm" restricted to this line is not convex, i.e. not a norm.
    let (ba, bb) = g.bracket;
    let fa = line.eval(ba);
    let fb = line.eval(bb);
    let fmid = line.eval(0.5 * (ba + bb));
    if fmid > fa.max(fb) + 1e-12 * (1.0 + fa.max(fb)) {
        return Err(Error::NonConvexObjective { at: 0.5 * (ba + bb) });
    }

    // Expand the flat interval. Outside ±outer, f(λ) ≥ |λ|‖y‖ − ‖x‖ exceeds
    // the sublevel height, so bisection brackets are valid by construction.
    let level = min_value + tol.flat;
    let outer = ((level + nx) / ny) * (1.0 + 1e-9) + 1e-12;
    let outer = outer.max(argmin.abs() * (1.0 + 1e-12) + 1e-12);
    let lo = sublevel_boundary(&mut |l| line.eval(l), level, argmin, -outer, tol.arg);
    let hi = sublevel_boundary(&mut |l| line.eval(l), level, argmin, outer, tol.arg);

    Ok(MinimizationResult {
        argmin,
        min_value,
        flat_interval: Some((lo, hi)),
        evaluations: line.evals,
        tolerances: *tol,
    })
}

/// `x ⊥_B y` at tolerance `tol`: the global minimum of `‖x + λy‖` is not
/// below `‖x‖ − tol`.
pub fn is_birkhoff(space: &NormedSpace, x: &Vector, y: &Vector, tol: f64) -> Result<bool, Error> {
    let t = Tolerances::default().with_value(tol);
    let dm = directional_min(space, x, y, &t)?;
    let nx = space.norm(x)?;
    Ok(dm.min_value >= nx - tol)
}

/// `x ⊥_SB y` at tolerance `tol`: B-orthogonal and the flat part of the
/// minimum is no wider than `flat_width` (minimum attained only at 0).
pub fn is_strongly_birkhoff(
    space: &NormedSpace,
    x: &Vector,
    y: &Vector,
    tol: f64,
    flat_width: f64,
) -> Result<bool, Error> {
    let mut t = Tolerances::default().with_value(tol);
    t.flat_width = flat_width;
    let v = classify(space, x, y, &t)?;
    Ok(v.relation == Relation::StronglyBirkhoff)
}

/// Classifies the pair into the not-orthogonal / Birkhoff-only /
/// strongly-Birkhoff trichotomy, with witnesses.
pub fn classify(
    space: &NormedSpace,
    x: &Vector,
    y: &Vector,
    tol: &Tolerances,
) -> Result<OrthogonalityVerdict, Error> {
    let dm = directional_min(space, x, y, tol)?;
    let nx = space.norm(x)?;

    if dm.min_value < nx - tol.value {
        let witness = dm.argmin;
        return Ok(OrthogonalityVerdict {
            relation: Relation::NotOrthogonal,
            min_result: dm,
            witness: Some(witness),
        });
    }

    let (lo, hi) = dm.flat_interval.expect("directional_min always expands");
    let contains_zero = lo <= tol.arg && hi >= -tol.arg;
    if hi - lo <= tol.flat_width && contains_zero {
        return Ok(OrthogonalityVerdict {
            relation: Relation::StronglyBirkhoff,
            min_result: dm,
            witness: None,
        });
    }

    // Any flat point is a witness; prefer the interval midpoint, falling back
    // to the endpoint farther from zero when the midpoint is (numerically) 0.
    let mid = 0.5 * (lo + hi);
    let witness = if mid.abs() > tol.arg.max(1e-12) {
        mid
    } else if hi.abs() >= lo.abs() {
        hi
    } else {
        lo
    };
    Ok(OrthogonalityVerdict {
        relation: Relation::BirkhoffOnly,
        min_result: dm,
        witness: Some(witness),
    })
}

/// The arc `[φ₁, φ₂] ⊂ (θ_x, θ_x + π)` of sphere angles whose unit vectors
/// are Birkhoff-orthogonal companions of `x`. For smooth sphere points the
/// arc degenerates to a single angle.
///
/// The endpoints are the sign changes of the one-sided difference quotients
/// `s₋(φ) = [f(0) − f(−h)]/h` and `s₊(φ) = [f(h) − f(0)]/h` of
/// `f(λ) = ‖x + λ·y(φ)‖`; `x ⊥_B y(φ)` holds exactly when `s₋ ≤ 0 ≤ s₊`.
pub(crate) fn companion_arc(space: &NormedSpace, x: &Vector) -> Result<(f64, f64), Error> {
    if space.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: space.dim(),
        });
    }
    let nx = space.norm(x)?;
    if nx < 1e-300 {
        return Err(Error::ZeroVector);
    }
    let x = x.scale(1.0 / nx);
    let theta_x = x.angle();

    let xc = [x.coords()[0], x.coords()[1]];
    let slope = |phi: f64, side: f64| -> Result<f64, Error> {
        let y = sphere_point_2d(space, phi)?;
        let yc = y.coords();
        let l = side * COMPANION_H;
        let fx = space.norm_slice(&[xc[0] + l * yc[0], xc[1] + l * yc[1]]);
        Ok(side * (fx - 1.0) / COMPANION_H)
    };

    let eps = 1e-9;
    let (a, b) = (theta_x + eps, theta_x + std::f64::consts::PI - eps);
    // Toward φ → θ_x the ray is nearly parallel to x and both quotients tend
    // to +1; toward φ → θ_x + π they tend to −1.
    if !(slope(a, -1.0)? > 0.0 && slope(b, -1.0)? < 0.0) {
        return Err(Error::BracketingFailed);
    }
    if !(slope(a, 1.0)? > 0.0 && slope(b, 1.0)? < 0.0) {
        return Err(Error::BracketingFailed);
    }

    let mut err = None;
    let mut pred_minus = |phi: f64| match slope(phi, -1.0) {
        Ok(s) => s > 0.0,
        Err(e) => {
            err = Some(e);
            false
        }
    };
    let phi1 = bisect_flip(&mut pred_minus, a, b, 1e-10);
    if let Some(e) = err {
        return Err(e);
    }
    let mut err = None;
    let mut pred_plus = |phi: f64| match slope(phi, 1.0) {
        Ok(s) => s > 0.0,
        Err(e) => {
            err = Some(e);
            false
        }
    };
    let phi2 = bisect_flip(&mut pred_plus, a, b, 1e-10);
    if let Some(e) = err {
        return Err(e);
    }

    Ok((phi1.min(phi2), phi1.max(phi2)))
}

/// A unit vector `y` with `x ⊥_B y`, at an angle in `(θ_x, θ_x + π)`.
///
/// When the companion set is a whole sub-arc (non-smooth `x`), the midpoint
/// of the arc is returned; the forward/backward quotient pair makes the two
/// endpoints' finite-difference biases cancel at the midpoint.
pub fn orthogonal_companion_2d(space: &NormedSpace, x: &Vector) -> Result<Vector, Error> {
    let (phi1, phi2) = companion_arc(space, x)?;
    let y = sphere_point_2d(space, 0.5 * (phi1 + phi2))?;
    // A failed verification means the slope bisection landed badly, which
    // signals a malformed space rather than a property of the pair.
    if !is_birkhoff(space, &space.normalize(x)?, &y, 1e-6)? {
        return Err(Error::BracketingFailed);
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::builtin_space;

    fn v2(x: f64, y: f64) -> Vector {
        Vector::xy(x, y).unwrap()
    }

    #[test]
    fn sup_norm_flat_interval_around_zero() {
        let space = builtin_space("linf").unwrap();
        let dm = directional_min(
            &space,
            &v2(1.0, 0.0),
            &v2(0.0, 1.0),
            &Tolerances::default(),
        )
        .unwrap();
        assert!((dm.min_value - 1.0).abs() < 1e-12);
        let (lo, hi) = dm.flat_interval.unwrap();
        assert!((lo + 1.0).abs() < 1e-6, "lo = {lo}");
        assert!((hi - 1.0).abs() < 1e-6, "hi = {hi}");
    }

    #[test]
    fn sup_norm_one_sided_flat() {
        // max(|1−λ|, 1) = 1 exactly for λ ∈ [0, 2]
        let space = builtin_space("linf").unwrap();
        let dm = directional_min(
            &space,
            &v2(1.0, 1.0),
            &v2(-1.0, 0.0),
            &Tolerances::default(),
        )
        .unwrap();
        assert!((dm.min_value - 1.0).abs() < 1e-12);
        let (lo, hi) = dm.flat_interval.unwrap();
        assert!(lo.abs() < 1e-6, "lo = {lo}");
        assert!((hi - 2.0).abs() < 1e-6, "hi = {hi}");
    }

    #[test]
    fn euclidean_closed_form() {
        let space = builtin_space("l2,dim=3").unwrap();
        let x = Vector::new(vec![0.3, -1.2, 0.7]).unwrap();
        let y = Vector::new(vec![1.1, 0.4, -0.2]).unwrap();
        let dm = directional_min(&space, &x, &y, &Tolerances::default()).unwrap();
        let arg = -x.dot(&y) / y.dot(&y);
        let val = (x.dot(&x) - x.dot(&y).powi(2) / y.dot(&y)).sqrt();
        assert!((dm.argmin - arg).abs() < 1e-7, "argmin {}", dm.argmin);
        assert!((dm.min_value - val).abs() < 1e-9);
    }

    #[test]
    fn birkhoff_examples() {
        let linf = builtin_space("linf").unwrap();
        assert!(is_birkhoff(&linf, &v2(1.0, 1.0), &v2(-1.0, 0.0), 1e-9).unwrap());
        let l2 = builtin_space("l2").unwrap();
        assert!(is_birkhoff(&l2, &v2(1.0, 0.0), &v2(0.0, 1.0), 1e-9).unwrap());
        assert!(!is_birkhoff(&l2, &v2(1.0, 0.0), &v2(1.0, 1.0), 1e-9).unwrap());
    }

    #[test]
    fn strongness_discriminates_flat_from_curved() {
        let linf = builtin_space("linf").unwrap();
        assert!(!is_strongly_birkhoff(&linf, &v2(1.0, 0.0), &v2(0.0, 1.0), 1e-9, 0.1).unwrap());
        let l2 = builtin_space("l2").unwrap();
        assert!(is_strongly_birkhoff(&l2, &v2(1.0, 0.0), &v2(0.0, 1.0), 1e-9, 0.1).unwrap());
        let l1 = builtin_space("l1").unwrap();
        assert!(is_strongly_birkhoff(&l1, &v2(1.0, 0.0), &v2(0.0, 1.0), 1e-9, 0.1).unwrap());
    }

    #[test]
    fn classify_trichotomy() {
        let tol = Tolerances::default();
        let linf = builtin_space("linf").unwrap();
        let v = classify(&linf, &v2(1.0, 1.0), &v2(-1.0, 0.0), &tol).unwrap();
        assert_eq!(v.relation, Relation::BirkhoffOnly);
        let w = v.witness.unwrap();
        assert!((w - 1.0).abs() < 1e-5, "witness {w}");

        let l2 = builtin_space("l2").unwrap();
        let v = classify(&l2, &v2(1.0, 0.0), &v2(1.0, 0.0), &tol).unwrap();
        assert_eq!(v.relation, Relation::NotOrthogonal);
        assert!((v.witness.unwrap() + 1.0).abs() < 1e-6);

        let v = classify(&l2, &v2(1.0, 0.0), &v2(0.0, 1.0), &tol).unwrap();
        assert_eq!(v.relation, Relation::StronglyBirkhoff);
    }

    #[test]
    fn companion_in_euclidean_plane() {
        let l2 = builtin_space("l2").unwrap();
        let y = orthogonal_companion_2d(&l2, &v2(1.0, 0.0)).unwrap();
        assert!(y.coords()[0].abs() < 1e-6);
        assert!((y.coords()[1].abs() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn companion_arc_of_sup_norm_corner() {
        // J((1,1)) = conv{(1,0),(0,1)}: companions are the sphere vectors with
        // coordinates of opposite sign, the angles [π/2, π].
        let linf = builtin_space("linf").unwrap();
        let (p1, p2) = companion_arc(&linf, &v2(1.0, 1.0)).unwrap();
        assert!((p1 - std::f64::consts::FRAC_PI_2).abs() < 1e-6, "p1 = {p1}");
        assert!((p2 - std::f64::consts::PI).abs() < 1e-6, "p2 = {p2}");
        let y = orthogonal_companion_2d(&linf, &v2(1.0, 1.0)).unwrap();
        // midpoint angle 3π/4 → sup-norm sphere point (−1, 1)
        assert!((y.coords()[0] + 1.0).abs() < 1e-6);
        assert!((y.coords()[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn zero_vector_rejected() {
        let l2 = builtin_space("l2").unwrap();
        let err = directional_min(&l2, &v2(0.0, 0.0), &v2(1.0, 0.0), &Tolerances::default())
            .unwrap_err();
        assert_eq!(err, Error::ZeroVector);
    }
}
