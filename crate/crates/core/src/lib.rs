//! Computational geometry of finite-dimensional real normed spaces.
//!
//! The crate decides Birkhoff-James orthogonality (`x ⊥_B y` iff
//! `‖x‖ ≤ ‖x + λy‖` for every scalar `λ`) and its strong variant (the minimum
//! attained only at `λ = 0`) by global minimization of the convex function
//! `λ ↦ ‖x + λy‖`. On top of that engine it provides:
//!
//! - [`spaces`]: p-norms, polyhedral norms, and 2-D gauge norms built from
//!   piecewise boundary descriptions, with norm-axiom validation.
//! - [`orthogonality`]: the 1-D minimization engine, the
//!   not-orthogonal / Birkhoff-only / strongly-Birkhoff trichotomy, and
//!   orthogonal companion search in the plane.
//! - [`convexity`]: flat-segment probing of unit spheres and sampled
//!   modulus-of-convexity estimates.
//! - [`bounds`]: the `min_t ‖tx + (1−t)y‖` and `min_λ ‖y + λx‖` lower-bound
//!   quantities for B-orthogonal unit pairs, with survey tooling.
//! - [`basis`]: maximal-coefficient computation (`max Sᵢ`, the dual norm of a
//!   coordinate functional) and the strongly-orthonormal-Hamel-basis decision
//!   by both the direct definition and the `max Sᵢ = 1` criterion.
//! - [`planar`]: conjugate diameters, Radon-curve testing, and exhaustive
//!   mutual-orthogonality scans in dimension 2.
//!
//! All verdicts are numerical: sampling verdicts are labeled as such and
//! every tolerance is explicit in the result types.

pub mod basis;
pub mod bounds;
pub mod convexity;
mod error;
pub mod jsonfmt;
mod linalg;
mod minimize;
pub mod orthogonality;
pub mod planar;
mod sampling;
pub mod spaces;

pub use error::Error;

use serde::Serialize;

/// Tolerance bundle threaded through the minimization and classification
/// pipeline.
///
/// `value` bounds acceptable error in norm values, `arg` is the convergence
/// tolerance for minimizer locations (and for sublevel-boundary bisection),
/// `flat` is the height of the sublevel set used to measure the flat part of
/// `λ ↦ ‖x + λy‖` around its minimum, and `flat_width` is the width above
/// which that flat part counts as a genuine segment (so the minimum is *not*
/// attained only at one point).
///
/// The defaults separate the two regimes by orders of magnitude: a smooth
/// strictly convex sphere yields sublevel widths below `1e-2` at
/// `flat = 1e-9` (worst case: quartic-flat sphere points), while actual
/// sphere segments in the spaces of interest produce widths of `1` or more.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Absolute tolerance on norm values.
    pub value: f64,
    /// Absolute tolerance on minimizer arguments.
    pub arg: f64,
    /// Sublevel height used to expand the flat interval around a minimum.
    pub flat: f64,
    /// Flat-interval width separating "minimum attained on a segment" from
    /// "minimum attained at a point" (numerical surrogate for strongness).
    pub flat_width: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            value: 1e-9,
            arg: 1e-9,
            flat: 1e-9,
            flat_width: 0.1,
        }
    }
}

impl Tolerances {
    /// Replaces the value tolerance.
    pub fn with_value(mut self, value: f64) -> Self {
        self.value = value;
        self
    }

    /// Replaces the argument tolerance.
    pub fn with_arg(mut self, arg: f64) -> Self {
        self.arg = arg;
        self
    }
}
