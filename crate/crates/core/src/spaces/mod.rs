//! Finite-dimensional real normed spaces in three concrete forms: p-norms,
//! polyhedral norms (max of finitely many functionals), and 2-D gauge norms
//! built from a piecewise boundary description of the unit sphere.
//!
//! Spaces are immutable after construction and every evaluation is pure, so
//! they can be shared freely across threads.

mod filefmt;
mod gauge;

pub use filefmt::{space_from_json, space_from_path, SpaceFile};
pub use gauge::{
    validate_gauge_convexity, BoundaryPiece, Branch, Gauge, Gauge2DBoundary, GaugeConvexity,
    ImplicitEquation,
};

use crate::error::Error;
use crate::sampling;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A vector with finite real coordinates; the elements `x, y, z, …` that the
/// orthogonality relations are defined on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    /// Builds a vector, rejecting empty coordinate lists and non-finite entries.
    pub fn new(coords: Vec<f64>) -> Result<Self, Error> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Vector { coords })
    }

    /// 2-D vector from Cartesian components.
    pub fn xy(x: f64, y: f64) -> Result<Self, Error> {
        Vector::new(vec![x, y])
    }

    /// The `i`-th standard basis vector in `dim` dimensions.
    pub fn standard(i: usize, dim: usize) -> Self {
        let mut coords = vec![0.0; dim];
        coords[i] = 1.0;
        Vector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean length (independent of any `NormedSpace`).
    pub fn euclid(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, a: f64) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| a * c).collect(),
        }
    }

    /// `self + a·other`.
    pub fn add_scaled(&self, a: f64, other: &Vector) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(s, o)| s + a * o)
                .collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.add_scaled(1.0, other)
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.add_scaled(-1.0, other)
    }

    /// Polar angle `atan2(y, x)`; only meaningful in dimension 2.
    pub fn angle(&self) -> f64 {
        debug_assert_eq!(self.dim(), 2);
        self.coords[1].atan2(self.coords[0])
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;
    fn try_from(coords: Vec<f64>) -> Result<Self, Error> {
        Vector::new(coords)
    }
}

impl From<Vector> for Vec<f64> {
    fn from(v: Vector) -> Vec<f64> {
        v.coords
    }
}

/// The concrete realization of a norm.
#[derive(Debug, Clone)]
pub enum SpaceForm {
    /// `(Σ|vᵢ|^p)^{1/p}`, with `p = ∞` a first-class value (max of absolute
    /// coordinates), not an approximation by large `p`.
    PNorm { p: f64 },
    /// `max over functionals f of |f(v)|`; the functionals must span.
    Polyhedral { functionals: Vec<Vector> },
    /// Euclidean length divided by the boundary radius at the vector's angle.
    Gauge2D(Gauge),
}

/// A finite-dimensional real normed space, evaluable at any vector.
#[derive(Debug, Clone)]
pub struct NormedSpace {
    dim: usize,
    form: SpaceForm,
    label: String,
}

impl NormedSpace {
    /// The `ℓp` space on `ℝ^dim`; accepts `f64::INFINITY` for the sup norm.
    pub fn lp(p: f64, dim: usize) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dim must be ≥ 1".into()));
        }
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidParameter(format!("p must be ≥ 1, got {p}")));
        }
        let label = if p.is_infinite() {
            format!("linf dim {dim}")
        } else {
            format!("lp({p}) dim {dim}")
        };
        Ok(NormedSpace {
            dim,
            form: SpaceForm::PNorm { p },
            label,
        })
    }

    /// Sup-norm space on `ℝ^dim`.
    pub fn linf(dim: usize) -> Result<Self, Error> {
        NormedSpace::lp(f64::INFINITY, dim)
    }

    /// Polyhedral norm `max |fᵢ(v)|`. The functional list must be nonempty,
    /// dimensionally consistent, and spanning (otherwise only a seminorm).
    pub fn polyhedral(functionals: Vec<Vector>) -> Result<Self, Error> {
        let dim = match functionals.first() {
            Some(f) => f.dim(),
            None => {
                return Err(Error::InvalidParameter(
                    "polyhedral norm needs at least one functional".into(),
                ))
            }
        };
        if functionals.iter().any(|f| f.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: functionals.iter().map(Vector::dim).find(|d| *d != dim).unwrap_or(dim),
            });
        }
        let rows: Vec<&[f64]> = functionals.iter().map(|f| f.coords()).collect();
        if crate::linalg::rank(&rows, 1e-12) < dim {
            return Err(Error::DegenerateFunctionals);
        }
        Ok(NormedSpace {
            dim,
            form: SpaceForm::Polyhedral { functionals },
            label: format!("polyhedral dim {dim}"),
        })
    }

    /// Wraps a constructed gauge boundary as a 2-D normed space.
    ///
    /// Construction validates closure and star-shapedness but *not*
    /// convexity; run [`validate_gauge_convexity`] before trusting the result
    /// as a unit sphere, or [`validate_norm`] to test the axioms directly.
    pub fn gauge2d(boundary: Gauge2DBoundary) -> Result<Self, Error> {
        let gauge = Gauge::build(boundary)?;
        Ok(NormedSpace {
            dim: 2,
            form: SpaceForm::Gauge2D(gauge),
            label: "gauge2d".into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn form(&self) -> &SpaceForm {
        &self.form
    }

    /// Human-readable tag used in reports and survey records.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    /// The underlying gauge, when this is a 2-D gauge space.
    pub fn gauge(&self) -> Option<&Gauge> {
        match &self.form {
            SpaceForm::Gauge2D(g) => Some(g),
            _ => None,
        }
    }

    /// Norm of `v`, after checking dimension agreement.
    pub fn norm(&self, v: &Vector) -> Result<f64, Error> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        Ok(self.norm_slice(v.coords()))
    }

    /// Hot-path evaluation on a raw coordinate slice; the caller guarantees
    /// the dimension matches.
    pub(crate) fn norm_slice(&self, v: &[f64]) -> f64 {
        debug_assert_eq!(v.len(), self.dim);
        match &self.form {
            SpaceForm::PNorm { p } => pnorm(*p, v),
            SpaceForm::Polyhedral { functionals } => functionals
                .iter()
                .map(|f| {
                    f.coords()
                        .iter()
                        .zip(v)
                        .map(|(a, b)| a * b)
                        .sum::<f64>()
                        .abs()
                })
                .fold(0.0, f64::max),
            SpaceForm::Gauge2D(g) => g.norm(v[0], v[1]),
        }
    }

    /// Normalizes `v` to the unit sphere; errors on (numerically) zero input.
    pub fn normalize(&self, v: &Vector) -> Result<Vector, Error> {
        let n = self.norm(v)?;
        if n <= 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(v.scale(1.0 / n))
    }
}

fn pnorm(p: f64, v: &[f64]) -> f64 {
    if p.is_infinite() {
        return v.iter().fold(0.0, |m, c| m.max(c.abs()));
    }
    if p == 1.0 {
        return v.iter().map(|c| c.abs()).sum();
    }
    if p == 2.0 {
        return v.iter().map(|c| c * c).sum::<f64>().sqrt();
    }
    // Scale by the max to keep powf in a well-conditioned range.
    let m = v.iter().fold(0.0, |m: f64, c| m.max(c.abs()));
    if m == 0.0 {
        return 0.0;
    }
    let s: f64 = v.iter().map(|c| (c.abs() / m).powf(p)).sum();
    m * s.powf(1.0 / p)
}

/// Evaluates `‖v‖` in `space`.
pub fn eval_norm(space: &NormedSpace, v: &Vector) -> Result<f64, Error> {
    space.norm(v)
}

/// The unique unit-sphere point on the ray at angle `theta` (2-D only).
pub fn sphere_point_2d(space: &NormedSpace, theta: f64) -> Result<Vector, Error> {
    if space.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: space.dim(),
        });
    }
    if !theta.is_finite() {
        return Err(Error::NonFinite);
    }
    let dir = Vector::xy(theta.cos(), theta.sin())?;
    space.normalize(&dir)
}

/// Constructs one of the named example spaces.
///
/// Accepted names: `l1`, `l2`, `linf`, `lp:P` (P ≥ 1), `stadium`, and
/// `quartic_cubic`, each optionally suffixed with `,dim=D` where the form
/// supports it (gauge spaces are 2-D only), and optionally prefixed with
/// `builtin:`.
pub fn builtin_space(name: &str) -> Result<NormedSpace, Error> {
    let name = name.trim().strip_prefix("builtin:").unwrap_or(name.trim());
    let (head, dim) = match name.split_once(",dim=") {
        Some((h, d)) => {
            let dim: usize = d
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad dim in {name:?}")))?;
            (h, Some(dim))
        }
        None => (name, None),
    };
    let mut space = match head {
        "l1" => NormedSpace::lp(1.0, dim.unwrap_or(2))?,
        "l2" => NormedSpace::lp(2.0, dim.unwrap_or(2))?,
        "linf" => NormedSpace::linf(dim.unwrap_or(2))?,
        _ if head.starts_with("lp:") => {
            let p: f64 = head[3..]
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad p in {name:?}")))?;
            NormedSpace::lp(p, dim.unwrap_or(2))?
        }
        "stadium" => {
            if dim.is_some_and(|d| d != 2) {
                return Err(Error::InvalidParameter("stadium is 2-D only".into()));
            }
            let mut s = NormedSpace::gauge2d(gauge::stadium_boundary())?;
            s.set_label("stadium");
            accept_gauge(&s)?;
            s
        }
        "quartic_cubic" => {
            if dim.is_some_and(|d| d != 2) {
                return Err(Error::InvalidParameter("quartic_cubic is 2-D only".into()));
            }
            let mut s = NormedSpace::gauge2d(gauge::quartic_cubic_boundary())?;
            s.set_label("quartic_cubic");
            accept_gauge(&s)?;
            s
        }
        _ => return Err(Error::UnknownBuiltin(name.into())),
    };
    if matches!(space.form(), SpaceForm::PNorm { .. }) {
        // keep the short builtin names for the common cases
        match head {
            "l1" | "l2" | "linf" => {
                space.set_label(format!("{head} dim {}", space.dim()));
            }
            _ => {}
        }
    }
    Ok(space)
}

/// Gauge spaces are only accepted as unit spheres after the convexity walk.
fn accept_gauge(space: &NormedSpace) -> Result<(), Error> {
    let gauge = space.gauge().expect("gauge space");
    let check = gauge.convexity_walk(0.1_f64.to_radians());
    if !check.passed {
        return Err(Error::MalformedBoundary(format!(
            "boundary not convex near angles {:?}",
            check.witness
        )));
    }
    Ok(())
}

/// Per-axiom outcome of [`validate_norm`].
#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub passed: bool,
    /// Worst violation magnitude observed (0 when the axiom held on every sample).
    pub worst_violation: f64,
    pub witness: Option<ViolationWitness>,
}

/// Witness for a failed (or worst-case) axiom sample.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum ViolationWitness {
    Homogeneity { alpha: f64, v: Vector },
    Triangle { u: Vector, v: Vector },
    PositiveDefinite { v: Vector },
}

/// Outcome of sampling the norm axioms.
#[derive(Debug, Clone, Serialize)]
pub struct NormValidation {
    pub homogeneity: AxiomCheck,
    pub triangle: AxiomCheck,
    pub positive_definite: AxiomCheck,
    pub samples: usize,
}

impl NormValidation {
    pub fn all_passed(&self) -> bool {
        self.homogeneity.passed && self.triangle.passed && self.positive_definite.passed
    }
}

/// Samples the norm axioms: absolute homogeneity on random `(α, v)`, the
/// triangle inequality on random `(u, v)`, and positive definiteness on
/// random directions. Failures are report content, not errors.
pub fn validate_norm(
    space: &NormedSpace,
    sample_count: usize,
    tol: f64,
    seed: u64,
) -> NormValidation {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = space.dim();

    let mut hom_worst = 0.0_f64;
    let mut hom_witness = None;
    let mut tri_worst = 0.0_f64;
    let mut tri_witness = None;
    let mut pd_min = f64::INFINITY;
    let mut pd_witness = None;

    for _ in 0..sample_count.max(1) {
        let v = Vector {
            coords: sampling::random_direction(&mut rng, dim),
        };
        let alpha: f64 = rng.random_range(-3.0..3.0);
        let nv = space.norm_slice(v.coords());
        let nav = space.norm_slice(v.scale(alpha).coords());
        let hom_err = (nav - alpha.abs() * nv).abs();
        if hom_err > hom_worst {
            hom_worst = hom_err;
            hom_witness = Some(ViolationWitness::Homogeneity {
                alpha,
                v: v.clone(),
            });
        }

        let u = Vector {
            coords: sampling::random_direction(&mut rng, dim),
        };
        let tri_err = space.norm_slice(u.add(&v).coords())
            - space.norm_slice(u.coords())
            - space.norm_slice(v.coords());
        if tri_err > tri_worst {
            tri_worst = tri_err;
            tri_witness = Some(ViolationWitness::Triangle {
                u: u.clone(),
                v: v.clone(),
            });
        }

        if nv < pd_min {
            pd_min = nv;
            pd_witness = Some(ViolationWitness::PositiveDefinite { v });
        }
    }

    NormValidation {
        homogeneity: AxiomCheck {
            passed: hom_worst <= tol,
            worst_violation: hom_worst,
            witness: hom_witness,
        },
        triangle: AxiomCheck {
            passed: tri_worst <= tol,
            worst_violation: tri_worst,
            witness: tri_witness,
        },
        positive_definite: AxiomCheck {
            // directions are unit Euclidean vectors, so any valid norm stays
            // bounded away from zero by norm equivalence
            passed: pd_min > tol,
            worst_violation: (tol - pd_min).max(0.0),
            witness: if pd_min > tol { None } else { pd_witness },
        },
        samples: sample_count.max(1),
    }
}
