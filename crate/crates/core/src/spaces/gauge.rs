//! Two-dimensional gauge norms: the unit sphere is described as a chain of
//! boundary pieces, and the norm of `v` is `|v|₂ / r(θ)` where `r(θ)` is the
//! boundary radius on the ray through `v`.
//!
//! Construction validates that the pieces chain into a closed curve that is
//! star-shaped about the origin, orients the traversal counterclockwise, and
//! caches an angle → (piece, parameter) table so that radius lookups cost one
//! table probe plus a short local bisection. Convexity is *not* assumed; it
//! is checked separately by [`validate_gauge_convexity`].

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Which `y` branch of an implicit curve a piece follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Upper,
    Lower,
}

/// Implicit curve families available to [`BoundaryPiece::ImplicitArc`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum ImplicitEquation {
    /// `|x|^exponent + |y|^exponent = 1`, solved for `y` on the given branch.
    PowerSum { exponent: f64, branch: Branch },
}

/// One arc of a gauge boundary. Pieces are listed in traversal order and
/// parametrized from their `from` end to their `to` end.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundaryPiece {
    /// Graph of an implicit equation over an `x` interval, traversed from
    /// `x_range.0` to `x_range.1`.
    ImplicitArc {
        equation: ImplicitEquation,
        x_range: (f64, f64),
    },
    /// Circle of the given radius about the origin, between two angles.
    CircularArc { radius: f64, angles: (f64, f64) },
    /// Straight segment between two points.
    Segment { from: (f64, f64), to: (f64, f64) },
    /// Horizontal segment at height `y`, traversed from `x_range.0` to `x_range.1`.
    FlatLine { y: f64, x_range: (f64, f64) },
}

impl BoundaryPiece {
    fn point_at(&self, t: f64) -> Result<(f64, f64), Error> {
        match self {
            BoundaryPiece::ImplicitArc { equation, x_range } => {
                let x = x_range.0 + t * (x_range.1 - x_range.0);
                let ImplicitEquation::PowerSum { exponent, branch } = equation;
                let inner = 1.0 - x.abs().powf(*exponent);
                if inner < -1e-9 {
                    return Err(Error::MalformedBoundary(format!(
                        "implicit arc leaves the curve domain at x = {x}"
                    )));
                }
                let y = inner.max(0.0).powf(1.0 / exponent);
                Ok(match branch {
                    Branch::Upper => (x, y),
                    Branch::Lower => (x, -y),
                })
            }
            BoundaryPiece::CircularArc { radius, angles } => {
                let a = angles.0 + t * (angles.1 - angles.0);
                Ok((radius * a.cos(), radius * a.sin()))
            }
            BoundaryPiece::Segment { from, to } => Ok((
                from.0 + t * (to.0 - from.0),
                from.1 + t * (to.1 - from.1),
            )),
            BoundaryPiece::FlatLine { y, x_range } => {
                Ok((x_range.0 + t * (x_range.1 - x_range.0), *y))
            }
        }
    }

    fn validate(&self) -> Result<(), Error> {
        match self {
            BoundaryPiece::ImplicitArc { equation, x_range } => {
                let ImplicitEquation::PowerSum { exponent, .. } = equation;
                if !exponent.is_finite() || *exponent <= 0.0 {
                    return Err(Error::MalformedBoundary(format!(
                        "power_sum exponent must be positive, got {exponent}"
                    )));
                }
                if x_range.0.abs() > 1.0 + 1e-12 || x_range.1.abs() > 1.0 + 1e-12 {
                    return Err(Error::MalformedBoundary(
                        "power_sum x_range must lie in [-1, 1]".into(),
                    ));
                }
            }
            BoundaryPiece::CircularArc { radius, .. } => {
                if !radius.is_finite() || *radius <= 0.0 {
                    return Err(Error::MalformedBoundary(format!(
                        "circular arc radius must be positive, got {radius}"
                    )));
                }
            }
            BoundaryPiece::Segment { .. } | BoundaryPiece::FlatLine { .. } => {}
        }
        Ok(())
    }
}

/// A piecewise boundary description. With `symmetric = true` the listed
/// pieces describe half the curve; the other half is the central reflection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gauge2DBoundary {
    pub pieces: Vec<BoundaryPiece>,
    pub symmetric: bool,
}

/// A piece placed in the oriented traversal: possibly reflected through the
/// origin (for the symmetric half) and possibly reversed in parameter.
#[derive(Debug, Clone)]
struct PlacedPiece {
    piece: BoundaryPiece,
    reflect: bool,
    reverse: bool,
}

impl PlacedPiece {
    fn point(&self, t: f64) -> Result<(f64, f64), Error> {
        let t = if self.reverse { 1.0 - t } else { t };
        let (x, y) = self.piece.point_at(t)?;
        Ok(if self.reflect { (-x, -y) } else { (x, y) })
    }
}

const TABLE_SIZE: usize = 4096;
const SAMPLES_PER_PIECE: usize = 256;
const CHAIN_GAP_TOL: f64 = 1e-9;

/// A constructed, query-ready gauge.
#[derive(Debug, Clone)]
pub struct Gauge {
    placed: Vec<PlacedPiece>,
    /// Unwrapped angular span `[start, end]` of each placed piece; spans are
    /// contiguous and cover `[start_angle, start_angle + 2π]`.
    spans: Vec<(f64, f64)>,
    start_angle: f64,
    /// `(piece index, parameter)` at `start_angle + k·2π/TABLE_SIZE`.
    table: Vec<(u32, f64)>,
    boundary: Gauge2DBoundary,
}

impl Gauge {
    /// Validates the boundary (piece sanity, closure, star-shapedness),
    /// orients it counterclockwise, and builds the lookup table.
    pub fn build(boundary: Gauge2DBoundary) -> Result<Self, Error> {
        if boundary.pieces.is_empty() {
            return Err(Error::MalformedBoundary("no pieces".into()));
        }
        for p in &boundary.pieces {
            p.validate()?;
        }

        let mut placed: Vec<PlacedPiece> = boundary
            .pieces
            .iter()
            .map(|p| PlacedPiece {
                piece: p.clone(),
                reflect: false,
                reverse: false,
            })
            .collect();
        if boundary.symmetric {
            placed.extend(boundary.pieces.iter().map(|p| PlacedPiece {
                piece: p.clone(),
                reflect: true,
                reverse: false,
            }));
        }

        // Chain check: each piece must start where the previous one ended.
        let n = placed.len();
        for i in 0..n {
            let end = placed[i].point(1.0)?;
            let start = placed[(i + 1) % n].point(0.0)?;
            let gap = ((end.0 - start.0).powi(2) + (end.1 - start.1).powi(2)).sqrt();
            if gap > CHAIN_GAP_TOL {
                return Err(Error::MalformedBoundary(format!(
                    "gap {gap:.3e} between piece {i} end and piece {} start",
                    (i + 1) % n
                )));
            }
        }

        // Orientation: total angular turn must be ±2π; normalize to CCW.
        let total = traversal_turn(&placed)?;
        if (total - TAU).abs() > 1e-6 && (total + TAU).abs() > 1e-6 {
            return Err(Error::MalformedBoundary(format!(
                "total turn {total:.6} rad is not ±2π; curve is not a simple loop around the origin"
            )));
        }
        if total < 0.0 {
            placed.reverse();
            for p in &mut placed {
                p.reverse = !p.reverse;
            }
        }

        // Star-shapedness: the polar angle must increase monotonically along
        // the traversal, and no sample may sit at the origin.
        let mut spans = Vec::with_capacity(placed.len());
        let first = placed[0].point(0.0)?;
        let start_angle = first.1.atan2(first.0);
        let mut cum = start_angle;
        for (idx, p) in placed.iter().enumerate() {
            let piece_start = cum;
            let mut prev = p.point(0.0)?;
            check_radius(prev, idx)?;
            for k in 1..=SAMPLES_PER_PIECE {
                let t = k as f64 / SAMPLES_PER_PIECE as f64;
                let q = p.point(t)?;
                check_radius(q, idx)?;
                let d = angle_delta(prev, q);
                if d < -1e-10 {
                    return Err(Error::MalformedBoundary(format!(
                        "piece {idx} turns backward at t = {t}; curve is not star-shaped"
                    )));
                }
                cum += d.max(0.0);
                prev = q;
            }
            let span = cum - piece_start;
            if span >= PI - 1e-9 {
                return Err(Error::MalformedBoundary(format!(
                    "piece {idx} spans {span:.6} rad ≥ π; split it into smaller pieces"
                )));
            }
            spans.push((piece_start, cum));
        }
        if (cum - start_angle - TAU).abs() > 1e-6 {
            return Err(Error::MalformedBoundary(format!(
                "angular spans cover {:.6} rad, expected 2π",
                cum - start_angle
            )));
        }
        // Snap the final span so queries at the wrap point resolve.
        spans.last_mut().expect("nonempty").1 = start_angle + TAU;

        let mut gauge = Gauge {
            placed,
            spans,
            start_angle,
            table: Vec::new(),
            boundary,
        };
        let mut table = Vec::with_capacity(TABLE_SIZE + 1);
        for k in 0..=TABLE_SIZE {
            let theta = start_angle + TAU * k as f64 / TABLE_SIZE as f64;
            table.push(gauge.solve_slow(theta.min(start_angle + TAU))?);
        }
        gauge.table = table;
        Ok(gauge)
    }

    /// The original boundary description.
    pub fn boundary(&self) -> &Gauge2DBoundary {
        &self.boundary
    }

    /// Locates the piece covering unwrapped angle `a` (which must lie in
    /// `[start_angle, start_angle + 2π]`).
    fn piece_at(&self, a: f64) -> usize {
        match self
            .spans
            .binary_search_by(|span| span.0.partial_cmp(&a).expect("finite"))
        {
            Ok(i) => i,
            Err(0) => 0,
            Err(i) => i - 1,
        }
    }

    /// Full-bracket solve: piece lookup plus bisection over the whole piece.
    fn solve_slow(&self, a: f64) -> Result<(u32, f64), Error> {
        let idx = self.piece_at(a);
        let t = self.bisect_in_piece(idx, a, 0.0, 1.0)?;
        Ok((idx as u32, t))
    }

    /// Bisects the piece parameter so that the boundary point lies on the ray
    /// at unwrapped angle `a`. The piece spans less than π, so the sign of the
    /// cross product against the ray direction decides the side.
    fn bisect_in_piece(&self, idx: usize, a: f64, mut lo: f64, mut hi: f64) -> Result<f64, Error> {
        let (ux, uy) = (a.cos(), a.sin());
        let p = &self.placed[idx];
        // cross(P(t), u) > 0 ⟺ P(t) is angularly before the ray.
        let before = |pt: (f64, f64)| pt.0 * uy - pt.1 * ux > 0.0;
        if !before(p.point(lo)?) {
            return Ok(lo);
        }
        if before(p.point(hi)?) {
            return Ok(hi);
        }
        for _ in 0..64 {
            let mid = 0.5 * (lo + hi);
            if before(p.point(mid)?) {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-16 {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Boundary radius on the ray at angle `theta`.
    pub fn radius(&self, theta: f64) -> f64 {
        let rel = (theta - self.start_angle).rem_euclid(TAU);
        let a = self.start_angle + rel;
        let k = ((rel / TAU) * TABLE_SIZE as f64) as usize;
        let k = k.min(TABLE_SIZE - 1);
        let (p0, t0) = self.table[k];
        let (p1, t1) = self.table[k + 1];
        let idx = self.piece_at(a);
        let t = if p0 as usize == idx && p1 as usize == idx {
            self.bisect_in_piece(idx, a, t0, t1)
        } else if p0 as usize == idx {
            self.bisect_in_piece(idx, a, t0, 1.0)
        } else if p1 as usize == idx {
            self.bisect_in_piece(idx, a, 0.0, t1)
        } else {
            self.bisect_in_piece(idx, a, 0.0, 1.0)
        };
        // Construction validated every piece, so the solve cannot fail here.
        let t = t.expect("validated gauge lookup");
        let (x, y) = self.placed[idx].point(t).expect("validated gauge lookup");
        (x * x + y * y).sqrt()
    }

    /// Gauge norm of the point `(x, y)`.
    ///
    /// When the boundary was declared symmetric the sign of the input is
    /// canonicalized first, which makes `‖-v‖ = ‖v‖` hold exactly.
    pub fn norm(&self, x: f64, y: f64) -> f64 {
        if x == 0.0 && y == 0.0 {
            return 0.0;
        }
        let (x, y) = if self.boundary.symmetric && (x < 0.0 || (x == 0.0 && y < 0.0)) {
            (-x, -y)
        } else {
            (x, y)
        };
        let r = self.radius(y.atan2(x));
        (x * x + y * y).sqrt() / r
    }

    /// Walks the boundary polyline at the given angular step and checks that
    /// consecutive edge cross products never turn clockwise (zeros allowed;
    /// flat pieces are legal).
    pub fn convexity_walk(&self, angular_step: f64) -> GaugeConvexity {
        let steps = ((TAU / angular_step).ceil() as usize).max(8);
        let pts: Vec<(f64, f64, f64)> = (0..steps)
            .map(|j| {
                let theta = self.start_angle + TAU * j as f64 / steps as f64;
                let r = self.radius(theta);
                (r * theta.cos(), r * theta.sin(), theta)
            })
            .collect();
        let mut worst = f64::INFINITY;
        let mut witness = None;
        for j in 0..steps {
            let (ax, ay, ta) = pts[j];
            let (bx, by, tb) = pts[(j + 1) % steps];
            let (cx, cy, tc) = pts[(j + 2) % steps];
            let e1 = (bx - ax, by - ay);
            let e2 = (cx - bx, cy - by);
            let cross = e1.0 * e2.1 - e1.1 * e2.0;
            if cross < worst {
                worst = cross;
                witness = Some([ta, tb, tc]);
            }
        }
        GaugeConvexity {
            passed: worst >= -1e-12,
            min_cross: worst,
            witness: if worst >= -1e-12 { None } else { witness },
        }
    }
}

/// Outcome of the convexity polyline walk.
#[derive(Debug, Clone, Serialize)]
pub struct GaugeConvexity {
    pub passed: bool,
    /// Most clockwise (most negative) edge-pair cross product observed.
    pub min_cross: f64,
    /// Offending angle triple when the walk failed.
    pub witness: Option<[f64; 3]>,
}

/// Builds the boundary and walks its polyline at `angular_step`, verifying
/// that all consecutive-edge cross products share one sign (zeros allowed).
///
/// Errors if the boundary itself is malformed (not closed or not star-shaped).
pub fn validate_gauge_convexity(
    boundary: &Gauge2DBoundary,
    angular_step: f64,
) -> Result<GaugeConvexity, Error> {
    if !(angular_step > 0.0) {
        return Err(Error::InvalidParameter(
            "angular_step must be positive".into(),
        ));
    }
    let gauge = Gauge::build(boundary.clone())?;
    Ok(gauge.convexity_walk(angular_step))
}

fn check_radius(p: (f64, f64), idx: usize) -> Result<(), Error> {
    if !(p.0.is_finite() && p.1.is_finite()) {
        return Err(Error::MalformedBoundary(format!(
            "piece {idx} produced a non-finite point"
        )));
    }
    if p.0 * p.0 + p.1 * p.1 < 1e-18 {
        return Err(Error::MalformedBoundary(format!(
            "piece {idx} passes through the origin"
        )));
    }
    Ok(())
}

/// Signed change of polar angle from `a` to `b`, in `(-π, π]`.
fn angle_delta(a: (f64, f64), b: (f64, f64)) -> f64 {
    let d = b.1.atan2(b.0) - a.1.atan2(a.0);
    if d > PI {
        d - TAU
    } else if d <= -PI {
        d + TAU
    } else {
        d
    }
}

fn traversal_turn(placed: &[PlacedPiece]) -> Result<f64, Error> {
    let mut total = 0.0;
    let mut prev = placed[0].point(0.0)?;
    for p in placed {
        for k in 1..=SAMPLES_PER_PIECE {
            let q = p.point(k as f64 / SAMPLES_PER_PIECE as f64)?;
            total += angle_delta(prev, q);
            prev = q;
        }
    }
    Ok(total)
}

/// The stadium sphere: flat lines `y = ±1` for `|x| ≤ 1` joined by arcs of
/// the circle `x² + y² = 2`. Its radius function is `√2` where `|tan θ| ≤ 1`
/// and `1/|sin θ|` where `|tan θ| ≥ 1`.
pub(super) fn stadium_boundary() -> Gauge2DBoundary {
    let quarter = PI / 4.0;
    Gauge2DBoundary {
        pieces: vec![
            BoundaryPiece::CircularArc {
                radius: std::f64::consts::SQRT_2,
                angles: (-quarter, quarter),
            },
            BoundaryPiece::FlatLine {
                y: 1.0,
                x_range: (1.0, -1.0),
            },
        ],
        symmetric: true,
    }
}

/// The quartic/cubic/segment sphere: arc A on `x⁴ + y⁴ = 1` for
/// `x ∈ [0, 1/3]`, arc B on `|x|³ + y³ = 1` for `x ∈ [-1/4, 0]`, and the
/// straight segment C joining A's endpoint `(1/3, (80/81)^{1/4})` to the
/// point `(1/4, -(63/64)^{1/3})` on the reflected cubic, all closed up by
/// central symmetry.
pub(super) fn quartic_cubic_boundary() -> Gauge2DBoundary {
    let third: f64 = 1.0 / 3.0;
    let quart: f64 = 0.25;
    let y1 = (1.0 - third.powi(4)).powf(0.25);
    let y2 = -(1.0 - quart.powi(3)).powf(1.0 / 3.0);
    Gauge2DBoundary {
        pieces: vec![
            BoundaryPiece::Segment {
                from: (quart, y2),
                to: (third, y1),
            },
            BoundaryPiece::ImplicitArc {
                equation: ImplicitEquation::PowerSum {
                    exponent: 4.0,
                    branch: Branch::Upper,
                },
                x_range: (third, 0.0),
            },
            BoundaryPiece::ImplicitArc {
                equation: ImplicitEquation::PowerSum {
                    exponent: 3.0,
                    branch: Branch::Upper,
                },
                x_range: (0.0, -quart),
            },
        ],
        symmetric: true,
    }
}
