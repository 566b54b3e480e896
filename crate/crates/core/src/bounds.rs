//! Lower-bound quantities for B-orthogonal unit pairs: the minimum of
//! `t ↦ ‖tx + (1−t)y‖` over `[0, 1]` (never below 1/3) and the minimum of
//! `λ ↦ ‖y + λx‖` over the line (never below 1/2). Both floors are attained
//! in the sup-norm plane by `x = (1,1)`, `y = (−1,0)`.
//!
//! Every probe is checked against the analytic envelopes that prove the
//! floors — `‖tx + (1−t)y‖ ≥ |t‖x‖ − (1−t)‖y‖|`, `‖tx + (1−t)y‖ ≥ t·min_λ
//! ‖x + λy‖`, and the line analogues — so a violation surfaces as an error
//! instead of a fabricated bound.

use crate::error::Error;
use crate::minimize::golden_min;
use crate::orthogonality::{directional_min, orthogonal_companion_2d};
use crate::spaces::{sphere_point_2d, NormedSpace, Vector};
use crate::Tolerances;
use serde::Serialize;
use std::f64::consts::PI;

/// Tolerance at which the `x ⊥_B y` precondition is enforced.
pub const ORTH_PRECONDITION_TOL: f64 = 1e-7;
/// Tolerance at which the unit-vector precondition is enforced.
pub const UNIT_PRECONDITION_TOL: f64 = 1e-7;

/// Floor of Theorem-grade segment minima (`1/3`) minus the numeric slack.
pub const SEGMENT_FLOOR: f64 = 1.0 / 3.0;
/// Floor of line minima (`1/2`).
pub const LINE_FLOOR: f64 = 0.5;
const FLOOR_SLACK: f64 = 1e-9;

fn check_unit(space: &NormedSpace, v: &Vector) -> Result<f64, Error> {
    let n = space.norm(v)?;
    if (n - 1.0).abs() > UNIT_PRECONDITION_TOL {
        return Err(Error::NotAUnitVector { norm: n });
    }
    Ok(n)
}

/// Checks `x ⊥_B y` and returns `(‖x‖, ‖y‖, min_λ ‖x + λy‖)`.
fn check_pair(space: &NormedSpace, x: &Vector, y: &Vector) -> Result<(f64, f64, f64), Error> {
    let nx = check_unit(space, x)?;
    let ny = check_unit(space, y)?;
    let dm = directional_min(space, x, y, &Tolerances::default())?;
    let deficit = (nx - dm.min_value).max(0.0);
    if deficit > ORTH_PRECONDITION_TOL {
        return Err(Error::NotBirkhoffOrthogonal { deficit });
    }
    Ok((nx, ny, dm.min_value))
}

/// Minimizes `t ↦ ‖tx + (1−t)y‖` over `[0, 1]` for a B-orthogonal unit pair;
/// returns `(t*, value)`.
pub fn segment_min(space: &NormedSpace, x: &Vector, y: &Vector) -> Result<(f64, f64), Error> {
    let (nx, ny, line_floor) = check_pair(space, x, y)?;
    let mut buf = vec![0.0; x.dim()];
    let mut violation: Option<(f64, f64, f64)> = None;
    let mut eval = |t: f64| -> f64 {
        for i in 0..buf.len() {
            buf[i] = t * x.coords()[i] + (1.0 - t) * y.coords()[i];
        }
        let val = space.norm_slice(&buf);
        let floor = (t * nx - (1.0 - t) * ny).abs().max(t * line_floor);
        if val < floor - FLOOR_SLACK && violation.is_none() {
            violation = Some((t, val, floor));
        }
        val
    };
    let g = golden_min(&mut eval, 0.0, 1.0, 1e-9);
    if let Some((at, value, floor)) = violation {
        return Err(Error::EnvelopeViolation { at, value, floor });
    }
    Ok((g.xmin, g.fmin))
}

/// Minimizes `λ ↦ ‖y + λx‖` for a B-orthogonal unit pair (roles swapped
/// against [`segment_min`]); returns `(λ*, value)`.
pub fn line_min(space: &NormedSpace, x: &Vector, y: &Vector) -> Result<(f64, f64), Error> {
    let (nx, ny, line_floor) = check_pair(space, x, y)?;
    let dm = directional_min(space, y, x, &Tolerances::default())?;

    // envelope audit at the minimizer, the flat endpoints, and a coarse grid
    let mut buf = vec![0.0; x.dim()];
    let mut check = |lambda: f64| -> Result<(), Error> {
        for i in 0..buf.len() {
            buf[i] = y.coords()[i] + lambda * x.coords()[i];
        }
        let val = space.norm_slice(&buf);
        let floor = (lambda.abs() * line_floor).max((ny - lambda.abs() * nx).abs());
        if val < floor - FLOOR_SLACK {
            return Err(Error::EnvelopeViolation {
                at: lambda,
                value: val,
                floor,
            });
        }
        Ok(())
    };
    check(dm.argmin)?;
    if let Some((lo, hi)) = dm.flat_interval {
        check(lo)?;
        check(hi)?;
    }
    let b = 2.0 * ny / nx;
    for k in 0..=64 {
        check(-b + 2.0 * b * k as f64 / 64.0)?;
    }

    Ok((dm.argmin, dm.min_value))
}

/// One surveyed pair with both bound quantities.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsRecord {
    pub space: String,
    /// Sphere angle the pair was generated from (2-D surveys only).
    pub theta: Option<f64>,
    pub x: Vector,
    pub y: Vector,
    pub segment_argmin: f64,
    pub segment_min: f64,
    pub line_argmin: f64,
    pub line_min: f64,
}

/// Survey outcome: per-pair records plus global minima and any records that
/// dipped below the analytic floors (which would falsify the implementation,
/// not the theorems).
#[derive(Debug, Clone, Serialize)]
pub struct BoundsSurvey {
    pub space: String,
    pub pairs: usize,
    pub global_segment_min: f64,
    pub global_line_min: f64,
    /// Indices of records violating the 1/3 or 1/2 floors.
    pub floor_violations: Vec<usize>,
    pub records: Vec<BoundsRecord>,
}

impl BoundsSurvey {
    fn from_records(space: &NormedSpace, records: Vec<BoundsRecord>) -> Self {
        let mut global_segment_min = f64::INFINITY;
        let mut global_line_min = f64::INFINITY;
        let mut floor_violations = Vec::new();
        for (i, r) in records.iter().enumerate() {
            global_segment_min = global_segment_min.min(r.segment_min);
            global_line_min = global_line_min.min(r.line_min);
            if r.segment_min < SEGMENT_FLOOR - FLOOR_SLACK || r.line_min < LINE_FLOOR - FLOOR_SLACK
            {
                floor_violations.push(i);
            }
        }
        BoundsSurvey {
            space: space.label().to_string(),
            pairs: records.len(),
            global_segment_min,
            global_line_min,
            floor_violations,
            records,
        }
    }

    /// One JSON record per line, floats at 17 significant digits.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&crate::jsonfmt::to_string_17(r).expect("serializable record"));
            out.push('\n');
        }
        out
    }
}

/// Surveys B-orthogonal pairs generated by walking a uniform angle grid
/// through the orthogonal-companion search (2-D spaces).
pub fn bounds_survey(
    space: &NormedSpace,
    num_pairs: usize,
) -> Result<BoundsSurvey, Error> {
    if space.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: space.dim(),
        });
    }
    let num_pairs = num_pairs.max(1);
    let mut records = Vec::with_capacity(num_pairs);
    for i in 0..num_pairs {
        let theta = PI * i as f64 / num_pairs as f64;
        let x = sphere_point_2d(space, theta)?;
        let y = orthogonal_companion_2d(space, &x)?;
        let (ts, vs) = segment_min(space, &x, &y)?;
        let (ll, vl) = line_min(space, &x, &y)?;
        records.push(BoundsRecord {
            space: space.label().to_string(),
            theta: Some(theta),
            x,
            y,
            segment_argmin: ts,
            segment_min: vs,
            line_argmin: ll,
            line_min: vl,
        });
    }
    Ok(BoundsSurvey::from_records(space, records))
}

/// Surveys caller-supplied B-orthogonal pairs (any dimension).
pub fn bounds_survey_pairs(
    space: &NormedSpace,
    pairs: &[(Vector, Vector)],
) -> Result<BoundsSurvey, Error> {
    let mut records = Vec::with_capacity(pairs.len());
    for (x, y) in pairs {
        let (ts, vs) = segment_min(space, x, y)?;
        let (ll, vl) = line_min(space, x, y)?;
        records.push(BoundsRecord {
            space: space.label().to_string(),
            theta: None,
            x: x.clone(),
            y: y.clone(),
            segment_argmin: ts,
            segment_min: vs,
            line_argmin: ll,
            line_min: vl,
        });
    }
    Ok(BoundsSurvey::from_records(space, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::builtin_space;

    fn v2(x: f64, y: f64) -> Vector {
        Vector::xy(x, y).unwrap()
    }

    #[test]
    fn sup_norm_attains_both_floors() {
        let linf = builtin_space("linf").unwrap();
        let x = v2(1.0, 1.0);
        let y = v2(-1.0, 0.0);
        let (t, v) = segment_min(&linf, &x, &y).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-7, "segment min {v}");
        assert!((t - 1.0 / 3.0).abs() < 1e-6, "segment argmin {t}");
        let (l, v) = line_min(&linf, &x, &y).unwrap();
        assert!((v - 0.5).abs() < 1e-7, "line min {v}");
        assert!((l - 0.5).abs() < 1e-6, "line argmin {l}");
    }

    #[test]
    fn euclidean_pair_hits_the_inner_product_values() {
        let l2 = builtin_space("l2").unwrap();
        let x = v2(1.0, 0.0);
        let y = v2(0.0, 1.0);
        let (t, v) = segment_min(&l2, &x, &y).unwrap();
        assert!((v - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        assert!((t - 0.5).abs() < 1e-6);
        let (l, v) = line_min(&l2, &x, &y).unwrap();
        assert!(l.abs() < 1e-9);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn l1_line_min_at_zero() {
        let l1 = builtin_space("l1").unwrap();
        let (l, v) = line_min(&l1, &v2(1.0, 0.0), &v2(0.0, 1.0)).unwrap();
        assert!(l.abs() < 1e-9);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn preconditions_are_enforced() {
        let l2 = builtin_space("l2").unwrap();
        assert!(matches!(
            segment_min(&l2, &v2(2.0, 0.0), &v2(0.0, 1.0)),
            Err(Error::NotAUnitVector { .. })
        ));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(matches!(
            segment_min(&l2, &v2(1.0, 0.0), &v2(s, s)),
            Err(Error::NotBirkhoffOrthogonal { .. })
        ));
    }

    #[test]
    fn small_survey_is_clean() {
        let l2 = builtin_space("l2").unwrap();
        let survey = bounds_survey(&l2, 36).unwrap();
        assert!(survey.floor_violations.is_empty());
        assert!((survey.global_segment_min - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-6);
        assert!((survey.global_line_min - 1.0).abs() < 1e-9);
        let jsonl = survey.to_jsonl();
        assert_eq!(jsonl.lines().count(), 36);
        assert!(jsonl.lines().next().unwrap().contains("\"segment_min\""));
    }
}
