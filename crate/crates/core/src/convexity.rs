//! Strict-convexity probing and modulus-of-convexity estimation.
//!
//! A space fails strict convexity exactly when its unit sphere contains a
//! segment, i.e. when unit vectors `u ≠ v` exist with `‖(u+v)/2‖ = 1`. The
//! probe searches for such pairs; `NoFlatFound` is a sampling verdict, not a
//! proof, and is labeled accordingly.

use crate::error::Error;
use crate::orthogonality::{classify, OrthogonalityVerdict};
use crate::sampling;
use crate::spaces::{sphere_point_2d, NormedSpace, Vector};
use crate::Tolerances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

/// Verdict of the flat-segment search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FlatVerdict {
    /// No sampled pair looked flat; a sampling verdict, not a proof.
    NoFlatFound,
    /// A pair `(u, v)` with `‖(u+v)/2‖ ≥ 1 − tol` and `‖u − v‖ ≥ sep` exists.
    FlatFound,
}

/// Outcome of [`strict_convexity_probe`], optionally enriched with modulus
/// samples by [`modulus_profile`].
#[derive(Debug, Clone, Serialize)]
pub struct ConvexityReport {
    pub verdict: FlatVerdict,
    /// Unit pair witnessing the flat segment, expanded to (numerically) the
    /// maximal segment in dimension 2.
    pub flat_witness: Option<(Vector, Vector)>,
    /// `(ε, δ̂(ε))` estimates; empty unless filled by [`modulus_profile`].
    pub modulus_samples: Vec<(f64, f64)>,
    pub samples_used: usize,
}

impl ConvexityReport {
    pub fn found_flat(&self) -> bool {
        self.verdict == FlatVerdict::FlatFound
    }
}

/// Norm of the midpoint of two vectors.
fn midpoint_norm(space: &NormedSpace, u: &Vector, v: &Vector) -> f64 {
    space.norm_slice(u.add(v).scale(0.5).coords())
}

/// Searches the unit sphere for a flat segment: a pair of unit vectors at
/// space-distance at least `sep` whose midpoint still has norm `≥ 1 − tol`.
///
/// Dimension 2 gets a deterministic angular sweep (chords of length `sep`
/// slid around the sphere, with golden-section refinement of the best angle);
/// all dimensions additionally sample `num_samples` random nearby pairs.
/// A found witness is expanded to the maximal flat arc in dimension 2.
pub fn strict_convexity_probe(
    space: &NormedSpace,
    num_samples: usize,
    tol: f64,
    sep: f64,
    seed: u64,
) -> ConvexityReport {
    let mut best_score = f64::NEG_INFINITY;
    let mut best: Option<(Vector, Vector)> = None;
    let mut used = 0usize;

    if space.dim() == 2 {
        let sweep = num_samples.max(512);
        let score_at = |theta: f64| -> Option<(f64, Vector, Vector)> {
            let u = sphere_point_2d(space, theta).ok()?;
            let psi = chord_angle(space, theta, sep)?;
            let v = sphere_point_2d(space, theta + psi).ok()?;
            Some((midpoint_norm(space, &u, &v), u, v))
        };
        let mut best_theta = 0.0;
        for k in 0..sweep {
            let theta = PI * k as f64 / sweep as f64;
            used += 1;
            if let Some((s, u, v)) = score_at(theta) {
                if s > best_score {
                    best_score = s;
                    best_theta = theta;
                    best = Some((u, v));
                }
            }
        }
        // local refinement of the sweep winner
        let h = PI / sweep as f64;
        let g = crate::minimize::golden_min(
            &mut |t| -score_at(t).map(|s| s.0).unwrap_or(f64::NEG_INFINITY),
            best_theta - h,
            best_theta + h,
            1e-12,
        );
        if -g.fmin > best_score {
            if let Some((s, u, v)) = score_at(g.xmin) {
                best_score = s;
                best = Some((u, v));
            }
        }
    }

    // Random nearby pairs: u on the sphere, v the normalized offset of u by
    // 2·sep in a random direction. On a flat face both endpoints and their
    // midpoint stay on the face, so the face is detected with probability
    // close to 1 per sample.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..num_samples {
        used += 1;
        let u = Vector::new(sampling::random_direction(&mut rng, space.dim())).expect("finite");
        let nu = space.norm_slice(u.coords());
        if nu < 1e-9 {
            continue;
        }
        let u = u.scale(1.0 / nu);
        let w = Vector::new(sampling::random_direction(&mut rng, space.dim())).expect("finite");
        let cand = u.add_scaled(2.0 * sep, &w);
        let nc = space.norm_slice(cand.coords());
        if nc < 1e-9 {
            continue;
        }
        let v = cand.scale(1.0 / nc);
        if space.norm_slice(u.sub(&v).coords()) < sep {
            continue;
        }
        let s = midpoint_norm(space, &u, &v);
        if s > best_score {
            best_score = s;
            best = Some((u, v));
        }
    }

    let found = best_score >= 1.0 - tol;
    let witness = if found {
        let (u, v) = best.expect("score implies witness");
        Some(if space.dim() == 2 {
            expand_flat_arc(space, &u, &v, tol)
        } else {
            (u, v)
        })
    } else {
        None
    };

    ConvexityReport {
        verdict: if found {
            FlatVerdict::FlatFound
        } else {
            FlatVerdict::NoFlatFound
        },
        flat_witness: witness,
        modulus_samples: Vec::new(),
        samples_used: used,
    }
}

/// Smallest angular offset `ψ` with `‖P(θ) − P(θ+ψ)‖ ≥ target`, bisected to
/// the qualifying side; `None` if no offset short of the antipode qualifies.
fn chord_angle(space: &NormedSpace, theta: f64, target: f64) -> Option<f64> {
    let u = sphere_point_2d(space, theta).ok()?;
    let chord = |psi: f64| -> f64 {
        match sphere_point_2d(space, theta + psi) {
            Ok(v) => space.norm_slice(u.sub(&v).coords()),
            Err(_) => f64::NAN,
        }
    };
    let mut lo = 0.0;
    let mut hi = PI;
    if chord(hi) < target {
        return None;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if chord(mid) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// Grows a flat chord to (numerically) the maximal arc on which the segment
/// criterion `‖(P(a)+P(b))/2‖ ≥ 1 − tol` holds. By convexity of the ball a
/// unit midpoint certifies the whole chord lies on the sphere.
///
/// Each side is expanded against the *original* opposite endpoint at a
/// quarter of the tolerance, so the two overshoots together still satisfy
/// the full-tolerance criterion for the joint chord.
fn expand_flat_arc(space: &NormedSpace, u: &Vector, v: &Vector, tol: f64) -> (Vector, Vector) {
    let mut a = u.angle();
    let mut b = v.angle();
    if b < a {
        std::mem::swap(&mut a, &mut b);
    }
    let ok = |a: f64, b: f64, slack: f64| -> bool {
        match (sphere_point_2d(space, a), sphere_point_2d(space, b)) {
            (Ok(p), Ok(q)) => midpoint_norm(space, &p, &q) >= 1.0 - slack,
            _ => false,
        }
    };
    let (a0, b0) = (a, b);
    let slack = 0.25 * tol;
    if ok(a0, b0, slack) {
        // grow b upward against a0; a sphere segment spans strictly less
        // than a half turn, so π bounds the search
        let (mut lo, mut hi) = (b0, a0 + PI - 1e-9);
        if ok(a0, hi, slack) {
            b = hi;
        } else {
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if ok(a0, mid, slack) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            b = lo;
        }
        // grow a downward against b0
        let (mut lo, mut hi) = (b0 - PI + 1e-9, a0);
        if ok(lo, b0, slack) {
            a = lo;
        } else {
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if ok(mid, b0, slack) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            a = hi;
        }
        if !ok(a, b, tol) {
            // overshoots combined badly; fall back to the certified chord
            a = a0;
            b = b0;
        }
    }
    let pa = sphere_point_2d(space, a).expect("expanded endpoint");
    let pb = sphere_point_2d(space, b).expect("expanded endpoint");
    (pa, pb)
}

/// Sampled modulus of convexity `δ̂(ε)`: the minimum of `1 − ‖(x+y)/2‖` over
/// sampled unit pairs with `‖x − y‖ ≥ ε`. An over-estimate of the true
/// `δ(ε)` that decreases toward it as sampling refines.
pub fn modulus_of_convexity(
    space: &NormedSpace,
    epsilon: f64,
    num_samples: usize,
    seed: u64,
) -> Result<f64, Error> {
    if !(epsilon > 0.0 && epsilon <= 2.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in (0, 2], got {epsilon}"
        )));
    }
    // Guard against the knife edge at chord = ε: measured chords must clear
    // ε by more than norm-evaluation noise, otherwise near-antipodal pairs on
    // flat-ish spheres sneak past ε = 2 on rounding alone. Skipping a
    // borderline pair only over-estimates δ̂, which the contract allows.
    const CHORD_GUARD: f64 = 1e-9;
    fn consider(delta: &mut f64, space: &NormedSpace, x: &Vector, y: &Vector, threshold: f64) {
        if space.norm_slice(x.sub(y).coords()) >= threshold {
            *delta = delta.min(1.0 - midpoint_norm(space, x, y));
        }
    }
    // the antipodal pair has chord exactly 2‖x‖ = 2 and midpoint exactly 0,
    // so it qualifies for every ε ≤ 2 without measurement
    fn antipodal(delta: &mut f64, space: &NormedSpace, x: &Vector) {
        *delta = delta.min(1.0 - midpoint_norm(space, x, &x.scale(-1.0)));
    }
    let mut delta = f64::INFINITY;

    if space.dim() == 2 {
        let sweep = num_samples.max(512);
        for k in 0..sweep {
            let theta = PI * k as f64 / sweep as f64;
            let Ok(u) = sphere_point_2d(space, theta) else {
                continue;
            };
            if let Some(psi) = chord_angle(space, theta, epsilon + CHORD_GUARD) {
                if let Ok(v) = sphere_point_2d(space, theta + psi) {
                    consider(&mut delta, space, &u, &v, epsilon + CHORD_GUARD);
                }
            }
            antipodal(&mut delta, space, &u);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..num_samples {
            let u = Vector::new(sampling::random_direction(&mut rng, space.dim()))
                .expect("finite");
            let nu = space.norm_slice(u.coords());
            if nu < 1e-9 {
                continue;
            }
            let u = u.scale(1.0 / nu);
            let w = Vector::new(sampling::random_direction(&mut rng, space.dim()))
                .expect("finite");
            // bisect the offset so the chord just reaches ε
            let chord = |t: f64| -> f64 {
                let c = u.add_scaled(t, &w);
                let nc = space.norm_slice(c.coords());
                if nc < 1e-9 {
                    return f64::NAN;
                }
                space.norm_slice(u.sub(&c.scale(1.0 / nc)).coords())
            };
            let mut lo = 0.0;
            let mut hi = 64.0;
            let target = epsilon + CHORD_GUARD;
            if chord(hi).is_nan() || chord(hi) < target {
                antipodal(&mut delta, space, &u);
                continue;
            }
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let c = chord(mid);
                if c.is_nan() || c >= target {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let c = u.add_scaled(hi, &w);
            let v = c.scale(1.0 / space.norm_slice(c.coords()));
            consider(&mut delta, space, &u, &v, epsilon + CHORD_GUARD);
            antipodal(&mut delta, space, &u);
        }
    }

    Ok(delta.clamp(0.0, 1.0))
}

/// Convenience: modulus estimates on a grid of ε values.
pub fn modulus_profile(
    space: &NormedSpace,
    epsilons: &[f64],
    num_samples: usize,
    seed: u64,
) -> Result<Vec<(f64, f64)>, Error> {
    epsilons
        .iter()
        .map(|&e| Ok((e, modulus_of_convexity(space, e, num_samples, seed)?)))
        .collect()
}

/// The flat-segment orthogonality construction: given unit vectors `u, v`
/// whose segment lies on the sphere, builds `x = (u+v)/2`, `y = v − u` and
/// classifies the pair. The midpoint of a sphere segment is B-orthogonal to
/// the segment direction but never strongly so: the minimum of `‖x + λy‖` is
/// attained on all of `[−1/2, 1/2]`.
pub fn flat_segment_orthogonality_construction(
    space: &NormedSpace,
    u: &Vector,
    v: &Vector,
    tol: &Tolerances,
) -> Result<(Vector, Vector, OrthogonalityVerdict), Error> {
    for w in [u, v] {
        let n = space.norm(w)?;
        if (n - 1.0).abs() > 1e-7 {
            return Err(Error::NotAUnitVector { norm: n });
        }
    }
    let mid = u.add(v).scale(0.5);
    let mid_norm = space.norm(&mid)?;
    if mid_norm < 1.0 - tol.value.max(1e-9) {
        return Err(Error::SegmentNotOnSphere {
            midpoint_norm: mid_norm,
        });
    }
    let y = v.sub(u);
    let verdict = classify(space, &mid, &y, tol)?;
    Ok((mid, y, verdict))
}
