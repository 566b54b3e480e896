//! Two-dimensional specialties: conjugate diameters (mutually B-orthogonal
//! unit pairs), Radon-curve testing (symmetry of the orthogonality relation),
//! exhaustive mutual-orthogonality scans, and generalized conjugate diameters
//! in higher dimension.
//!
//! Detection is residual-based: a pair is conjugate when the *minimizer* of
//! `λ ↦ ‖y + λx‖` sits at 0 (within tolerance) in both role assignments. The
//! minimizer moves linearly under perturbation while the minimum value moves
//! quadratically, so the residual gives the sharper signal.

use crate::error::Error;
use crate::minimize::bisect_flip;
use crate::orthogonality::{classify, companion_arc, directional_min, Relation};
use crate::spaces::{sphere_point_2d, NormedSpace, Vector};
use crate::Tolerances;
use serde::Serialize;
use std::f64::consts::PI;

/// Companion arcs wider than this flag the base point as non-smooth.
const SMOOTH_ARC_WIDTH: f64 = 1e-4;
/// Difference-quotient step shared with the companion search.
const SLOPE_H: f64 = 1e-6;

/// Strength of a conjugate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strength {
    /// Mutually Birkhoff-orthogonal.
    Conjugate,
    /// Mutually *strongly* Birkhoff-orthogonal (both minima attained only at 0).
    StronglyConjugate,
}

/// A (candidate) pair of conjugate diameters.
#[derive(Debug, Clone, Serialize)]
pub struct DiameterPair {
    pub theta_x: f64,
    pub theta_y: f64,
    pub x: Vector,
    pub y: Vector,
    /// Distance from 0 to the set of near-minimizers of `λ ↦ ‖x + λy‖`
    /// (0 exactly when `x ⊥_B y` holds at tolerance). The distance to the
    /// flat sublevel interval is used rather than the raw argmin because the
    /// argmin is ill-conditioned along nearly flat sphere directions.
    pub residual_xy: f64,
    /// Same with the roles of `x` and `y` swapped.
    pub residual_yx: f64,
    pub strength: Strength,
    /// Set when either endpoint sits at a non-smooth sphere point, where the
    /// companion direction is chosen by the midpoint rule and results are
    /// advisory.
    pub nonsmooth_caveat: bool,
}

/// Outcome of [`find_conjugate_diameters`].
#[derive(Debug, Clone, Serialize)]
pub struct ConjugateSearch {
    pub grid_size: usize,
    /// Every grid angle produced a conjugate pair (inner-product-like
    /// spaces); the pair list then holds one pair per grid angle.
    pub all_conjugate: bool,
    pub pairs: Vec<DiameterPair>,
}

/// Distance from 0 to the flat sublevel interval of a minimization result.
fn residual(dm: &crate::orthogonality::MinimizationResult) -> f64 {
    match dm.flat_interval {
        Some((lo, hi)) => lo.max(-hi).max(0.0),
        None => dm.argmin.abs(),
    }
}

/// Builds and verifies a candidate pair; `None` when the pair fails the
/// mutual-orthogonality residual test at `tol`.
fn make_pair(
    space: &NormedSpace,
    theta_x: f64,
    theta_y: f64,
    tol: f64,
) -> Result<Option<DiameterPair>, Error> {
    if (theta_y - theta_x).sin().abs() < 1e-6 {
        return Ok(None);
    }
    let x = sphere_point_2d(space, theta_x)?;
    let y = sphere_point_2d(space, theta_y)?;
    let t = Tolerances::default();
    let cxy = classify(space, &x, &y, &t)?;
    let cyx = classify(space, &y, &x, &t)?;
    let residual_xy = residual(&cxy.min_result);
    let residual_yx = residual(&cyx.min_result);
    let mutual = cxy.relation != Relation::NotOrthogonal
        && cyx.relation != Relation::NotOrthogonal
        && residual_xy <= tol
        && residual_yx <= tol;
    if !mutual {
        return Ok(None);
    }
    let strength = if cxy.relation == Relation::StronglyBirkhoff
        && cyx.relation == Relation::StronglyBirkhoff
    {
        Strength::StronglyConjugate
    } else {
        Strength::Conjugate
    };
    let (a1, a2) = companion_arc(space, &x)?;
    let (b1, b2) = companion_arc(space, &y)?;
    Ok(Some(DiameterPair {
        theta_x,
        theta_y,
        x,
        y,
        residual_xy,
        residual_yx,
        strength,
        nonsmooth_caveat: a2 - a1 > SMOOTH_ARC_WIDTH || b2 - b1 > SMOOTH_ARC_WIDTH,
    }))
}

/// One-sided slopes of `μ ↦ ‖y(φ) + μ·x‖` at 0, folded into a signed
/// violation: 0 exactly when `y(φ) ⊥_B x`, positive when the minimizer lies
/// below 0, negative when it lies above.
fn back_violation(space: &NormedSpace, x: &Vector, phi: f64) -> Result<f64, Error> {
    let y = sphere_point_2d(space, phi)?;
    let xc = x.coords();
    let yc = y.coords();
    let f = |l: f64| space.norm_slice(&[yc[0] + l * xc[0], yc[1] + l * xc[1]]);
    let s_minus = (1.0 - f(-SLOPE_H)) / SLOPE_H;
    let s_plus = (f(SLOPE_H) - 1.0) / SLOPE_H;
    Ok(if s_minus > 0.0 {
        s_minus
    } else if s_plus < 0.0 {
        s_plus
    } else {
        0.0
    })
}

/// Searches a companion arc `[φ₁, φ₂]` of `x` for angles whose sphere point
/// is B-orthogonal *back* to `x`. Runs of exact zeros contribute their
/// midpoint; sign changes are bisected.
fn mutual_in_arc(
    space: &NormedSpace,
    x: &Vector,
    arc: (f64, f64),
) -> Result<Vec<f64>, Error> {
    let (p1, p2) = arc;
    let width = p2 - p1;
    if width <= 1e-9 {
        let mid = 0.5 * (p1 + p2);
        return Ok(if back_violation(space, x, mid)?.abs() <= 1e-5 {
            vec![mid]
        } else {
            vec![]
        });
    }
    let k = ((width / (PI / 1800.0)).ceil() as usize).clamp(16, 4096);
    let phis: Vec<f64> = (0..=k).map(|j| p1 + width * j as f64 / k as f64).collect();
    let vals: Vec<f64> = phis
        .iter()
        .map(|&p| back_violation(space, x, p))
        .collect::<Result<_, _>>()?;

    let mut found = Vec::new();
    // maximal runs of zeros
    let mut run_start: Option<usize> = None;
    for (j, v) in vals.iter().enumerate() {
        if v.abs() <= 1e-9 {
            run_start.get_or_insert(j);
        } else if let Some(s) = run_start.take() {
            found.push(0.5 * (phis[s] + phis[j - 1]));
        }
    }
    if let Some(s) = run_start {
        found.push(0.5 * (phis[s] + phis[k]));
    }
    // transversal sign changes between nonzero samples
    for j in 0..k {
        if vals[j] > 1e-9 && vals[j + 1] < -1e-9 || vals[j] < -1e-9 && vals[j + 1] > 1e-9 {
            let positive_first = vals[j] > 0.0;
            let mut err = None;
            let mut pred = |p: f64| match back_violation(space, x, p) {
                Ok(v) => (v > 0.0) == positive_first,
                Err(e) => {
                    err = Some(e);
                    false
                }
            };
            let root = bisect_flip(&mut pred, phis[j], phis[j + 1], 1e-10);
            if let Some(e) = err {
                return Err(e);
            }
            found.push(root);
        }
    }
    found.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    found.dedup_by(|a, b| (*a - *b).abs() < 1e-8);
    Ok(found)
}

/// Signed back-residual `argmin_λ ‖y(θ) + λ·x(θ)‖` for the midpoint-rule
/// companion `y(θ)` of `x(θ)`, plus the companion arc.
fn back_residual_at(
    space: &NormedSpace,
    theta: f64,
) -> Result<(f64, (f64, f64), f64), Error> {
    let x = sphere_point_2d(space, theta)?;
    let arc = companion_arc(space, &x)?;
    let phi = 0.5 * (arc.0 + arc.1);
    let y = sphere_point_2d(space, phi)?;
    let dm = directional_min(space, &y, &x, &Tolerances::default())?;
    Ok((dm.argmin, arc, phi))
}

struct GridScan {
    thetas: Vec<f64>,
    rhos: Vec<f64>,
    arcs: Vec<(f64, f64)>,
    phis: Vec<f64>,
}

fn scan_grid(space: &NormedSpace, n: usize) -> Result<GridScan, Error> {
    let mut thetas = Vec::with_capacity(n);
    let mut rhos = Vec::with_capacity(n);
    let mut arcs = Vec::with_capacity(n);
    let mut phis = Vec::with_capacity(n);
    for i in 0..n {
        let theta = PI * i as f64 / n as f64;
        let (rho, arc, phi) = back_residual_at(space, theta)?;
        thetas.push(theta);
        rhos.push(rho);
        arcs.push(arc);
        phis.push(phi);
    }
    Ok(GridScan {
        thetas,
        rhos,
        arcs,
        phis,
    })
}

/// Shared candidate generation: grid near-zeros, bisected sign changes of
/// the back-residual across the grid, and within-arc searches wherever the
/// companion set is a whole arc.
fn conjugate_candidates(
    space: &NormedSpace,
    scan: &GridScan,
    tol: f64,
) -> Result<Vec<(f64, f64)>, Error> {
    let n = scan.thetas.len();
    let mut cands: Vec<(f64, f64)> = Vec::new();
    // candidate generation is generous (verification is the sharp gate):
    // along nearly flat sphere directions the back-residual of an exactly
    // conjugate pair can sit on a plateau of size up to ~1e-3
    let push_tol = tol.max(1e-3);
    let consider_theta = |theta: f64,
                              arc: (f64, f64),
                              phi_mid: f64,
                              rho: f64,
                              cands: &mut Vec<(f64, f64)>|
     -> Result<(), Error> {
        if rho.abs() <= push_tol {
            cands.push((theta, phi_mid));
        }
        if arc.1 - arc.0 > SMOOTH_ARC_WIDTH {
            let x = sphere_point_2d(space, theta)?;
            for phi in mutual_in_arc(space, &x, arc)? {
                cands.push((theta, phi));
            }
        }
        Ok(())
    };

    for i in 0..n {
        consider_theta(
            scan.thetas[i],
            scan.arcs[i],
            scan.phis[i],
            scan.rhos[i],
            &mut cands,
        )?;
        // sign change of the back-residual toward the next grid angle
        // (the residual is π-periodic in θ)
        let (rho_a, rho_b) = (scan.rhos[i], scan.rhos[(i + 1) % n]);
        let theta_b = if i + 1 == n {
            scan.thetas[0] + PI
        } else {
            scan.thetas[i + 1]
        };
        if rho_a.abs() > push_tol && rho_b.abs() > push_tol && rho_a.signum() != rho_b.signum() {
            let positive_first = rho_a > 0.0;
            let mut err = None;
            let mut pred = |t: f64| match back_residual_at(space, t) {
                Ok((rho, _, _)) => (rho > 0.0) == positive_first,
                Err(e) => {
                    err = Some(e);
                    false
                }
            };
            let theta_star = bisect_flip(&mut pred, scan.thetas[i], theta_b, 1e-10);
            if let Some(e) = err {
                return Err(e);
            }
            let (rho, arc, phi) = back_residual_at(space, theta_star)?;
            consider_theta(theta_star, arc, phi, rho, &mut cands)?;
        }
    }

    cands.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    cands.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6);
    Ok(cands)
}

/// Angular distance modulo π (diameters are unordered and sign-free).
fn diameter_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

fn dedup_pairs(pairs: Vec<DiameterPair>) -> Vec<DiameterPair> {
    let mut kept: Vec<DiameterPair> = Vec::new();
    for p in pairs {
        let (pa, pb) = {
            let a = p.theta_x.rem_euclid(PI);
            let b = p.theta_y.rem_euclid(PI);
            (a.min(b), a.max(b))
        };
        let dup = kept.iter().any(|q| {
            let a = q.theta_x.rem_euclid(PI);
            let b = q.theta_y.rem_euclid(PI);
            let (qa, qb) = (a.min(b), a.max(b));
            (diameter_dist(pa, qa) < 1e-4 && diameter_dist(pb, qb) < 1e-4)
                || (diameter_dist(pa, qb) < 1e-4 && diameter_dist(pb, qa) < 1e-4)
        });
        if !dup {
            kept.push(p);
        }
    }
    kept
}

/// Finds conjugate diameter pairs by walking a grid of `grid_size` angles
/// over `[0, π)`, refining back-residual sign changes, and searching within
/// companion arcs at non-smooth points. At least one pair must exist in any
/// 2-D normed space; an empty result is therefore reported as an error.
pub fn find_conjugate_diameters(
    space: &NormedSpace,
    grid_size: usize,
    tol: f64,
) -> Result<ConjugateSearch, Error> {
    if space.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: space.dim(),
        });
    }
    let n = grid_size.max(8);
    let scan = scan_grid(space, n)?;

    let all_conjugate = scan.rhos.iter().all(|r| r.abs() <= tol);
    if all_conjugate {
        let mut pairs = Vec::with_capacity(n);
        for i in 0..n {
            if let Some(p) = make_pair(space, scan.thetas[i], scan.phis[i], tol)? {
                pairs.push(p);
            }
        }
        return Ok(ConjugateSearch {
            grid_size: n,
            all_conjugate: true,
            pairs,
        });
    }

    let mut pairs = Vec::new();
    for (theta, phi) in conjugate_candidates(space, &scan, tol)? {
        if let Some(p) = make_pair(space, theta, phi, tol)? {
            pairs.push(p);
        }
    }
    let pairs = dedup_pairs(pairs);
    if pairs.is_empty() {
        return Err(Error::NoConjugateDiameters);
    }
    Ok(ConjugateSearch {
        grid_size: n,
        all_conjugate: false,
        pairs,
    })
}

/// Outcome of the Radon-curve test.
#[derive(Debug, Clone, Serialize)]
pub struct RadonReport {
    pub radon: bool,
    pub grid_size: usize,
    /// Angle with the largest asymmetry.
    pub worst_theta: f64,
    pub worst_residual: f64,
    /// Non-smooth sphere points were encountered; the companion there is the
    /// midpoint-rule choice and the verdict is advisory.
    pub nonsmooth_caveat: bool,
}

/// Tests whether Birkhoff orthogonality is symmetric at grid resolution: for
/// each grid angle, the companion's back-residual must vanish within `tol`.
pub fn is_radon(space: &NormedSpace, grid_size: usize, tol: f64) -> Result<RadonReport, Error> {
    if space.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: space.dim(),
        });
    }
    let n = grid_size.max(8);
    let mut worst = -1.0f64;
    let mut worst_theta = 0.0;
    let mut caveat = false;
    for i in 0..n {
        let theta = PI * i as f64 / n as f64;
        let (rho, arc, _) = back_residual_at(space, theta)?;
        caveat |= arc.1 - arc.0 > SMOOTH_ARC_WIDTH;
        if rho.abs() > worst {
            worst = rho.abs();
            worst_theta = theta;
        }
    }
    Ok(RadonReport {
        radon: worst <= tol,
        grid_size: n,
        worst_theta,
        worst_residual: worst,
        nonsmooth_caveat: caveat,
    })
}

/// Outcome of [`exhaustive_pair_scan`].
#[derive(Debug, Clone, Serialize)]
pub struct PairScanReport {
    pub resolution_deg: f64,
    pub grid_size: usize,
    /// Mutually B-orthogonal pairs found (strongly conjugate ones included).
    pub conjugate_count: usize,
    pub strongly_conjugate_count: usize,
    pub conjugate_examples: Vec<DiameterPair>,
    pub strong_examples: Vec<DiameterPair>,
}

/// Scans angle pairs at the given resolution (at most 1°), classifying
/// mutual orthogonality and strong orthogonality with refinement of
/// near-hits; used to substantiate "no strongly orthonormal basis" claims at
/// scan resolution.
pub fn exhaustive_pair_scan(
    space: &NormedSpace,
    resolution_deg: f64,
    tol: f64,
) -> Result<PairScanReport, Error> {
    if space.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: space.dim(),
        });
    }
    if !(resolution_deg > 0.0 && resolution_deg <= 1.0 + 1e-12) {
        return Err(Error::InvalidParameter(format!(
            "angular resolution must be in (0°, 1°], got {resolution_deg}°"
        )));
    }
    let n = (180.0 / resolution_deg).ceil() as usize;
    let scan = scan_grid(space, n)?;

    let all_conjugate = scan.rhos.iter().all(|r| r.abs() <= tol);
    let mut pairs: Vec<DiameterPair> = Vec::new();
    if all_conjugate {
        for i in 0..n {
            if let Some(p) = make_pair(space, scan.thetas[i], scan.phis[i], tol)? {
                pairs.push(p);
            }
        }
    } else {
        for (theta, phi) in conjugate_candidates(space, &scan, tol)? {
            if let Some(p) = make_pair(space, theta, phi, tol)? {
                pairs.push(p);
            }
        }
    }

    let strong: Vec<&DiameterPair> = pairs
        .iter()
        .filter(|p| p.strength == Strength::StronglyConjugate)
        .collect();
    let cap = 16usize;
    Ok(PairScanReport {
        resolution_deg,
        grid_size: n,
        conjugate_count: pairs.len(),
        strongly_conjugate_count: strong.len(),
        strong_examples: strong.iter().take(cap).map(|p| (*p).clone()).collect(),
        conjugate_examples: pairs.iter().take(cap).cloned().collect(),
    })
}

/// Outcome of [`generalized_conjugate_check`].
#[derive(Debug, Clone, Serialize)]
pub struct GeneralizedCheck {
    pub ok: bool,
    /// First ordered pair that failed B-orthogonality.
    pub failing_pair: Option<(usize, usize)>,
}

/// Checks whether `n = dim` diameters are generalized conjugate diameters:
/// every ordered pair must be B-orthogonal.
pub fn generalized_conjugate_check(
    space: &NormedSpace,
    diameters: &[Vector],
    tol: f64,
) -> Result<GeneralizedCheck, Error> {
    if diameters.len() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            got: diameters.len(),
        });
    }
    let units: Vec<Vector> = diameters
        .iter()
        .map(|d| space.normalize(d))
        .collect::<Result<_, _>>()?;
    for i in 0..units.len() {
        for j in 0..units.len() {
            if i == j {
                continue;
            }
            let (u, v) = (&units[i], &units[j]);
            let cos = u.dot(v).abs() / (u.euclid() * v.euclid());
            if cos > 1.0 - 1e-9 {
                return Err(Error::InvalidParameter(format!(
                    "diameters {i} and {j} are not independent"
                )));
            }
            if !crate::orthogonality::is_birkhoff(space, u, v, tol)? {
                return Ok(GeneralizedCheck {
                    ok: false,
                    failing_pair: Some((i, j)),
                });
            }
        }
    }
    Ok(GeneralizedCheck {
        ok: true,
        failing_pair: None,
    })
}

/// Outcome of [`theorem41_crosscheck`].
#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    /// False when the space failed the strict-convexity probe, in which case
    /// the equivalence is not claimed and nothing was checked.
    pub applicable: bool,
    pub pairs_checked: usize,
    /// Conjugate pairs whose two-element basis failed the direct
    /// strong-orthonormality check (each one falsifies the equivalence).
    pub disagreements: usize,
}

/// Cross-checks, on a strictly convex plane, that conjugate diameter pairs
/// and strongly orthonormal two-element bases coincide: every pair found by
/// [`find_conjugate_diameters`] is fed as a basis to the direct check and the
/// verdicts are compared.
pub fn theorem41_crosscheck(space: &NormedSpace, tol: f64) -> Result<CrosscheckReport, Error> {
    let probe = crate::convexity::strict_convexity_probe(space, 4_000, 1e-9, 0.05, 0);
    if probe.found_flat() {
        return Ok(CrosscheckReport {
            applicable: false,
            pairs_checked: 0,
            disagreements: 0,
        });
    }
    let search = find_conjugate_diameters(space, 360, tol)?;
    let tolerances = Tolerances::default();
    let mut checked = 0;
    let mut disagreements = 0;
    for pair in &search.pairs {
        let basis = crate::basis::Basis::new(space, vec![pair.x.clone(), pair.y.clone()])?;
        let direct = crate::basis::strongly_orthonormal_direct(space, &basis, 4, &tolerances)?;
        checked += 1;
        if !direct.ok {
            disagreements += 1;
        }
    }
    Ok(CrosscheckReport {
        applicable: true,
        pairs_checked: checked,
        disagreements,
    })
}
