//! Strongly orthonormal Hamel bases.
//!
//! For a unit-vector basis `{e₁, …, e_m}` the quantity `max Sᵢ` is the
//! largest `i`-th coefficient over all unit vectors, i.e. the dual norm of
//! the `i`-th coordinate functional. A basis is strongly orthonormal in the
//! Birkhoff-James sense when each `eᵢ` is strongly orthogonal to the span of
//! the others; in strictly convex spaces this is equivalent to
//! `max Sᵢ = 1` for every `i`, and this module decides the property by both
//! routes and compares them.

use crate::convexity::{strict_convexity_probe, FlatVerdict};
use crate::error::Error;
use crate::orthogonality::directional_min;
use crate::sampling;
use crate::spaces::{sphere_point_2d, NormedSpace, Vector};
use crate::Tolerances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Tolerance at which `max Sᵢ ≤ 1` is accepted by the criterion route.
pub const CRITERION_TOL: f64 = 1e-6;
/// Coefficient slack when hunting for a second maximizer.
const SECOND_COEFF_SLACK: f64 = 1e-7;
/// Distance below which two maximizers count as the same point.
const SECOND_SEPARATION: f64 = 0.05;

/// A unit-vector Hamel basis with its coordinate map materialized.
#[derive(Debug, Clone)]
pub struct Basis {
    vectors: Vec<Vector>,
    /// Row `i` is the `i`-th coordinate functional (row of the inverse of the
    /// column matrix of basis vectors).
    functionals: Vec<Vector>,
    sigma_min: f64,
}

impl Basis {
    /// Validates unit norms and linear independence, then materializes the
    /// ambient-coordinates → basis-coefficients map.
    pub fn new(space: &NormedSpace, vectors: Vec<Vector>) -> Result<Self, Error> {
        let m = space.dim();
        if vectors.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                got: vectors.len(),
            });
        }
        for v in &vectors {
            let n = space.norm(v)?;
            if (n - 1.0).abs() > 1e-10 {
                return Err(Error::NotAUnitVector { norm: n });
            }
        }
        // column matrix E, row-major
        let e: Vec<Vec<f64>> = (0..m)
            .map(|r| (0..m).map(|c| vectors[c].coords()[r]).collect())
            .collect();
        let sigma_min = crate::linalg::sigma_min(&e);
        if sigma_min <= 1e-10 {
            return Err(Error::DependentBasis { sigma_min });
        }
        let inv = crate::linalg::invert(&e).ok_or(Error::DependentBasis { sigma_min })?;
        let functionals = inv
            .into_iter()
            .map(|row| Vector::new(row).expect("finite inverse"))
            .collect();
        Ok(Basis {
            vectors,
            functionals,
            sigma_min,
        })
    }

    /// The standard coordinate basis of the space.
    pub fn standard(space: &NormedSpace) -> Result<Self, Error> {
        let m = space.dim();
        let vectors: Result<Vec<Vector>, Error> = (0..m)
            .map(|i| space.normalize(&Vector::standard(i, m)))
            .collect();
        Basis::new(space, vectors?)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn sigma_min(&self) -> f64 {
        self.sigma_min
    }

    /// The `i`-th coordinate functional `αᵢ` as an ambient vector.
    pub fn coordinate_functional(&self, i: usize) -> Result<&Vector, Error> {
        self.functionals.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.vectors.len(),
        })
    }

    /// Basis coefficients of an ambient vector.
    pub fn coefficients(&self, z: &Vector) -> Vec<f64> {
        self.functionals.iter().map(|f| f.dot(z)).collect()
    }

    /// `eᵢ + Σ_{j≠i} λⱼ eⱼ` for a packed coefficient vector over `j ≠ i`.
    fn combination(&self, i: usize, lambdas: &[f64]) -> Vector {
        let mut z = self.vectors[i].clone();
        let mut k = 0;
        for (j, e) in self.vectors.iter().enumerate() {
            if j != i {
                z = z.add_scaled(lambdas[k], e);
                k += 1;
            }
        }
        z
    }
}

/// Result of maximizing the `i`-th coefficient over the unit sphere.
#[derive(Debug, Clone, Serialize)]
pub struct MaxCoefficient {
    pub index: usize,
    /// `max Sᵢ`, the dual norm of the coordinate functional.
    pub value: f64,
    /// Unit vector attaining the maximum.
    pub maximizer: Vector,
    /// False when the ascent was stopped by the budget before stabilizing.
    pub converged: bool,
    pub evaluations: usize,
}

/// Maximizes the degree-0 homogeneous ratio `αᵢ(w)/‖w‖` over directions:
/// seeded multistart coordinate ascent with shrinking steps, plus a
/// deterministic angle sweep in dimension 2.
pub fn max_coefficient(
    space: &NormedSpace,
    basis: &Basis,
    i: usize,
    budget: usize,
    seed: u64,
) -> Result<MaxCoefficient, Error> {
    let c = basis.coordinate_functional(i)?.clone();
    let dim = space.dim();
    let mut evals = 0usize;
    let budget = budget.max(1_000);

    let mut best_val = f64::NEG_INFINITY;
    let mut best_w: Option<Vector> = None;
    let consider = |w: &Vector, val: f64, best_val: &mut f64, best_w: &mut Option<Vector>| {
        if val > *best_val {
            *best_val = val;
            *best_w = Some(w.clone());
        }
    };

    // multistart pool: the basis vector itself, the functional direction,
    // its sign pattern, coordinate axes, and seeded random directions
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9e37_79b9));
    let mut starts: Vec<Vector> = vec![
        basis.vectors()[i].clone(),
        c.clone(),
        Vector::new(c.coords().iter().map(|x| x.signum()).collect()).expect("finite"),
    ];
    for j in 0..dim {
        starts.push(Vector::standard(j, dim));
    }
    for _ in 0..8 {
        starts.push(Vector::new(sampling::random_direction(&mut rng, dim)).expect("finite"));
    }

    let mut converged = true;
    for start in &starts {
        let n0 = space.norm_slice(start.coords());
        if n0 < 1e-12 {
            continue;
        }
        let mut w = start.scale(1.0 / n0);
        let mut val = c.dot(&w);
        let mut eta = 0.5;
        while eta > 1e-10 {
            if evals >= budget {
                converged = false;
                break;
            }
            let mut improved = false;
            for j in 0..dim {
                for sign in [1.0, -1.0] {
                    let mut cand = w.clone();
                    let coords: Vec<f64> = cand
                        .coords()
                        .iter()
                        .enumerate()
                        .map(|(k, x)| if k == j { x + sign * eta } else { *x })
                        .collect();
                    cand = Vector::new(coords).expect("finite");
                    let n = space.norm_slice(cand.coords());
                    evals += 1;
                    if n < 1e-12 {
                        continue;
                    }
                    let cv = c.dot(&cand) / n;
                    if cv > val + 1e-15 {
                        w = cand.scale(1.0 / n);
                        val = cv;
                        improved = true;
                    }
                }
            }
            if !improved {
                eta *= 0.5;
            }
        }
        consider(&w, val, &mut best_val, &mut best_w);
    }

    if dim == 2 {
        // 0.01° sweep plus golden refinement of the winner
        let steps = 36_000usize;
        let mut best_theta = 0.0;
        let mut best_sweep = f64::NEG_INFINITY;
        for k in 0..steps {
            let theta = std::f64::consts::TAU * k as f64 / steps as f64;
            let p = sphere_point_2d(space, theta)?;
            evals += 1;
            let v = c.dot(&p);
            if v > best_sweep {
                best_sweep = v;
                best_theta = theta;
            }
        }
        let h = std::f64::consts::TAU / steps as f64;
        let mut obj = |t: f64| -> f64 {
            evals += 1;
            match sphere_point_2d(space, t) {
                Ok(p) => -c.dot(&p),
                Err(_) => f64::INFINITY,
            }
        };
        let g = crate::minimize::golden_min(&mut obj, best_theta - h, best_theta + h, 1e-12);
        let p = sphere_point_2d(space, g.xmin)?;
        consider(&p, c.dot(&p), &mut best_val, &mut best_w);
    }

    let w = best_w.ok_or(Error::BracketingFailed)?;
    let z = space.normalize(&w)?;
    Ok(MaxCoefficient {
        index: i,
        value: c.dot(&z),
        maximizer: z,
        converged,
        evaluations: evals,
    })
}

/// Outcome of the second-maximizer hunt.
#[derive(Debug, Clone, Serialize)]
pub struct UniquenessProbe {
    /// True when no essentially different unit vector came within
    /// `SECOND_COEFF_SLACK` of the maximum.
    pub unique: bool,
    pub second: Option<Vector>,
}

/// Searches for a second unit vector whose `i`-th coefficient ties the
/// maximum but which is separated from the known maximizer. In a strictly
/// convex space no such vector exists (the coefficient maximizer is unique).
pub fn uniqueness_probe(
    space: &NormedSpace,
    basis: &Basis,
    i: usize,
    max_si: f64,
    maximizer: &Vector,
    num_samples: usize,
    seed: u64,
) -> Result<UniquenessProbe, Error> {
    let c = basis.coordinate_functional(i)?.clone();
    let dim = space.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa5a5_5a5a);

    let mut dirs: Vec<Vector> = Vec::new();
    for j in 0..dim {
        dirs.push(Vector::standard(j, dim));
        dirs.push(Vector::standard(j, dim).scale(-1.0));
    }
    let extra = (num_samples / 12).max(8);
    for _ in 0..extra {
        dirs.push(Vector::new(sampling::random_direction(&mut rng, dim)).expect("finite"));
    }

    let scales = [0.5, 0.25, 0.1, 0.075, 0.06];
    let mut used = 0usize;
    for t in scales {
        for d in &dirs {
            if used >= num_samples.max(dirs.len() * scales.len()) {
                break;
            }
            used += 1;
            let cand = maximizer.add_scaled(t, d);
            let n = space.norm_slice(cand.coords());
            if n < 1e-12 {
                continue;
            }
            let y = cand.scale(1.0 / n);
            let coeff = c.dot(&y);
            let dist = space.norm_slice(y.sub(maximizer).coords());
            if coeff >= max_si - SECOND_COEFF_SLACK && dist >= SECOND_SEPARATION {
                return Ok(UniquenessProbe {
                    unique: false,
                    second: Some(y),
                });
            }
        }
    }
    Ok(UniquenessProbe {
        unique: true,
        second: None,
    })
}

/// Per-index outcome of the direct strong-orthonormality check.
#[derive(Debug, Clone, Serialize)]
pub struct DirectIndexCheck {
    pub index: usize,
    /// `min ‖eᵢ + Σ_{j≠i} λⱼ eⱼ‖` over the coefficient box.
    pub min_value: f64,
    /// Minimizing coefficients (packed over `j ≠ i`).
    pub argmin: Vec<f64>,
    /// Largest per-coordinate flat width at the minimum.
    pub flat_diameter: f64,
    /// Nonzero coefficient vector attaining the minimum value, when the
    /// minimum is not attained only at zero.
    pub witness: Option<Vec<f64>>,
    pub ok: bool,
}

/// Outcome of the direct route.
#[derive(Debug, Clone, Serialize)]
pub struct DirectCheck {
    pub ok: bool,
    pub per_index: Vec<DirectIndexCheck>,
}

/// Direct definition check: for each `i`, minimizes
/// `‖eᵢ + Σ_{j≠i} λⱼ eⱼ‖` by multistart cyclic coordinate descent (each line
/// search via [`directional_min`]). Strong orthonormality requires every
/// minimum to equal 1 within tolerance *and* the flat region at the minimum
/// to be a point rather than a segment.
pub fn strongly_orthonormal_direct(
    space: &NormedSpace,
    basis: &Basis,
    starts: usize,
    tol: &Tolerances,
) -> Result<DirectCheck, Error> {
    let m = basis.len();
    let mut per_index = Vec::with_capacity(m);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_ba515);

    for i in 0..m {
        let others: Vec<usize> = (0..m).filter(|&j| j != i).collect();
        let nfree = others.len();

        let mut start_points = vec![vec![0.0; nfree]];
        for _ in 1..starts.max(1) {
            use rand::Rng;
            start_points.push((0..nfree).map(|_| rng.random_range(-1.5..1.5)).collect());
        }

        let mut best_val = f64::INFINITY;
        let mut best_lambda = vec![0.0; nfree];
        for sp in &start_points {
            let (val, lambda) = coordinate_descent(space, basis, i, &others, sp.clone(), tol)?;
            if val < best_val {
                best_val = val;
                best_lambda = lambda;
            }
        }

        // flat geometry at the optimum, coordinate by coordinate
        let z = basis.combination(i, &best_lambda);
        let mut diameter = 0.0f64;
        let mut witness: Option<Vec<f64>> = None;
        for (k, &j) in others.iter().enumerate() {
            let dm = directional_min(space, &z, &basis.vectors()[j], tol)?;
            let (lo, hi) = dm.flat_interval.expect("expanded");
            if hi - lo > diameter {
                diameter = hi - lo;
                let end = if hi.abs() >= lo.abs() { hi } else { lo };
                let mut w = best_lambda.clone();
                w[k] += end / 2.0;
                witness = Some(w);
            }
        }

        let value_ok = best_val >= 1.0 - tol.value.max(1e-9);
        let point_ok = diameter <= tol.flat_width;
        let witness = if value_ok && point_ok {
            None
        } else if !value_ok {
            Some(best_lambda.clone())
        } else {
            witness
        };
        per_index.push(DirectIndexCheck {
            index: i,
            min_value: best_val,
            argmin: best_lambda,
            flat_diameter: diameter,
            witness,
            ok: value_ok && point_ok,
        });
    }

    Ok(DirectCheck {
        ok: per_index.iter().all(|r| r.ok),
        per_index,
    })
}

/// Cyclic coordinate descent on `λ ↦ ‖eᵢ + Σ λⱼeⱼ‖` inside an adaptive box.
/// The box starts at ±2 (sufficient for any unit-norm minimizer whose
/// coefficient functionals have dual norm ≤ 2) and doubles when a coordinate
/// converges onto the boundary.
fn coordinate_descent(
    space: &NormedSpace,
    basis: &Basis,
    i: usize,
    others: &[usize],
    mut lambda: Vec<f64>,
    tol: &Tolerances,
) -> Result<(f64, Vec<f64>), Error> {
    let mut box_half = 2.0_f64;
    let mut val = f64::INFINITY;
    for _expansion in 0..4 {
        for l in lambda.iter_mut() {
            *l = l.clamp(-box_half, box_half);
        }
        let mut z = basis.combination(i, &lambda);
        val = space.norm(&z)?;
        for _cycle in 0..200 {
            let mut moved = 0.0f64;
            for (k, &j) in others.iter().enumerate() {
                let dm = directional_min(space, &z, &basis.vectors()[j], tol)?;
                let new = (lambda[k] + dm.argmin).clamp(-box_half, box_half);
                let step = new - lambda[k];
                if step != 0.0 {
                    z = z.add_scaled(step, &basis.vectors()[j]);
                    lambda[k] = new;
                }
                moved = moved.max(step.abs());
            }
            let nv = space.norm(&z)?;
            let done = moved < tol.arg.max(1e-10) && nv > val - 1e-13;
            val = nv;
            if done {
                break;
            }
        }
        let on_boundary = lambda.iter().any(|l| (l.abs() - box_half).abs() < 1e-9);
        if !on_boundary {
            break;
        }
        box_half *= 2.0;
    }
    Ok((val, lambda))
}

/// Outcome of the `max Sᵢ = 1` criterion route.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionCheck {
    pub ok: bool,
    /// False when the strict-convexity hypothesis behind the criterion's
    /// sufficiency could not be confirmed by probing; criterion results are
    /// then advisory.
    pub hypothesis_verified: bool,
    pub values: Vec<f64>,
}

/// Criterion route: strongly orthonormal iff `max Sᵢ ≤ 1 + tol` for all `i`.
/// The strict-convexity hypothesis is probed and reported as a flag, not
/// enforced as an error.
pub fn strongly_orthonormal_criterion(
    space: &NormedSpace,
    basis: &Basis,
    budget: usize,
    seed: u64,
) -> Result<CriterionCheck, Error> {
    let probe = strict_convexity_probe(space, 4_000, 1e-9, 0.05, seed);
    let mut values = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        values.push(max_coefficient(space, basis, i, budget, seed)?.value);
    }
    Ok(CriterionCheck {
        ok: values.iter().all(|v| *v <= 1.0 + CRITERION_TOL),
        hypothesis_verified: probe.verdict == FlatVerdict::NoFlatFound,
        values,
    })
}

/// Per-basis-vector entry of a [`BasisReport`].
#[derive(Debug, Clone, Serialize)]
pub struct BasisEntry {
    pub index: usize,
    pub max_si: f64,
    pub maximizer: Vector,
    pub converged: bool,
    pub unique: bool,
}

/// Combined report: both verdict routes plus the per-index evidence.
#[derive(Debug, Clone, Serialize)]
pub struct BasisReport {
    pub entries: Vec<BasisEntry>,
    pub verdict_direct: bool,
    pub verdict_criterion: bool,
    pub agreement: bool,
    /// See [`CriterionCheck::hypothesis_verified`].
    pub hypothesis_verified: bool,
    pub direct: DirectCheck,
}

/// Runs both routes and assembles the combined report.
pub fn basis_report(
    space: &NormedSpace,
    basis: &Basis,
    budget: usize,
    tol: &Tolerances,
    seed: u64,
) -> Result<BasisReport, Error> {
    let criterion = strongly_orthonormal_criterion(space, basis, budget, seed)?;
    let direct = strongly_orthonormal_direct(space, basis, 6, tol)?;
    let mut entries = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let mc = max_coefficient(space, basis, i, budget, seed)?;
        let probe = uniqueness_probe(space, basis, i, mc.value, &mc.maximizer, 10_000, seed)?;
        entries.push(BasisEntry {
            index: i,
            max_si: mc.value,
            maximizer: mc.maximizer,
            converged: mc.converged,
            unique: probe.unique,
        });
    }
    Ok(BasisReport {
        verdict_direct: direct.ok,
        verdict_criterion: criterion.ok,
        agreement: direct.ok == criterion.ok,
        hypothesis_verified: criterion.hypothesis_verified,
        entries,
        direct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::builtin_space;

    fn v2(x: f64, y: f64) -> Vector {
        Vector::xy(x, y).unwrap()
    }

    fn skew_basis(space: &NormedSpace) -> Basis {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Basis::new(space, vec![v2(1.0, 0.0), v2(s, s)]).unwrap()
    }

    #[test]
    fn basis_validation() {
        let l2 = builtin_space("l2").unwrap();
        assert!(matches!(
            Basis::new(&l2, vec![v2(2.0, 0.0), v2(0.0, 1.0)]),
            Err(Error::NotAUnitVector { .. })
        ));
        assert!(matches!(
            Basis::new(&l2, vec![v2(1.0, 0.0), v2(-1.0, 0.0)]),
            Err(Error::DependentBasis { .. })
        ));
        let b = Basis::standard(&l2).unwrap();
        assert!((b.sigma_min() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn max_coefficient_standard_bases() {
        for name in ["l1", "l2", "lp:3", "linf"] {
            let space = builtin_space(name).unwrap();
            let basis = Basis::standard(&space).unwrap();
            for i in 0..2 {
                let mc = max_coefficient(&space, &basis, i, 100_000, 1).unwrap();
                assert!(
                    (mc.value - 1.0).abs() < 1e-6,
                    "{name} index {i}: max Sᵢ = {}",
                    mc.value
                );
                assert!((space.norm(&mc.maximizer).unwrap() - 1.0).abs() < 1e-9);
                let coeff = basis.coefficients(&mc.maximizer)[i];
                assert!((coeff - mc.value).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn max_coefficient_skew_euclidean_basis() {
        // coefficient functionals (1, −1) and (0, √2): both have dual norm √2
        let l2 = builtin_space("l2").unwrap();
        let basis = skew_basis(&l2);
        let mc = max_coefficient(&l2, &basis, 0, 100_000, 1).unwrap();
        assert!(
            (mc.value - std::f64::consts::SQRT_2).abs() < 1e-5,
            "max S₁ = {}",
            mc.value
        );
    }

    #[test]
    fn uniqueness_examples() {
        let l2 = builtin_space("l2").unwrap();
        let basis = Basis::standard(&l2).unwrap();
        let mc = max_coefficient(&l2, &basis, 0, 50_000, 1).unwrap();
        let probe = uniqueness_probe(&l2, &basis, 0, mc.value, &mc.maximizer, 10_000, 1).unwrap();
        assert!(probe.unique);

        let linf = builtin_space("linf").unwrap();
        let basis = Basis::standard(&linf).unwrap();
        let mc = max_coefficient(&linf, &basis, 0, 50_000, 1).unwrap();
        let probe =
            uniqueness_probe(&linf, &basis, 0, mc.value, &mc.maximizer, 10_000, 1).unwrap();
        assert!(!probe.unique);
        let second = probe.second.unwrap();
        assert!((basis.coefficients(&second)[0] - 1.0).abs() < 1e-7);
        assert!(linf.norm(&second.sub(&mc.maximizer)).unwrap() >= SECOND_SEPARATION);
    }

    #[test]
    fn uniqueness_survives_nearly_flat_smooth_spheres() {
        let l4 = builtin_space("lp:4,dim=3").unwrap();
        let basis = Basis::standard(&l4).unwrap();
        let mc = max_coefficient(&l4, &basis, 0, 100_000, 1).unwrap();
        let probe = uniqueness_probe(&l4, &basis, 0, mc.value, &mc.maximizer, 100_000, 1).unwrap();
        assert!(probe.unique);
    }

    #[test]
    fn direct_check_standard_and_flat() {
        let tol = Tolerances::default();
        for name in ["lp:1.5", "l2", "lp:3"] {
            let space = builtin_space(name).unwrap();
            let basis = Basis::standard(&space).unwrap();
            let direct = strongly_orthonormal_direct(&space, &basis, 4, &tol).unwrap();
            assert!(direct.ok, "{name} standard basis should pass: {direct:?}");
        }

        let linf = builtin_space("linf").unwrap();
        let basis = Basis::standard(&linf).unwrap();
        let direct = strongly_orthonormal_direct(&linf, &basis, 4, &tol).unwrap();
        assert!(!direct.ok);
        let bad = direct.per_index.iter().find(|r| !r.ok).unwrap();
        // witness coefficients keep the norm at 1: the sup-norm basis fails
        // through a flat segment, e.g. λ₂ = 1/2
        let w = bad.witness.as_ref().unwrap();
        let z = basis.combination(bad.index, w);
        assert!((linf.norm(&z).unwrap() - 1.0).abs() < 1e-7);
        assert!(w.iter().any(|l| l.abs() > 0.05));
    }

    #[test]
    fn direct_check_skew_euclidean_basis_fails_by_value() {
        let l2 = builtin_space("l2").unwrap();
        let basis = skew_basis(&l2);
        let direct = strongly_orthonormal_direct(&l2, &basis, 4, &Tolerances::default()).unwrap();
        assert!(!direct.ok);
        let r0 = &direct.per_index[0];
        assert!(
            (r0.min_value - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-6,
            "min value {}",
            r0.min_value
        );
        assert!((r0.argmin[0] + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-5);
    }

    #[test]
    fn criterion_examples() {
        let l3 = builtin_space("lp:3,dim=3").unwrap();
        let basis = Basis::standard(&l3).unwrap();
        let c = strongly_orthonormal_criterion(&l3, &basis, 50_000, 1).unwrap();
        assert!(c.ok && c.hypothesis_verified);

        let l2 = builtin_space("l2").unwrap();
        let basis = skew_basis(&l2);
        let c = strongly_orthonormal_criterion(&l2, &basis, 50_000, 1).unwrap();
        assert!(!c.ok);

        // rotated orthonormal basis keeps all coefficients within 1
        let (s, co) = 0.6f64.sin_cos();
        let basis = Basis::new(&l2, vec![v2(co, s), v2(-s, co)]).unwrap();
        let c = strongly_orthonormal_criterion(&l2, &basis, 50_000, 1).unwrap();
        assert!(c.ok);
    }

    #[test]
    fn report_agreement_flags() {
        let linf = builtin_space("linf").unwrap();
        let basis = Basis::standard(&linf).unwrap();
        let report = basis_report(&linf, &basis, 50_000, &Tolerances::default(), 1).unwrap();
        // ℓ∞: criterion says yes (max Sᵢ = 1), the definition says no; the
        // disagreement is legal because the criterion's hypothesis fails
        assert!(report.verdict_criterion);
        assert!(!report.verdict_direct);
        assert!(!report.agreement);
        assert!(!report.hypothesis_verified);
    }

    #[test]
    fn resigning_basis_vectors_keeps_max_si() {
        let l3 = builtin_space("lp:3").unwrap();
        let basis = Basis::standard(&l3).unwrap();
        let flipped = Basis::new(
            &l3,
            vec![
                basis.vectors()[0].scale(-1.0),
                basis.vectors()[1].clone(),
            ],
        )
        .unwrap();
        for i in 0..2 {
            let a = max_coefficient(&l3, &basis, i, 50_000, 1).unwrap().value;
            let b = max_coefficient(&l3, &flipped, i, 50_000, 1).unwrap().value;
            assert!((a - b).abs() < 1e-9, "index {i}: {a} vs {b}");
        }
    }
}
