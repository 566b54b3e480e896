//! Seeded sampling helpers shared by the validation and probing loops.

use rand::Rng;

/// Standard normal via Marsaglia's polar method.
pub(crate) fn normal<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.random_range(-1.0..1.0);
        let v: f64 = rng.random_range(-1.0..1.0);
        let s = u * u + v * v;
        if s > 0.0 && s < 1.0 {
            return u * (-2.0 * s.ln() / s).sqrt();
        }
    }
}

/// Uniform direction on the Euclidean unit sphere.
pub(crate) fn random_direction<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| normal(rng)).collect();
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 1e-6 {
            return v.iter().map(|c| c / n).collect();
        }
    }
}
