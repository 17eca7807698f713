#![allow(dead_code)]

use ccfix_core::geometry::{min_relative_separation, Configuration, MassVector};
use ccfix_core::GapPoint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Points uniform in the unit cube, kept only if well separated.
pub fn random_config(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Configuration {
    loop {
        let pts: Vec<f64> = (0..n * d).map(|_| rng.random_range(-1.0..1.0)).collect();
        if min_relative_separation(&pts, n, d).0 > 0.05 {
            return Configuration::new(n, d, pts).unwrap();
        }
    }
}

pub fn random_masses(rng: &mut ChaCha8Rng, n: usize) -> MassVector {
    MassVector::new((0..n).map(|_| rng.random_range(0.2..5.0)).collect()).unwrap()
}

/// Uniform on the simplex with every gap at least `floor`.
pub fn random_gaps(rng: &mut ChaCha8Rng, n: usize, floor: f64) -> GapPoint {
    loop {
        let e: Vec<f64> = (0..n - 1).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
        let s: f64 = e.iter().sum();
        let x: Vec<f64> = e.iter().map(|v| v / s).collect();
        if x.iter().all(|v| *v >= floor) {
            return GapPoint::normalized(&x).unwrap();
        }
    }
}

pub fn rel_err(a: &[f64], b: &[f64]) -> f64 {
    let diff: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
    let scale: f64 = b.iter().map(|y| y * y).sum::<f64>().sqrt();
    diff / scale.max(f64::MIN_POSITIVE)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
