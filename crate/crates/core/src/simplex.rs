//! Gap coordinates `x_i = q_i - q_{i+1}` of ordered collinear configurations.
//!
//! After centering (`sum q_i = 0`) and scaling to `q_1 - q_n = 1`, the gaps are
//! barycentric coordinates on the standard simplex; its faces `x_i = 0` are the
//! collisions of neighbours.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::Configuration;

/// Accepted deviation of `sum x_i` from 1.
pub const SUM_TOL: f64 = 1e-9;

/// A point of the closed simplex `x_i >= 0, sum x_i = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GapPoint {
    x: Vec<f64>,
}

impl GapPoint {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.len() < 2 {
            return Err(Error::InvalidInput("need at least two gaps"));
        }
        if x.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidInput("gaps must be finite and non-negative"));
        }
        let s: f64 = x.iter().sum();
        if (s - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidInput("gaps must sum to 1"));
        }
        Ok(Self { x })
    }

    /// Rescales non-negative gaps with a positive sum onto the simplex.
    pub fn normalized(raw: &[f64]) -> Result<Self> {
        if raw.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidInput("gaps must be finite and non-negative"));
        }
        let s: f64 = raw.iter().sum();
        if !(s > 0.0) {
            return Err(Error::Degenerate("all gaps vanish"));
        }
        Self::new(raw.iter().map(|v| v / s).collect())
    }

    /// Vertex `k` of the simplex with `n - 1` coordinates.
    pub fn vertex(k: usize, n: usize) -> Result<Self> {
        if k + 1 >= n {
            return Err(Error::InvalidInput("vertex index out of range"));
        }
        Self::new((0..n - 1).map(|i| if i == k { 1.0 } else { 0.0 }).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.x
    }

    /// Number of bodies, one more than the number of gaps.
    pub fn n(&self) -> usize {
        self.x.len() + 1
    }

    pub fn is_interior(&self) -> bool {
        self.x.iter().all(|v| *v > 0.0)
    }

    pub fn reversed(&self) -> Self {
        let mut x = self.x.clone();
        x.reverse();
        Self { x }
    }
}

/// Normalized gaps of a strictly decreasing collinear configuration.
pub fn to_gaps(cfg: &Configuration) -> Result<GapPoint> {
    if cfg.d() != 1 {
        return Err(Error::InvalidInput("gap coordinates need a collinear configuration"));
    }
    to_gaps_positions(cfg.as_slice())
}

pub fn to_gaps_positions(q: &[f64]) -> Result<GapPoint> {
    if let Some(k) = q.windows(2).position(|w| !(w[0] > w[1])) {
        return Err(Error::NotOrdered(k));
    }
    let span = q[0] - q[q.len() - 1];
    GapPoint::normalized(&q.windows(2).map(|w| (w[0] - w[1]) / span).collect::<Vec<_>>())
}

/// The positions with the given gaps, `sum q_i = 0` and `q_1 - q_n = 1`.
/// Boundary points give coincident neighbours; see
/// [`Configuration::collinear`] to reject them.
pub fn from_gaps(x: &GapPoint) -> Vec<f64> {
    let mut q = Vec::with_capacity(x.n());
    let mut acc = 0.0;
    q.push(acc);
    for g in &x.x {
        acc -= g;
        q.push(acc);
    }
    let mean = q.iter().sum::<f64>() / q.len() as f64;
    q.iter_mut().for_each(|v| *v -= mean);
    q
}
