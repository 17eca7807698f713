//! Configurations, masses, the mass metric and the mutual-difference
//! variables `Q_ij = (q_i - q_j) / |q_i - q_j|^(alpha + 2)`.
//!
//! Two centerings coexist. The dynamical side works in the mass-weighted
//! subspace `sum m_i q_i = 0`; the inverse problem uses the plain
//! `sum q_i = 0`, which does not depend on the masses.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::dot;

/// Minimum pairwise separation, relative to the configuration diameter.
pub const COLLISION_EPS: f64 = 1e-9;

/// `n` labeled, pairwise distinct points in `R^d`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    n: usize,
    d: usize,
    points: Vec<f64>,
}

impl Configuration {
    pub fn new(n: usize, d: usize, points: Vec<f64>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput("need at least 3 bodies"));
        }
        if d < 1 {
            return Err(Error::InvalidInput("dimension must be at least 1"));
        }
        if points.len() != n * d {
            return Err(Error::DimensionMismatch { expected: n * d, got: points.len() });
        }
        if points.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput("non-finite coordinate"));
        }
        check_collisions(&points, n, d)?;
        Ok(Self { n, d, points })
    }

    /// A configuration on the line.
    pub fn collinear(q: &[f64]) -> Result<Self> {
        Self::new(q.len(), 1, q.to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i * self.d..(i + 1) * self.d]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.points
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.points
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.n, self.d, self.points.iter().map(|x| x * c).collect())
    }

    pub fn translated(&self, v: &[f64]) -> Result<Self> {
        if v.len() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, got: v.len() });
        }
        let pts = self.points.iter().enumerate().map(|(k, x)| x + v[k % self.d]).collect();
        Self::new(self.n, self.d, pts)
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        distance(self.point(i), self.point(j))
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    libm::sqrt(a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum())
}

/// Smallest pairwise distance divided by the diameter, with the pair attaining it.
pub fn min_relative_separation(points: &[f64], n: usize, d: usize) -> (f64, usize, usize) {
    let mut diameter: f64 = 0.0;
    let mut best = (f64::INFINITY, 0, 1);
    for i in 0..n {
        for j in i + 1..n {
            let r = distance(&points[i * d..(i + 1) * d], &points[j * d..(j + 1) * d]);
            diameter = diameter.max(r);
            if r < best.0 {
                best = (r, i, j);
            }
        }
    }
    if diameter == 0.0 {
        return (0.0, best.1, best.2);
    }
    (best.0 / diameter, best.1, best.2)
}

/// Rejects any pair closer than `COLLISION_EPS` times the diameter.
pub fn check_collisions(points: &[f64], n: usize, d: usize) -> Result<()> {
    let (sep, i, j) = min_relative_separation(points, n, d);
    if !(sep > COLLISION_EPS) {
        return Err(Error::Collision { i, j, separation: sep });
    }
    Ok(())
}

/// Strictly positive masses.
#[derive(Debug, Clone, PartialEq)]
pub struct MassVector(Vec<f64>);

impl MassVector {
    pub fn new(m: Vec<f64>) -> Result<Self> {
        if m.iter().any(|x| !x.is_finite() || *x <= 0.0) {
            return Err(Error::InvalidInput("masses must be finite and strictly positive"));
        }
        if m.is_empty() {
            return Err(Error::InvalidInput("empty mass vector"));
        }
        Ok(Self(m))
    }

    pub fn equal(n: usize) -> Self {
        Self(vec![1.0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.0.iter().map(|m| m * c).collect())
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: self.0.len() });
        }
        Ok(())
    }
}

/// Skew-symmetric `n x n` array of `d`-vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct MutualMatrix {
    n: usize,
    d: usize,
    alpha: f64,
    entries: Vec<f64>,
}

impl MutualMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn get(&self, i: usize, j: usize) -> &[f64] {
        let k = (i * self.n + j) * self.d;
        &self.entries[k..k + self.d]
    }

    /// Scalar entry of a collinear configuration.
    pub fn scalar(&self, i: usize, j: usize) -> f64 {
        debug_assert_eq!(self.d, 1);
        self.entries[i * self.n + j]
    }

    /// `sum_j m_j Q_ij`, one `d`-vector per body.
    pub fn weighted_rows(&self, masses: &[f64]) -> Vec<f64> {
        let (n, d) = (self.n, self.d);
        let mut out = vec![0.0; n * d];
        for i in 0..n {
            for j in 0..n {
                let q = self.get(i, j);
                for a in 0..d {
                    out[i * d + a] += masses[j] * q[a];
                }
            }
        }
        out
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidInput("alpha must be a positive finite number"));
    }
    Ok(())
}

pub fn mutual_matrix(cfg: &Configuration, alpha: f64) -> Result<MutualMatrix> {
    check_alpha(alpha)?;
    let (n, d) = (cfg.n, cfg.d);
    let mut entries = vec![0.0; n * n * d];
    for i in 0..n {
        for j in i + 1..n {
            let (pi, pj) = (cfg.point(i), cfg.point(j));
            let r = distance(pi, pj);
            let w = 1.0 / libm::pow(r, alpha + 2.0);
            for a in 0..d {
                let v = (pi[a] - pj[a]) * w;
                entries[(i * n + j) * d + a] = v;
                entries[(j * n + i) * d + a] = -v;
            }
        }
    }
    Ok(MutualMatrix { n, d, alpha, entries })
}

/// `sum_i m_i (v_i . w_i)` for `n x d` arrays.
pub fn mass_inner(v: &[f64], w: &[f64], masses: &MassVector) -> f64 {
    assert_eq!(v.len(), w.len(), "shape mismatch");
    let n = masses.len();
    assert_eq!(v.len() % n, 0, "shape mismatch");
    let d = v.len() / n;
    masses
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, m)| m * dot(&v[i * d..(i + 1) * d], &w[i * d..(i + 1) * d]))
        .sum()
}

pub fn mass_norm(v: &[f64], masses: &MassVector) -> f64 {
    libm::sqrt(mass_inner(v, v, masses))
}

/// Subtracts the mass-weighted centroid in place.
pub fn center_weighted(v: &mut [f64], masses: &MassVector, d: usize) {
    let total = masses.total();
    for a in 0..d {
        let c: f64 = masses.as_slice().iter().enumerate().map(|(i, m)| m * v[i * d + a]).sum::<f64>() / total;
        for i in 0..masses.len() {
            v[i * d + a] -= c;
        }
    }
}

/// Subtracts the plain centroid in place.
pub fn center_unweighted(v: &mut [f64], d: usize) {
    let n = v.len() / d;
    for a in 0..d {
        let c: f64 = (0..n).map(|i| v[i * d + a]).sum::<f64>() / n as f64;
        for i in 0..n {
            v[i * d + a] -= c;
        }
    }
}

pub fn project_translations(cfg: &Configuration, masses: &MassVector) -> Result<Configuration> {
    masses.check_len(cfg.n)?;
    let mut pts = cfg.points.clone();
    center_weighted(&mut pts, masses, cfg.d);
    Ok(Configuration { n: cfg.n, d: cfg.d, points: pts })
}

/// Centers with `sum q_i = 0`, the convention of the inverse problem.
pub fn project_translations_unweighted(cfg: &Configuration) -> Configuration {
    let mut pts = cfg.points.clone();
    center_unweighted(&mut pts, cfg.d);
    Configuration { n: cfg.n, d: cfg.d, points: pts }
}

/// Moment of inertia `sum m_i |q_i|^2` about the origin.
pub fn inertia(v: &[f64], masses: &MassVector) -> f64 {
    mass_inner(v, v, masses)
}

/// Centers and scales onto the unit ellipsoid `sum m_i |q_i|^2 = 1`.
/// Points already on it up to rounding are returned bit for bit.
pub fn normalize_to_sphere(cfg: &Configuration, masses: &MassVector) -> Result<Configuration> {
    let centered = project_translations(cfg, masses)?;
    let norm = mass_norm(&centered.points, masses);
    if !(norm > 0.0) {
        return Err(Error::Degenerate("configuration vanishes after centering"));
    }
    let shift = centered.points.iter().zip(&cfg.points).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let scale = cfg.points.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    if (norm - 1.0).abs() <= 8.0 * f64::EPSILON && shift <= 8.0 * f64::EPSILON * scale {
        return Ok(cfg.clone());
    }
    let points = centered.points.iter().map(|x| x / norm).collect();
    Ok(Configuration { n: cfg.n, d: cfg.d, points })
}
