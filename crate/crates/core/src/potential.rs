//! The homogeneous potential `U = sum_{i<j} m_i m_j / r_ij^alpha`, its
//! gradients, the normalized map `F`, the multiplier `lambda` and the Hessian.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{
    self, center_weighted, check_alpha, inertia, mass_norm, Configuration, MassVector,
};
use crate::linalg::Matrix;

pub fn potential(cfg: &Configuration, masses: &MassVector, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    masses.check_len(cfg.n())?;
    let m = masses.as_slice();
    let mut u = 0.0;
    for i in 0..cfg.n() {
        for j in i + 1..cfg.n() {
            u += m[i] * m[j] / libm::pow(cfg.distance(i, j), alpha);
        }
    }
    Ok(u)
}

/// `dU/dq_i = -alpha sum_{j != i} m_i m_j (q_i - q_j) / r_ij^(alpha + 2)`.
pub fn euclidean_gradient(cfg: &Configuration, masses: &MassVector, alpha: f64) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    masses.check_len(cfg.n())?;
    let (n, d) = (cfg.n(), cfg.d());
    let m = masses.as_slice();
    let mut g = vec![0.0; n * d];
    for i in 0..n {
        for j in i + 1..n {
            let r = cfg.distance(i, j);
            let w = -alpha * m[i] * m[j] / libm::pow(r, alpha + 2.0);
            let (pi, pj) = (cfg.point(i), cfg.point(j));
            for a in 0..d {
                let f = w * (pi[a] - pj[a]);
                g[i * d + a] += f;
                g[j * d + a] -= f;
            }
        }
    }
    Ok(g)
}

/// Gradient in the mass metric: `(1/m_i) dU/dq_i`.
pub fn mass_gradient(cfg: &Configuration, masses: &MassVector, alpha: f64) -> Result<Vec<f64>> {
    let mut g = euclidean_gradient(cfg, masses, alpha)?;
    let d = cfg.d();
    for (i, m) in masses.as_slice().iter().enumerate() {
        for x in &mut g[i * d..(i + 1) * d] {
            *x /= m;
        }
    }
    Ok(g)
}

/// `F(q) = -grad_M U / |grad_M U|_M`.
pub fn f_map(cfg: &Configuration, masses: &MassVector, alpha: f64) -> Result<Vec<f64>> {
    let g = mass_gradient(cfg, masses, alpha)?;
    let norm = mass_norm(&g, masses);
    if !(norm > 0.0) {
        return Err(Error::Degenerate("vanishing gradient"));
    }
    Ok(g.iter().map(|x| -x / norm).collect())
}

/// The same map assembled from the mutual matrix: the mass-normalized vector
/// with components `sum_j m_j Q_ij`.
pub fn f_map_mutual(cfg: &Configuration, masses: &MassVector, alpha: f64) -> Result<Vec<f64>> {
    masses.check_len(cfg.n())?;
    let q = geometry::mutual_matrix(cfg, alpha)?;
    let w = q.weighted_rows(masses.as_slice());
    let norm = mass_norm(&w, masses);
    if !(norm > 0.0) {
        return Err(Error::Degenerate("vanishing gradient"));
    }
    Ok(w.iter().map(|x| x / norm).collect())
}

/// `-alpha U / I` with `I` taken about the center of mass. Equals the
/// multiplier of `lambda M q = grad U` whenever `q` is central.
pub fn lambda_of(cfg: &Configuration, masses: &MassVector, alpha: f64) -> Result<f64> {
    let u = potential(cfg, masses, alpha)?;
    let mut q = cfg.as_slice().to_vec();
    center_weighted(&mut q, masses, cfg.d());
    Ok(-alpha * u / inertia(&q, masses))
}

/// Analytic Hessian of `U`, `nd x nd`.
///
/// Each pair contributes the block
/// `m_i m_j alpha r^-(alpha+2) [(alpha + 2) u u^T - I]` with `u` the unit
/// separation, added on the diagonal and subtracted off it.
pub fn hessian(cfg: &Configuration, masses: &MassVector, alpha: f64) -> Result<Matrix> {
    check_alpha(alpha)?;
    masses.check_len(cfg.n())?;
    let (n, d) = (cfg.n(), cfg.d());
    let m = masses.as_slice();
    let mut h = Matrix::zeros(n * d, n * d);
    let mut block = vec![0.0; d * d];
    for i in 0..n {
        for j in i + 1..n {
            let r = cfg.distance(i, j);
            let s = m[i] * m[j] * alpha / libm::pow(r, alpha + 2.0);
            let (pi, pj) = (cfg.point(i), cfg.point(j));
            for a in 0..d {
                for b in 0..d {
                    let ua = (pi[a] - pj[a]) / r;
                    let ub = (pi[b] - pj[b]) / r;
                    let id = if a == b { 1.0 } else { 0.0 };
                    block[a * d + b] = s * ((alpha + 2.0) * ua * ub - id);
                }
            }
            for a in 0..d {
                for b in 0..d {
                    let v = block[a * d + b];
                    h[(i * d + a, i * d + b)] += v;
                    h[(j * d + a, j * d + b)] += v;
                    h[(i * d + a, j * d + b)] -= v;
                    h[(j * d + a, i * d + b)] -= v;
                }
            }
        }
    }
    Ok(h)
}

/// A configuration on the unit ellipsoid verified to be central.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralConfigCertificate {
    pub cfg: Configuration,
    pub lambda: f64,
    /// `|q - F(q)|_M`.
    pub residual: f64,
}

impl CentralConfigCertificate {
    /// Normalizes `cfg` onto the ellipsoid and records `lambda` and the
    /// fixed-point residual. No threshold is applied here.
    pub fn evaluate(cfg: &Configuration, masses: &MassVector, alpha: f64) -> Result<Self> {
        let q = geometry::normalize_to_sphere(cfg, masses)?;
        let residual = fixed_point_residual(&q, masses, alpha)?;
        let lambda = lambda_of(&q, masses, alpha)?;
        Ok(Self { cfg: q, lambda, residual })
    }

    /// Mass-norm of `lambda m_i q_i - dU/dq_i`.
    pub fn equation_residual(&self, masses: &MassVector, alpha: f64) -> Result<f64> {
        let g = euclidean_gradient(&self.cfg, masses, alpha)?;
        let d = self.cfg.d();
        let m = masses.as_slice();
        let r: Vec<f64> = g
            .iter()
            .enumerate()
            .map(|(k, gk)| self.lambda * m[k / d] * self.cfg.as_slice()[k] - gk)
            .collect();
        Ok(mass_norm(&r, masses))
    }
}

/// `|q - F(q)|_M` for `q` already on the ellipsoid.
pub fn fixed_point_residual(q: &Configuration, masses: &MassVector, alpha: f64) -> Result<f64> {
    let f = f_map(q, masses, alpha)?;
    let diff: Vec<f64> = q.as_slice().iter().zip(&f).map(|(a, b)| a - b).collect();
    Ok(mass_norm(&diff, masses))
}
