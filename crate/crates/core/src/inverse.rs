//! The inverse collinear problem: which positive masses make a given ordered
//! collinear configuration central?
//!
//! In gap coordinates the configuration is central for masses `m` exactly
//! when `Y m = c x` for some `c > 0`, where `Y[i][j] = Q_ij - Q_{i+1,j}`.
//! Column `j` of `Y` sums to `Q_1j + Q_jn > 0`, so dividing by that sum puts
//! it on the affine hyperplane `sum x_i = 1`. The configuration is solvable
//! with non-negative masses iff `x` lies in the convex hull of these `n`
//! normalized columns (the value of the map `psi` at `x`).

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use crate::error::{Error, Result};
use crate::geometry::{mutual_matrix, Configuration};
use crate::linalg::{self, Matrix};
use crate::lp::{self, hull_membership, HullMembership, LinearProgram, LpStatus, Relation, Sense};
use crate::simplex::{from_gaps, GapPoint};

/// Smallest direction weight accepted as strictly positive; weights sum to 1.
pub const POS_TOL: f64 = 1e-9;
/// Equality residual accepted on the column-scaled system.
pub const FEAS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct YMatrix {
    /// `(n - 1) x n`.
    pub y: Matrix,
    /// `Q_1j + Q_jn` computed directly from the mutual matrix.
    pub colsum: Vec<f64>,
    pub alpha: f64,
}

impl YMatrix {
    pub fn n(&self) -> usize {
        self.y.cols()
    }

    /// Column sums of `y` as stored.
    pub fn column_sums(&self) -> Vec<f64> {
        (0..self.n()).map(|j| self.y.column(j).iter().sum()).collect()
    }

    /// `sum_i |Y_ij|`, the scale of the cancellation in each column sum.
    /// Near a wall the entries grow like `gap^-(alpha + 1)` while the sum
    /// stays moderate, so rounding in the sum is relative to this.
    pub fn column_magnitudes(&self) -> Vec<f64> {
        (0..self.n()).map(|j| self.y.column(j).iter().map(|v| v.abs()).sum()).collect()
    }
}

fn interior(x: &GapPoint) -> Result<Configuration> {
    if !x.is_interior() {
        return Err(Error::Degenerate("gap point lies on the boundary of the simplex"));
    }
    Configuration::collinear(&from_gaps(x))
}

pub fn y_matrix(x: &GapPoint, alpha: f64) -> Result<YMatrix> {
    let cfg = interior(x)?;
    let q = mutual_matrix(&cfg, alpha)?;
    let n = cfg.n();
    let mut y = Matrix::zeros(n - 1, n);
    for i in 0..n - 1 {
        for j in 0..n {
            y[(i, j)] = q.scalar(i, j) - q.scalar(i + 1, j);
        }
    }
    let colsum: Vec<f64> = (0..n).map(|j| q.scalar(0, j) + q.scalar(j, n - 1)).collect();
    let ym = YMatrix { y, colsum, alpha };
    for ((direct, summed), scale) in ym.colsum.iter().zip(ym.column_sums()).zip(ym.column_magnitudes()) {
        if !(*direct > 0.0) || (direct - summed).abs() > 1e-10 * scale {
            return Err(Error::Degenerate("column sums disagree with Q_1j + Q_jn"));
        }
    }
    Ok(ym)
}

/// The `n` normalized columns spanning `psi(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiImage {
    pub vertices: Vec<Vec<f64>>,
}

impl PsiImage {
    /// Worst conditioning over the `n` subsets of `n - 1` vertices: the
    /// smallest ratio `sigma_min / sigma_max` of the matrix whose columns are
    /// the vertices scaled to unit length. The vertices lie on the plane
    /// `sum = 1`, which misses the origin, so a subset is affinely
    /// independent exactly when these columns are linearly independent.
    /// Zero flags a flat simplex, i.e. columns not in general position.
    pub fn facet_conditioning(&self) -> f64 {
        let n = self.vertices.len();
        let dim = self.vertices[0].len();
        let mut worst = f64::INFINITY;
        for skip in 0..n {
            let cols: Vec<&Vec<f64>> = (0..n).filter(|&k| k != skip).map(|k| &self.vertices[k]).collect();
            let mut a = Matrix::zeros(dim, cols.len());
            for (c, v) in cols.iter().enumerate() {
                let len = linalg::norm(v);
                for r in 0..dim {
                    a[(r, c)] = v[r] / len;
                }
            }
            let s = linalg::singular_values(&a);
            let ratio = if s[0] > 0.0 { s[s.len() - 1] / s[0] } else { 0.0 };
            worst = worst.min(ratio);
        }
        worst
    }
}

pub fn psi_vertices(x: &GapPoint, alpha: f64) -> Result<PsiImage> {
    let ym = y_matrix(x, alpha)?;
    Ok(psi_from_y(&ym))
}

fn psi_from_y(ym: &YMatrix) -> PsiImage {
    let vertices = (0..ym.n()).map(|j| ym.y.column(j).iter().map(|v| v / ym.colsum[j]).collect()).collect();
    PsiImage { vertices }
}

/// `x in psi(x)`, with the convex weights when it holds.
pub fn psi_contains(x: &GapPoint, alpha: f64, tol: f64) -> Result<HullMembership> {
    let psi = psi_vertices(x, alpha)?;
    hull_membership(x.as_slice(), &psi.vertices, tol)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MassSolution {
    /// Normalized to `sum m_i = n`.
    pub m: Vec<f64>,
    /// `c` in `Y m = c x`.
    pub scale: f64,
    /// `|Y m - c x|_inf` with `Y` and `c` divided by the largest column sum.
    pub residual: f64,
    /// Optimal smallest weight `t*` of the direction LP, in `(0, 1/n]`.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MassOutcome {
    Feasible(MassSolution),
    /// `margin` is the optimal smallest weight when non-negative solutions
    /// exist but none clears the positivity threshold.
    Infeasible { margin: Option<f64> },
}

impl MassOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, MassOutcome::Feasible(_))
    }

    pub fn solution(&self) -> Option<&MassSolution> {
        match self {
            MassOutcome::Feasible(s) => Some(s),
            MassOutcome::Infeasible { .. } => None,
        }
    }
}

/// Masses making `x` central.
///
/// With `v_j` the vertices of `psi(x)`, `u_j` the unit directions from `x`
/// to them and `d_j` the distances, `Y m = c x` with `m >= 0` is equivalent
/// to `sum nu_j u_j = 0` with `nu_j = colsum_j m_j d_j / c >= 0`. The LP
/// maximizes `t = min nu_j` under `sum nu_j = 1`; the configuration is
/// accepted when `t* >= pos_tol`, and `pos_tol = 0` is the non-negative
/// relaxation.
///
/// The weights are posed on directions because near a wall the far vertex
/// runs off like `gap^-(alpha + 1)`: every mass solution then has a tiny
/// smallest mass, yet `x` sits well inside the hull and the direction
/// weights stay of order one.
pub fn solve_masses(x: &GapPoint, alpha: f64, pos_tol: f64) -> Result<MassOutcome> {
    let ym = y_matrix(x, alpha)?;
    let psi = psi_from_y(&ym);
    let n = ym.n();
    let xs = x.as_slice();
    let (units, dists) = lp::directions(xs, &psi.vertices);
    // variables: nu_0..nu_{n-1}, t
    let mut prog = LinearProgram::new(n + 1);
    // directions lie in the plane sum = 0, so one coordinate row is dependent
    let rows: Vec<Vec<f64>> = (0..n - 1).map(|i| units.iter().map(|u| u[i]).collect()).collect();
    let ortho = lp::independent_rows(&rows, lp::RANK_TOL);
    for row in &ortho {
        let mut row = row.clone();
        row.push(0.0);
        prog.constraint(row, Relation::Eq, 0.0)?;
    }
    let mut total = vec![1.0; n];
    total.push(0.0);
    prog.constraint(total, Relation::Eq, 1.0)?;
    for j in 0..n {
        let mut row = vec![0.0; n + 1];
        row[j] = 1.0;
        row[n] = -1.0;
        prog.constraint(row, Relation::Ge, 0.0)?;
    }
    let mut obj = vec![0.0; n + 1];
    obj[n] = 1.0;
    prog.objective(obj, Sense::Maximize)?;
    let res = lp::solve_lp(&prog);
    match res.status {
        LpStatus::Optimal => {}
        LpStatus::Infeasible => return Ok(MassOutcome::Infeasible { margin: None }),
        LpStatus::Unbounded | LpStatus::NumericalFailure => {
            return Err(Error::LpNumericalFailure { iterations: res.iterations })
        }
    }
    let margin = res.x[n];
    if margin < pos_tol {
        return Ok(MassOutcome::Infeasible { margin: Some(margin) });
    }
    // the simplex meets the equalities only to its tolerance; project the
    // weights onto the null space of the orthonormal rows to clean that up
    let mut nu: Vec<f64> = res.x[..n].iter().map(|v| v.max(0.0)).collect();
    for q in &ortho {
        let c = linalg::dot(q, &nu);
        nu.iter_mut().zip(q).for_each(|(v, w)| *v -= c * w);
    }
    if nu.iter().any(|v| *v < 0.0) {
        nu = res.x[..n].iter().map(|v| v.max(0.0)).collect();
    }
    // a vertex at x takes any weight; its direction is zero
    let mut m: Vec<f64> = (0..n)
        .map(|j| {
            let d = if dists[j] > 0.0 { dists[j] } else { 1.0 };
            nu[j] / (d * ym.colsum[j])
        })
        .collect();
    let total: f64 = m.iter().sum();
    m.iter_mut().for_each(|v| *v *= n as f64 / total);
    let c: f64 = m.iter().zip(&ym.colsum).map(|(a, b)| a * b).sum();
    let s = ym.colsum.iter().fold(0.0f64, |a, v| a.max(*v));
    let residual = (0..n - 1)
        .map(|i| {
            let lhs: f64 = (0..n).map(|j| ym.y[(i, j)] / s * m[j]).sum();
            (lhs - c / s * xs[i]).abs()
        })
        .fold(0.0f64, f64::max);
    Ok(MassOutcome::Feasible(MassSolution { m, scale: c, residual, margin }))
}

/// Projective residual of `Y m ∝ x`: `|Y m / sum(Y m) - x|_inf`.
pub fn proportionality_residual(x: &GapPoint, alpha: f64, m: &[f64]) -> Result<f64> {
    let ym = y_matrix(x, alpha)?;
    if m.len() != ym.n() {
        return Err(Error::DimensionMismatch { expected: ym.n(), got: m.len() });
    }
    let v = ym.y.mul_vec(m);
    let total: f64 = v.iter().sum();
    Ok(v.iter().zip(x.as_slice()).map(|(a, b)| (a / total - b).abs()).fold(0.0, f64::max))
}

/// All real solutions of `Y m = x` for three bodies: the line
/// `particular + t direction`, and the open `t`-interval where every mass is
/// positive.
#[derive(Debug, Clone, PartialEq)]
pub struct N3Family {
    pub particular: [f64; 3],
    pub direction: [f64; 3],
    pub positive: Option<(f64, f64)>,
}

impl N3Family {
    pub fn at(&self, t: f64) -> [f64; 3] {
        core::array::from_fn(|k| self.particular[k] + t * self.direction[k])
    }

    /// Does the ray through `m` meet the family? `m` is rescaled by the `c`
    /// that best fits `Y m = c x`, then compared with the line.
    pub fn contains_ray(&self, ym: &YMatrix, x: &GapPoint, m: &[f64], tol: f64) -> bool {
        let v = ym.y.mul_vec(m);
        let xs = x.as_slice();
        let c = linalg::dot(&v, xs) / linalg::dot(xs, xs);
        if !(c > 0.0) {
            return false;
        }
        let w: Vec<f64> = (0..3).map(|k| m[k] / c - self.particular[k]).collect();
        let dn = linalg::norm(&self.direction);
        let along = linalg::dot(&w, &self.direction) / (dn * dn);
        let off: Vec<f64> = (0..3).map(|k| w[k] - along * self.direction[k]).collect();
        let scale = linalg::norm(m) / c;
        linalg::norm(&off) <= tol * scale
    }
}

/// Direct elimination for three bodies, independent of the LP path.
pub fn n3_parametric_oracle(x: &GapPoint, alpha: f64) -> Result<N3Family> {
    if x.n() != 3 {
        return Err(Error::InvalidInput("the parametric oracle is for three bodies"));
    }
    let ym = y_matrix(x, alpha)?;
    let r0 = ym.y.row(0);
    let r1 = ym.y.row(1);
    let direction = [
        r0[1] * r1[2] - r0[2] * r1[1],
        r0[2] * r1[0] - r0[0] * r1[2],
        r0[0] * r1[1] - r0[1] * r1[0],
    ];
    let rel = linalg::norm(&direction) / (linalg::norm(r0) * linalg::norm(r1));
    if rel <= 1e-12 {
        return Err(Error::RankDeficient(rel));
    }
    // minimum-norm particular solution m = Y^T (Y Y^T)^-1 x
    let gram = Matrix::from_rows(
        2,
        2,
        vec![linalg::dot(r0, r0), linalg::dot(r0, r1), linalg::dot(r1, r0), linalg::dot(r1, r1)],
    )?;
    let w = linalg::solve(&gram, x.as_slice())?;
    let particular: [f64; 3] = core::array::from_fn(|k| w[0] * r0[k] + w[1] * r1[k]);
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    let mut empty = false;
    for k in 0..3 {
        let (p, d) = (particular[k], direction[k]);
        if d > 0.0 {
            lo = lo.max(-p / d);
        } else if d < 0.0 {
            hi = hi.min(-p / d);
        } else if p <= 0.0 {
            empty = true;
        }
    }
    let positive = (!empty && lo < hi).then_some((lo, hi));
    Ok(N3Family { particular, direction, positive })
}

/// Half-width of the open interval on which [`f_maps_n3`] is defined.
pub const N3_T_LIMIT: f64 = FRAC_1_SQRT_2;

/// Gap point of chart parameter `t`: the semicircle point `(t, sqrt(1 - t^2))`
/// turned clockwise by a quarter of `pi` and projected radially onto the
/// simplex.
pub fn n3_gap_of_t(t: f64) -> Result<GapPoint> {
    if !(t.abs() < N3_T_LIMIT) {
        return Err(Error::OnCollisionWall);
    }
    let (a, b) = (t, libm::sqrt(1.0 - t * t));
    let (u, v) = ((a + b) / SQRT_2, (b - a) / SQRT_2);
    GapPoint::normalized(&[u, v])
}

/// Inverse chart of a point of the line `x_1 + x_2 = 1`: project onto the
/// unit circle, turn counter-clockwise by a quarter of `pi`, read the first
/// coordinate.
pub fn n3_t_of_point(p: &[f64]) -> f64 {
    (p[0] - p[1]) / (SQRT_2 * libm::hypot(p[0], p[1]))
}

/// The three scalar maps whose hull is `psi` in the chart, in vertex order.
pub fn f_maps_n3(t: f64, alpha: f64) -> Result<[f64; 3]> {
    let x = n3_gap_of_t(t)?;
    let psi = psi_vertices(&x, alpha)?;
    Ok(core::array::from_fn(|j| n3_t_of_point(&psi.vertices[j])))
}

/// `(t in [f3, f2], t in [f2, f1])`.
pub fn n3_membership(t: f64, f: &[f64; 3]) -> (bool, bool) {
    ((f[2]..=f[1]).contains(&t), (f[1]..=f[0]).contains(&t))
}
