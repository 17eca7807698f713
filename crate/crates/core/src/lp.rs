//! Dense two-phase primal simplex.
//!
//! Problems here are a few dozen variables at most, so the tableau is dense
//! and Bland's rule is always on: hull-membership queries at symmetric inputs
//! are degenerate by construction.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Feasibility tolerance after row equilibration.
pub const LP_TOL: f64 = 1e-9;

/// Pivots smaller than this times the largest entry of the entering
/// column are treated as zero.
const PIVOT_REL: f64 = 1e-9;
const PIVOT_EPS: f64 = 1e-11;
/// Relative pivot size accepted without looking for a better column.
const SOUND_PIVOT: f64 = 1e-6;
const COST_EPS: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// Iteration cap reached; says nothing about feasibility.
    NumericalFailure,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpResult {
    pub status: LpStatus,
    /// Meaningful only when optimal.
    pub x: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    vars: usize,
    rows: Vec<(Vec<f64>, Relation, f64)>,
    c: Vec<f64>,
    sense: Sense,
    bounds: Vec<(f64, f64)>,
}

impl LinearProgram {
    /// `vars` variables, each bounded to `[0, +inf)`, zero objective.
    pub fn new(vars: usize) -> Self {
        Self {
            vars,
            rows: Vec::new(),
            c: vec![0.0; vars],
            sense: Sense::Minimize,
            bounds: vec![(0.0, f64::INFINITY); vars],
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn constraint(&mut self, row: Vec<f64>, rel: Relation, rhs: f64) -> Result<&mut Self> {
        if row.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: row.len() });
        }
        if row.iter().any(|v| !v.is_finite()) || !rhs.is_finite() {
            return Err(Error::InvalidInput("non-finite constraint"));
        }
        self.rows.push((row, rel, rhs));
        Ok(self)
    }

    pub fn objective(&mut self, c: Vec<f64>, sense: Sense) -> Result<&mut Self> {
        if c.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: c.len() });
        }
        if c.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite objective"));
        }
        self.c = c;
        self.sense = sense;
        Ok(self)
    }

    /// Either end may be infinite.
    pub fn bounds(&mut self, var: usize, lower: f64, upper: f64) -> Result<&mut Self> {
        if var >= self.vars {
            return Err(Error::InvalidInput("variable index out of range"));
        }
        if lower.is_nan() || upper.is_nan() || lower == f64::INFINITY || upper == f64::NEG_INFINITY {
            return Err(Error::InvalidInput("invalid bounds"));
        }
        self.bounds[var] = (lower, upper);
        Ok(self)
    }

    /// Largest violation of constraints and bounds at `x`, each row divided
    /// by its largest coefficient.
    pub fn violation(&self, x: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for (row, rel, rhs) in &self.rows {
            let scale = row.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(f64::MIN_POSITIVE);
            let lhs: f64 = row.iter().zip(x).map(|(a, b)| a * b).sum();
            let r = (lhs - rhs) / scale;
            let v = match rel {
                Relation::Eq => r.abs(),
                Relation::Le => r.max(0.0),
                Relation::Ge => (-r).max(0.0),
            };
            worst = worst.max(v);
        }
        for (xi, (lo, hi)) in x.iter().zip(&self.bounds) {
            worst = worst.max(lo - xi).max(xi - hi);
        }
        worst
    }
}

/// How an original variable is rebuilt from standard-form columns.
#[derive(Debug, Clone)]
struct VarMap {
    offset: f64,
    terms: Vec<(usize, f64)>,
}

pub fn solve_lp(lp: &LinearProgram) -> LpResult {
    solve_lp_with_tol(lp, LP_TOL)
}

pub fn solve_lp_with_tol(lp: &LinearProgram, tol: f64) -> LpResult {
    let fail = |status, iterations| LpResult { status, x: Vec::new(), objective: f64::NAN, iterations };

    // substitute bounds: every standard column is >= 0
    let mut maps = Vec::with_capacity(lp.vars);
    let mut ncols = 0usize;
    let mut extra_rows: Vec<(Vec<(usize, f64)>, Relation, f64)> = Vec::new();
    for &(lo, hi) in &lp.bounds {
        if lo > hi {
            return fail(LpStatus::Infeasible, 0);
        }
        if lo.is_finite() {
            maps.push(VarMap { offset: lo, terms: vec![(ncols, 1.0)] });
            if hi.is_finite() {
                extra_rows.push((vec![(ncols, 1.0)], Relation::Le, hi - lo));
            }
            ncols += 1;
        } else if hi.is_finite() {
            maps.push(VarMap { offset: hi, terms: vec![(ncols, -1.0)] });
            ncols += 1;
        } else {
            maps.push(VarMap { offset: 0.0, terms: vec![(ncols, 1.0), (ncols + 1, -1.0)] });
            ncols += 2;
        }
    }
    let structural = ncols;

    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
    for (row, rel, rhs) in &lp.rows {
        let mut r = vec![0.0; structural];
        let mut b = *rhs;
        for (j, a) in row.iter().enumerate() {
            b -= a * maps[j].offset;
            for &(col, coef) in &maps[j].terms {
                r[col] += a * coef;
            }
        }
        rows.push((r, *rel, b));
    }
    for (terms, rel, rhs) in extra_rows {
        let mut r = vec![0.0; structural];
        for (col, coef) in terms {
            r[col] = coef;
        }
        rows.push((r, rel, rhs));
    }

    // equilibrate; settle empty rows directly
    let mut kept = Vec::with_capacity(rows.len());
    for (mut r, rel, mut b) in rows {
        let scale = r.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        if scale == 0.0 {
            let ok = match rel {
                Relation::Eq => b.abs() <= tol,
                Relation::Le => b >= -tol,
                Relation::Ge => b <= tol,
            };
            if !ok {
                return fail(LpStatus::Infeasible, 0);
            }
            continue;
        }
        r.iter_mut().for_each(|v| *v /= scale);
        b /= scale;
        kept.push((r, rel, b));
    }
    let m = kept.len();
    let slacks = kept.iter().filter(|(_, rel, _)| *rel != Relation::Eq).count();
    let art0 = structural + slacks;
    let total = art0 + m;
    let rhs_col = total;

    let mut t = Matrix::zeros(m, total + 1);
    let mut basis = vec![0usize; m];
    let mut slack = structural;
    let mut bscale: f64 = 1.0;
    for (i, (r, rel, b)) in kept.iter().enumerate() {
        for (j, v) in r.iter().enumerate() {
            t[(i, j)] = *v;
        }
        match rel {
            Relation::Le => {
                t[(i, slack)] = 1.0;
                slack += 1;
            }
            Relation::Ge => {
                t[(i, slack)] = -1.0;
                slack += 1;
            }
            Relation::Eq => {}
        }
        t[(i, rhs_col)] = *b;
        if *b < 0.0 {
            for j in 0..=rhs_col {
                t[(i, j)] = -t[(i, j)];
            }
        }
        t[(i, art0 + i)] = 1.0;
        basis[i] = art0 + i;
        bscale = bscale.max(b.abs());
    }

    let cap = 10_000 * (lp.rows.len() + lp.vars).max(1);
    let mut iterations = 0usize;

    // phase 1: minimize the sum of artificials
    let mut z = vec![0.0; total + 1];
    for i in 0..m {
        for j in 0..=rhs_col {
            if j < art0 || j == rhs_col {
                z[j] -= t[(i, j)];
            }
        }
    }
    match run(&mut t, &mut basis, &mut z, art0 + m, rhs_col, &mut iterations, cap, true) {
        Outcome::Optimal => {}
        Outcome::Unbounded => return fail(LpStatus::NumericalFailure, iterations),
        Outcome::Cap => return fail(LpStatus::NumericalFailure, iterations),
    }
    if -z[rhs_col] > tol * bscale {
        return LpResult { status: LpStatus::Infeasible, x: Vec::new(), objective: -z[rhs_col], iterations };
    }

    // drive zero-level artificials out of the basis; drop redundant rows
    let mut live: Vec<usize> = Vec::with_capacity(m);
    for i in 0..m {
        if basis[i] >= art0 {
            if let Some(j) = (0..art0).find(|&j| t[(i, j)].abs() > 1e-9) {
                pivot(&mut t, &mut basis, &mut z, i, j, rhs_col);
                live.push(i);
            }
        } else {
            live.push(i);
        }
    }
    if live.len() < m {
        let mut reduced = Matrix::zeros(live.len(), total + 1);
        let mut rb = Vec::with_capacity(live.len());
        for (k, &i) in live.iter().enumerate() {
            for j in 0..=rhs_col {
                reduced[(k, j)] = t[(i, j)];
            }
            rb.push(basis[i]);
        }
        t = reduced;
        basis = rb;
    }

    // phase 2
    let sign = if lp.sense == Sense::Maximize { -1.0 } else { 1.0 };
    let mut cost = vec![0.0; total];
    for (j, map) in maps.iter().enumerate() {
        for &(col, coef) in &map.terms {
            cost[col] += sign * lp.c[j] * coef;
        }
    }
    let mut z = vec![0.0; total + 1];
    z[..total].copy_from_slice(&cost);
    for (i, &bj) in basis.iter().enumerate() {
        let cb = cost[bj];
        if cb != 0.0 {
            for j in 0..=rhs_col {
                z[j] -= cb * t[(i, j)];
            }
        }
    }
    let status = match run(&mut t, &mut basis, &mut z, art0, rhs_col, &mut iterations, cap, false) {
        Outcome::Optimal => LpStatus::Optimal,
        Outcome::Unbounded => return fail(LpStatus::Unbounded, iterations),
        Outcome::Cap => return fail(LpStatus::NumericalFailure, iterations),
    };

    let mut y = vec![0.0; total];
    for (i, &bj) in basis.iter().enumerate() {
        y[bj] = t[(i, rhs_col)].max(0.0);
    }
    let x: Vec<f64> = maps
        .iter()
        .map(|map| map.offset + map.terms.iter().map(|&(col, coef)| coef * y[col]).sum::<f64>())
        .collect();
    let objective = lp.c.iter().zip(&x).map(|(c, v)| c * v).sum();
    LpResult { status, x, objective, iterations }
}

enum Outcome {
    Optimal,
    Unbounded,
    Cap,
}

/// Minimizes with reduced costs in `z`; only columns below `allowed` may enter.
///
/// Entering columns are tried in Bland order, but one whose pivot is small
/// against the rest of its column is deferred while a later candidate offers
/// a sound pivot: a pivot of relative size 1e-9 wipes out nine digits of the
/// tableau. With `bounded` set (phase 1, whose objective cannot drop below
/// zero) a column with a negative reduced cost but no usable pivot is
/// rounding noise; it is skipped until the next pivot instead of reported as
/// unbounded.
#[allow(clippy::too_many_arguments)]
fn run(
    t: &mut Matrix,
    basis: &mut [usize],
    z: &mut [f64],
    allowed: usize,
    rhs_col: usize,
    iterations: &mut usize,
    cap: usize,
    bounded: bool,
) -> Outcome {
    let mut skipped: Vec<usize> = Vec::new();
    loop {
        if *iterations >= cap {
            return Outcome::Cap;
        }
        let mut weak: Option<(usize, usize)> = None;
        let mut chosen: Option<(usize, usize)> = None;
        let mut any = false;
        let candidates: Vec<usize> =
            (0..allowed).filter(|&j| z[j] < -COST_EPS && !basis.contains(&j) && !skipped.contains(&j)).collect();
        for enter in candidates {
            any = true;
            match ratio_test(t, basis, enter, rhs_col) {
                None if bounded => skipped.push(enter),
                None => return Outcome::Unbounded,
                Some((row, rel)) if rel >= SOUND_PIVOT => {
                    chosen = Some((enter, row));
                    break;
                }
                Some((row, _)) => {
                    weak.get_or_insert((enter, row));
                }
            }
        }
        if !any {
            return Outcome::Optimal;
        }
        let Some((enter, row)) = chosen.or(weak) else {
            continue;
        };
        skipped.clear();
        pivot(t, basis, z, row, enter, rhs_col);
        *iterations += 1;
    }
}

/// Leaving row for `enter` by the minimum ratio, ties to the lowest basic
/// index, and the pivot size relative to the column.
fn ratio_test(t: &Matrix, basis: &[usize], enter: usize, rhs_col: usize) -> Option<(usize, f64)> {
    let m = basis.len();
    let col_max = (0..m).fold(0.0f64, |acc, i| acc.max(t[(i, enter)].abs()));
    let threshold = PIVOT_EPS.max(PIVOT_REL * col_max);
    let mut leave: Option<(usize, f64)> = None;
    for i in 0..m {
        let a = t[(i, enter)];
        if a > threshold {
            let ratio = t[(i, rhs_col)].max(0.0) / a;
            leave = match leave {
                None => Some((i, ratio)),
                Some((k, best)) => {
                    let tie = (ratio - best).abs() <= 1e-12 * (1.0 + best.abs());
                    if ratio < best && !tie || tie && basis[i] < basis[k] {
                        Some((i, ratio))
                    } else {
                        Some((k, best))
                    }
                }
            };
        }
    }
    leave.map(|(row, _)| (row, t[(row, enter)] / col_max))
}

fn pivot(t: &mut Matrix, basis: &mut [usize], z: &mut [f64], row: usize, col: usize, rhs_col: usize) {
    let m = basis.len();
    let p = t[(row, col)];
    for j in 0..=rhs_col {
        t[(row, j)] /= p;
    }
    t[(row, col)] = 1.0;
    for i in 0..m {
        if i == row {
            continue;
        }
        let f = t[(i, col)];
        if f != 0.0 {
            for j in 0..=rhs_col {
                t[(i, j)] -= f * t[(row, j)];
            }
            t[(i, col)] = 0.0;
        }
    }
    let f = z[col];
    if f != 0.0 {
        for j in 0..=rhs_col {
            z[j] -= f * t[(row, j)];
        }
        z[col] = 0.0;
    }
    basis[row] = col;
}

/// Outcome of a convex-hull membership query.
#[derive(Debug, Clone, PartialEq)]
pub struct HullMembership {
    pub inside: bool,
    /// Convex weights reproducing the point; empty when outside.
    pub coefficients: Vec<f64>,
}

/// Unit vectors from `point` towards each vertex, and the distances.
/// A vertex at the point gets a zero direction and distance 0.
///
/// Hull questions posed on these directions are scale free: a vertex far
/// away contributes a unit column instead of one of its own magnitude.
pub fn directions(point: &[f64], vertices: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<f64>) {
    vertices
        .iter()
        .map(|v| {
            let diff: Vec<f64> = v.iter().zip(point).map(|(a, b)| a - b).collect();
            let d = crate::linalg::norm(&diff);
            if d > 0.0 {
                (diff.iter().map(|x| x / d).collect(), d)
            } else {
                (diff, 0.0)
            }
        })
        .unzip()
}

/// Orthonormal basis of the span of `rows`, by modified Gram-Schmidt with
/// one reorthogonalization pass. A row whose remainder is below `rel_tol`
/// times the largest row norm is dropped as dependent.
///
/// Equality systems built from hull directions are often rank deficient by
/// construction (points on an affine plane); a dependent row that survives
/// only through rounding noise would otherwise be pivoted on.
pub fn independent_rows(rows: &[Vec<f64>], rel_tol: f64) -> Vec<Vec<f64>> {
    let top = rows.iter().map(|r| crate::linalg::norm(r)).fold(0.0f64, f64::max);
    let mut basis: Vec<Vec<f64>> = Vec::new();
    if top == 0.0 {
        return basis;
    }
    for r in rows {
        let mut v = r.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = crate::linalg::dot(&v, b);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let nv = crate::linalg::norm(&v);
        if nv > rel_tol * top {
            v.iter_mut().for_each(|x| *x /= nv);
            basis.push(v);
        }
    }
    basis
}

/// Relative size below which a direction row counts as dependent.
pub const RANK_TOL: f64 = 1e-10;

/// Is `point` a convex combination of `vertices`?
///
/// Solved as `sum nu_j u_j = 0, sum nu_j = 1, nu >= 0` over the unit
/// [`directions`] `u_j`, then mapped back to convex weights
/// `lambda_j ∝ nu_j / d_j`.
pub fn hull_membership(point: &[f64], vertices: &[Vec<f64>], tol: f64) -> Result<HullMembership> {
    if vertices.is_empty() {
        return Err(Error::InvalidInput("need at least one vertex"));
    }
    let k = point.len();
    if let Some(v) = vertices.iter().find(|v| v.len() != k) {
        return Err(Error::DimensionMismatch { expected: k, got: v.len() });
    }
    let scale = point.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    if let Some(hit) = vertices.iter().position(|v| v.iter().zip(point).all(|(a, b)| (a - b).abs() <= tol * scale)) {
        let mut coefficients = vec![0.0; vertices.len()];
        coefficients[hit] = 1.0;
        return Ok(HullMembership { inside: true, coefficients });
    }
    let (units, dists) = directions(point, vertices);
    let rows: Vec<Vec<f64>> = (0..k).map(|c| units.iter().map(|u| u[c]).collect()).collect();
    let mut lp = LinearProgram::new(vertices.len());
    for row in independent_rows(&rows, RANK_TOL) {
        lp.constraint(row, Relation::Eq, 0.0)?;
    }
    lp.constraint(vec![1.0; vertices.len()], Relation::Eq, 1.0)?;
    let res = solve_lp_with_tol(&lp, tol);
    match res.status {
        LpStatus::Optimal => {
            let raw: Vec<f64> = res.x.iter().zip(&dists).map(|(nu, d)| nu.max(0.0) / d).collect();
            let total: f64 = raw.iter().sum();
            Ok(HullMembership { inside: true, coefficients: raw.iter().map(|r| r / total).collect() })
        }
        LpStatus::Infeasible => Ok(HullMembership { inside: false, coefficients: Vec::new() }),
        LpStatus::Unbounded | LpStatus::NumericalFailure => {
            Err(Error::LpNumericalFailure { iterations: res.iterations })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn dependent_rows_are_dropped() {
        let rows = vec![vec![1.0, 0.0, -1.0], vec![0.0, 2.0, -2.0], vec![-1.0, -2.0, 3.0]];
        let b = independent_rows(&rows, RANK_TOL);
        assert_eq!(b.len(), 2);
        for (i, u) in b.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                let d = crate::linalg::dot(u, v);
                assert!((d - if i == j { 1.0 } else { 0.0 }).abs() < 1e-15);
            }
        }
        assert!(independent_rows(&[vec![0.0, 0.0]], RANK_TOL).is_empty());
    }

    #[test]
    fn maximize_single_variable() {
        let mut lp = LinearProgram::new(1);
        lp.constraint(vec![1.0], Relation::Le, 1.0).unwrap();
        lp.objective(vec![1.0], Sense::Maximize).unwrap();
        let r = solve_lp(&lp);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!((r.x[0] - 1.0).abs() < 1e-12);
        assert!((r.objective - 1.0).abs() < 1e-12);
    }

    #[test]
    fn contradictory_equalities() {
        let mut lp = LinearProgram::new(1);
        lp.constraint(vec![1.0], Relation::Eq, 1.0).unwrap();
        lp.constraint(vec![1.0], Relation::Eq, 2.0).unwrap();
        assert_eq!(solve_lp(&lp).status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_objective() {
        let mut lp = LinearProgram::new(2);
        lp.constraint(vec![1.0, -1.0], Relation::Le, 1.0).unwrap();
        lp.objective(vec![1.0, 1.0], Sense::Maximize).unwrap();
        assert_eq!(solve_lp(&lp).status, LpStatus::Unbounded);
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let mut lp = LinearProgram::new(2);
        lp.constraint(vec![1.0, 0.0], Relation::Le, 4.0).unwrap();
        lp.constraint(vec![0.0, 2.0], Relation::Le, 12.0).unwrap();
        lp.constraint(vec![3.0, 2.0], Relation::Le, 18.0).unwrap();
        lp.objective(vec![3.0, 5.0], Sense::Maximize).unwrap();
        let r = solve_lp(&lp);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!((r.x[0] - 2.0).abs() < 1e-12 && (r.x[1] - 6.0).abs() < 1e-12);
        assert!((r.objective - 36.0).abs() < 1e-12);
    }

    #[test]
    fn free_and_bounded_variables() {
        // min x + y with x free, y in [-2, 3], x - y >= -1, x + y >= -4
        let mut lp = LinearProgram::new(2);
        lp.bounds(0, f64::NEG_INFINITY, f64::INFINITY).unwrap();
        lp.bounds(1, -2.0, 3.0).unwrap();
        lp.constraint(vec![1.0, -1.0], Relation::Ge, -1.0).unwrap();
        lp.constraint(vec![1.0, 1.0], Relation::Ge, -4.0).unwrap();
        lp.objective(vec![1.0, 1.0], Sense::Minimize).unwrap();
        let r = solve_lp(&lp);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!((r.objective + 4.0).abs() < 1e-12);
        assert!(lp.violation(&r.x) < 1e-12);
        let mut upper_only = LinearProgram::new(1);
        upper_only.bounds(0, f64::NEG_INFINITY, 5.0).unwrap();
        upper_only.objective(vec![1.0], Sense::Maximize).unwrap();
        let r = solve_lp(&upper_only);
        assert!((r.x[0] - 5.0).abs() < 1e-12);
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        let mut lp = LinearProgram::new(3);
        lp.constraint(vec![1.0, 1.0, 1.0], Relation::Eq, 1.0).unwrap();
        lp.constraint(vec![2.0, 2.0, 2.0], Relation::Eq, 2.0).unwrap();
        lp.constraint(vec![1.0, 0.0, -1.0], Relation::Eq, 0.0).unwrap();
        let r = solve_lp(&lp);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!(lp.violation(&r.x) < 1e-12);
    }

    #[test]
    fn hull_examples() {
        let verts = vec![vec![4.0, -3.0], vec![0.5, 0.5], vec![-3.0, 4.0]];
        let h = hull_membership(&[0.5, 0.5], &verts, LP_TOL).unwrap();
        assert!(h.inside);
        assert_eq!(h.coefficients, vec![0.0, 1.0, 0.0]);

        let sq = vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![0.0, 2.0]];
        let mid = hull_membership(&[1.0, 0.0], &sq, LP_TOL).unwrap();
        assert!(mid.inside);
        assert!((mid.coefficients[0] - 0.5).abs() < 1e-12 && (mid.coefficients[1] - 0.5).abs() < 1e-12);
        assert!(!hull_membership(&[3.0, 3.0], &sq, LP_TOL).unwrap().inside);
        assert!(!hull_membership(&[1.5, 1.5], &sq, LP_TOL).unwrap().inside);
        assert!(hull_membership(&[1.0], &[], LP_TOL).is_err());
    }
}
