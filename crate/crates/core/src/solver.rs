//! Central configurations as fixed points of `F`.
//!
//! On the line every strict ordering of the bodies is its own connected
//! component of the shape sphere, and `U` restricted to a component is proper
//! with a single critical point (Moulton). [`solve_component`] finds it by a
//! Riemannian Newton method on the ellipsoid; [`morse_index`] classifies it by
//! the second variation of `U` on the ellipsoid.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{
    self, check_collisions, mass_inner, mass_norm, min_relative_separation, Configuration, MassVector,
    COLLISION_EPS,
};
use crate::linalg::{self, dot, Matrix};
use crate::potential::{
    euclidean_gradient, f_map, fixed_point_residual, hessian, lambda_of, potential, CentralConfigCertificate,
};
use crate::projective::{projective_distance, ProjectivePoint};

/// Eigenvalues below this fraction of the largest magnitude count as zero.
pub const DEGEN_EPS: f64 = 1e-8;

/// Largest `n` accepted by [`enumerate_collinear`].
pub const MAX_ENUMERATION_BODIES: usize = 7;

const NEWTON_MAX_ITER: usize = 200;
const POLISH_STEPS: usize = 3;
const MAX_HALVINGS: usize = 60;

/// A strict ordering `q[perm[0]] > q[perm[1]] > ... > q[perm[n-1]]` of
/// collinear bodies. Indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderingComponent {
    perm: Vec<usize>,
}

impl OrderingComponent {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        if n < 3 {
            return Err(Error::InvalidInput("need at least 3 bodies"));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidInput("ordering is not a permutation"));
            }
            seen[p] = true;
        }
        Ok(Self { perm })
    }

    /// From labels `1..=n`.
    pub fn from_one_based(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidInput("labels start at 1"));
        }
        Self::new(labels.iter().map(|l| l - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect() }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|p| p + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn reversed(&self) -> Self {
        let mut perm = self.perm.clone();
        perm.reverse();
        Self { perm }
    }

    /// Representative of the pair `{ordering, reversal}`.
    pub fn is_projective_representative(&self) -> bool {
        self.perm[0] < self.perm[self.n() - 1]
    }

    /// All `n!` orderings in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            out.push(Self { perm: p.clone() });
            if !next_permutation(&mut p) {
                break;
            }
        }
        out
    }

    /// One ordering per antipodal class, `n!/2` in total.
    pub fn projective_classes(n: usize) -> Vec<Self> {
        Self::all(n).into_iter().filter(|c| c.is_projective_representative()).collect()
    }

    /// The ordering of a collinear position vector, if it is strict.
    pub fn of_positions(q: &[f64]) -> Option<Self> {
        let mut perm: Vec<usize> = (0..q.len()).collect();
        perm.sort_by(|&a, &b| q[b].total_cmp(&q[a]));
        let comp = Self { perm };
        comp.contains(q).then_some(comp)
    }

    pub fn contains(&self, q: &[f64]) -> bool {
        q.len() == self.n() && self.perm.windows(2).all(|w| q[w[0]] > q[w[1]])
    }

    /// Position of body `i` in the ordering.
    pub fn rank_of(&self, i: usize) -> Option<usize> {
        self.perm.iter().position(|&p| p == i)
    }

    /// For a pair adjacent in this ordering, returns `(upper, lower)`.
    pub fn adjacent_pair(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        let (ri, rj) = match (self.rank_of(i), self.rank_of(j)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InvalidWall(i, j)),
        };
        match ri as isize - rj as isize {
            -1 => Ok((i, j)),
            1 => Ok((j, i)),
            _ => Err(Error::InvalidWall(i, j)),
        }
    }

    /// Equally spaced positions in this ordering, on the unit ellipsoid.
    pub fn equally_spaced(&self, masses: &MassVector) -> Result<Configuration> {
        let mut q = vec![0.0; self.n()];
        for (k, &p) in self.perm.iter().enumerate() {
            q[p] = -(k as f64);
        }
        geometry::normalize_to_sphere(&Configuration::collinear(&q)?, masses)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Morse data of a central configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub certificate: CentralConfigCertificate,
    pub mu: usize,
    /// `(-1)^mu`.
    pub fp_index: i32,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
}

/// Mass-orthonormal basis of the tangent space of the ellipsoid at `q`
/// inside the mass-centered subspace: translations and the radial direction
/// are removed. Has `(n - 1) d - 1` vectors.
pub fn tangent_basis(q: &[f64], masses: &MassVector, d: usize) -> Vec<Vec<f64>> {
    let n = masses.len();
    let mut spanned: Vec<Vec<f64>> = Vec::new();
    let push = |spanned: &mut Vec<Vec<f64>>, mut v: Vec<f64>| -> bool {
        let before = mass_norm(&v, masses);
        for _ in 0..2 {
            for b in spanned.iter() {
                let c = mass_inner(&v, b, masses);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let after = mass_norm(&v, masses);
        if after > 1e-6 * before {
            v.iter_mut().for_each(|x| *x /= after);
            spanned.push(v);
            true
        } else {
            false
        }
    };
    for a in 0..d {
        let t: Vec<f64> = (0..n * d).map(|k| if k % d == a { 1.0 } else { 0.0 }).collect();
        push(&mut spanned, t);
    }
    push(&mut spanned, q.to_vec());
    let fixed = spanned.len();
    let want = (n - 1) * d - 1;
    for k in 0..n * d {
        if spanned.len() - fixed == want {
            break;
        }
        let mut e = vec![0.0; n * d];
        e[k] = 1.0;
        push(&mut spanned, e);
    }
    spanned.split_off(fixed)
}

/// Second variation of `U` on the ellipsoid at `q`, in the basis `basis`:
/// `b_k^T (Hess U - lambda M) b_l` with `lambda = grad U . q / |q|_M^2`.
pub fn restricted_hessian(cfg: &Configuration, masses: &MassVector, alpha: f64, basis: &[Vec<f64>]) -> Result<Matrix> {
    let h = hessian(cfg, masses, alpha)?;
    let grad = euclidean_gradient(cfg, masses, alpha)?;
    let lambda = dot(&grad, cfg.as_slice()) / mass_inner(cfg.as_slice(), cfg.as_slice(), masses);
    let k = basis.len();
    let hb: Vec<Vec<f64>> = basis.iter().map(|b| h.mul_vec(b)).collect();
    let mut r = Matrix::zeros(k, k);
    for a in 0..k {
        for b in 0..k {
            r[(a, b)] = dot(&basis[a], &hb[b]) - if a == b { lambda } else { 0.0 };
        }
    }
    for a in 0..k {
        for b in 0..a {
            let s = 0.5 * (r[(a, b)] + r[(b, a)]);
            r[(a, b)] = s;
            r[(b, a)] = s;
        }
    }
    Ok(r)
}

fn certificate(q: Configuration, masses: &MassVector, alpha: f64, residual: f64) -> Result<CentralConfigCertificate> {
    let lambda = lambda_of(&q, masses, alpha)?;
    Ok(CentralConfigCertificate { cfg: q, lambda, residual })
}

/// The central configuration of one ordering component on the line.
pub fn solve_component(
    comp: &OrderingComponent,
    masses: &MassVector,
    alpha: f64,
    tol: f64,
    max_iter: usize,
) -> Result<CentralConfigCertificate> {
    masses.check_len(comp.n())?;
    let mut q = comp.equally_spaced(masses)?;
    let mut best = f64::INFINITY;
    for _ in 0..max_iter {
        let residual = fixed_point_residual(&q, masses, alpha)?;
        best = best.min(residual);
        if residual < tol {
            return polish(comp, q, residual, masses, alpha);
        }
        let (basis, g, step) = newton_direction(&q, masses, alpha)?;
        let slope = dot(&g, &step);
        let u0 = potential(&q, masses, alpha)?;
        let mut s = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            if let Some(cand) = retract(&q, &basis, &step, s, masses) {
                if comp.contains(cand.as_slice()) {
                    let u = potential(&cand, masses, alpha)?;
                    if u <= u0 + 1e-4 * s * slope + 1e-14 * u0 {
                        accepted = Some(cand);
                        break;
                    }
                }
            }
            s *= 0.5;
        }
        match accepted {
            Some(next) => q = next,
            None => break,
        }
    }
    Err(Error::NonConvergence { iterations: max_iter, best_residual: best })
}

/// Tangent basis, reduced gradient and Newton step (a scaled gradient step
/// where the restricted Hessian is not positive definite).
fn newton_direction(q: &Configuration, masses: &MassVector, alpha: f64) -> Result<(Vec<Vec<f64>>, Vec<f64>, Vec<f64>)> {
    let basis = tangent_basis(q.as_slice(), masses, 1);
    let grad = euclidean_gradient(q, masses, alpha)?;
    let g: Vec<f64> = basis.iter().map(|b| dot(&grad, b)).collect();
    let h = restricted_hessian(q, masses, alpha, &basis)?;
    let step = match linalg::cholesky(&h) {
        Some(l) => linalg::cholesky_solve(&l, &g).iter().map(|x| -x).collect(),
        None => {
            let lambda = dot(&grad, q.as_slice()).abs();
            g.iter().map(|x| -x / lambda).collect()
        }
    };
    Ok((basis, g, step))
}

/// Full Newton steps past the tolerance while the residual keeps dropping.
/// Near a solution the energy differences fall below rounding, so only the
/// residual can judge these steps.
fn polish(
    comp: &OrderingComponent,
    mut q: Configuration,
    mut residual: f64,
    masses: &MassVector,
    alpha: f64,
) -> Result<CentralConfigCertificate> {
    for _ in 0..POLISH_STEPS {
        let (basis, _, step) = newton_direction(&q, masses, alpha)?;
        let Some(cand) = retract(&q, &basis, &step, 1.0, masses) else { break };
        if !comp.contains(cand.as_slice()) {
            break;
        }
        let r = fixed_point_residual(&cand, masses, alpha)?;
        if r >= residual {
            break;
        }
        q = cand;
        residual = r;
    }
    certificate(q, masses, alpha, residual)
}

fn retract(q: &Configuration, basis: &[Vec<f64>], step: &[f64], s: f64, masses: &MassVector) -> Option<Configuration> {
    let mut v = q.as_slice().to_vec();
    for (b, t) in basis.iter().zip(step) {
        v.iter_mut().zip(b).for_each(|(x, y)| *x += s * t * y);
    }
    let cfg = Configuration::new(q.n(), q.d(), v).ok()?;
    geometry::normalize_to_sphere(&cfg, masses).ok()
}

/// Morse index of `U` on the ellipsoid at a collinear certificate.
pub fn morse_index(cert: &CentralConfigCertificate, masses: &MassVector, alpha: f64) -> Result<IndexReport> {
    if cert.cfg.d() != 1 {
        return Err(Error::InvalidInput("index computation is limited to collinear configurations"));
    }
    let basis = tangent_basis(cert.cfg.as_slice(), masses, 1);
    let h = restricted_hessian(&cert.cfg, masses, alpha, &basis)?;
    let eigenvalues = linalg::symmetric_eigen(&h).values;
    let scale = eigenvalues.iter().fold(0.0f64, |a, e| a.max(e.abs()));
    if eigenvalues.iter().any(|e| e.abs() <= DEGEN_EPS * scale) {
        return Err(Error::DegenerateCriticalPoint { eigenvalues });
    }
    let mu = eigenvalues.iter().filter(|e| **e < 0.0).count();
    Ok(IndexReport {
        certificate: cert.clone(),
        mu,
        fp_index: if mu % 2 == 0 { 1 } else { -1 },
        eigenvalues,
    })
}

/// Best rotation `R` (in `SO(d)`) minimizing `sum m_i |q_i - R f_i|^2`,
/// row-major `d x d`.
pub fn best_rotation(q: &[f64], f: &[f64], masses: &MassVector, d: usize) -> Matrix {
    let n = masses.len();
    let m = masses.as_slice();
    let mut c = Matrix::zeros(d, d);
    for i in 0..n {
        for a in 0..d {
            for b in 0..d {
                c[(a, b)] += m[i] * q[i * d + a] * f[i * d + b];
            }
        }
    }
    if d == 1 {
        return Matrix::identity(1);
    }
    if d == 2 {
        let theta = libm::atan2(c[(1, 0)] - c[(0, 1)], c[(0, 0)] + c[(1, 1)]);
        let (s, co) = (libm::sin(theta), libm::cos(theta));
        return Matrix::from_rows(2, 2, vec![co, -s, s, co]).expect("2x2");
    }
    // C = U S V^T via the eigen-decomposition of C^T C
    let eig = linalg::symmetric_eigen(&c.transpose().mul(&c));
    let v = &eig.vectors;
    let top = eig.values.last().copied().unwrap_or(0.0).max(f64::MIN_POSITIVE);
    let mut us: Vec<Vec<f64>> = Vec::with_capacity(d);
    for k in (0..d).rev() {
        let vk = v.column(k);
        let mut u = c.mul_vec(&vk);
        for prev in &us {
            let p = dot(&u, prev);
            u.iter_mut().zip(prev).for_each(|(x, y)| *x -= p * y);
        }
        let mut nu = linalg::norm(&u);
        if eig.values[k] <= 1e-24 * top || nu <= 1e-12 * libm::sqrt(top) {
            // complete the frame from the standard basis
            for e in 0..d {
                u = (0..d).map(|a| if a == e { 1.0 } else { 0.0 }).collect();
                for prev in &us {
                    let p = dot(&u, prev);
                    u.iter_mut().zip(prev).for_each(|(x, y)| *x -= p * y);
                }
                if linalg::norm(&u) > 0.5 {
                    break;
                }
            }
            nu = linalg::norm(&u);
        }
        u.iter_mut().for_each(|x| *x /= nu);
        us.push(u);
    }
    // us[0] pairs with the largest singular value, i.e. column d-1 of v
    let mut r = Matrix::zeros(d, d);
    let build = |r: &mut Matrix, us: &[Vec<f64>]| {
        for a in 0..d {
            for b in 0..d {
                r[(a, b)] = (0..d).map(|k| us[k][a] * v[(b, d - 1 - k)]).sum();
            }
        }
    };
    build(&mut r, &us);
    if linalg::determinant(&r) < 0.0 {
        us[d - 1].iter_mut().for_each(|x| *x = -*x);
        build(&mut r, &us);
    }
    r
}

/// `min_R |q - R F(q)|_M` over rotations.
pub fn aligned_residual(q: &[f64], f: &[f64], masses: &MassVector, d: usize) -> f64 {
    let r = best_rotation(q, f, masses, d);
    let n = masses.len();
    let mut diff = vec![0.0; n * d];
    for i in 0..n {
        let rf = r.mul_vec(&f[i * d..(i + 1) * d]);
        for a in 0..d {
            diff[i * d + a] = q[i * d + a] - rf[a];
        }
    }
    mass_norm(&diff, masses)
}

/// Damped iteration `q <- normalize((1 - s) q + s F(q))` with adaptive `s`.
/// For `d >= 2` convergence is judged on the rotation-aligned residual.
pub fn solve_fixed_point_iterative(
    start: &Configuration,
    masses: &MassVector,
    alpha: f64,
    tol: f64,
    max_iter: usize,
) -> Result<CentralConfigCertificate> {
    masses.check_len(start.n())?;
    let d = start.d();
    let mut q = geometry::normalize_to_sphere(start, masses)?;
    let measure = |q: &Configuration| -> Result<(Vec<f64>, f64)> {
        let f = f_map(q, masses, alpha)?;
        let r = if d == 1 {
            let diff: Vec<f64> = q.as_slice().iter().zip(&f).map(|(a, b)| a - b).collect();
            mass_norm(&diff, masses)
        } else {
            aligned_residual(q.as_slice(), &f, masses, d)
        };
        Ok((f, r))
    };
    let (mut f, mut residual) = measure(&q)?;
    let mut best = residual;
    let mut s: f64 = 0.5;
    for _ in 0..max_iter {
        if residual < tol {
            let plain = fixed_point_residual(&q, masses, alpha)?;
            return certificate(q, masses, alpha, plain);
        }
        let mixed: Vec<f64> = q.as_slice().iter().zip(&f).map(|(a, b)| (1.0 - s) * a + s * b).collect();
        let (sep, _, _) = min_relative_separation(&mixed, q.n(), d);
        if sep < COLLISION_EPS {
            return Err(Error::CollisionDivergence { gap: sep });
        }
        let cand = geometry::normalize_to_sphere(&Configuration::new(q.n(), d, mixed)?, masses)?;
        check_collisions(cand.as_slice(), q.n(), d)?;
        let (cf, cr) = measure(&cand)?;
        if cr < residual {
            q = cand;
            f = cf;
            residual = cr;
            best = best.min(cr);
            s = (s * 1.25).min(1.0);
        } else {
            s *= 0.5;
            if s < 1e-12 {
                break;
            }
        }
    }
    Err(Error::NonConvergence { iterations: max_iter, best_residual: best })
}

/// A certificate together with the ordering it was computed in.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentCertificate {
    pub ordering: OrderingComponent,
    pub certificate: CentralConfigCertificate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentFailure {
    pub ordering: OrderingComponent,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Enumeration {
    /// Sorted by ordering.
    pub certificates: Vec<ComponentCertificate>,
    pub failures: Vec<ComponentFailure>,
}

impl Enumeration {
    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}

/// One collinear central configuration per antipodal ordering class.
pub fn enumerate_collinear(masses: &MassVector, alpha: f64, tol: f64) -> Result<Enumeration> {
    let n = masses.len();
    if n < 3 {
        return Err(Error::InvalidInput("need at least 3 bodies"));
    }
    if n > MAX_ENUMERATION_BODIES {
        return Err(Error::InvalidInput("enumeration is limited to 7 bodies"));
    }
    let mut out = Enumeration::default();
    let mut classes: Vec<ProjectivePoint> = Vec::new();
    for comp in OrderingComponent::projective_classes(n) {
        match solve_component(&comp, masses, alpha, tol, NEWTON_MAX_ITER) {
            Ok(cert) => {
                let p = ProjectivePoint::new(cert.cfg.as_slice(), masses, 1)?;
                if classes.iter().any(|c| projective_distance(c, &p) < 10.0 * tol) {
                    continue;
                }
                classes.push(p);
                out.certificates.push(ComponentCertificate { ordering: comp, certificate: cert });
            }
            Err(error) => out.failures.push(ComponentFailure { ordering: comp, error }),
        }
    }
    Ok(out)
}

/// [`solve_component`] with the default iteration budget.
pub fn solve_component_default(
    comp: &OrderingComponent,
    masses: &MassVector,
    alpha: f64,
    tol: f64,
) -> Result<CentralConfigCertificate> {
    solve_component(comp, masses, alpha, tol, NEWTON_MAX_ITER)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gaps(q: &[f64], comp: &OrderingComponent) -> Vec<f64> {
        comp.perm().windows(2).map(|w| q[w[0]] - q[w[1]]).collect()
    }

    #[test]
    fn permutations() {
        assert_eq!(OrderingComponent::all(4).len(), 24);
        assert_eq!(OrderingComponent::projective_classes(4).len(), 12);
        assert_eq!(OrderingComponent::projective_classes(5).len(), 60);
        assert!(OrderingComponent::new(vec![0, 0, 1]).is_err());
        assert!(OrderingComponent::from_one_based(&[1, 2, 3]).unwrap() == OrderingComponent::identity(3));
        let c = OrderingComponent::of_positions(&[0.0, 2.0, 1.0]).unwrap();
        assert_eq!(c.perm(), &[1, 2, 0]);
        assert!(OrderingComponent::of_positions(&[0.0, 0.0, 1.0]).is_none());
    }

    #[test]
    fn adjacency() {
        let c = OrderingComponent::new(vec![1, 0, 2]).unwrap();
        assert_eq!(c.adjacent_pair(0, 1).unwrap(), (1, 0));
        assert_eq!(c.adjacent_pair(2, 0).unwrap(), (0, 2));
        assert!(matches!(c.adjacent_pair(1, 2), Err(Error::InvalidWall(1, 2))));
    }

    #[test]
    fn symmetric_euler_solution() {
        let m = MassVector::equal(3);
        let comp = OrderingComponent::identity(3);
        let cert = solve_component(&comp, &m, 1.0, 1e-12, 100).unwrap();
        let x = gaps(cert.cfg.as_slice(), &comp);
        assert!((x[0] - x[1]).abs() < 1e-12);
        let reversed = solve_component(&comp.reversed(), &m, 1.0, 1e-12, 100).unwrap();
        for (a, b) in cert.cfg.as_slice().iter().zip(reversed.cfg.as_slice()) {
            assert!((a + b).abs() < 1e-12);
        }
    }

    #[test]
    fn four_equal_masses_are_palindromic() {
        let m = MassVector::equal(4);
        let comp = OrderingComponent::identity(4);
        let cert = solve_component(&comp, &m, 1.0, 1e-12, 100).unwrap();
        let x = gaps(cert.cfg.as_slice(), &comp);
        assert!((x[0] - x[2]).abs() < 1e-12);
        assert!(x[1] < x[0], "middle gap is the shortest: {x:?}");
    }

    #[test]
    fn tangent_basis_is_orthonormal() {
        let m = MassVector::new(vec![1.0, 2.0, 3.0, 0.5]).unwrap();
        let q = Configuration::new(4, 2, vec![0.1, 0.3, 1.0, -0.2, -0.4, 0.9, 0.2, -1.0]).unwrap();
        let q = geometry::normalize_to_sphere(&q, &m).unwrap();
        let basis = tangent_basis(q.as_slice(), &m, 2);
        assert_eq!(basis.len(), 5);
        for (a, ba) in basis.iter().enumerate() {
            assert!(mass_inner(ba, q.as_slice(), &m).abs() < 1e-12);
            for (b, bb) in basis.iter().enumerate() {
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((mass_inner(ba, bb, &m) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn euler_index_is_zero() {
        let m = MassVector::equal(3);
        let cert = solve_component(&OrderingComponent::identity(3), &m, 1.0, 1e-12, 100).unwrap();
        let report = morse_index(&cert, &m, 1.0).unwrap();
        assert_eq!(report.mu, 0);
        assert_eq!(report.fp_index, 1);
        assert_eq!(report.eigenvalues.len(), 1);
    }

    #[test]
    fn rotation_alignment() {
        let m = MassVector::equal(3);
        let q = [1.0, 0.0, -0.5, 0.8, -0.5, -0.8];
        let t: f64 = 0.7;
        let (s, c) = (t.sin(), t.cos());
        // f = R(-t) q, so the best rotation is R(t)
        let f: Vec<f64> = q.chunks(2).flat_map(|p| [c * p[0] + s * p[1], -s * p[0] + c * p[1]]).collect();
        assert!(aligned_residual(&q, &f, &m, 2) < 1e-12);
        let q3: Vec<f64> = q.chunks(2).flat_map(|p| [p[0], p[1], 0.3 * p[0]]).collect();
        let f3: Vec<f64> = q3.chunks(3).flat_map(|p| [c * p[0] + s * p[1], -s * p[0] + c * p[1], p[2]]).collect();
        assert!(aligned_residual(&q3, &f3, &m, 3) < 1e-12);
        let r = best_rotation(&q3, &f3, &m, 3);
        assert!((linalg::determinant(&r) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn enumeration_guard() {
        assert!(enumerate_collinear(&MassVector::equal(8), 1.0, 1e-10).is_err());
    }
}
