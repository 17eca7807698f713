//! The antipodal quotient of the shape sphere and the induced map `f_bar`.
//!
//! On the line, `F` jumps to the antipode when a pair of neighbours swaps
//! order, so `f` is discontinuous on the sphere; on the quotient the two
//! one-sided limits coincide and `f_bar` extends continuously across every
//! collision wall.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{center_weighted, check_collisions, mass_inner, mass_norm, min_relative_separation, Configuration, MassVector};
use crate::potential::f_map;
use crate::solver::OrderingComponent;

/// Sign threshold for the canonical representative.
pub const SIGN_EPS: f64 = 1e-10;

/// A point of `S_0 / ±`, stored as its canonical representative: the first
/// coordinate with magnitude above [`SIGN_EPS`] is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    rep: Vec<f64>,
    masses: MassVector,
    d: usize,
}

impl ProjectivePoint {
    /// Centers, normalizes and picks the canonical sign.
    pub fn new(v: &[f64], masses: &MassVector, d: usize) -> Result<Self> {
        if d == 0 || v.len() != masses.len() * d {
            return Err(Error::DimensionMismatch { expected: masses.len() * d, got: v.len() });
        }
        let mut rep = v.to_vec();
        center_weighted(&mut rep, masses, d);
        let norm = mass_norm(&rep, masses);
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::Degenerate("zero vector has no projective class"));
        }
        rep.iter_mut().for_each(|x| *x /= norm);
        if let Some(first) = rep.iter().find(|x| x.abs() > SIGN_EPS) {
            if *first < 0.0 {
                rep.iter_mut().for_each(|x| *x = -*x);
            }
        }
        Ok(Self { rep, masses: masses.clone(), d })
    }

    pub fn rep(&self) -> &[f64] {
        &self.rep
    }

    pub fn masses(&self) -> &MassVector {
        &self.masses
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn antipode_rep(&self) -> Vec<f64> {
        self.rep.iter().map(|x| -x).collect()
    }

    pub fn configuration(&self) -> Result<Configuration> {
        Configuration::new(self.masses.len(), self.d, self.rep.clone())
    }
}

/// `min(|p - q|_M, |p + q|_M)`.
pub fn projective_distance(p: &ProjectivePoint, q: &ProjectivePoint) -> f64 {
    assert_eq!(p.rep.len(), q.rep.len(), "shape mismatch");
    let minus: Vec<f64> = p.rep.iter().zip(&q.rep).map(|(a, b)| a - b).collect();
    let plus: Vec<f64> = p.rep.iter().zip(&q.rep).map(|(a, b)| a + b).collect();
    mass_norm(&minus, &p.masses).min(mass_norm(&plus, &p.masses))
}

/// The induced map on the quotient. Points on a collision wall are rejected;
/// use [`f_bar_wall_limit`] there.
pub fn f_bar(p: &ProjectivePoint, masses: &MassVector, alpha: f64) -> Result<ProjectivePoint> {
    if check_collisions(&p.rep, masses.len(), p.d).is_err() {
        return Err(Error::OnCollisionWall);
    }
    let cfg = p.configuration()?;
    ProjectivePoint::new(&f_map(&cfg, masses, alpha)?, masses, p.d)
}

/// Direction of `F` as the adjacent pair `(i, j)` of `comp` collides from
/// inside `comp`: the blown-up entry `Q_ij` dominates, so the limit is
/// `m_lower e_upper - m_upper e_lower`, renormalized. Not sign-canonicalized.
pub fn wall_limit_vector(wall: (usize, usize), comp: &OrderingComponent, masses: &MassVector) -> Result<Vec<f64>> {
    masses.check_len(comp.n())?;
    let (upper, lower) = comp.adjacent_pair(wall.0, wall.1)?;
    let m = masses.as_slice();
    let mut v = vec![0.0; comp.n()];
    v[upper] = m[lower];
    v[lower] = -m[upper];
    let norm = mass_norm(&v, masses);
    v.iter_mut().for_each(|x| *x /= norm);
    Ok(v)
}

/// Value of the continuous extension of `f_bar` on the wall `q_i = q_j`
/// bounding `comp`. Collinear only.
pub fn f_bar_wall_limit(wall: (usize, usize), comp: &OrderingComponent, masses: &MassVector) -> Result<ProjectivePoint> {
    let v = wall_limit_vector(wall, comp, masses)?;
    ProjectivePoint::new(&v, masses, 1)
}

/// One sample of the circle self-maps for three collinear bodies.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartSample {
    pub theta: f64,
    /// Angle of `F(q(theta))` in `[0, 2 pi)`; `None` on a wall where `f` is undefined.
    pub f: Option<f64>,
    /// Angle of `f_bar` in `[0, pi)`, continuous across walls.
    pub fbar: f64,
    /// Index of the ordering in [`OrderingComponent::all`]; `None` on a wall.
    pub component: Option<usize>,
    pub is_wall: bool,
}

/// Angle chart of the shape circle of three collinear bodies:
/// `q(theta) = cos(theta) e1 + sin(theta) e2` with `e1, e2` a mass-orthonormal
/// basis of the centered plane. Taken mod `pi` it charts `P^1`.
#[derive(Debug, Clone)]
pub struct CircleChart {
    masses: MassVector,
    e1: Vec<f64>,
    e2: Vec<f64>,
}

impl CircleChart {
    pub fn new(masses: &MassVector) -> Result<Self> {
        if masses.len() != 3 {
            return Err(Error::InvalidInput("the circle chart needs exactly three bodies"));
        }
        let mut e1 = vec![1.0, 0.0, -1.0];
        center_weighted(&mut e1, masses, 1);
        let n1 = mass_norm(&e1, masses);
        e1.iter_mut().for_each(|x| *x /= n1);
        let mut e2 = vec![1.0, -2.0, 1.0];
        center_weighted(&mut e2, masses, 1);
        let c = mass_inner(&e2, &e1, masses);
        e2.iter_mut().zip(&e1).for_each(|(x, y)| *x -= c * y);
        let n2 = mass_norm(&e2, masses);
        e2.iter_mut().for_each(|x| *x /= n2);
        Ok(Self { masses: masses.clone(), e1, e2 })
    }

    pub fn point(&self, theta: f64) -> Vec<f64> {
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        self.e1.iter().zip(&self.e2).map(|(a, b)| c * a + s * b).collect()
    }

    pub fn projective(&self, theta: f64) -> Result<ProjectivePoint> {
        ProjectivePoint::new(&self.point(theta), &self.masses, 1)
    }

    /// Inverse chart on the circle, in `[0, 2 pi)`.
    pub fn angle(&self, v: &[f64]) -> f64 {
        let t = libm::atan2(mass_inner(v, &self.e2, &self.masses), mass_inner(v, &self.e1, &self.masses));
        wrap(t, 2.0 * PI)
    }

    /// Inverse chart on `P^1`, in `[0, pi)`.
    pub fn projective_angle(&self, v: &[f64]) -> f64 {
        wrap(self.angle(v), PI)
    }

    /// The three wall angles in `[0, pi)` with the colliding pair, ascending.
    pub fn wall_angles(&self) -> Vec<(f64, (usize, usize))> {
        let mut out: Vec<(f64, (usize, usize))> = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| {
                let a = self.e1[i] - self.e1[j];
                let b = self.e2[i] - self.e2[j];
                (wrap(libm::atan2(-a, b), PI), (i, j))
            })
            .collect();
        out.sort_by(|x, y| x.0.total_cmp(&y.0));
        out
    }

    /// The six wall crossings in `[0, 2 pi)`, ascending.
    pub fn wall_angles_full(&self) -> Vec<(f64, (usize, usize))> {
        let mut out: Vec<(f64, (usize, usize))> =
            self.wall_angles().into_iter().flat_map(|(t, w)| [(t, w), (t + PI, w)]).collect();
        out.sort_by(|x, y| x.0.total_cmp(&y.0));
        out
    }

    pub fn sample(&self, theta: f64, alpha: f64) -> Result<ChartSample> {
        let q = self.point(theta);
        let (sep, i, j) = min_relative_separation(&q, 3, 1);
        if sep <= crate::geometry::COLLISION_EPS {
            let mut perm = [0usize, 1, 2];
            perm.sort_by(|&a, &b| q[b].total_cmp(&q[a]).then(a.cmp(&b)));
            let comp = OrderingComponent::new(perm.to_vec())?;
            let limit = wall_limit_vector((i, j), &comp, &self.masses)?;
            return Ok(ChartSample {
                theta,
                f: None,
                fbar: self.projective_angle(&limit),
                component: None,
                is_wall: true,
            });
        }
        let cfg = Configuration::collinear(&q)?;
        let f = f_map(&cfg, &self.masses, alpha)?;
        let comp = OrderingComponent::of_positions(&q).ok_or(Error::OnCollisionWall)?;
        let component = OrderingComponent::all(3).iter().position(|c| *c == comp);
        Ok(ChartSample {
            theta,
            f: Some(self.angle(&f)),
            fbar: self.projective_angle(&f),
            component,
            is_wall: false,
        })
    }
}

/// Reduces `x` into `[0, period)`.
pub fn wrap(x: f64, period: f64) -> f64 {
    let r = x - period * libm::floor(x / period);
    if r >= period {
        0.0
    } else {
        r
    }
}

/// Distance between two angles modulo `period`.
pub fn circular_distance(a: f64, b: f64, period: f64) -> f64 {
    let r = wrap(a - b, period);
    r.min(period - r)
}
