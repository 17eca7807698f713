mod common;

use std::f64::consts::PI;

use ccfix_core::geometry::{mass_norm, Configuration, MassVector};
use ccfix_core::potential::f_map;
use ccfix_core::projective::{
    circular_distance, f_bar, f_bar_wall_limit, projective_distance, wall_limit_vector, wrap, CircleChart,
};
use ccfix_core::solver::OrderingComponent;
use ccfix_core::{Error, ProjectivePoint};
use common::{random_masses, rng};

/// Every adjacent wall of every ordering, paired with the ordering across it.
fn walls(n: usize) -> Vec<(OrderingComponent, OrderingComponent, (usize, usize))> {
    let mut out = Vec::new();
    for comp in OrderingComponent::all(n) {
        for k in 0..n - 1 {
            let mut other = comp.perm().to_vec();
            other.swap(k, k + 1);
            let pair = (comp.perm()[k], comp.perm()[k + 1]);
            out.push((comp.clone(), OrderingComponent::new(other).unwrap(), pair));
        }
    }
    out
}

#[test]
fn wall_limits_from_both_sides_coincide() {
    let mut r = rng(21);
    for n in [3, 4] {
        for m in [MassVector::equal(n), random_masses(&mut r, n)] {
            for (a, b, pair) in walls(n) {
                let va = wall_limit_vector(pair, &a, &m).unwrap();
                let vb = wall_limit_vector(pair, &b, &m).unwrap();
                let sum: Vec<f64> = va.iter().zip(&vb).map(|(x, y)| x + y).collect();
                assert!(mass_norm(&sum, &m) < 1e-15, "limits are not antipodal");
                let pa = f_bar_wall_limit(pair, &a, &m).unwrap();
                let pb = f_bar_wall_limit(pair, &b, &m).unwrap();
                assert!(projective_distance(&pa, &pb) < 1e-15);
            }
        }
    }
}

#[test]
fn limit_direction_for_the_first_wall() {
    // from q1 > q2 > q3 the limit on q1 = q2 is the class of (m2, -m1, 0)
    let m = MassVector::equal(3);
    let v = wall_limit_vector((0, 1), &OrderingComponent::identity(3), &m).unwrap();
    let s = 2f64.sqrt().recip();
    assert!(common::max_abs_diff(&v, &[s, -s, 0.0]) < 1e-15);
    let across = OrderingComponent::from_one_based(&[2, 1, 3]).unwrap();
    let w = wall_limit_vector((0, 1), &across, &m).unwrap();
    assert!(common::max_abs_diff(&w, &[-s, s, 0.0]) < 1e-15);
    assert_eq!(
        wall_limit_vector((0, 2), &OrderingComponent::identity(3), &m),
        Err(Error::InvalidWall(0, 2))
    );
}

/// Collinear point on the wall `q_i = q_j` of `comp`, pushed `eps` into `comp`.
fn near_wall(comp: &OrderingComponent, k: usize, eps: f64) -> Vec<f64> {
    let n = comp.n();
    let mut q = vec![0.0; n];
    let mut pos = n as f64;
    for (rank, &body) in comp.perm().iter().enumerate() {
        if rank == k + 1 {
            q[body] = q[comp.perm()[k]] - eps;
        } else {
            pos -= 1.0 + 0.3 * rank as f64;
            q[body] = pos;
        }
    }
    q
}

#[test]
fn f_bar_approaches_the_wall_limit() {
    let mut r = rng(22);
    for n in [3, 4] {
        let m = random_masses(&mut r, n);
        for alpha in [0.5, 1.0, 2.0] {
            for comp in OrderingComponent::all(n) {
                for k in 0..n - 1 {
                    let pair = (comp.perm()[k], comp.perm()[k + 1]);
                    let limit = f_bar_wall_limit(pair, &comp, &m).unwrap();
                    let mut last = f64::INFINITY;
                    for eps in [1e-2, 1e-3, 1e-4, 1e-5] {
                        let q = near_wall(&comp, k, eps);
                        assert!(comp.contains(&q));
                        let p = ProjectivePoint::new(&q, &m, 1).unwrap();
                        let dist = projective_distance(&f_bar(&p, &m, alpha).unwrap(), &limit);
                        assert!(dist < last, "not approaching: {dist:e} after {last:e}");
                        last = dist;
                    }
                    assert!(last < 1e-5f64.powf(alpha), "{last:e} at alpha {alpha}");
                }
            }
        }
    }
}

#[test]
fn f_jumps_to_the_antipode_across_a_wall() {
    let m = MassVector::new(vec![1.0, 2.0, 0.7]).unwrap();
    for (a, b, pair) in walls(3) {
        let k = a.perm().iter().position(|&x| x == pair.0).unwrap();
        let qa = near_wall(&a, k, 1e-6);
        let mut qb = qa.clone();
        qb.swap(pair.0, pair.1);
        assert!(b.contains(&qb));
        let fa = f_map(&Configuration::collinear(&qa).unwrap(), &m, 1.0).unwrap();
        let fb = f_map(&Configuration::collinear(&qb).unwrap(), &m, 1.0).unwrap();
        let sum: Vec<f64> = fa.iter().zip(&fb).map(|(x, y)| x + y).collect();
        let diff: Vec<f64> = fa.iter().zip(&fb).map(|(x, y)| x - y).collect();
        assert!(mass_norm(&sum, &m) < 1e-6);
        assert!(mass_norm(&diff, &m) > 1.9);
        let pa = ProjectivePoint::new(&fa, &m, 1).unwrap();
        let pb = ProjectivePoint::new(&fb, &m, 1).unwrap();
        assert!(projective_distance(&pa, &pb) < 1e-6);
    }
}

#[test]
fn chart_round_trip_and_walls() {
    let mut r = rng(23);
    for m in [MassVector::equal(3), random_masses(&mut r, 3)] {
        let chart = CircleChart::new(&m).unwrap();
        for k in 0..1000 {
            let theta = k as f64 * 2.0 * PI / 1000.0 + 1e-3;
            assert!(circular_distance(chart.angle(&chart.point(theta)), theta, 2.0 * PI) < 1e-10);
            assert!(circular_distance(chart.projective_angle(&chart.point(theta)), wrap(theta, PI), PI) < 1e-10);
            let p = chart.projective(theta).unwrap();
            assert!((mass_norm(p.rep(), &m) - 1.0).abs() < 1e-12);
        }
        let w = chart.wall_angles();
        assert_eq!(w.len(), 3);
        for (theta, (i, j)) in &w {
            assert!((0.0..PI).contains(theta));
            let q = chart.point(*theta);
            assert!((q[*i] - q[*j]).abs() < 1e-14);
        }
        assert_eq!(chart.wall_angles_full().len(), 6);
    }
}

#[test]
fn chart_f_bar_is_continuous_at_walls() {
    let m = MassVector::new(vec![1.0, 2.0, 3.0]).unwrap();
    let chart = CircleChart::new(&m).unwrap();
    for alpha in [0.5, 1.0, 2.0] {
        for (theta, _) in chart.wall_angles_full() {
            let on = chart.sample(theta, alpha).unwrap();
            assert!(on.is_wall && on.f.is_none());
            let left = chart.sample(theta - 1e-7, alpha).unwrap();
            let right = chart.sample(theta + 1e-7, alpha).unwrap();
            assert!(!left.is_wall && !right.is_wall);
            assert_ne!(left.component, right.component);
            assert!(circular_distance(left.fbar, right.fbar, PI) < 1e-6);
            assert!(circular_distance(left.fbar, on.fbar, PI) < 1e-6);
            let jump = circular_distance(left.f.unwrap(), right.f.unwrap(), 2.0 * PI);
            assert!((jump - PI).abs() < 1e-6, "f jump {jump}");
        }
    }
}

#[test]
fn chart_f_bar_is_smooth_inside_components() {
    let m = MassVector::new(vec![0.5, 1.0, 2.0]).unwrap();
    let chart = CircleChart::new(&m).unwrap();
    let walls: Vec<f64> = chart.wall_angles_full().iter().map(|w| w.0).collect();
    let h = 1e-3;
    let mut worst: f64 = 0.0;
    for k in 0..6000 {
        let theta = k as f64 * 2.0 * PI / 6000.0;
        if walls.iter().any(|w| circular_distance(*w, theta, 2.0 * PI) < 0.05) {
            continue;
        }
        let f = |t: f64| chart.sample(t, 1.0).unwrap().fbar;
        let (a, b, c) = (f(theta - h), f(theta), f(theta + h));
        // unwrap mod pi around the middle value
        let lift = |x: f64| b + (wrap(x - b + PI / 2.0, PI) - PI / 2.0);
        worst = worst.max(((lift(a) - 2.0 * b + lift(c)) / (h * h)).abs());
    }
    assert!(worst.is_finite() && worst < 1e4, "second difference {worst}");
}
