mod common;

use ccfix_core::geometry::{
    mass_inner, mass_norm, mutual_matrix, normalize_to_sphere, project_translations, Configuration, MassVector,
};
use ccfix_core::potential::{euclidean_gradient, f_map, f_map_mutual, hessian, lambda_of, mass_gradient, potential};
use common::{random_config, random_masses, rel_err, rng};
use proptest::prelude::*;

fn fd_gradient(cfg: &Configuration, m: &MassVector, alpha: f64, h: f64) -> Vec<f64> {
    let base = cfg.as_slice().to_vec();
    (0..base.len())
        .map(|k| {
            let mut p = base.clone();
            let mut q = base.clone();
            p[k] += h;
            q[k] -= h;
            let up = potential(&Configuration::new(cfg.n(), cfg.d(), p).unwrap(), m, alpha).unwrap();
            let um = potential(&Configuration::new(cfg.n(), cfg.d(), q).unwrap(), m, alpha).unwrap();
            (up - um) / (2.0 * h)
        })
        .collect()
}

fn fd_hessian(cfg: &Configuration, m: &MassVector, alpha: f64, h: f64) -> Vec<f64> {
    let base = cfg.as_slice().to_vec();
    let k = base.len();
    let mut out = vec![0.0; k * k];
    for c in 0..k {
        let mut p = base.clone();
        let mut q = base.clone();
        p[c] += h;
        q[c] -= h;
        let gp = euclidean_gradient(&Configuration::new(cfg.n(), cfg.d(), p).unwrap(), m, alpha).unwrap();
        let gm = euclidean_gradient(&Configuration::new(cfg.n(), cfg.d(), q).unwrap(), m, alpha).unwrap();
        for r in 0..k {
            out[r * k + c] = (gp[r] - gm[r]) / (2.0 * h);
        }
    }
    out
}

#[test]
fn gradient_and_hessian_match_finite_differences() {
    let mut r = rng(3);
    let mut worst_g: f64 = 0.0;
    let mut worst_h: f64 = 0.0;
    for trial in 0..100 {
        let n = [3, 4, 5][trial % 3];
        let d = 1 + (trial / 3) % 2;
        let alpha = [0.5, 1.0, 2.0][(trial / 6) % 3];
        let cfg = random_config(&mut r, n, d);
        let m = random_masses(&mut r, n);
        let g = euclidean_gradient(&cfg, &m, alpha).unwrap();
        worst_g = worst_g.max(rel_err(&fd_gradient(&cfg, &m, alpha, 1e-5), &g));
        let h = hessian(&cfg, &m, alpha).unwrap();
        worst_h = worst_h.max(rel_err(&fd_hessian(&cfg, &m, alpha, 1e-5), h.as_slice()));
    }
    assert!(worst_g < 1e-6, "gradient relative error {worst_g:e}");
    assert!(worst_h < 1e-5, "hessian relative error {worst_h:e}");
}

#[test]
fn euler_hand_values() {
    let cfg = Configuration::collinear(&[1.0, 0.0, -1.0]).unwrap();
    let m = MassVector::equal(3);
    assert_eq!(potential(&cfg, &m, 1.0).unwrap(), 2.5);
    assert_eq!(euclidean_gradient(&cfg, &m, 1.0).unwrap(), vec![-1.25, 0.0, 1.25]);
    assert_eq!(lambda_of(&cfg, &m, 1.0).unwrap(), -1.25);
    // lambda m_i q_i = dU/dq_i verbatim
    let g = euclidean_gradient(&cfg, &m, 1.0).unwrap();
    for (gi, qi) in g.iter().zip(cfg.as_slice()) {
        assert_eq!(-1.25 * qi, *gi);
    }
    let q = normalize_to_sphere(&cfg, &m).unwrap();
    let f = f_map(&q, &m, 1.0).unwrap();
    for (a, b) in f.iter().zip(q.as_slice()) {
        assert!((a - b).abs() < 1e-15);
    }
}

#[test]
fn mass_gradient_is_metric_dual() {
    let mut r = rng(5);
    for _ in 0..50 {
        let cfg = random_config(&mut r, 4, 2);
        let m = random_masses(&mut r, 4);
        let g = euclidean_gradient(&cfg, &m, 1.0).unwrap();
        let gm = mass_gradient(&cfg, &m, 1.0).unwrap();
        let v: Vec<f64> = (0..8).map(|k| (k as f64 * 0.7).sin()).collect();
        let lhs = mass_inner(&gm, &v, &m);
        let rhs: f64 = g.iter().zip(&v).map(|(a, b)| a * b).sum();
        assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }
}

#[test]
fn hessian_symmetry_and_translation_kernel() {
    let mut r = rng(8);
    for _ in 0..30 {
        let cfg = random_config(&mut r, 5, 2);
        let m = random_masses(&mut r, 5);
        let h = hessian(&cfg, &m, 1.5).unwrap();
        let scale = h.max_abs();
        assert!(h.asymmetry() <= 1e-12 * scale);
        for a in 0..2 {
            let t: Vec<f64> = (0..10).map(|k| if k % 2 == a { 1.0 } else { 0.0 }).collect();
            let ht = h.mul_vec(&t);
            assert!(ht.iter().all(|v| v.abs() <= 1e-10 * scale));
        }
    }
}

fn config_strategy() -> impl Strategy<Value = (Configuration, MassVector, f64)> {
    (3usize..=6, 1usize..=3)
        .prop_flat_map(|(n, d)| {
            (
                prop::collection::vec(-1.0f64..1.0, n * d),
                prop::collection::vec(0.1f64..10.0, n),
                prop::sample::select(vec![0.5, 1.0, 2.0, 3.0]),
                Just((n, d)),
            )
        })
        .prop_filter_map("collision", |(pts, m, alpha, (n, d))| {
            let (sep, _, _) = ccfix_core::geometry::min_relative_separation(&pts, n, d);
            (sep > 1e-3).then(|| (Configuration::new(n, d, pts).unwrap(), MassVector::new(m).unwrap(), alpha))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mutual_matrix_is_skew((cfg, _m, alpha) in config_strategy()) {
        let q = mutual_matrix(&cfg, alpha).unwrap();
        for i in 0..cfg.n() {
            prop_assert!(q.get(i, i).iter().all(|v| *v == 0.0));
            for j in 0..cfg.n() {
                for (a, b) in q.get(i, j).iter().zip(q.get(j, i)) {
                    prop_assert!((a + b).abs() <= 1e-12 * a.abs().max(f64::MIN_POSITIVE));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mutual_matrix_homogeneity((cfg, _m, alpha) in config_strategy(), c in 0.1f64..10.0) {
        let q = mutual_matrix(&cfg, alpha).unwrap();
        let qc = mutual_matrix(&cfg.scaled(c).unwrap(), alpha).unwrap();
        let k = c.powf(-(alpha + 1.0));
        for i in 0..cfg.n() {
            for j in 0..cfg.n() {
                // relative to the pair block: a single coordinate difference can cancel
                let scale = qc.get(i, j).iter().map(|v| v * v).sum::<f64>().sqrt();
                for (a, b) in q.get(i, j).iter().zip(qc.get(i, j)) {
                    prop_assert!((k * a - b).abs() <= 1e-10 * scale.max(1e-300));
                }
            }
        }
    }

    #[test]
    fn euler_identity((cfg, m, alpha) in config_strategy()) {
        let g = euclidean_gradient(&cfg, &m, alpha).unwrap();
        let u = potential(&cfg, &m, alpha).unwrap();
        let lhs: f64 = g.iter().zip(cfg.as_slice()).map(|(a, b)| a * b).sum();
        prop_assert!((lhs + alpha * u).abs() <= 1e-10 * alpha * u);
        let gm = mass_gradient(&cfg, &m, alpha).unwrap();
        prop_assert!((mass_inner(cfg.as_slice(), &gm, &m) + alpha * u).abs() <= 1e-10 * alpha * u);
    }

    #[test]
    fn two_forms_of_f_agree((cfg, m, alpha) in config_strategy()) {
        let a = f_map(&cfg, &m, alpha).unwrap();
        let b = f_map_mutual(&cfg, &m, alpha).unwrap();
        prop_assert!(common::max_abs_diff(&a, &b) <= 1e-12);
        prop_assert!((mass_norm(&a, &m) - 1.0).abs() <= 1e-12);
        let d = cfg.d();
        for c in 0..d {
            let centroid: f64 = (0..cfg.n()).map(|i| m.as_slice()[i] * a[i * d + c]).sum();
            prop_assert!(centroid.abs() <= 1e-12 * m.total());
        }
    }

    #[test]
    fn f_is_translation_and_scale_invariant((cfg, m, alpha) in config_strategy(), c in 0.2f64..5.0, s in -3.0f64..3.0) {
        let f = f_map(&cfg, &m, alpha).unwrap();
        let shift = vec![s; cfg.d()];
        let moved = cfg.translated(&shift).unwrap().scaled(c).unwrap();
        let g = f_map(&moved, &m, alpha).unwrap();
        prop_assert!(common::max_abs_diff(&f, &g) <= 1e-10);
    }

    #[test]
    fn lambda_homogeneity((cfg, m, alpha) in config_strategy(), c in 0.2f64..5.0) {
        let l = lambda_of(&cfg, &m, alpha).unwrap();
        prop_assert!(l < 0.0);
        let lc = lambda_of(&cfg.scaled(c).unwrap(), &m, alpha).unwrap();
        prop_assert!((lc - c.powf(-(alpha + 2.0)) * l).abs() <= 1e-10 * lc.abs());
    }

    #[test]
    fn centering_kills_the_diagonal((cfg, m, _alpha) in config_strategy()) {
        let p = project_translations(&cfg, &m).unwrap();
        let d = cfg.d();
        for c in 0..d {
            let diag: Vec<f64> = (0..cfg.n() * d).map(|k| if k % d == c { 1.0 } else { 0.0 }).collect();
            prop_assert!(mass_inner(p.as_slice(), &diag, &m).abs() <= 1e-12 * mass_norm(p.as_slice(), &m).max(1.0) * m.total());
        }
        let again = project_translations(&p, &m).unwrap();
        prop_assert!(common::max_abs_diff(p.as_slice(), again.as_slice()) <= 1e-14);
    }
}
