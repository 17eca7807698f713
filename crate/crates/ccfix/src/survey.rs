//! Seeded feasibility surveys of the inverse problem.

use ccfix_core::inverse::{psi_contains, psi_vertices, solve_masses, POS_TOL};
use ccfix_core::lp::LP_TOL;
use ccfix_core::GapPoint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Smallest gap kept by the sampler.
pub const GAP_FLOOR: f64 = 1e-4;

/// Uniform (Dirichlet(1)) point of the open simplex with every gap at least
/// [`GAP_FLOOR`]; draws below the floor are rejected.
pub fn sample_gaps<R: Rng>(rng: &mut R, n: usize) -> GapPoint {
    loop {
        let e: Vec<f64> = (0..n - 1).map(|_| rng.sample::<f64, _>(Exp1)).collect();
        let total: f64 = e.iter().sum();
        let x: Vec<f64> = e.iter().map(|v| v / total).collect();
        if x.iter().all(|v| *v >= GAP_FLOOR) {
            if let Ok(g) = GapPoint::new(x) {
                return g;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaSummary {
    pub alpha: f64,
    pub count: usize,
    /// Samples with `x` in `psi(x)`.
    pub psi_inside: usize,
    /// Samples with strictly positive masses.
    pub feasible: usize,
    /// Samples with non-negative masses.
    pub feasible_relaxed: usize,
    /// Samples where hull membership and the non-negative mass LP disagree.
    pub disagreements: usize,
    pub feasibility_rate: f64,
    /// Smallest LP margin over the feasible samples.
    pub min_margin: Option<f64>,
    /// Largest mass residual over the feasible samples.
    pub max_residual: Option<f64>,
    /// Smallest facet conditioning; tiny values flag non-general position.
    pub min_conditioning: Option<f64>,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub n: usize,
    pub seed: u64,
    pub count: usize,
    pub gap_floor: f64,
    pub results: Vec<AlphaSummary>,
}

fn fold_min(acc: Option<f64>, v: f64) -> Option<f64> {
    Some(acc.map_or(v, |a| a.min(v)))
}

fn fold_max(acc: Option<f64>, v: f64) -> Option<f64> {
    Some(acc.map_or(v, |a| a.max(v)))
}

/// Every alpha sees the same sample points: the generator is reseeded per
/// alpha.
pub fn survey(n: usize, alphas: &[f64], count: usize, seed: u64) -> Result<SurveyReport> {
    if !(3..=6).contains(&n) {
        return Err(CliError::Usage(format!("survey needs 3 <= n <= 6, got {n}")));
    }
    let mut results = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s = AlphaSummary {
            alpha,
            count,
            psi_inside: 0,
            feasible: 0,
            feasible_relaxed: 0,
            disagreements: 0,
            feasibility_rate: 0.0,
            min_margin: None,
            max_residual: None,
            min_conditioning: None,
            errors: 0,
        };
        for _ in 0..count {
            let x = sample_gaps(&mut rng, n);
            let outcome = (|| -> ccfix_core::Result<_> {
                let inside = psi_contains(&x, alpha, LP_TOL)?.inside;
                let relaxed = solve_masses(&x, alpha, 0.0)?;
                let strict = solve_masses(&x, alpha, POS_TOL)?;
                let cond = psi_vertices(&x, alpha)?.facet_conditioning();
                Ok((inside, relaxed, strict, cond))
            })();
            let (inside, relaxed, strict, cond) = match outcome {
                Ok(v) => v,
                Err(e) => {
                    log::warn!("alpha {alpha}, x {:?}: {e}", x.as_slice());
                    s.errors += 1;
                    continue;
                }
            };
            s.psi_inside += inside as usize;
            s.feasible_relaxed += relaxed.is_feasible() as usize;
            if inside != relaxed.is_feasible() {
                log::warn!("alpha {alpha}, x {:?}: hull and mass LP disagree", x.as_slice());
                s.disagreements += 1;
            }
            if let Some(sol) = strict.solution() {
                s.feasible += 1;
                s.min_margin = fold_min(s.min_margin, sol.margin);
                s.max_residual = fold_max(s.max_residual, sol.residual);
            }
            s.min_conditioning = fold_min(s.min_conditioning, cond);
        }
        s.feasibility_rate = if count == 0 { 0.0 } else { s.feasible as f64 / count as f64 };
        log::info!("n {n}, alpha {alpha}: {}/{count} feasible", s.feasible);
        results.push(s);
    }
    Ok(SurveyReport { n, seed, count, gap_floor: GAP_FLOOR, results })
}
