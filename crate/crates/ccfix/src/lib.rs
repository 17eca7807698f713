//! Command-line front end of `ccfix-core`: JSON and CSV formats, figure
//! tables and seeded surveys.

pub mod cli;
pub mod error;
pub mod figures;
pub mod formats;
pub mod survey;

use std::path::Path;

use ccfix_core::inverse::{n3_parametric_oracle, psi_contains, psi_vertices, solve_masses, POS_TOL};
use ccfix_core::lp::LP_TOL;
use ccfix_core::simplex::to_gaps_positions;
use ccfix_core::solver::{enumerate_collinear, morse_index, solve_component_default, Enumeration};
use ccfix_core::{CentralConfigCertificate, Configuration, GapPoint, MassVector, OrderingComponent};
use serde::{Deserialize, Serialize};

pub use cli::{Cli, Command, Format};
pub use error::{CliError, Result};
use formats::{csv_float, csv_table, to_json, ConfigurationJson, GapPointJson, IndexReportJson, InverseReportJson};

/// Tolerance on the sum of gaps given on the command line; the gaps are
/// renormalized afterwards.
pub const GAP_SUM_TOL: f64 = 1e-6;

/// Text produced by a command. `failure` is set when the command printed
/// partial results but must still exit non-zero.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub failure: Option<CliError>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Self { text, failure: None }
    }
}

fn check_run_config(cli: &Cli) -> Result<()> {
    if !(cli.alpha > 0.0 && cli.alpha.is_finite()) {
        return Err(CliError::Usage(format!("--alpha must be positive, got {}", cli.alpha)));
    }
    if !(cli.tol > 0.0 && cli.tol < 1e-4) {
        return Err(CliError::Usage(format!("--tol must lie in (0, 1e-4), got {}", cli.tol)));
    }
    Ok(())
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = cli.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(CliError::Usage(format!("this command cannot write {f:?}")));
    }
    Ok(f)
}

fn masses_of(m: &[f64]) -> Result<MassVector> {
    if m.len() < 3 {
        return Err(CliError::Usage(format!("need at least 3 masses, got {}", m.len())));
    }
    Ok(MassVector::new(m.to_vec())?)
}

fn gaps_of(raw: &[f64]) -> Result<GapPoint> {
    let sum: f64 = raw.iter().sum();
    if !((sum - 1.0).abs() <= GAP_SUM_TOL) {
        return Err(CliError::Usage(format!("gaps must sum to 1, got {sum}")));
    }
    let x = GapPoint::normalized(raw)?;
    if !x.is_interior() {
        return Err(ccfix_core::Error::OnCollisionWall.into());
    }
    Ok(x)
}

fn report(
    ordering: &OrderingComponent,
    cert: &CentralConfigCertificate,
    masses: &MassVector,
    alpha: f64,
) -> Result<IndexReportJson> {
    match morse_index(cert, masses, alpha) {
        Ok(r) => Ok(IndexReportJson::new(ordering, cert, Ok(&r))),
        Err(ccfix_core::Error::DegenerateCriticalPoint { eigenvalues }) => {
            log::warn!("degenerate critical point in ordering {:?}", ordering.one_based());
            Ok(IndexReportJson::new(ordering, cert, Err(eigenvalues)))
        }
        Err(e) => Err(e.into()),
    }
}

fn enumeration_failure(e: &Enumeration) -> Option<CliError> {
    if e.is_complete() {
        return None;
    }
    let list: Vec<String> = e.failures.iter().map(|f| format!("{:?}: {}", f.ordering.one_based(), f.error)).collect();
    Some(CliError::Numerical(format!("{} ordering(s) failed: {}", list.len(), list.join("; "))))
}

fn cmd_solve(cli: &Cli, masses: &[f64], ordering: Option<&[usize]>) -> Result<Output> {
    format_or(cli, Format::Json, &[Format::Json])?;
    let m = masses_of(masses)?;
    if let Some(labels) = ordering {
        if labels.len() != m.len() {
            return Err(CliError::Usage(format!("ordering has {} labels for {} masses", labels.len(), m.len())));
        }
        let comp = OrderingComponent::from_one_based(labels)?;
        let cert = solve_component_default(&comp, &m, cli.alpha, cli.tol)?;
        return Ok(to_json(&vec![report(&comp, &cert, &m, cli.alpha)?])?.into());
    }
    let e = enumerate_collinear(&m, cli.alpha, cli.tol)?;
    let reports =
        e.certificates.iter().map(|c| report(&c.ordering, &c.certificate, &m, cli.alpha)).collect::<Result<Vec<_>>>()?;
    Ok(Output { text: to_json(&reports)?, failure: enumeration_failure(&e) })
}

#[derive(Debug, Serialize)]
struct FailureJson {
    ordering: Vec<usize>,
    error: String,
}

#[derive(Debug, Serialize)]
struct EnumerationJson {
    n: usize,
    alpha: f64,
    masses: Vec<f64>,
    classes: usize,
    count: usize,
    reports: Vec<IndexReportJson>,
    failures: Vec<FailureJson>,
}

fn cmd_enumerate(cli: &Cli, masses: &[f64]) -> Result<Output> {
    format_or(cli, Format::Json, &[Format::Json])?;
    let m = masses_of(masses)?;
    let e = enumerate_collinear(&m, cli.alpha, cli.tol)?;
    let reports =
        e.certificates.iter().map(|c| report(&c.ordering, &c.certificate, &m, cli.alpha)).collect::<Result<Vec<_>>>()?;
    let doc = EnumerationJson {
        n: m.len(),
        alpha: cli.alpha,
        masses: m.as_slice().to_vec(),
        classes: OrderingComponent::projective_classes(m.len()).len(),
        count: reports.len(),
        reports,
        failures: e
            .failures
            .iter()
            .map(|f| FailureJson { ordering: f.ordering.one_based(), error: f.error.to_string() })
            .collect(),
    };
    Ok(Output { text: to_json(&doc)?, failure: enumeration_failure(&e) })
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum InverseInput {
    Gaps(GapPointJson),
    Configuration(ConfigurationJson),
}

fn read_input(path: &Path) -> Result<GapPoint> {
    let text = std::fs::read_to_string(path)?;
    match serde_json::from_str::<InverseInput>(&text)? {
        InverseInput::Gaps(g) => gaps_of(&g.x),
        InverseInput::Configuration(c) => {
            let cfg = Configuration::try_from(&c)?;
            if cfg.d() != 1 {
                return Err(CliError::Usage("the inverse problem needs a collinear configuration".into()));
            }
            Ok(to_gaps_positions(cfg.as_slice())?)
        }
    }
}

fn inverse_point(gaps: Option<&[f64]>, positions: Option<&[f64]>, input: Option<&Path>) -> Result<GapPoint> {
    match (gaps, positions, input) {
        (Some(g), None, None) => gaps_of(g),
        (None, Some(q), None) => {
            if q.len() < 3 {
                return Err(CliError::Usage("need at least 3 positions".into()));
            }
            Ok(to_gaps_positions(q)?)
        }
        (None, None, Some(p)) => read_input(p),
        _ => Err(CliError::Usage("give exactly one of --gaps, --positions, --input".into())),
    }
}

fn cmd_inverse(cli: &Cli, x: &GapPoint) -> Result<Output> {
    format_or(cli, Format::Json, &[Format::Json])?;
    if x.n() < 3 {
        return Err(CliError::Usage("need at least 3 bodies".into()));
    }
    let outcome = solve_masses(x, cli.alpha, POS_TOL)?;
    let hull = psi_contains(x, cli.alpha, LP_TOL)?;
    let psi = psi_vertices(x, cli.alpha)?;
    let family = if x.n() == 3 { Some(n3_parametric_oracle(x, cli.alpha)?) } else { None };
    let doc = InverseReportJson::new(x, cli.alpha, &outcome, &hull, psi.vertices, family.as_ref());
    Ok(to_json(&doc)?.into())
}

#[derive(Debug, Serialize)]
struct PsiJson {
    x: Vec<f64>,
    alpha: f64,
    vertices: Vec<Vec<f64>>,
    conditioning: f64,
}

fn cmd_psi(cli: &Cli, gaps: &[f64]) -> Result<Output> {
    let format = format_or(cli, Format::Csv, &[Format::Csv, Format::Json])?;
    let x = gaps_of(gaps)?;
    if x.n() < 3 {
        return Err(CliError::Usage("need at least 3 bodies".into()));
    }
    let psi = psi_vertices(&x, cli.alpha)?;
    Ok(match format {
        Format::Json => to_json(&PsiJson {
            x: x.as_slice().to_vec(),
            alpha: cli.alpha,
            conditioning: psi.facet_conditioning(),
            vertices: psi.vertices,
        })?,
        Format::Csv => {
            let names: Vec<String> =
                std::iter::once("vertex".to_string()).chain((1..x.n()).map(|i| format!("x{i}"))).collect();
            let header: Vec<&str> = names.iter().map(String::as_str).collect();
            csv_table(
                &header,
                psi.vertices.iter().enumerate().map(|(j, v)| {
                    std::iter::once((j + 1).to_string()).chain(v.iter().map(|c| csv_float(Some(*c)))).collect()
                }),
            )
        }
    }
    .into())
}

/// Runs one parsed command line and returns what it prints.
pub fn run(cli: &Cli) -> Result<Output> {
    check_run_config(cli)?;
    match &cli.command {
        Command::Solve { masses, ordering } => cmd_solve(cli, masses, ordering.as_deref()),
        Command::Enumerate { masses } => cmd_enumerate(cli, masses),
        Command::Inverse { gaps, positions, input } => {
            let x = inverse_point(gaps.as_deref(), positions.as_deref(), input.as_deref())?;
            cmd_inverse(cli, &x)
        }
        Command::Psi { gaps } => cmd_psi(cli, gaps),
        Command::Fig1 { masses, samples } => {
            format_or(cli, Format::Csv, &[Format::Csv])?;
            if masses.len() != 3 {
                return Err(CliError::Usage("fig1 needs exactly 3 masses".into()));
            }
            if *samples == 0 {
                return Err(CliError::Usage("--samples must be positive".into()));
            }
            let rows = figures::fig1(&masses_of(masses)?, cli.alpha, *samples)?;
            Ok(figures::fig1_csv(&rows).into())
        }
        Command::Fig2 { samples } => {
            format_or(cli, Format::Csv, &[Format::Csv])?;
            if *samples == 0 {
                return Err(CliError::Usage("--samples must be positive".into()));
            }
            Ok(figures::fig2_csv(&figures::fig2(cli.alpha, *samples)?).into())
        }
        Command::Survey { n, alphas, count, seed } => {
            format_or(cli, Format::Json, &[Format::Json])?;
            let alphas = alphas.clone().unwrap_or_else(|| vec![cli.alpha]);
            if alphas.iter().any(|a| !(*a > 0.0 && a.is_finite())) {
                return Err(CliError::Usage("every alpha must be positive".into()));
            }
            Ok(to_json(&survey::survey(*n, &alphas, *count, *seed)?)?.into())
        }
    }
}
