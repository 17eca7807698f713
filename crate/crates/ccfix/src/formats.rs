//! JSON documents and CSV helpers.
//!
//! Floats in CSV are written with 17 significant digits in scientific
//! notation, so every value reads back to the same double.

use std::fmt::Write as _;

use ccfix_core::inverse::{MassOutcome, N3Family};
use ccfix_core::lp::HullMembership;
use ccfix_core::{CentralConfigCertificate, Configuration, GapPoint, IndexReport, MassVector, OrderingComponent};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub n: usize,
    pub d: usize,
    pub points: Vec<Vec<f64>>,
}

impl From<&Configuration> for ConfigurationJson {
    fn from(c: &Configuration) -> Self {
        Self { n: c.n(), d: c.d(), points: (0..c.n()).map(|i| c.point(i).to_vec()).collect() }
    }
}

impl TryFrom<&ConfigurationJson> for Configuration {
    type Error = CliError;

    fn try_from(c: &ConfigurationJson) -> Result<Self> {
        if c.points.len() != c.n || c.points.iter().any(|p| p.len() != c.d) {
            return Err(CliError::Usage(format!("configuration must list {} points of dimension {}", c.n, c.d)));
        }
        Ok(Configuration::new(c.n, c.d, c.points.concat())?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassVectorJson {
    pub m: Vec<f64>,
}

impl From<&MassVector> for MassVectorJson {
    fn from(m: &MassVector) -> Self {
        Self { m: m.as_slice().to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapPointJson {
    pub x: Vec<f64>,
}

impl From<&GapPoint> for GapPointJson {
    fn from(g: &GapPoint) -> Self {
        Self { x: g.as_slice().to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub cfg: ConfigurationJson,
    pub lambda: f64,
    pub residual: f64,
}

impl From<&CentralConfigCertificate> for CertificateJson {
    fn from(c: &CentralConfigCertificate) -> Self {
        Self { cfg: (&c.cfg).into(), lambda: c.lambda, residual: c.residual }
    }
}

/// Index data of one collinear central configuration. `mu` and `fp_index`
/// are null when the critical point is degenerate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexReportJson {
    /// 1-based labels, from the largest coordinate down.
    pub ordering: Vec<usize>,
    /// Normalized gaps along `ordering`.
    pub gaps: Vec<f64>,
    pub certificate: CertificateJson,
    pub mu: Option<usize>,
    pub fp_index: Option<i32>,
    pub eigenvalues: Vec<f64>,
}

impl IndexReportJson {
    /// `index` is the Morse data, or the spectrum of a degenerate critical
    /// point.
    pub fn new(
        ordering: &OrderingComponent,
        cert: &CentralConfigCertificate,
        index: std::result::Result<&IndexReport, Vec<f64>>,
    ) -> Self {
        let q = cert.cfg.as_slice();
        let raw: Vec<f64> = ordering.perm().windows(2).map(|w| q[w[0]] - q[w[1]]).collect();
        let span: f64 = raw.iter().sum();
        let (mu, fp_index, eigenvalues) = match index {
            Ok(r) => (Some(r.mu), Some(r.fp_index), r.eigenvalues.clone()),
            Err(eigenvalues) => (None, None, eigenvalues),
        };
        Self {
            ordering: ordering.one_based(),
            gaps: raw.iter().map(|g| g / span).collect(),
            certificate: cert.into(),
            mu,
            fp_index,
            eigenvalues,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub particular: [f64; 3],
    pub direction: [f64; 3],
    /// Open parameter interval with all masses positive; endpoints may be
    /// infinite (written as null).
    pub positive: Option<(Option<f64>, Option<f64>)>,
}

impl From<&N3Family> for FamilyJson {
    fn from(f: &N3Family) -> Self {
        let finite = |v: f64| v.is_finite().then_some(v);
        Self {
            particular: f.particular,
            direction: f.direction,
            positive: f.positive.map(|(a, b)| (finite(a), finite(b))),
        }
    }
}

/// Answer of the inverse query at one gap point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InverseReportJson {
    pub x: Vec<f64>,
    pub alpha: f64,
    pub feasible: bool,
    pub m: Option<Vec<f64>>,
    pub scale: Option<f64>,
    pub residual: Option<f64>,
    /// Smallest direction weight of the LP optimum; null when even
    /// non-negative masses fail.
    pub margin: Option<f64>,
    pub psi_contains: bool,
    pub hull_coefficients: Vec<f64>,
    pub psi_vertices: Vec<Vec<f64>>,
    /// Full real solution family, three bodies only.
    pub family: Option<FamilyJson>,
}

impl InverseReportJson {
    pub fn new(
        x: &GapPoint,
        alpha: f64,
        outcome: &MassOutcome,
        hull: &HullMembership,
        vertices: Vec<Vec<f64>>,
        family: Option<&N3Family>,
    ) -> Self {
        let (m, scale, residual, margin) = match outcome {
            MassOutcome::Feasible(s) => (Some(s.m.clone()), Some(s.scale), Some(s.residual), Some(s.margin)),
            MassOutcome::Infeasible { margin } => (None, None, None, *margin),
        };
        Self {
            x: x.as_slice().to_vec(),
            alpha,
            feasible: outcome.is_feasible(),
            m,
            scale,
            residual,
            margin,
            psi_contains: hull.inside,
            hull_coefficients: hull.coefficients.clone(),
            psi_vertices: vertices,
            family: family.map(Into::into),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// `{:.16e}`: 17 significant digits; empty for a missing value.
pub fn csv_float(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x:.16e}"),
        None => String::new(),
    }
}

/// Header line plus one line per row.
pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_doubles() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE] {
            let s = csv_float(Some(v));
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
        assert_eq!(csv_float(None), "");
        assert_eq!(csv_float(Some(1.0)), "1.0000000000000000e0");
    }

    #[test]
    fn configuration_json_shape() {
        let c = Configuration::new(3, 2, vec![0.0, 0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        let j = ConfigurationJson::from(&c);
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"n":3,"d":2,"points":[[0.0,0.0],[1.0,0.0],[0.0,1.0]]}"#);
        assert_eq!(Configuration::try_from(&j).unwrap(), c);
        let bad = ConfigurationJson { n: 3, d: 2, points: vec![vec![0.0, 0.0]] };
        assert!(Configuration::try_from(&bad).is_err());
    }
}
