//! Command-line surface.

use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "ccfix", version, about = "Central configurations as projective fixed points, and the inverse collinear problem")]
pub struct Cli {
    /// Homogeneity exponent of the pair potential 1/r^alpha.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub alpha: f64,
    /// Convergence tolerance, in (0, 1e-4).
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Collinear central configurations with their Morse indices.
    Solve {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        masses: Vec<f64>,
        /// Bodies from the largest coordinate down, labelled from 1.
        #[arg(long, value_delimiter = ',')]
        ordering: Option<Vec<usize>>,
    },
    /// One central configuration per ordering class, with any failures.
    Enumerate {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        masses: Vec<f64>,
    },
    /// Positive masses making a collinear configuration central.
    #[command(group(ArgGroup::new("point").required(true)))]
    Inverse {
        /// Gaps x1..x_{n-1}, summing to 1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, group = "point")]
        gaps: Option<Vec<f64>>,
        /// Strictly decreasing collinear positions.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, group = "point")]
        positions: Option<Vec<f64>>,
        /// JSON file holding {"x": [...]} or a collinear configuration.
        #[arg(long, group = "point")]
        input: Option<PathBuf>,
    },
    /// Vertices of the hull psi(x).
    Psi {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        gaps: Vec<f64>,
    },
    /// Circle maps f and f_bar of three collinear bodies.
    Fig1 {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,1,1")]
        masses: Vec<f64>,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
    /// The three maps bounding psi for three bodies.
    Fig2 {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Feasibility of the inverse problem on random gap points.
    Survey {
        #[arg(long)]
        n: usize,
        /// Exponents to survey; defaults to --alpha.
        #[arg(long, value_delimiter = ',')]
        alphas: Option<Vec<f64>>,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
