use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
    #[error(transparent)]
    Core(#[from] ccfix_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 0 success, 1 numerical failure, 2 usage or validation error.
    pub fn exit_code(&self) -> u8 {
        use ccfix_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Json(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 1,
            CliError::Core(e) => match e {
                E::InvalidInput(_)
                | E::DimensionMismatch { .. }
                | E::Collision { .. }
                | E::Degenerate(_)
                | E::NotOrdered(_)
                | E::OnCollisionWall
                | E::InvalidWall(..) => 2,
                E::NonConvergence { .. }
                | E::CollisionDivergence { .. }
                | E::DegenerateCriticalPoint { .. }
                | E::LpNumericalFailure { .. }
                | E::RankDeficient(_) => 1,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
