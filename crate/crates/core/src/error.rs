use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("particles {i} and {j} collide (relative separation {separation:e})")]
    Collision { i: usize, j: usize, separation: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("positions are not strictly decreasing at index {0}")]
    NotOrdered(usize),

    #[error("point lies on a collision wall; request the wall limit explicitly")]
    OnCollisionWall,

    #[error("particles {0} and {1} are not adjacent in the given ordering")]
    InvalidWall(usize, usize),

    #[error("no convergence after {iterations} iterations (best residual {best_residual:e})")]
    NonConvergence { iterations: usize, best_residual: f64 },

    #[error("iteration approached a collision (relative gap {gap:e})")]
    CollisionDivergence { gap: f64 },

    #[error("degenerate critical point: eigenvalue near zero")]
    DegenerateCriticalPoint { eigenvalues: Vec<f64> },

    #[error("linear program failed numerically after {iterations} iterations")]
    LpNumericalFailure { iterations: usize },

    #[error("rank-deficient system (smallest relative singular value {0:e})")]
    RankDeficient(f64),
}
