//! Central configurations of the n-body problem as projective fixed points
//! of the normalized gradient map, and the inverse collinear problem solved
//! through a simplex-valued map and linear feasibility.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, the command
//! line and seeded surveys live in the `ccfix` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod geometry;
pub mod inverse;
pub mod linalg;
pub mod lp;
pub mod potential;
pub mod projective;
pub mod simplex;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{Configuration, MassVector, MutualMatrix, COLLISION_EPS};
pub use inverse::{MassSolution, PsiImage, YMatrix};
pub use lp::{LinearProgram, LpResult, LpStatus};
pub use projective::ProjectivePoint;
pub use simplex::GapPoint;
pub use potential::CentralConfigCertificate;
pub use solver::{IndexReport, OrderingComponent};
