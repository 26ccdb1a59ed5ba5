//! Exact construction of Askey-scheme orthogonal polynomials through raising
//! operators, with residual checks for Burchnall-type operational formulas,
//! expansion identities and explicit Toda lattice solutions.

pub mod algebra;
pub mod burchnall;
pub mod cli;
pub mod error;
pub mod families;
pub mod functional;
pub mod ops;
pub mod toda;

pub use error::{Error, Result};
