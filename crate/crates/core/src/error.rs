use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// Exact division left a remainder. Every caller expects an exact quotient,
    /// so this always indicates wrong input data or a defect upstream.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("q-binomial [{n} choose {k}] requires k <= n")]
    BinomialRange { n: usize, k: usize },

    #[error("Laurent polynomial is not symmetric under z <-> 1/z")]
    NotSymmetric,

    #[error("inadmissible parameters for {family}: {reason}")]
    Inadmissible { family: String, reason: String },

    #[error("missing parameter `{0}`")]
    MissingParameter(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("basis expansion failed: {0}")]
    Basis(String),

    #[error("inconsistent mass ratio: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
