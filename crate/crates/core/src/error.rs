use thiserror::Error;

/// Errors raised by the library. Non-admissible labels passed to value
/// functions are not errors: those functions return zero instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("labels {0} are not admissible")]
    NotAdmissible(String),

    #[error("labels {labels} are not admissible at level kappa = {kappa}")]
    NotQAdmissible { labels: String, kappa: u32 },

    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("expected an even argument, got {0}")]
    OddArgument(u32),

    #[error("spin {0} is not an integer")]
    NonIntegerSpin(String),

    #[error("asymptotic estimate undefined: triple {0} has a vanishing internal variable")]
    Degenerate(String),

    #[error("quotient is not an integer: {0}")]
    NonIntegral(String),

    #[error("matrix is singular")]
    Singular,

    #[error("input exceeds the supported size: {0}")]
    SizeLimit(String),

    #[error("numerically unstable evaluation: {0}")]
    NumericInstability(String),

    #[error("root of unity needs kappa >= 2, got {0}")]
    InvalidKappa(u32),

    #[error("Regge image of {0} is not an admissible tetrahedron")]
    ReggeViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
