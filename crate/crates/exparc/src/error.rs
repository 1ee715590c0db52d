use thiserror::Error;

/// Errors for arc construction and the matrix calculus behind it.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("eigensolver did not converge (matrix norm {norm:.3e})")]
    NonConvergence { norm: f64 },

    #[error("eigenvalue {value:.3e} at index {index} is negative beyond tolerance {tolerance:.3e}")]
    NegativeEigenvalue {
        index: usize,
        value: f64,
        tolerance: f64,
    },

    #[error("singular support: zero eigenvalue at index {index} has no logarithm")]
    SingularSupport { index: usize },

    #[error("matrix is numerically singular (eigenvalue {value:.3e} within the clip band {band:.3e}) and the support policy rejects it")]
    NumericallySingular { value: f64, band: f64 },

    #[error("reference state is not faithful: component {index} is {value:.3e}")]
    NotFaithful { index: usize, value: f64 },

    #[error("degenerate arc: the weighted eigenvalue sum vanishes at t = {t}")]
    DegenerateArc { t: f64 },

    #[error("derivative diverges at t = {t}: zero eigenvalue carries weight {weight:.3e}")]
    DivergentDerivative { t: f64, weight: f64 },

    #[error("arc is not invertible: eigenvalue 0 carries weight {weight:.3e}")]
    NotInvertible { weight: f64 },

    #[error("arc cannot be extended beyond [0,1]: {reason}")]
    NotExtendable { reason: String },

    #[error("tangent generator undefined: target component {index} is zero")]
    GeneratorUndefined { index: usize },

    #[error("infinite divergence: p[{index}] = {p:.3e} > 0 but q[{index}] = 0")]
    SupportViolation { index: usize, p: f64 },

    #[error("vector is not in the cone: {reason}")]
    NotInCone { reason: String },

    #[error("parameter {name} = {value} outside domain {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
