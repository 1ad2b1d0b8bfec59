use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("depolarizing strength q = {0} is outside [0, 1]")]
    InvalidStrength(f64),
    #[error("target dimension d = {0} must be at least 2")]
    InvalidDimension(usize),
    #[error("invalid order probabilities: {0}")]
    InvalidProbabilities(String),
    #[error("order count m = {0} is outside 1..=6")]
    InvalidOrderCount(usize),
    #[error("unknown equivalence class {class} for m = {m}")]
    UnknownClass { m: usize, class: usize },
    #[error("eigenvalue {value:e} is below the clamping tolerance")]
    NegativeEigenvalue { value: f64 },
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("brute-force oracle limited to d <= {max}, requested d = {d}")]
    OracleDimension { d: usize, max: usize },
    #[error("invalid target state: {0}")]
    InvalidTarget(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
