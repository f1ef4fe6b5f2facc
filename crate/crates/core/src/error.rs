use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LandeError {
    #[error("matrix is not Hermitian (max |m - m^dagger| = {deviation:e}, tolerance {tolerance:e})")]
    NonHermitian { deviation: f64, tolerance: f64 },

    #[error("invalid direction: {0}")]
    InvalidDirection(String),

    #[error("invalid observable: {0}")]
    InvalidObservable(String),

    #[error("case mismatch: {0}")]
    CaseMismatch(String),

    #[error("invalid chain spec: {0}")]
    InvalidSpec(String),

    #[error("invalid tolerance {0:?}: expected a finite non-negative decimal")]
    InvalidTolerance(String),
}
