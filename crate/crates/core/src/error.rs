use thiserror::Error;

/// Errors surfaced by the toolkit.
///
/// `ConsistencyFailure` is reserved for situations where two independent
/// computations of the same quantity disagree; it indicates a bug or a
/// falsified identity, never bad user input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system: {0}")]
    UnsupportedRootSystem(String),
    #[error("variable index {index} out of range for {nvars} variables")]
    VarIndexOutOfRange { index: usize, nvars: usize },
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("expected a homogeneous polynomial of degree {expected}, got `{poly}`")]
    Inhomogeneous { expected: usize, poly: String },
    #[error("not a lower ideal: contains {beta} but not {alpha} \u{2264} {beta}")]
    NotDownwardClosed { alpha: String, beta: String },
    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),
    #[error("{what} ({actual}) exceeds the configured bound ({max})")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        max: usize,
    },
    #[error("not a positive root: {0}")]
    NotARoot(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
