use thiserror::Error;

/// Errors surfaced by the numerical operations.
#[derive(Error, Debug)]
pub enum Error {
    #[error("non-convergence: {0}")]
    NonConvergence(String),
    #[error("invalid bracket: target {target} outside [{f_lo}, {f_hi}]")]
    BracketInvalid {
        target: String,
        f_lo: String,
        f_hi: String,
    },
    #[error("bracket expansion failed: {0}")]
    BracketFailure(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("growth-class error: {0}")]
    Class(String),
    #[error("family error: {0}")]
    Family(String),
    #[error("precision loss: {0}")]
    PrecisionLoss(String),
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),
    #[error("series tail too large: {0}")]
    Tail(String),
    #[error("spectral factorization failed: {0}")]
    Factorization(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cache invalid: {0}")]
    CacheInvalid(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
