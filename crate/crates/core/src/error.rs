use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not unitary (max |U†U - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("shift moves coin {coin} off the open line at position {position}")]
    BoundaryViolation { coin: u8, position: usize },

    #[error("invalid coin label {0} (expected 0 or 1)")]
    InvalidCoinLabel(u8),

    #[error("coin map references position {position} but the topology has {size} vertices")]
    PositionOutOfRange { position: usize, size: usize },

    #[error("state is not normalized (norm² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("step {index} failed: {source}")]
    StepFailed {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid boolean function: {0}")]
    InvalidFunction(String),

    #[error("invalid hidden string: {0}")]
    InvalidHiddenString(String),

    #[error("promise violated: function is neither constant nor balanced")]
    PromiseViolation,

    #[error("scheme/topology mismatch: {0}")]
    SchemeMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("coin at position {position} of step {step} has no exact optical lowering")]
    UnsupportedCoin { step: usize, position: usize },

    #[error("segment '{label}' does not implement its declared position Hadamard")]
    SegmentMismatch { label: String },

    #[error("invalid optical circuit: {0}")]
    InvalidCircuit(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
