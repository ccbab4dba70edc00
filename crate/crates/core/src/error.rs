use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed ring definition: {0}")]
    MalformedSpec(String),
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("unit vector fails the unit law on basis element {0}")]
    BadUnit(usize),
    #[error("characteristic {0} is not a prime power")]
    CharNotPrimePower(u64),
    #[error("modules live over different rings")]
    RingMismatch,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not a submodule of the given module")]
    NotASubmodule,
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("suite {suite} is not applicable to ring {ring}: {reason}")]
    InapplicableSuite {
        suite: String,
        ring: String,
        reason: String,
    },
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("unknown selector {0}")]
    UnknownSelector(String),
    #[error("cache version mismatch: {0}")]
    VersionMismatch(String),
    #[error("i/o failure: {0}")]
    IoFailure(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
