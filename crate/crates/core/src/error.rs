use num_bigint::BigUint;

/// Errors shared across the construction, word, verification and counting layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} has order {order}, above the size cap {cap}")]
    SizeCap {
        what: String,
        order: BigUint,
        cap: u64,
    },

    #[error("acting-matrix search exhausted after {attempts} attempts for (a={a}, r={r}, k={k})")]
    SearchExhausted {
        a: u32,
        r: u32,
        k: usize,
        attempts: u64,
    },

    #[error("subgroup closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("mismatched operands: {0}")]
    OperandMismatch(String),

    #[error("context fingerprint mismatch: word carries {found}, context is {expected}")]
    FingerprintMismatch { expected: String, found: String },

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
