//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VlaError {
    #[error("unknown word in text: {0:?}")]
    UnknownWord(String),

    #[error("token sequence overflow: {len} tokens exceeds max_seq_len {max} ({context})")]
    SequenceOverflow {
        len: usize,
        max: usize,
        context: String,
    },

    #[error("vocabulary mismatch: {0}")]
    VocabMismatch(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(String),

    #[error("dataset error: {0}")]
    Dataset(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("stage ordering violation: {0}")]
    StageOrder(String),

    #[error("frozen parameter changed: {0}")]
    FrozenParamChanged(String),

    #[error("invariant failed: {0}")]
    Invariant(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, VlaError>;
