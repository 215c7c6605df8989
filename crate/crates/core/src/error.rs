use thiserror::Error;

/// Error type shared by every subsystem of the pipeline.
#[derive(Debug, Error)]
pub enum GaitError {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("empty foreground: silhouette has no white pixels")]
    EmptyForeground,

    #[error("empty sequence: {0}")]
    EmptySequence(String),

    #[error("selector matched nothing: {0}")]
    EmptySelection(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, GaitError>;

impl GaitError {
    pub fn shape(msg: impl Into<String>) -> Self {
        GaitError::Shape(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        GaitError::Config(msg.into())
    }
}
