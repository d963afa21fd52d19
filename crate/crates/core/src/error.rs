//! Error type shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid camera pose: {0}")]
    InvalidPose(String),
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("anchor poses are degenerate: view directions {separation:.3e} rad apart")]
    DegenerateAnchors { separation: f64 },
    #[error("cannot select {requested} distinct frames from {available}")]
    InsufficientFrames { requested: usize, available: usize },
    #[error("duplicate anchor yaw {yaw}")]
    DuplicateYaw { yaw: f64 },
    #[error("target sequence is empty")]
    EmptyTargets,
    #[error("feature embedding has zero norm")]
    ZeroNormEmbedding,
    #[error("image side {side} below minimum {min} for the scale pyramid")]
    ImageTooSmall { side: usize, min: usize },
    #[error("PCA needs more samples than components: {num_samples} <= {k}")]
    InsufficientSamples { num_samples: usize, k: usize },
    #[error("component index {index} out of range for basis of size {k}")]
    ComponentOutOfRange { index: usize, k: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("missing report under {0}")]
    MissingReport(PathBuf),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("image i/o: {0}")]
    Image(#[from] image::ImageError),
}

impl Error {
    /// Process exit code for the CLI: 2 config, 3 data, 4 numerical, 1 other.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_)
            | Error::ComponentOutOfRange { .. }
            | Error::InsufficientSamples { .. } => 2,
            Error::Data(_)
            | Error::Io(_)
            | Error::Json(_)
            | Error::Image(_)
            | Error::MissingReport(_) => 3,
            Error::Numerical(_) => 4,
            _ => 1,
        }
    }
}
