use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong between a raster and a classification report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("EmptyMask: the mask contains no foreground pixels")]
    EmptyMask,
    #[error("DegenerateComponent: largest component yields only {0} boundary points")]
    DegenerateComponent(usize),
    #[error("InvalidMask: {0}")]
    InvalidMask(String),
    #[error("TooFewPoints: need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("ZeroArea: boundary points are collinear")]
    ZeroArea,
    #[error("ZeroPerimeter: boundary has zero length")]
    ZeroPerimeter,
    #[error("ZeroLengthChord: chord endpoints coincide")]
    ZeroLengthChord,
    #[error("ZeroLengthArm: vertex coincides with a neighbor")]
    ZeroLengthArm,
    #[error("InvalidConfig: {0}")]
    InvalidConfig(String),
    #[error("Parse error in {path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("UnsupportedFormat: {0}")]
    UnsupportedFormat(PathBuf),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("EmptyPool: nearest-neighbor pool is empty")]
    EmptyPool,
    #[error("EmptyDataset: no shape could be loaded from {0}")]
    EmptyDataset(PathBuf),
    #[error("TooFewShapes: leave-one-out needs at least 2 shapes, got {0}")]
    TooFewShapes(usize),
    #[error("SingleClass: leave-one-out needs at least 2 classes")]
    SingleClass,
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors raised by reading or decoding input files, as opposed
    /// to geometric failures inside the pipeline.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Parse { .. } | Error::UnsupportedFormat(_)
        )
    }

    /// True for dataset-level failures (nothing to evaluate).
    pub fn is_dataset_error(&self) -> bool {
        matches!(
            self,
            Error::EmptyDataset(_) | Error::TooFewShapes(_) | Error::SingleClass | Error::EmptyPool
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
