use thiserror::Error;

use crate::index::IndexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("points must have at least one coordinate")]
    ZeroDimension,

    #[error("point {point} has a non-finite coordinate at axis {axis}")]
    NonFiniteCoordinate { point: usize, axis: usize },

    #[error("partition labels {labels} items but the data has {points}")]
    LengthMismatch { points: usize, labels: usize },

    #[error("cluster label {label} has no members (labels must cover 0..{k})")]
    EmptyCluster { label: usize, k: usize },

    #[error("scale factor must be nonzero and finite, got {0}")]
    InvalidScale(f64),

    #[error("shift must be finite, got {0}")]
    InvalidShift(f64),

    #[error("need at least {needed} points, found {found}")]
    TooFewPoints { needed: usize, found: usize },

    #[error("unknown synthetic dataset `{0}`")]
    UnknownDataset(String),

    #[error("unknown index `{0}`")]
    UnknownIndex(String),

    #[error("index `{0}` scores a hierarchy, not a flat partition")]
    RequiresDendrogram(IndexId),

    #[error("invalid distance matrix: {0}")]
    InvalidDistanceMatrix(String),

    #[error("linkage row {row}: {reason}")]
    InvalidLinkage { row: usize, reason: String },

    #[error("invalid dendrogram: {0}")]
    InvalidDendrogram(String),

    #[error("SI curve needs at least 2 samples, found {0}")]
    TooFewSamples(usize),

    #[error("SI curve distance decreases at sample {0}")]
    DecreasingDistance(usize),
}
