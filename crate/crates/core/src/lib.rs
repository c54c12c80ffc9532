//! Cluster validity indices built around the simplicity index (SI).
//!
//! * [`simplicity`]: SI in centroid and distance-matrix form, the SI curve
//!   over a dendrogram and its hierarchical aggregate.
//! * [`classic`]: Calinski–Harabasz, silhouette, score function, Dunn,
//!   Davies–Bouldin and C-index.
//! * [`harness`]: audits any index for transform invariance, optimal
//!   clustering and unbiased clustering on fixed probe datasets.

pub mod classic;
pub mod data;
pub mod dendrogram;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod index;
pub mod result;
pub mod simplicity;
pub mod synthetic;

pub use data::{Dataset, Partition};
pub use dendrogram::{single_linkage, Dendrogram, Level, Merge};
pub use error::{Error, Result};
pub use geometry::{
    centroid, euclidean_distance, mean_pairwise_distance, radius_centroid, DistanceMatrix,
};
pub use harness::{audit, audit_many, audit_variant, PropertyFlags};
pub use index::{descriptor, evaluate, Direction, IndexDescriptor, IndexId};
pub use result::IndexResult;
pub use simplicity::{
    si_centroid, si_curve, si_distance, si_distance_for, si_hierarchical, CurveSample, SiCurve,
};
pub use synthetic::{scale_dataset, shift_dataset, synthetic_dataset, SyntheticId, Variant};
