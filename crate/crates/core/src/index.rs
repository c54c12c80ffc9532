//! Index identifiers, metadata and string-keyed dispatch.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classic;
use crate::data::{Dataset, Partition};
use crate::error::{Error, Result};
use crate::geometry::DistanceMatrix;
use crate::result::IndexResult;
use crate::simplicity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexId {
    SiCentroid,
    SiDistance,
    SiHierarchical,
    Ch,
    Silhouette,
    Sf,
    Dunn,
    Db,
    Cindex,
}

impl IndexId {
    pub const ALL: [IndexId; 9] = [
        IndexId::SiCentroid,
        IndexId::SiDistance,
        IndexId::SiHierarchical,
        IndexId::Ch,
        IndexId::Silhouette,
        IndexId::Sf,
        IndexId::Dunn,
        IndexId::Db,
        IndexId::Cindex,
    ];

    /// Indices that score a flat partition, in canonical report order.
    pub const PARTITION: [IndexId; 8] = [
        IndexId::SiCentroid,
        IndexId::SiDistance,
        IndexId::Ch,
        IndexId::Silhouette,
        IndexId::Sf,
        IndexId::Dunn,
        IndexId::Db,
        IndexId::Cindex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexId::SiCentroid => "si_centroid",
            IndexId::SiDistance => "si_distance",
            IndexId::SiHierarchical => "si_hierarchical",
            IndexId::Ch => "ch",
            IndexId::Silhouette => "silhouette",
            IndexId::Sf => "sf",
            IndexId::Dunn => "dunn",
            IndexId::Db => "db",
            IndexId::Cindex => "cindex",
        }
    }

    pub fn scores_partitions(self) -> bool {
        self != IndexId::SiHierarchical
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IndexId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownIndex(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    HigherBetter,
    LowerBetter,
}

impl Direction {
    /// Strict improvement of `candidate` over `reference`.
    pub fn is_better(self, candidate: f64, reference: f64) -> bool {
        match self {
            Direction::HigherBetter => candidate > reference,
            Direction::LowerBetter => candidate < reference,
        }
    }
}

/// Reference value at the most complex partitions, as a function of `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Baseline {
    /// The number of data points.
    PointCount,
}

impl Baseline {
    pub fn value(self, n: usize) -> f64 {
        match self {
            Baseline::PointCount => n as f64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IndexDescriptor {
    pub id: IndexId,
    pub direction: Direction,
    /// Optimum fixed by the formula itself; absent when the index is unbounded
    /// in its improving direction.
    pub best_value: Option<f64>,
    pub baseline: Option<Baseline>,
}

pub fn descriptor(id: IndexId) -> IndexDescriptor {
    use Direction::*;
    let (direction, best_value, baseline) = match id {
        IndexId::SiCentroid | IndexId::SiDistance => {
            (LowerBetter, Some(1.0), Some(Baseline::PointCount))
        }
        IndexId::SiHierarchical => (LowerBetter, None, None),
        IndexId::Ch => (HigherBetter, None, None),
        IndexId::Silhouette => (HigherBetter, Some(1.0), None),
        IndexId::Sf => (HigherBetter, None, None),
        IndexId::Dunn => (HigherBetter, None, None),
        IndexId::Db => (LowerBetter, None, None),
        IndexId::Cindex => (LowerBetter, Some(0.0), None),
    };
    IndexDescriptor {
        id,
        direction,
        best_value,
        baseline,
    }
}

/// String-keyed [`descriptor`].
pub fn descriptor_by_name(name: &str) -> Result<IndexDescriptor> {
    Ok(descriptor(name.parse()?))
}

/// Scores `partition` over `data` with the chosen index.
///
/// `si_hierarchical` needs a dendrogram and is rejected here; see
/// [`simplicity::si_curve`].
pub fn evaluate(id: IndexId, data: &Dataset, partition: &Partition) -> Result<IndexResult> {
    partition.check_len(data.len())?;
    let matrix = || DistanceMatrix::from_dataset(data);
    match id {
        IndexId::SiCentroid => simplicity::si_centroid(data, partition),
        IndexId::SiDistance => simplicity::si_distance(&matrix(), partition),
        IndexId::SiHierarchical => Err(Error::RequiresDendrogram(id)),
        IndexId::Ch => classic::calinski_harabasz(data, partition),
        IndexId::Silhouette => classic::silhouette(&matrix(), partition),
        IndexId::Sf => classic::score_function(data, partition),
        IndexId::Dunn => classic::dunn(&matrix(), partition),
        IndexId::Db => classic::davies_bouldin(data, partition),
        IndexId::Cindex => classic::c_index(&matrix(), partition),
    }
}

/// String-keyed [`evaluate`].
pub fn evaluate_by_name(name: &str, data: &Dataset, partition: &Partition) -> Result<IndexResult> {
    evaluate(name.parse()?, data, partition)
}
