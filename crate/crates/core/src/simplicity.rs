//! The simplicity index (SI) and its hierarchical aggregate.
//!
//! For a partition into `k` clusters with member counts `c_n` and spreads
//! `s_n`, and whole-dataset spread `S`:
//!
//! ```text
//! SI = k · (∏ c_n^(s_n / S))^(1/k),   with s_n / S := 0 when S = 0
//! ```
//!
//! Two spread notions are provided: mean distance to the centroid
//! ([`si_centroid`]) and mean pairwise distance ([`si_distance`]). Lower is
//! better. The optimum 1 is reached only by a single cluster of coincident
//! points; both extreme partitions of `N` distinct points (one cluster, or
//! one cluster per point) score `N`.
//!
//! [`si_curve`] evaluates SI on every level of a dendrogram and
//! [`si_hierarchical`] integrates that curve with the trapezoid rule,
//! normalized by `(N − 1)(D_N − D_1)`.

use serde::{Deserialize, Serialize};

use crate::data::{Dataset, Partition};
use crate::dendrogram::Dendrogram;
use crate::error::{Error, Result};
use crate::geometry::{centroid_unchecked, mean_distance_to, DistanceMatrix};
use crate::result::IndexResult;

/// Evaluates `k · exp((1/k) · Σ (s_n/S) · ln c_n)`.
///
/// `sizes` and `spreads` are indexed by cluster. A zero `whole` spread forces
/// every exponent to zero, so the result collapses to `k`.
pub fn simplicity(sizes: &[usize], spreads: &[f64], whole: f64) -> f64 {
    debug_assert_eq!(sizes.len(), spreads.len());
    let k = sizes.len() as f64;
    if whole == 0.0 {
        return k;
    }
    let log_sum: f64 = sizes
        .iter()
        .zip(spreads)
        .map(|(&c, &s)| (s / whole) * (c as f64).ln())
        .sum();
    k * (log_sum / k).exp()
}

fn radius(points: &[&[f64]], dim: usize) -> f64 {
    let c = centroid_unchecked(points, dim);
    mean_distance_to(points, &c)
}

/// SI with cluster radius taken as mean member-to-centroid distance.
///
/// Always returns a value: the zero-radius guard removes the only division.
pub fn si_centroid(data: &Dataset, partition: &Partition) -> Result<IndexResult> {
    let clusters = data.clusters(partition)?;
    let dim = data.dim();
    let whole = radius(&data.point_refs(), dim);
    let spreads: Vec<f64> = clusters.iter().map(|c| radius(c, dim)).collect();
    Ok(IndexResult::Value(simplicity(
        partition.sizes(),
        &spreads,
        whole,
    )))
}

/// SI with cluster spread taken as mean pairwise distance among members.
pub fn si_distance(distances: &DistanceMatrix, partition: &Partition) -> Result<IndexResult> {
    partition.check_len(distances.len())?;
    let whole = distances.mean_all();
    let spreads: Vec<f64> = partition
        .members()
        .iter()
        .map(|m| distances.mean_pairwise(m))
        .collect();
    Ok(IndexResult::Value(simplicity(
        partition.sizes(),
        &spreads,
        whole,
    )))
}

/// [`si_distance`] over Euclidean distances of a dataset.
pub fn si_distance_for(data: &Dataset, partition: &Partition) -> Result<IndexResult> {
    partition.check_len(data.len())?;
    si_distance(&DistanceMatrix::from_dataset(data), partition)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    /// Merge distance `D_k` of the level.
    pub distance: f64,
    /// SI of the level's partition.
    pub si: f64,
}

/// SI as a function of merge distance, one sample per dendrogram level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SiCurve {
    samples: Vec<CurveSample>,
}

impl SiCurve {
    /// Checks that distances are finite and nondecreasing.
    pub fn new(samples: Vec<CurveSample>) -> Result<Self> {
        for (i, s) in samples.iter().enumerate() {
            if !s.distance.is_finite() || !s.si.is_finite() {
                return Err(Error::InvalidDendrogram(format!(
                    "sample {i} is not finite"
                )));
            }
            if i > 0 && s.distance < samples[i - 1].distance {
                return Err(Error::DecreasingDistance(i));
            }
        }
        Ok(Self { samples })
    }

    /// Convenience constructor from `(distance, si)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(distance, si)| CurveSample { distance, si })
                .collect(),
        )
    }

    pub fn samples(&self) -> &[CurveSample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// 1-based level with the lowest SI; the earliest level wins ties.
    pub fn minimum(&self) -> Option<(usize, CurveSample)> {
        self.samples
            .iter()
            .enumerate()
            .fold(
                None,
                |best: Option<(usize, CurveSample)>, (i, s)| match best {
                    Some((_, b)) if b.si <= s.si => best,
                    _ => Some((i + 1, *s)),
                },
            )
    }
}

/// Evaluates [`si_centroid`] at every level of `dendrogram`.
pub fn si_curve(data: &Dataset, dendrogram: &Dendrogram) -> Result<SiCurve> {
    if dendrogram.leaves() != data.len() {
        return Err(Error::LengthMismatch {
            points: data.len(),
            labels: dendrogram.leaves(),
        });
    }
    let dim = data.dim();
    let whole = radius(&data.point_refs(), dim);
    let samples = dendrogram
        .levels()
        .iter()
        .map(|level| {
            let clusters = data.clusters(&level.partition)?;
            let spreads: Vec<f64> = clusters.iter().map(|c| radius(c, dim)).collect();
            Ok(CurveSample {
                distance: level.distance,
                si: simplicity(level.partition.sizes(), &spreads, whole),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SiCurve::new(samples)
}

/// Trapezoid integral of the curve over distance divided by
/// `(N − 1)(D_N − D_1)`; `Undefined` when all merges happen at one distance.
pub fn si_hierarchical(curve: &SiCurve) -> Result<IndexResult> {
    let s = curve.samples();
    if s.len() < 2 {
        return Err(Error::TooFewSamples(s.len()));
    }
    let area: f64 = s
        .windows(2)
        .map(|w| (w[1].si + w[0].si) * (w[1].distance - w[0].distance) / 2.0)
        .sum();
    let span = s[s.len() - 1].distance - s[0].distance;
    Ok(IndexResult::ratio(area, (s.len() - 1) as f64 * span))
}
