//! Dataset and partition data model.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of real-valued points sharing one dimension.
///
/// Coordinates are stored row-major in a single buffer. Duplicate points are
/// allowed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    dim: usize,
    coords: Vec<f64>,
}

impl Dataset {
    /// Builds a dataset from one vector per point.
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyPointSet)?.len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut coords = Vec::with_capacity(points.len() * dim);
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if let Some(axis) = p.iter().position(|x| !x.is_finite()) {
                return Err(Error::NonFiniteCoordinate { point: i, axis });
            }
            coords.extend_from_slice(p);
        }
        Ok(Self { dim, coords })
    }

    /// Builds a dataset from a flat row-major buffer.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if coords.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: coords.len() % dim,
            });
        }
        if let Some(pos) = coords.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFiniteCoordinate {
                point: pos / dim,
                axis: pos % dim,
            });
        }
        Ok(Self { dim, coords })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// Always false: a dataset holds at least one point.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    /// Every point as a borrowed slice, in dataset order.
    pub fn point_refs(&self) -> Vec<&[f64]> {
        self.points().collect()
    }

    /// Points grouped by cluster label, clusters in label order.
    pub fn clusters<'a>(&'a self, partition: &Partition) -> Result<Vec<Vec<&'a [f64]>>> {
        partition.check_len(self.len())?;
        let mut groups = vec![Vec::new(); partition.k()];
        for (p, &label) in self.points().zip(partition.labels()) {
            groups[label].push(p);
        }
        Ok(groups)
    }

    /// Reorders points: the i-th point of the result is `self.point(order[i])`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let mut coords = Vec::with_capacity(self.coords.len());
        for &i in order {
            coords.extend_from_slice(self.point(i));
        }
        Self {
            dim: self.dim,
            coords,
        }
    }

    /// Multiplies every coordinate by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if factor == 0.0 || !factor.is_finite() {
            return Err(Error::InvalidScale(factor));
        }
        Ok(Self {
            dim: self.dim,
            coords: self.coords.iter().map(|x| x * factor).collect(),
        })
    }

    /// Adds `offset` to every coordinate.
    pub fn shifted(&self, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::InvalidShift(offset));
        }
        Ok(Self {
            dim: self.dim,
            coords: self.coords.iter().map(|x| x + offset).collect(),
        })
    }
}

/// Hard assignment of every point index to one of `k` clusters.
///
/// Labels are dense: each of `0..k` has at least one member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    labels: Vec<usize>,
    sizes: Vec<usize>,
}

impl Partition {
    /// Validates dense labels. A gap in the label range is reported as an
    /// empty cluster.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let k = labels.iter().max().ok_or(Error::EmptyPointSet)? + 1;
        let mut sizes = vec![0usize; k];
        for &l in &labels {
            sizes[l] += 1;
        }
        if let Some(label) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::EmptyCluster { label, k });
        }
        Ok(Self { labels, sizes })
    }

    /// Accepts arbitrary label values and renumbers them densely in order of
    /// first appearance.
    pub fn from_raw_labels(raw: &[usize]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen = std::collections::HashMap::new();
        let labels = raw
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Self::new(labels)
    }

    /// All `n` points in one cluster.
    pub fn single(n: usize) -> Self {
        assert!(n > 0, "partition over zero points");
        Self {
            labels: vec![0; n],
            sizes: vec![n],
        }
    }

    /// One cluster per point.
    pub fn singletons(n: usize) -> Self {
        assert!(n > 0, "partition over zero points");
        Self {
            labels: (0..n).collect(),
            sizes: vec![1; n],
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of clusters.
    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    /// Member count of each cluster, indexed by label.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Point indices of each cluster, indexed by label.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
        for (i, &l) in self.labels.iter().enumerate() {
            out[l].push(i);
        }
        out
    }

    /// Same permutation semantics as [`Dataset::permuted`].
    pub fn permuted(&self, order: &[usize]) -> Self {
        let labels = order.iter().map(|&i| self.labels[i]).collect();
        Self {
            labels,
            sizes: self.sizes.clone(),
        }
    }

    /// Renames clusters: label `l` becomes `mapping[l]`. `mapping` must be a
    /// permutation of `0..k`.
    pub fn relabeled(&self, mapping: &[usize]) -> Result<Self> {
        Self::new(self.labels.iter().map(|&l| mapping[l]).collect())
    }

    /// True when every cluster of `self` lies inside one cluster of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.len() != coarser.len() {
            return false;
        }
        let mut image = vec![None; self.k()];
        self.labels
            .iter()
            .zip(&coarser.labels)
            .all(|(&fine, &coarse)| *image[fine].get_or_insert(coarse) == coarse)
    }

    pub(crate) fn check_len(&self, points: usize) -> Result<()> {
        if self.len() != points {
            return Err(Error::LengthMismatch {
                points,
                labels: self.len(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(labels: Vec<usize>) -> Result<Self> {
        Self::new(labels)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.labels
    }
}
