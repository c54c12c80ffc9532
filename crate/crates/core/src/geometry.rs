//! Euclidean primitives shared by every index.

use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::error::{Error, Result};

/// L2 distance between two points of equal dimension.
pub fn euclidean_distance(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(distance_unchecked(a, b))
}

#[inline]
pub(crate) fn distance_unchecked(a: &[f64], b: &[f64]) -> f64 {
    squared_distance(a, b).sqrt()
}

#[inline]
pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn check_uniform(points: &[&[f64]]) -> Result<usize> {
    let dim = points.first().ok_or(Error::EmptyPointSet)?.len();
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
    }
    Ok(dim)
}

/// Coordinate-wise arithmetic mean.
///
/// The mean is accumulated as offsets from the first point, so a set of
/// coincident points yields that point exactly and radii of such sets are
/// exactly zero.
pub fn centroid(points: &[&[f64]]) -> Result<Vec<f64>> {
    let dim = check_uniform(points)?;
    Ok(centroid_unchecked(points, dim))
}

pub(crate) fn centroid_unchecked(points: &[&[f64]], dim: usize) -> Vec<f64> {
    let origin = points[0];
    let mut acc = vec![0.0; dim];
    for p in &points[1..] {
        for ((a, x), o) in acc.iter_mut().zip(p.iter()).zip(origin) {
            *a += x - o;
        }
    }
    let n = points.len() as f64;
    acc.iter().zip(origin).map(|(a, o)| o + a / n).collect()
}

/// Mean distance from the centroid to each member. Zero for a singleton or a
/// set of coincident points.
pub fn radius_centroid(points: &[&[f64]]) -> Result<f64> {
    let c = centroid(points)?;
    Ok(mean_distance_to(points, &c))
}

pub(crate) fn mean_distance_to(points: &[&[f64]], center: &[f64]) -> f64 {
    let total: f64 = points.iter().map(|p| distance_unchecked(p, center)).sum();
    total / points.len() as f64
}

/// Mean distance over all unordered pairs. A singleton has no pairs and
/// scores 0.
pub fn mean_pairwise_distance(points: &[&[f64]]) -> Result<f64> {
    check_uniform(points)?;
    let n = points.len();
    if n < 2 {
        return Ok(0.0);
    }
    let mut total = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            total += distance_unchecked(points[i], points[j]);
        }
    }
    Ok(total / (n * (n - 1) / 2) as f64)
}

/// Largest pairwise distance; 0 for a singleton.
pub fn diameter(points: &[&[f64]]) -> Result<f64> {
    check_uniform(points)?;
    let mut best: f64 = 0.0;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            best = best.max(distance_unchecked(a, b));
        }
    }
    Ok(best)
}

/// Symmetric, zero-diagonal matrix of nonnegative pairwise distances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DistanceMatrix {
    /// Validates a square matrix given row by row.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyPointSet);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidDistanceMatrix(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        for i in 0..n {
            if entries[i * n + i] != 0.0 {
                return Err(Error::InvalidDistanceMatrix(format!(
                    "diagonal entry {i} is nonzero"
                )));
            }
            for j in 0..n {
                let v = entries[i * n + j];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidDistanceMatrix(format!(
                        "entry ({i}, {j}) = {v} is not a nonnegative real"
                    )));
                }
                if v != entries[j * n + i] {
                    return Err(Error::InvalidDistanceMatrix(format!(
                        "entries ({i}, {j}) and ({j}, {i}) differ"
                    )));
                }
            }
        }
        Ok(Self { n, entries })
    }

    /// Euclidean distances between every pair of points.
    pub fn from_dataset(data: &Dataset) -> Self {
        let n = data.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = distance_unchecked(data.point(i), data.point(j));
                entries[i * n + j] = d;
                entries[j * n + i] = d;
            }
        }
        Self { n, entries }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Mean over unordered pairs drawn from `members`; 0 with fewer than two.
    pub fn mean_pairwise(&self, members: &[usize]) -> f64 {
        let m = members.len();
        if m < 2 {
            return 0.0;
        }
        let mut total = 0.0;
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                total += self.get(i, j);
            }
        }
        total / (m * (m - 1) / 2) as f64
    }

    /// Mean over all unordered pairs.
    pub fn mean_all(&self) -> f64 {
        let all: Vec<usize> = (0..self.n).collect();
        self.mean_pairwise(&all)
    }
}
