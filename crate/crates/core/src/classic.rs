//! Six classic internal validity indices, used as reference points for the
//! property audit. All use Euclidean distance and arithmetic-mean centroids;
//! every zero denominator yields [`IndexResult::Undefined`].

use crate::data::{Dataset, Partition};
use crate::error::Result;
use crate::geometry::{
    centroid_unchecked, distance_unchecked, mean_distance_to, squared_distance, DistanceMatrix,
};
use crate::result::IndexResult;

fn centroids(clusters: &[Vec<&[f64]>], dim: usize) -> Vec<Vec<f64>> {
    clusters
        .iter()
        .map(|c| centroid_unchecked(c, dim))
        .collect()
}

/// Calinski–Harabasz variance ratio `(B / (k − 1)) / (W / (N − k))`.
///
/// Undefined for `k = 1` or `k = N` and when the within-cluster scatter is
/// zero.
pub fn calinski_harabasz(data: &Dataset, partition: &Partition) -> Result<IndexResult> {
    let clusters = data.clusters(partition)?;
    let (n, k) = (data.len(), partition.k());
    if k == 1 || k == n {
        return Ok(IndexResult::Undefined);
    }
    let dim = data.dim();
    let overall = centroid_unchecked(&data.point_refs(), dim);
    let centers = centroids(&clusters, dim);
    let between: f64 = clusters
        .iter()
        .zip(&centers)
        .map(|(c, z)| c.len() as f64 * squared_distance(z, &overall))
        .sum();
    let within: f64 = clusters
        .iter()
        .zip(&centers)
        .map(|(c, z)| c.iter().map(|p| squared_distance(p, z)).sum::<f64>())
        .sum();
    Ok(IndexResult::ratio(
        between * (n - k) as f64,
        within * (k - 1) as f64,
    ))
}

/// Mean silhouette width. Members of singleton clusters score 0.
///
/// Undefined for a single cluster, and when some point has zero mean distance
/// both to its own cluster and to its nearest other cluster.
pub fn silhouette(distances: &DistanceMatrix, partition: &Partition) -> Result<IndexResult> {
    partition.check_len(distances.len())?;
    let k = partition.k();
    if k < 2 {
        return Ok(IndexResult::Undefined);
    }
    let labels = partition.labels();
    let sizes = partition.sizes();
    let mut sums = vec![0.0; k];
    let mut total = 0.0;
    for (i, &own) in labels.iter().enumerate() {
        if sizes[own] == 1 {
            continue;
        }
        sums.iter_mut().for_each(|s| *s = 0.0);
        for (j, &l) in labels.iter().enumerate() {
            sums[l] += distances.get(i, j);
        }
        let a = sums[own] / (sizes[own] - 1) as f64;
        let b = (0..k)
            .filter(|&l| l != own)
            .map(|l| sums[l] / sizes[l] as f64)
            .fold(f64::INFINITY, f64::min);
        let denom = a.max(b);
        if denom == 0.0 {
            return Ok(IndexResult::Undefined);
        }
        total += (b - a) / denom;
    }
    Ok(IndexResult::from_f64(total / labels.len() as f64))
}

/// Score function `1 − 1 / exp(exp(bcd − wcd))`, where `bcd` weighs each
/// centroid's distance from the global centroid by cluster size over `N·k`
/// and `wcd` sums the clusters' mean member-to-centroid distances.
///
/// Bounded in (0, 1); never undefined.
pub fn score_function(data: &Dataset, partition: &Partition) -> Result<IndexResult> {
    let clusters = data.clusters(partition)?;
    let (n, k) = (data.len() as f64, partition.k() as f64);
    let dim = data.dim();
    let overall = centroid_unchecked(&data.point_refs(), dim);
    let centers = centroids(&clusters, dim);
    let bcd: f64 = clusters
        .iter()
        .zip(&centers)
        .map(|(c, z)| c.len() as f64 * distance_unchecked(z, &overall))
        .sum::<f64>()
        / (n * k);
    let wcd: f64 = clusters
        .iter()
        .zip(&centers)
        .map(|(c, z)| mean_distance_to(c, z))
        .sum();
    Ok(IndexResult::from_f64(1.0 - (-(bcd - wcd).exp()).exp()))
}

/// Dunn index: smallest distance between points of different clusters over
/// the largest cluster diameter.
pub fn dunn(distances: &DistanceMatrix, partition: &Partition) -> Result<IndexResult> {
    partition.check_len(distances.len())?;
    if partition.k() < 2 {
        return Ok(IndexResult::Undefined);
    }
    let labels = partition.labels();
    let mut separation = f64::INFINITY;
    let mut diameter: f64 = 0.0;
    for i in 0..labels.len() {
        for j in (i + 1)..labels.len() {
            let d = distances.get(i, j);
            if labels[i] == labels[j] {
                diameter = diameter.max(d);
            } else {
                separation = separation.min(d);
            }
        }
    }
    Ok(IndexResult::ratio(separation, diameter))
}

/// Davies–Bouldin: mean over clusters of the worst `(S_i + S_j) / M_ij`, with
/// `S` the mean member-to-centroid distance and `M` the centroid gap.
pub fn davies_bouldin(data: &Dataset, partition: &Partition) -> Result<IndexResult> {
    let clusters = data.clusters(partition)?;
    let k = partition.k();
    if k < 2 {
        return Ok(IndexResult::Undefined);
    }
    let centers = centroids(&clusters, data.dim());
    let scatter: Vec<f64> = clusters
        .iter()
        .zip(&centers)
        .map(|(c, z)| mean_distance_to(c, z))
        .collect();
    let mut total = 0.0;
    for i in 0..k {
        let mut worst = f64::NEG_INFINITY;
        for j in (0..k).filter(|&j| j != i) {
            let gap = distance_unchecked(&centers[i], &centers[j]);
            if gap == 0.0 {
                return Ok(IndexResult::Undefined);
            }
            worst = worst.max((scatter[i] + scatter[j]) / gap);
        }
        total += worst;
    }
    Ok(IndexResult::from_f64(total / k as f64))
}

/// C-index `(S_w − S_min) / (S_max − S_min)`: `S_w` sums the `n_w`
/// within-cluster pair distances, `S_min`/`S_max` sum the `n_w` smallest and
/// largest of all pair distances.
pub fn c_index(distances: &DistanceMatrix, partition: &Partition) -> Result<IndexResult> {
    partition.check_len(distances.len())?;
    let labels = partition.labels();
    let n = labels.len();
    let mut all = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let mut within = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = distances.get(i, j);
            all.push(d);
            if labels[i] == labels[j] {
                within.push(d);
            }
        }
    }
    // summing in sorted order keeps the result independent of point order
    all.sort_by(f64::total_cmp);
    within.sort_by(f64::total_cmp);
    let nw = within.len();
    let s_w: f64 = within.iter().sum();
    let s_min: f64 = all[..nw].iter().sum();
    let s_max: f64 = all[all.len() - nw..].iter().sum();
    Ok(IndexResult::ratio(s_w - s_min, s_max - s_min))
}
