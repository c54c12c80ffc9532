//! Cluster trees as ordered merge sequences.
//!
//! A dendrogram over `N` points has `N` levels. Level 1 is the all-singletons
//! partition at distance 0; each later level applies one merge and records its
//! distance, ending with a single cluster.

use serde::{Deserialize, Serialize};

use crate::data::{Dataset, Partition};
use crate::error::{Error, Result};
use crate::geometry::distance_unchecked;

/// One merge in linkage-matrix convention: leaves are `0..N`, the cluster
/// created by merge `i` gets id `N + i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Merge {
    pub left: usize,
    pub right: usize,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub distance: f64,
    pub partition: Partition,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dendrogram {
    merges: Vec<Merge>,
    levels: Vec<Level>,
}

impl Dendrogram {
    /// Replays a linkage sequence over `n` leaves, validating ids, ordering and
    /// distances.
    pub fn from_merges(n: usize, merges: Vec<Merge>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewPoints {
                needed: 2,
                found: n,
            });
        }
        if merges.len() != n - 1 {
            return Err(Error::InvalidDendrogram(format!(
                "{} points need {} merges, found {}",
                n,
                n - 1,
                merges.len()
            )));
        }
        // cluster id -> point indices; None once consumed by a merge
        let mut clusters: Vec<Option<Vec<usize>>> = (0..n).map(|i| Some(vec![i])).collect();
        let mut owner: Vec<usize> = (0..n).collect();
        let mut levels = Vec::with_capacity(n);
        levels.push(Level {
            distance: 0.0,
            partition: Partition::singletons(n),
        });
        let mut previous = 0.0;
        for (row, m) in merges.iter().enumerate() {
            let bad = |reason: String| Error::InvalidLinkage { row, reason };
            if !m.distance.is_finite() || m.distance < 0.0 {
                return Err(bad(format!(
                    "distance {} is not a nonnegative real",
                    m.distance
                )));
            }
            if m.distance < previous {
                return Err(bad(format!(
                    "distance {} is smaller than the previous merge distance {}",
                    m.distance, previous
                )));
            }
            let limit = n + row;
            for id in [m.left, m.right] {
                if id >= limit {
                    return Err(bad(format!(
                        "cluster id {id} out of range (must be < {limit})"
                    )));
                }
            }
            if m.left == m.right {
                return Err(bad(format!("cluster {} merged with itself", m.left)));
            }
            let left = clusters[m.left]
                .take()
                .ok_or_else(|| bad(format!("cluster {} was already merged", m.left)))?;
            let right = clusters[m.right]
                .take()
                .ok_or_else(|| bad(format!("cluster {} was already merged", m.right)))?;
            let new_id = clusters.len();
            let mut members = left;
            members.extend(right);
            for &p in &members {
                owner[p] = new_id;
            }
            clusters.push(Some(members));
            previous = m.distance;
            levels.push(Level {
                distance: m.distance,
                partition: Partition::from_raw_labels(&owner)?,
            });
        }
        Ok(Self { merges, levels })
    }

    /// Levels in order from `N` singleton clusters down to one cluster.
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    /// Number of leaves.
    pub fn leaves(&self) -> usize {
        self.levels.len()
    }
}

/// Agglomerative clustering under minimum inter-cluster distance.
///
/// Among equally close pairs, the pair with the lexicographically smallest
/// (smaller id, larger id) in linkage-id numbering merges first. Runs in
/// O(N³) time and O(N²) memory.
pub fn single_linkage(data: &Dataset) -> Result<Dendrogram> {
    let n = data.len();
    if n < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            found: n,
        });
    }
    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance_unchecked(data.point(i), data.point(j));
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    // slot -> linkage id of the cluster currently stored there
    let mut ids: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut merges = Vec::with_capacity(n - 1);
    for step in 0..n - 1 {
        let mut best: Option<(f64, (usize, usize), usize, usize)> = None;
        for a in 0..n {
            let Some(id_a) = ids[a] else { continue };
            for b in (a + 1)..n {
                let Some(id_b) = ids[b] else { continue };
                let d = dist[a * n + b];
                let key = (id_a.min(id_b), id_a.max(id_b));
                let better = match best {
                    None => true,
                    Some((bd, bkey, _, _)) => d < bd || (d == bd && key < bkey),
                };
                if better {
                    best = Some((d, key, a, b));
                }
            }
        }
        let (d, (left, right), a, b) = best.expect("at least two active clusters");
        merges.push(Merge {
            left,
            right,
            distance: d,
        });
        // the merged cluster lives in slot `a`
        for c in 0..n {
            if c != a && c != b && ids[c].is_some() {
                let m = dist[a * n + c].min(dist[b * n + c]);
                dist[a * n + c] = m;
                dist[c * n + a] = m;
            }
        }
        ids[a] = Some(n + step);
        ids[b] = None;
    }
    Dendrogram::from_merges(n, merges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(xs: &[f64]) -> Dataset {
        Dataset::new(xs.iter().map(|&x| vec![x]).collect()).unwrap()
    }

    fn summary(dg: &Dendrogram) -> Vec<(f64, Vec<usize>)> {
        dg.levels()
            .iter()
            .map(|l| (l.distance, l.partition.labels().to_vec()))
            .collect()
    }

    #[test]
    fn three_points_on_a_line() {
        let dg = single_linkage(&line(&[0.0, 1.0, 3.0])).unwrap();
        assert_eq!(
            summary(&dg),
            vec![
                (0.0, vec![0, 1, 2]),
                (1.0, vec![0, 0, 1]),
                (2.0, vec![0, 0, 0])
            ]
        );
        assert_eq!(
            dg.merges(),
            &[
                Merge {
                    left: 0,
                    right: 1,
                    distance: 1.0
                },
                Merge {
                    left: 2,
                    right: 3,
                    distance: 2.0
                }
            ]
        );
    }

    #[test]
    fn two_points() {
        let d = Dataset::new(vec![vec![0.0, 0.0, 1.0], vec![0.0, 1.0, 0.0]]).unwrap();
        let dg = single_linkage(&d).unwrap();
        assert_eq!(dg.levels().len(), 2);
        assert_eq!(dg.levels()[0].distance, 0.0);
        assert!((dg.levels()[1].distance - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(dg.levels()[1].partition.k(), 1);
    }

    #[test]
    fn identical_points_tie_break() {
        let dg = single_linkage(&line(&[5.0, 5.0, 5.0])).unwrap();
        assert_eq!(
            summary(&dg),
            vec![
                (0.0, vec![0, 1, 2]),
                (0.0, vec![0, 0, 1]),
                (0.0, vec![0, 0, 0])
            ]
        );
        assert_eq!(
            dg.merges()[0],
            Merge {
                left: 0,
                right: 1,
                distance: 0.0
            }
        );
        assert_eq!(
            dg.merges()[1],
            Merge {
                left: 2,
                right: 3,
                distance: 0.0
            }
        );
    }

    #[test]
    fn lexicographic_ties() {
        // 2-3 and 0-1 both at distance 1: (0, 1) merges first
        let dg = single_linkage(&line(&[0.0, 1.0, 10.0, 11.0])).unwrap();
        assert_eq!(
            dg.merges()[0],
            Merge {
                left: 0,
                right: 1,
                distance: 1.0
            }
        );
        assert_eq!(
            dg.merges()[1],
            Merge {
                left: 2,
                right: 3,
                distance: 1.0
            }
        );
        assert_eq!(
            dg.merges()[2],
            Merge {
                left: 4,
                right: 5,
                distance: 9.0
            }
        );
    }

    #[test]
    fn needs_two_points() {
        assert_eq!(
            single_linkage(&line(&[1.0])).unwrap_err(),
            Error::TooFewPoints {
                needed: 2,
                found: 1
            }
        );
    }

    #[test]
    fn replay_rejects_bad_rows() {
        let m = |l, r, d| Merge {
            left: l,
            right: r,
            distance: d,
        };
        assert!(matches!(
            Dendrogram::from_merges(3, vec![m(0, 1, 2.0), m(2, 3, 1.0)]),
            Err(Error::InvalidLinkage { row: 1, .. })
        ));
        assert!(matches!(
            Dendrogram::from_merges(3, vec![m(0, 5, 1.0), m(2, 3, 1.0)]),
            Err(Error::InvalidLinkage { row: 0, .. })
        ));
        assert!(matches!(
            Dendrogram::from_merges(3, vec![m(0, 1, 1.0), m(0, 2, 1.0)]),
            Err(Error::InvalidLinkage { row: 1, .. })
        ));
        assert!(matches!(
            Dendrogram::from_merges(3, vec![m(0, 1, 1.0)]),
            Err(Error::InvalidDendrogram(_))
        ));
    }

    #[test]
    fn levels_coarsen() {
        let dg = single_linkage(&line(&[0.0, 4.0, 1.0, 9.0, 2.5, 7.0])).unwrap();
        for w in dg.levels().windows(2) {
            assert!(w[1].distance >= w[0].distance);
            assert!(w[0].partition.refines(&w[1].partition));
            assert_eq!(w[1].partition.k() + 1, w[0].partition.k());
        }
        assert_eq!(dg.levels().last().unwrap().partition.k(), 1);
    }
}
