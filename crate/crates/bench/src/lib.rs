//! Seeded workloads shared by the criterion benches.

use cvi_core::{Dataset, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` points in `dim` dimensions drawn around `k` well-separated centers,
/// labeled by their center.
pub fn blobs(n: usize, dim: usize, k: usize, seed: u64) -> (Dataset, Partition) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let centers: Vec<Vec<f64>> = (0..k)
        .map(|_| (0..dim).map(|_| rng.gen_range(-50.0..50.0)).collect())
        .collect();
    let mut coords = Vec::with_capacity(n * dim);
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let c = i % k;
        labels.push(c);
        coords.extend(centers[c].iter().map(|x| x + rng.gen_range(-2.0..2.0)));
    }
    (
        Dataset::from_flat(dim, coords).expect("finite coordinates"),
        Partition::new(labels).expect("every center used when n >= k"),
    )
}
