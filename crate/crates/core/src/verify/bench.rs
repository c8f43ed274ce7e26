use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::sets::{restricted_sumset, ElementSet};

const RUNS: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub order: usize,
    pub set_size: usize,
    pub k: usize,
    pub micros: f64,
}

/// Median time of `restricted_sumset` on a random subset of `Z_n` for each
/// `n` in `orders`.
pub fn bench_kernels(orders: &[usize], density: f64, k: usize, seed: u64) -> Result<Vec<BenchRow>> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Range(format!("density {density} is not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(orders.len());
    for &n in orders {
        let g = GroupSpec::cyclic(n)?;
        let mut a = ElementSet::empty(&g);
        for i in 0..n {
            if rng.gen_bool(density) {
                a.insert_unchecked(i);
            }
        }
        let mut times: Vec<Duration> = (0..RUNS)
            .map(|_| {
                let t = Instant::now();
                std::hint::black_box(restricted_sumset(std::hint::black_box(&a), k));
                t.elapsed()
            })
            .collect();
        times.sort();
        rows.push(BenchRow {
            order: n,
            set_size: a.len(),
            k,
            micros: times[RUNS / 2].as_secs_f64() * 1e6,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert!(bench_kernels(&[], 0.1, 8, 0).unwrap().is_empty());
        let rows = bench_kernels(&[64, 257], 0.2, 0, 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1].order, 257);
        assert!(bench_kernels(&[1], 0.1, 2, 0).is_err());
        assert!(bench_kernels(&[8], 1.5, 2, 0).is_err());
    }
}
