//! Closed-form lower bounds for sumsets and restricted sumsets, and a
//! per-instance comparison against the computed cardinality.
//!
//! Bounds are signed: `k|A| - k^2 + 1` goes negative once `k > |A|`, and
//! such bounds are reported as is rather than clamped.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::sets::{restricted_sumset, ElementSet};

fn p_of(g: &GroupSpec) -> i64 {
    g.least_prime_divisor() as i64
}

/// `min{p(G), |A| + |B| - 1}`.
pub fn pair_bound(g: &GroupSpec, size_a: usize, size_b: usize) -> Result<i64> {
    if size_a == 0 || size_b == 0 {
        return Err(Error::Range("set sizes must be at least 1".into()));
    }
    Ok(p_of(g).min(size_a as i64 + size_b as i64 - 1))
}

/// `min{p(G), |A_1| + ... + |A_n| - n + 1}`.
pub fn iterated_bound(g: &GroupSpec, sizes: &[usize]) -> Result<i64> {
    if sizes.is_empty() {
        return Err(Error::Range("at least one part is required".into()));
    }
    if sizes.contains(&0) {
        return Err(Error::Range("set sizes must be at least 1".into()));
    }
    let total: i64 = sizes.iter().map(|&s| s as i64).sum();
    Ok(p_of(g).min(total - sizes.len() as i64 + 1))
}

/// `min{p(G), 2|A| - 3}`, the `k = 2` restricted bound.
pub fn eh_pair_bound(g: &GroupSpec, size_a: usize) -> i64 {
    p_of(g).min(2 * size_a as i64 - 3)
}

/// `min{p(G), k|A| - k^2 + 1}`.
pub fn restricted_bound(g: &GroupSpec, size_a: usize, k: usize) -> i64 {
    let (n, k) = (size_a as i64, k as i64);
    p_of(g).min(k * n - k * k + 1)
}

/// Outcome of comparing `|k^A|` with [`restricted_bound`] on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub group: GroupSpec,
    #[serde(serialize_with = "crate::format::serialize_indices")]
    pub set: ElementSet,
    pub set_size: usize,
    pub k: usize,
    pub p_of_g: usize,
    pub bound: i64,
    pub actual: usize,
    pub satisfied: bool,
    pub equality: bool,
}

impl BoundReport {
    pub(crate) fn new(set: &ElementSet, k: usize, actual: usize) -> Self {
        let group = set.group().clone();
        let bound = restricted_bound(&group, set.len(), k);
        BoundReport {
            p_of_g: group.least_prime_divisor(),
            group,
            set: set.clone(),
            set_size: set.len(),
            k,
            bound,
            actual,
            satisfied: actual as i64 >= bound,
            equality: actual as i64 == bound,
        }
    }

    pub const CSV_HEADER: [&'static str; 8] = [
        "group",
        "set",
        "k",
        "p_of_G",
        "bound",
        "actual",
        "satisfied",
        "equality",
    ];

    pub fn csv_record(&self) -> [String; 8] {
        [
            self.group.to_string(),
            self.set.to_string(),
            self.k.to_string(),
            self.p_of_g.to_string(),
            self.bound.to_string(),
            self.actual.to_string(),
            self.satisfied.to_string(),
            self.equality.to_string(),
        ]
    }
}

/// Computes `|k^A|` and compares it with `min{p(G), k|A| - k^2 + 1}`.
pub fn check_instance(a: &ElementSet, k: usize) -> Result<BoundReport> {
    if a.is_empty() {
        return Err(Error::Precondition("the set must be non-empty".into()));
    }
    Ok(BoundReport::new(a, k, restricted_sumset(a, k).len()))
}
