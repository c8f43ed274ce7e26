//! Verification campaigns over all small abelian groups.
//!
//! A campaign walks every group of order `2..=max_order` (one per
//! isomorphism class), visits either every non-empty subset or a seeded
//! sample of them, and runs the enabled checks for each `k` in
//! `2..=min(|A|, k_max)`. Work is split into fixed chunks, fanned out with
//! rayon and merged in chunk order, so the report does not depend on the
//! thread count.

mod bench;
mod extremal;
mod report;

pub use bench::{bench_kernels, BenchRow};
pub use extremal::extremal_search;
pub use report::ReportFormat;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{iterated_bound, pair_bound, BoundReport};
use crate::error::{Error, Result};
use crate::group::{enumerate_abelian_groups, GroupSpec};
use crate::sets::{
    iterated_sumset, oracle_restricted_sumset, restricted_sumset_layers, sumset, ElementSet,
};
use crate::witness::{build_witness, validate_certificate, CaseTag, ValidationReport};

/// Largest order for which every subset can be enumerated.
pub const MAX_EXHAUSTIVE_ORDER: usize = 30;
const SUBSET_CHUNK: u64 = 1 << 12;
const SAMPLE_CHUNK: usize = 500;

/// Which checks a campaign runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// `|k^A| >= min{p(G), k|A| - k^2 + 1}`.
    pub theorem: bool,
    /// `|A + B| >= min{p(G), |A| + |B| - 1}`.
    pub pair_bound: bool,
    /// `|A_1 + ... + A_n| >= min{p(G), Σ|A_i| - n + 1}`.
    pub iterated_bound: bool,
    /// Build and validate a certificate (composite orders only).
    pub witness: bool,
    /// Compare the DP with brute-force enumeration for `|A| <= oracle_max_size`.
    pub oracle: bool,
}

impl Checks {
    pub const THEOREM: Checks = Checks {
        theorem: true,
        pair_bound: false,
        iterated_bound: false,
        witness: false,
        oracle: false,
    };

    pub const NONE: Checks = Checks {
        theorem: false,
        pair_bound: false,
        iterated_bound: false,
        witness: false,
        oracle: false,
    };

    pub const ALL: Checks = Checks {
        theorem: true,
        pair_bound: true,
        iterated_bound: true,
        witness: true,
        oracle: true,
    };

    /// Parses a comma-separated list such as `theorem,witness` or `all`.
    pub fn parse(s: &str) -> Result<Checks> {
        let mut out = Checks::NONE;
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match token.to_ascii_lowercase().as_str() {
                "all" => out = Checks::ALL,
                "theorem" => out.theorem = true,
                "pair" | "pair_bound" => out.pair_bound = true,
                "iterated" | "iterated_bound" => out.iterated_bound = true,
                "witness" => out.witness = true,
                "oracle" => out.oracle = true,
                _ => return Err(Error::parse(token, "unknown check")),
            }
        }
        Ok(out)
    }
}

/// Restricts a campaign to prime or composite orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupFilter {
    All,
    PrimeOrder,
    CompositeOrder,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignConfig {
    pub min_order: usize,
    pub max_order: usize,
    /// Groups up to this order get every non-empty subset.
    pub exhaustive_threshold: usize,
    /// Subsets drawn per larger group.
    pub samples_per_group: usize,
    /// `None` means every `k` up to `|A|`.
    pub k_max: Option<usize>,
    pub seed: u64,
    pub checks: Checks,
    pub groups: GroupFilter,
    /// Size cap for the parts in the pair and iterated sweeps.
    pub pair_max_size: usize,
    /// Groups up to this order get every pair `(A, B)` of small sets.
    pub pair_exhaustive_order: usize,
    pub oracle_max_size: usize,
    /// Keep every equality instance in the report, not only the count.
    pub record_equalities: bool,
    /// Stop scheduling new work once exceeded; the report is then incomplete.
    pub time_budget: Option<Duration>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            min_order: 2,
            max_order: 16,
            exhaustive_threshold: 16,
            samples_per_group: 10_000,
            k_max: None,
            seed: 0,
            checks: Checks::THEOREM,
            groups: GroupFilter::All,
            pair_max_size: 4,
            pair_exhaustive_order: 12,
            oracle_max_size: 20,
            record_equalities: true,
            time_budget: None,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_order < 2 || self.min_order > self.max_order {
            return Err(Error::Range(format!(
                "order range {}..={} is empty",
                self.min_order, self.max_order
            )));
        }
        if self.exhaustive_threshold > MAX_EXHAUSTIVE_ORDER && self.max_order > MAX_EXHAUSTIVE_ORDER
        {
            return Err(Error::Range(format!(
                "exhaustive enumeration is limited to order {MAX_EXHAUSTIVE_ORDER}"
            )));
        }
        if self.pair_max_size == 0 {
            return Err(Error::Range("pair_max_size must be at least 1".into()));
        }
        Ok(())
    }

    pub fn selected_groups(&self) -> Vec<GroupSpec> {
        enumerate_abelian_groups(self.min_order.max(2), self.max_order)
            .into_iter()
            .filter(|g| match self.groups {
                GroupFilter::All => true,
                GroupFilter::PrimeOrder => g.is_prime_order(),
                GroupFilter::CompositeOrder => !g.is_prime_order(),
            })
            .collect()
    }

    fn is_exhaustive(&self, g: &GroupSpec) -> bool {
        g.order() <= self.exhaustive_threshold.min(MAX_EXHAUSTIVE_ORDER)
    }
}

/// An instance `(G, A, k)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub group: GroupSpec,
    #[serde(serialize_with = "crate::format::serialize_indices")]
    pub set: ElementSet,
    pub k: usize,
}

/// A pair or iterated sumset below its bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumsetViolation {
    pub group: GroupSpec,
    pub parts: Vec<String>,
    pub bound: i64,
    pub actual: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CampaignReport {
    pub groups_checked: usize,
    pub instances_checked: u64,
    pub violations: Vec<BoundReport>,
    pub equality_count: u64,
    pub equality_cases: Vec<BoundReport>,
    pub sumset_checks: u64,
    pub sumset_violations: Vec<SumsetViolation>,
    pub oracle_checks: u64,
    pub oracle_mismatches: Vec<Instance>,
    pub witness_checks: u64,
    pub witness_failures: Vec<ValidationReport>,
    pub case_counts: BTreeMap<CaseTag, u64>,
    /// Certificates whose multiplicity profile passed its closed-form checks.
    pub profiles_checked: u64,
    pub complete: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignReport {
    /// No violation of any enabled check.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
            && self.sumset_violations.is_empty()
            && self.oracle_mismatches.is_empty()
            && self.witness_failures.is_empty()
    }

    fn absorb(&mut self, other: CampaignReport) {
        self.instances_checked += other.instances_checked;
        self.violations.extend(other.violations);
        self.equality_count += other.equality_count;
        self.equality_cases.extend(other.equality_cases);
        self.sumset_checks += other.sumset_checks;
        self.sumset_violations.extend(other.sumset_violations);
        self.oracle_checks += other.oracle_checks;
        self.oracle_mismatches.extend(other.oracle_mismatches);
        self.witness_checks += other.witness_checks;
        self.witness_failures.extend(other.witness_failures);
        for (case, n) in other.case_counts {
            *self.case_counts.entry(case).or_default() += n;
        }
        self.profiles_checked += other.profiles_checked;
    }
}

enum Work {
    Masks {
        group: usize,
        from: u64,
        to: u64,
    },
    Samples {
        group: usize,
        chunk: usize,
        count: usize,
    },
    Pairs {
        group: usize,
    },
    Iterated {
        group: usize,
    },
}

fn chunk_seed(seed: u64, group: usize, chunk: usize, salt: u64) -> u64 {
    let mut z = seed
        ^ (group as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (chunk as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
        ^ salt.wrapping_mul(0x94D0_49BB_1331_11EB);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A uniformly random non-empty subset.
pub fn random_nonempty_subset<R: Rng>(group: &GroupSpec, rng: &mut R) -> ElementSet {
    loop {
        let mut s = ElementSet::empty(group);
        for i in 0..group.order() {
            if rng.gen::<bool>() {
                s.insert_unchecked(i);
            }
        }
        if !s.is_empty() {
            return s;
        }
    }
}

/// A uniformly random subset of the given size.
pub fn random_subset_of_size<R: Rng>(group: &GroupSpec, size: usize, rng: &mut R) -> ElementSet {
    ElementSet::from_indices(group, sample(rng, group.order(), size))
        .expect("indices below the order")
}

/// Runs a campaign. Violations never abort it.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let start = Instant::now();
    let groups = cfg.selected_groups();

    let mut work = Vec::new();
    for (gi, g) in groups.iter().enumerate() {
        let subset_checks = cfg.checks.theorem || cfg.checks.witness || cfg.checks.oracle;
        if subset_checks {
            if cfg.is_exhaustive(g) {
                let end = 1u64 << g.order();
                let mut from = 1;
                while from < end {
                    let to = (from + SUBSET_CHUNK).min(end);
                    work.push(Work::Masks {
                        group: gi,
                        from,
                        to,
                    });
                    from = to;
                }
            } else {
                let mut left = cfg.samples_per_group;
                let mut chunk = 0;
                while left > 0 {
                    let count = left.min(SAMPLE_CHUNK);
                    work.push(Work::Samples {
                        group: gi,
                        chunk,
                        count,
                    });
                    left -= count;
                    chunk += 1;
                }
            }
        }
        if cfg.checks.pair_bound {
            work.push(Work::Pairs { group: gi });
        }
        if cfg.checks.iterated_bound {
            work.push(Work::Iterated { group: gi });
        }
    }

    let out_of_time = AtomicBool::new(false);
    let partials: Vec<CampaignReport> = work
        .par_iter()
        .map(|item| {
            if let Some(budget) = cfg.time_budget {
                if start.elapsed() > budget {
                    out_of_time.store(true, Ordering::Relaxed);
                    return CampaignReport::default();
                }
            }
            run_item(cfg, &groups, item)
        })
        .collect();

    let mut report = CampaignReport {
        groups_checked: groups.len(),
        complete: !out_of_time.load(Ordering::Relaxed),
        ..CampaignReport::default()
    };
    for partial in partials {
        report.absorb(partial);
    }
    report
        .violations
        .sort_by(|a, b| (&a.group, &a.set, a.k).cmp(&(&b.group, &b.set, b.k)));
    report
        .equality_cases
        .sort_by(|a, b| (&a.group, &a.set, a.k).cmp(&(&b.group, &b.set, b.k)));
    report.oracle_mismatches.sort();
    report
        .witness_failures
        .sort_by(|a, b| (&a.group, &a.set, a.k).cmp(&(&b.group, &b.set, b.k)));
    report.wall_time = start.elapsed();
    Ok(report)
}

fn run_item(cfg: &CampaignConfig, groups: &[GroupSpec], item: &Work) -> CampaignReport {
    let mut out = CampaignReport::default();
    match *item {
        Work::Masks { group, from, to } => {
            let g = &groups[group];
            for mask in from..to {
                check_subset(cfg, &ElementSet::from_mask(g, mask), &mut out);
            }
        }
        Work::Samples {
            group,
            chunk,
            count,
        } => {
            let g = &groups[group];
            let mut rng = ChaCha8Rng::seed_from_u64(chunk_seed(cfg.seed, group, chunk, 1));
            for _ in 0..count {
                check_subset(cfg, &random_nonempty_subset(g, &mut rng), &mut out);
            }
        }
        Work::Pairs { group } => pair_sweep(cfg, &groups[group], group, &mut out),
        Work::Iterated { group } => iterated_sweep(cfg, &groups[group], group, &mut out),
    }
    out
}

fn check_subset(cfg: &CampaignConfig, a: &ElementSet, out: &mut CampaignReport) {
    let n = a.len();
    let kmax = cfg.k_max.map_or(n, |k| k.min(n));
    if kmax < 2 {
        return;
    }
    let composite = !a.group().is_prime_order();
    let layers = restricted_sumset_layers(a, kmax);
    for (k, layer) in layers.iter().enumerate().skip(2) {
        out.instances_checked += 1;
        if cfg.checks.theorem {
            let report = BoundReport::new(a, k, layer.len());
            if report.equality {
                out.equality_count += 1;
                if cfg.record_equalities {
                    out.equality_cases.push(report.clone());
                }
            }
            if !report.satisfied {
                out.violations.push(report);
            }
        }
        if cfg.checks.oracle && n <= cfg.oracle_max_size {
            out.oracle_checks += 1;
            let agrees = oracle_restricted_sumset(a, k).is_ok_and(|o| &o == layer);
            if !agrees {
                out.oracle_mismatches.push(Instance {
                    group: a.group().clone(),
                    set: a.clone(),
                    k,
                });
            }
        }
        if cfg.checks.witness && composite {
            out.witness_checks += 1;
            match build_witness(a, k) {
                Ok(cert) => {
                    *out.case_counts.entry(cert.case).or_default() += 1;
                    let report = validate_certificate(a.group(), a, k, &cert);
                    if cert.profile.is_some() && report.ok {
                        out.profiles_checked += 1;
                    }
                    if !report.ok {
                        out.witness_failures.push(report);
                    }
                }
                Err(e) => {
                    let mut report = ValidationReport::new(a.group(), a, k, None);
                    report.fail("construction", e.to_string());
                    out.witness_failures.push(report);
                }
            }
        }
    }
}

fn subsets_up_to(g: &GroupSpec, max_size: usize) -> Vec<ElementSet> {
    fn go(
        g: &GroupSpec,
        start: usize,
        left: usize,
        cur: &mut ElementSet,
        out: &mut Vec<ElementSet>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in start..g.order() {
            cur.insert_unchecked(i);
            go(g, i + 1, left - 1, cur, out);
            cur.remove(i);
        }
    }
    let mut out = Vec::new();
    go(g, 0, max_size, &mut ElementSet::empty(g), &mut out);
    out
}

fn record_sumset(
    out: &mut CampaignReport,
    g: &GroupSpec,
    parts: &[&ElementSet],
    bound: i64,
    actual: usize,
) {
    out.sumset_checks += 1;
    if (actual as i64) < bound {
        out.sumset_violations.push(SumsetViolation {
            group: g.clone(),
            parts: parts.iter().map(|p| p.to_string()).collect(),
            bound,
            actual,
        });
    }
}

fn pair_sweep(cfg: &CampaignConfig, g: &GroupSpec, gi: usize, out: &mut CampaignReport) {
    if g.order() <= cfg.pair_exhaustive_order {
        let small = subsets_up_to(g, cfg.pair_max_size);
        for a in &small {
            for b in &small {
                let s = sumset(a, b).expect("same group");
                let bound = pair_bound(g, a.len(), b.len()).expect("non-empty");
                record_sumset(out, g, &[a, b], bound, s.len());
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(chunk_seed(cfg.seed, gi, 0, 2));
        let cap = cfg.pair_max_size.min(g.order());
        for _ in 0..cfg.samples_per_group {
            let a = random_subset_of_size(g, rng.gen_range(1..=cap), &mut rng);
            let b = random_subset_of_size(g, rng.gen_range(1..=cap), &mut rng);
            let s = sumset(&a, &b).expect("same group");
            let bound = pair_bound(g, a.len(), b.len()).expect("non-empty");
            record_sumset(out, g, &[&a, &b], bound, s.len());
        }
    }
}

fn iterated_sweep(cfg: &CampaignConfig, g: &GroupSpec, gi: usize, out: &mut CampaignReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(chunk_seed(cfg.seed, gi, 0, 3));
    let cap = cfg.pair_max_size.min(g.order());
    let samples = cfg.samples_per_group.clamp(1, 5_000);
    for _ in 0..samples {
        let count = rng.gen_range(1..=4);
        let parts: Vec<ElementSet> = (0..count)
            .map(|_| random_subset_of_size(g, rng.gen_range(1..=cap), &mut rng))
            .collect();
        let s = iterated_sumset(g, &parts).expect("same group");
        let sizes: Vec<usize> = parts.iter().map(ElementSet::len).collect();
        let bound = iterated_bound(g, &sizes).expect("non-empty parts");
        let refs: Vec<&ElementSet> = parts.iter().collect();
        record_sumset(out, g, &refs, bound, s.len());
    }
}
