//! Sumsets and restricted sumsets in finite abelian groups.
//!
//! The crate computes `A + B`, `A_1 + ... + A_n` and the restricted sumset
//! `k^A = {a_1 + ... + a_k : a_i in A pairwise distinct}` over groups
//! `Z_{n_1} x ... x Z_{n_d}`, checks the lower bound
//!
//! ```text
//! |k^A| >= min{ p(G), k|A| - k^2 + 1 }        p(G) = least prime dividing |G|
//! ```
//!
//! on individual instances and in exhaustive or sampled sweeps, and builds
//! certificates for it: explicit disjoint subsets of `k^A` whose sizes add
//! up to the bound, which an independent validator re-checks.
//!
//! ```
//! use restricted_sumsets::{restricted_sumset, ElementSet, GroupSpec};
//!
//! let g: GroupSpec = "Z8".parse().unwrap();
//! let a = ElementSet::parse(&g, "0,1,2,4").unwrap();
//! assert_eq!(restricted_sumset(&a, 3).to_string(), "{3,5,6,7}");
//! ```
//!
//! The `examples/` directory has one runnable program per capability and
//! the `rsumset` binary exposes everything from the command line.

mod bits;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod format;
pub mod group;
pub mod sets;
pub mod verify;
pub mod witness;

pub use bounds::{
    check_instance, eh_pair_bound, iterated_bound, pair_bound, restricted_bound, BoundReport,
};
pub use error::{Error, Result};
pub use group::{enumerate_abelian_groups, GroupElement, GroupSpec, SubgroupProjection};
pub use sets::{
    graded_restricted_sum, iterated_sumset, oracle_restricted_sumset, project, restricted_sumset,
    restricted_sumset_layers, sumset, translate, translate_index, ElementSet,
};
pub use verify::{
    bench_kernels, extremal_search, run_campaign, CampaignConfig, CampaignReport, Checks,
    GroupFilter, ReportFormat,
};
pub use witness::{build_witness, validate_certificate, CaseTag, Certificate, ValidationReport};
