//! Checkable certificates for `|k^A| >= min{p(G), k|A| - k^2 + 1}`.
//!
//! A certificate lists explicit, pairwise disjoint subsets of `k^A`, each
//! inside a single coset of a subgroup `H` of index `p(G)`. The builder
//! follows the inductive argument over cosets of `H`: it splits `A` along
//! `G/H`, routes the instance to one of six cases and emits the sets that
//! case produces. The validator recomputes `k^A` on its own and checks
//! every claim.
//!
//! Class indices in profiles, selections and representations are 1-based,
//! matching the `a_1, ..., a_m` numbering of the decomposition.

mod build;
mod decompose;
mod profile;
mod quotient;
mod validate;

pub use build::{
    build_witness, certify_base, certify_case_large, certify_case_small, certify_projection,
    certify_r_projection, certify_singleton_classes, route,
};
pub use decompose::{decompose_by_prime_index_subgroup, CosetClass, CosetDecomposition};
pub use profile::{
    build_multiplicity_profile, literal_sequence, MultiplicityProfile, SequenceTerm,
};
pub use validate::{validate_certificate, ValidationFailure, ValidationReport};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::group::GroupSpec;
use crate::sets::ElementSet;

/// Which branch of the case analysis produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    /// Prime order, `k <= 2` or `|A| <= k`: `k^A` itself, split by coset.
    Base,
    /// `k^Ā = G/H`: one element of `k^A` per coset.
    Projection,
    /// `|A| = m`: one element per element of `k^Ā`.
    SingletonClasses,
    /// `m >= k + 1`.
    CaseLarge,
    /// `m <= k` and `m + (t-r+1)(r-1) <= p(G)`.
    CaseSmall,
    /// `m <= k` and `m + (t-r+1)(r-1) > p(G)`: one element per coset of `R`.
    RProjection,
}

impl CaseTag {
    pub const ALL: [CaseTag; 6] = [
        CaseTag::Base,
        CaseTag::Projection,
        CaseTag::SingletonClasses,
        CaseTag::CaseLarge,
        CaseTag::CaseSmall,
        CaseTag::RProjection,
    ];

    /// Cases whose total is argued through `p(G)` distinct coset labels.
    pub fn counts_labels(self) -> bool {
        matches!(self, CaseTag::Projection | CaseTag::RProjection)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One witness set together with the coset of `H` it lies in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSet {
    pub coset_label: usize,
    pub elements: ElementSet,
}

/// A chosen pair `(j, I)`: the translate `d_j + sum_{i in I} a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection {
    pub j: usize,
    #[serde(rename = "I")]
    pub indices: Vec<usize>,
}

/// A case-tagged witness for one instance `(G, A, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    into = "crate::format::CertificateRecord",
    try_from = "crate::format::CertificateRecord"
)]
pub struct Certificate {
    pub group: GroupSpec,
    pub set: ElementSet,
    pub k: usize,
    pub case: CaseTag,
    pub p_of_g: usize,
    pub bound: i64,
    pub witness: Vec<WitnessSet>,
    pub profile: Option<MultiplicityProfile>,
    /// `(j_u, I_u)` for each `c_u` (CaseSmall) or each coset of `R` (RProjection).
    pub selections: Vec<Selection>,
    /// Index tuples `i_1 < ... < i_k` realizing the lifted quotient sums.
    pub representations: Vec<Vec<usize>>,
    pub claimed_total: usize,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn total(&self) -> usize {
        self.witness.iter().map(|w| w.elements.len()).sum()
    }
}
