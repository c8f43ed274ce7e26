use serde::Serialize;

use super::{CaseTag, Certificate};
use crate::bounds::restricted_bound;
use crate::group::GroupSpec;
use crate::sets::{restricted_sumset, ElementSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationFailure {
    pub check: String,
    pub detail: String,
}

/// Result of checking a certificate against an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failures: Vec<ValidationFailure>,
    pub group: GroupSpec,
    #[serde(serialize_with = "crate::format::serialize_indices")]
    pub set: ElementSet,
    pub k: usize,
    pub case: Option<CaseTag>,
    /// Recomputed `Σ |W_i|`.
    pub total: usize,
    /// Recomputed `min{p(G), k|A| - k^2 + 1}`.
    pub bound: i64,
    pub distinct_labels: usize,
    /// `|k^A|`.
    pub sumset_size: usize,
}

impl ValidationReport {
    pub(crate) fn new(
        group: &GroupSpec,
        set: &ElementSet,
        k: usize,
        case: Option<CaseTag>,
    ) -> Self {
        ValidationReport {
            ok: true,
            failures: Vec::new(),
            group: group.clone(),
            set: set.clone(),
            k,
            case,
            total: 0,
            bound: restricted_bound(group, set.len(), k),
            distinct_labels: 0,
            sumset_size: 0,
        }
    }

    pub(crate) fn fail(&mut self, check: &str, detail: impl Into<String>) {
        self.ok = false;
        self.failures.push(ValidationFailure {
            check: check.to_string(),
            detail: detail.into(),
        });
    }

    pub fn failed(&self, check: &str) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }
}

/// Checks a certificate for `(G, A, k)` from scratch.
///
/// `k^A` is recomputed with the set engine; every witness set must be
/// non-empty, contained in `k^A`, inside the coset it names and disjoint
/// from the others. The recomputed total must reach the bound, except in
/// the projection cases, which instead need `p(G)` distinct cosets.
pub fn validate_certificate(
    g: &GroupSpec,
    a: &ElementSet,
    k: usize,
    cert: &Certificate,
) -> ValidationReport {
    let mut report = ValidationReport::new(g, a, k, Some(cert.case));

    if &cert.group != g || !a.group().same_group(g) {
        report.fail(
            "instance",
            format!("certificate is for {}, instance is {g}", cert.group),
        );
        return report;
    }
    if &cert.set != a {
        report.fail(
            "instance",
            format!("certificate set {} differs from {a}", cert.set),
        );
    }
    if cert.k != k {
        report.fail(
            "instance",
            format!("certificate k = {} differs from {k}", cert.k),
        );
    }

    let sums = restricted_sumset(a, k);
    report.sumset_size = sums.len();
    let proj = g.least_prime_projection();
    let mut seen = ElementSet::empty(g);
    let mut labels = vec![false; proj.prime()];

    for (n, w) in cert.witness.iter().enumerate() {
        if !w.elements.group().same_group(g) {
            report.fail(
                "group",
                format!("witness set {n} lives in {}", w.elements.group()),
            );
            continue;
        }
        if w.elements.is_empty() {
            report.fail("non-empty", format!("witness set {n} is empty"));
        }
        if !w.elements.is_subset(&sums) {
            let stray = w.elements.difference(&sums).expect("same group");
            report.fail(
                "containment",
                format!("witness set {n} has {stray} outside k^A"),
            );
        }
        if w.coset_label >= proj.prime() {
            report.fail(
                "coset-label",
                format!("witness set {n} names coset {}", w.coset_label),
            );
        } else {
            if let Some(x) = w.elements.iter().find(|&x| proj.label(x) != w.coset_label) {
                report.fail(
                    "coset-label",
                    format!(
                        "witness set {n} claims coset {} but holds {x}",
                        w.coset_label
                    ),
                );
            }
            labels[w.coset_label] = true;
        }
        let overlap = w.elements.intersection(&seen).expect("same group");
        if !overlap.is_empty() {
            report.fail("disjointness", format!("witness set {n} repeats {overlap}"));
        }
        seen.union_with(&w.elements).expect("same group");
        report.total += w.elements.len();
    }
    report.distinct_labels = labels.iter().filter(|&&b| b).count();

    if cert.claimed_total != report.total {
        report.fail(
            "claimed-total",
            format!(
                "claimed {} but sets hold {}",
                cert.claimed_total, report.total
            ),
        );
    }
    let meets_bound = report.total as i64 >= report.bound;
    let covers_cosets = cert.case.counts_labels() && report.distinct_labels >= proj.prime();
    if !(meets_bound || covers_cosets) {
        report.fail(
            "total",
            format!(
                "total {} below bound {} with {} of {} cosets",
                report.total,
                report.bound,
                report.distinct_labels,
                proj.prime()
            ),
        );
    }
    report
}
