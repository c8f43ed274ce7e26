use std::collections::BTreeSet;

use super::{run_campaign, CampaignConfig, Checks, Instance};
use crate::error::Result;
use crate::sets::{translate_index, ElementSet};

/// The smallest translate of `a`.
pub fn canonical_translate(a: &ElementSet) -> ElementSet {
    (0..a.group().order())
        .map(|g| translate_index(a, g))
        .min()
        .expect("groups are non-trivial")
}

/// Every instance meeting the restricted-sumset bound with equality,
/// reported once per translation class by its smallest translate.
///
/// Only the theorem check runs, whatever `cfg.checks` says.
pub fn extremal_search(cfg: &CampaignConfig) -> Result<Vec<Instance>> {
    let cfg = CampaignConfig {
        checks: Checks::THEOREM,
        record_equalities: true,
        ..cfg.clone()
    };
    let report = run_campaign(&cfg)?;
    let found: BTreeSet<Instance> = report
        .equality_cases
        .iter()
        .map(|r| Instance {
            group: r.group.clone(),
            set: canonical_translate(&r.set),
            k: r.k,
        })
        .collect();
    let mut out: Vec<Instance> = found.into_iter().collect();
    out.sort_by(|a, b| (&a.group, a.k, &a.set).cmp(&(&b.group, b.k, &b.set)));
    Ok(out)
}
