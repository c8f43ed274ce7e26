//! Wire formats: certificate JSON and the shared set encoding.
//!
//! A certificate serializes as
//!
//! ```text
//! { "group": "Z8", "set": [0,1,2,4], "k": 3, "case": "CaseSmall",
//!   "p_of_G": 2, "bound": 2, "claimed_total": 4,
//!   "witness": [ { "coset_label": 1, "elements": [3,5,7] }, ... ],
//!   "profile": { "n": [3,1], "r": 1, "t": 1, "s": 1, "h": 1, ... },
//!   "selections": [ { "j": 1, "I": [1,2] } ],
//!   "representations": [ [1,2,4] ] }
//! ```
//!
//! Sets are lists of canonical indices in ascending order. `profile`,
//! `selections` and `representations` are omitted when absent or empty.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::group::GroupSpec;
use crate::sets::ElementSet;
use crate::witness::{CaseTag, Certificate, MultiplicityProfile, Selection, WitnessSet};

pub(crate) fn serialize_indices<S: Serializer>(set: &ElementSet, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(set.iter())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct WitnessRecord {
    coset_label: usize,
    elements: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct CertificateRecord {
    group: GroupSpec,
    set: Vec<usize>,
    k: usize,
    case: CaseTag,
    #[serde(rename = "p_of_G")]
    p_of_g: usize,
    bound: i64,
    claimed_total: usize,
    witness: Vec<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    profile: Option<MultiplicityProfile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    selections: Vec<Selection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    representations: Vec<Vec<usize>>,
}

impl From<Certificate> for CertificateRecord {
    fn from(c: Certificate) -> Self {
        CertificateRecord {
            set: c.set.to_indices(),
            group: c.group,
            k: c.k,
            case: c.case,
            p_of_g: c.p_of_g,
            bound: c.bound,
            claimed_total: c.claimed_total,
            witness: c
                .witness
                .iter()
                .map(|w| WitnessRecord {
                    coset_label: w.coset_label,
                    elements: w.elements.to_indices(),
                })
                .collect(),
            profile: c.profile,
            selections: c.selections,
            representations: c.representations,
        }
    }
}

impl TryFrom<CertificateRecord> for Certificate {
    type Error = Error;

    fn try_from(r: CertificateRecord) -> Result<Self, Error> {
        let set = ElementSet::from_indices(&r.group, r.set)?;
        let witness = r
            .witness
            .into_iter()
            .map(|w| {
                Ok(WitnessSet {
                    coset_label: w.coset_label,
                    elements: ElementSet::from_indices(&r.group, w.elements)?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(Certificate {
            group: r.group,
            set,
            k: r.k,
            case: r.case,
            p_of_g: r.p_of_g,
            bound: r.bound,
            witness,
            profile: r.profile,
            selections: r.selections,
            representations: r.representations,
            claimed_total: r.claimed_total,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::build_witness;

    #[test]
    fn certificate_json_round_trip() {
        let g = GroupSpec::new(&[2, 6]).unwrap();
        for xs in [
            vec![0, 1, 2, 4],
            vec![0, 2, 3, 5, 7, 11],
            vec![1, 3, 6, 7, 8],
        ] {
            let a = ElementSet::from_indices(&g, xs).unwrap();
            for k in 2..=a.len() {
                let cert = build_witness(&a, k).unwrap();
                let text = cert.to_json();
                assert_eq!(Certificate::from_json(&text).unwrap(), cert, "{text}");
            }
        }
    }

    #[test]
    fn field_names() {
        let g = GroupSpec::cyclic(8).unwrap();
        let a = ElementSet::from_indices(&g, [0, 1, 2, 4]).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&build_witness(&a, 3).unwrap().to_json()).unwrap();
        assert_eq!(v["group"], "Z8");
        assert_eq!(v["set"], serde_json::json!([0, 1, 2, 4]));
        assert_eq!(v["case"], "CaseSmall");
        assert_eq!(v["p_of_G"], 2);
        assert_eq!(v["witness"][0]["elements"], serde_json::json!([3, 5, 7]));
        assert_eq!(v["profile"]["n"], serde_json::json!([3, 1]));
        assert!(v.get("selections").is_none());
    }

    #[test]
    fn rejects_out_of_range_elements() {
        let text = r#"{"group":"Z4","set":[0,9],"k":2,"case":"Base","p_of_G":2,"bound":1,"claimed_total":0,"witness":[]}"#;
        assert!(Certificate::from_json(text).is_err());
    }
}
