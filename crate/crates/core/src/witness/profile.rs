//! The multiplicities `n_1, ..., n_m` read off the first `k + 1` terms of
//! the class sequence.
//!
//! With `|A_1| = ... = |A_{t_1}| > |A_{t_1+1}| = ... = |A_{t_2}| > ...`, the
//! sequence is `a_1, ..., a_m` followed, for each `u = 1..l`, by the block
//! `a_{t_u}, a_{t_u - 1}, ..., a_1` repeated `|A_{t_u}| - |A_{t_{u+1}}|`
//! times (with `|A_{t_{l+1}}|` read as 1). Its length is `|A|`.

use serde::{Deserialize, Serialize};

use super::decompose::CosetDecomposition;
use crate::error::{Error, Result};

/// One term of the class sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceTerm {
    /// 1-based class index `i` of the term `a_i`.
    pub class: usize,
    /// Block type `u` (1-based); `None` for the leading run `a_1, ..., a_m`.
    pub block: Option<usize>,
    /// 0-based repetition number within the block type.
    pub repetition: usize,
}

/// Generates the full class sequence for non-increasing sizes `|A_1|, ..., |A_m|`.
pub fn literal_sequence(sizes: &[usize]) -> Vec<SequenceTerm> {
    let m = sizes.len();
    let thresholds = thresholds(sizes);
    let mut seq: Vec<SequenceTerm> = (1..=m)
        .map(|class| SequenceTerm {
            class,
            block: None,
            repetition: 0,
        })
        .collect();
    let l = thresholds.len() - 1;
    for u in 1..=l {
        let t_u = thresholds[u];
        let next = if u < l {
            sizes[thresholds[u + 1] - 1]
        } else {
            1
        };
        let reps = sizes[t_u - 1] - next;
        for repetition in 0..reps {
            for class in (1..=t_u).rev() {
                seq.push(SequenceTerm {
                    class,
                    block: Some(u),
                    repetition,
                });
            }
        }
    }
    seq
}

/// `t_0 = 0 < t_1 < ... < t_l = m`: the ends of the runs of equal sizes.
fn thresholds(sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0];
    for i in 1..=sizes.len() {
        if i == sizes.len() || sizes[i] != sizes[i - 1] {
            out.push(i);
        }
    }
    out
}

/// `n_i` together with the position `(s, h, r)` where the `(k+1)`-th term falls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityProfile {
    pub k: usize,
    /// `n_1, ..., n_m`.
    pub n: Vec<usize>,
    /// `t_0, t_1, ..., t_l`.
    pub thresholds: Vec<usize>,
    pub s: usize,
    /// `t = t_s`.
    pub t: usize,
    pub r: usize,
    /// Number of complete repetitions of block type `s` before the last one.
    pub h: usize,
    /// Class indices of `a*_1, ..., a*_{k+1}`.
    pub prefix: Vec<usize>,
}

impl MultiplicityProfile {
    pub fn m(&self) -> usize {
        self.n.len()
    }

    /// `(t - r + 1)(r - 1)`, the number of extra translates `c_u`.
    pub fn extra_count(&self) -> usize {
        (self.t - self.r + 1) * (self.r - 1)
    }

    /// Checks the closed forms the construction implies against the class
    /// sizes and returns the names of the ones that fail.
    pub fn closed_form_failures(&self, sizes: &[usize]) -> Vec<&'static str> {
        let m = self.m();
        let (r, t, h) = (self.r, self.t, self.h);
        let n = |i: usize| self.n[i - 1] as i64;
        let a = |i: usize| sizes[i - 1] as i64;
        let mut failed = Vec::new();
        let mut check = |name: &'static str, ok: bool| {
            if !ok && !failed.contains(&name) {
                failed.push(name);
            }
        };

        check("shape", sizes.len() == m && 1 <= r && r <= t && t <= m);
        if sizes.len() != m || !(1 <= r && r <= t && t <= m) {
            return failed;
        }
        check("sumni", self.n.iter().sum::<usize>() == self.k + 1);
        check("ni1", (t + 1..=m).all(|i| n(i) == 1));
        check("HleqAt-2", h as i64 <= a(t) - 2);
        check(
            "Aini",
            (1..r).all(|i| a(i) - n(i) == a(t) - h as i64 - 1)
                && (r..=t).all(|i| a(i) - n(i) == a(t) - h as i64 - 2),
        );
        check("nileqAi", (r..=m).all(|i| n(i) <= a(i)));
        check("nileqAi-1", (1..r).all(|i| n(i) < a(i)));
        check(
            "AiniAjnj1",
            (1..r).all(|i| (r..=t).all(|j| a(i) - n(i) == a(j) - n(j) + 1)),
        );
        check(
            "AiniAjnj",
            (1..=t).all(|i| (t + 1..=m).all(|j| a(i) - n(i) >= a(j) - n(j))),
        );
        failed
    }
}

/// Builds the profile for an instance with `m <= k`, `|A| >= k + 1` and
/// `|A_1| >= 2`. Any other instance is a routing error.
pub fn build_multiplicity_profile(d: &CosetDecomposition, k: usize) -> Result<MultiplicityProfile> {
    let sizes = d.sizes();
    let m = sizes.len();
    let total: usize = sizes.iter().sum();
    if m > k {
        return Err(Error::CaseRouting(format!("m = {m} exceeds k = {k}")));
    }
    if total < k + 1 {
        return Err(Error::CaseRouting(format!(
            "|A| = {total} is below k + 1 = {}",
            k + 1
        )));
    }
    if sizes[0] < 2 {
        return Err(Error::CaseRouting("all classes are singletons".into()));
    }

    let seq = literal_sequence(&sizes);
    if seq.len() != total {
        return Err(Error::Construction {
            case: "CaseSmall".into(),
            detail: format!("sequence length {} differs from |A| = {total}", seq.len()),
        });
    }
    let prefix: Vec<usize> = seq[..=k].iter().map(|term| term.class).collect();
    let last = seq[k];
    let s = last
        .block
        .expect("m <= k puts the (k+1)-th term past the leading run");
    let thresholds = thresholds(&sizes);
    let mut n = vec![0usize; m];
    for &class in &prefix {
        n[class - 1] += 1;
    }
    let profile = MultiplicityProfile {
        k,
        n,
        t: thresholds[s],
        thresholds,
        s,
        r: last.class,
        h: last.repetition,
        prefix,
    };
    let failed = profile.closed_form_failures(&sizes);
    if !failed.is_empty() {
        return Err(Error::Construction {
            case: "CaseSmall".into(),
            detail: format!("profile violates {}", failed.join(", ")),
        });
    }
    Ok(profile)
}
