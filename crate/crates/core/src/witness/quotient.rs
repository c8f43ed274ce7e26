//! Lexicographically smallest representations of quotient elements as
//! restricted sums of coset labels.

use crate::group::GroupSpec;
use crate::sets::{translate_index, ElementSet};

/// Answers "which `q` distinct labels, smallest index tuple first, sum to
/// `target` in `Z_p`?" for a fixed label list.
pub(crate) struct Representations {
    quotient: GroupSpec,
    labels: Vec<usize>,
    /// `reach[i][j]`: sums of `j` distinct labels taken from positions `i..`.
    reach: Vec<Vec<ElementSet>>,
}

impl Representations {
    pub(crate) fn new(quotient: &GroupSpec, labels: &[usize], q: usize) -> Self {
        let len = labels.len();
        let empty = ElementSet::empty(quotient);
        let mut reach = vec![vec![empty; q + 1]; len + 1];
        reach[len][0] = ElementSet::zero(quotient);
        for i in (0..len).rev() {
            reach[i][0] = ElementSet::zero(quotient);
            for j in 1..=q {
                let mut s = reach[i + 1][j].clone();
                s.union_with(&translate_index(&reach[i + 1][j - 1], labels[i]))
                    .expect("same quotient");
                reach[i][j] = s;
            }
        }
        Representations {
            quotient: quotient.clone(),
            labels: labels.to_vec(),
            reach,
        }
    }

    /// `q^{labels}`.
    pub(crate) fn sums(&self, q: usize) -> &ElementSet {
        &self.reach[0][q]
    }

    /// Smallest 0-based index tuple `i_1 < ... < i_q` with label sum `target`.
    pub(crate) fn find(&self, target: usize, q: usize) -> Option<Vec<usize>> {
        if !self.reach[0][q].contains(target) {
            return None;
        }
        let mut out = Vec::with_capacity(q);
        let mut rest = target;
        let mut start = 0;
        for need in (1..=q).rev() {
            let i = (start..self.labels.len()).find(|&i| {
                let remainder = self
                    .quotient
                    .add_index(rest, self.quotient.neg_index(self.labels[i]));
                self.reach[i + 1][need - 1].contains(remainder)
            })?;
            rest = self
                .quotient
                .add_index(rest, self.quotient.neg_index(self.labels[i]));
            out.push(i);
            start = i + 1;
        }
        debug_assert_eq!(rest, 0);
        Some(out)
    }
}
