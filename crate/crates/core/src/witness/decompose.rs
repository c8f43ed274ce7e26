use crate::error::{Error, Result};
use crate::group::{GroupElement, SubgroupProjection};
use crate::sets::{translate_index, ElementSet};

/// One coset class `a_i + A_i` of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetClass {
    /// Index of the representative `a_i`, the smallest member of the class.
    pub rep: usize,
    /// `A_i = class - a_i`, a subset of `H`.
    pub part: ElementSet,
    /// `φ(a_i)`.
    pub label: usize,
}

/// `A = ⋃ (a_i + A_i)` along the cosets of `H`, with `|A_1| >= ... >= |A_m|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub projection: SubgroupProjection,
    pub classes: Vec<CosetClass>,
}

impl CosetDecomposition {
    pub fn m(&self) -> usize {
        self.classes.len()
    }

    /// `|A_1|, ..., |A_m|`.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.part.len()).collect()
    }

    /// `|A|`.
    pub fn total(&self) -> usize {
        self.classes.iter().map(|c| c.part.len()).sum()
    }

    /// Coset labels `ā_1, ..., ā_m`.
    pub fn labels(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.label).collect()
    }

    pub fn reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.rep).collect()
    }

    pub fn rep_element(&self, i: usize) -> GroupElement {
        self.projection
            .parent()
            .element_of(self.classes[i].rep)
            .expect("representative in range")
    }

    /// `Ā` as a subset of the quotient `Z_p`.
    pub fn quotient_set(&self) -> ElementSet {
        ElementSet::from_indices(self.projection.quotient(), self.labels()).expect("labels below p")
    }
}

/// Splits `A` by cosets of the index-`p(G)` subgroup `H`.
///
/// Each class is represented by its smallest member; classes are sorted by
/// `|A_i|` descending, ties going to the smaller representative.
pub fn decompose_by_prime_index_subgroup(a: &ElementSet) -> Result<CosetDecomposition> {
    if a.is_empty() {
        return Err(Error::Precondition("cannot decompose the empty set".into()));
    }
    let group = a.group();
    let projection = group.least_prime_projection();
    let p = projection.prime();

    let mut members: Vec<Option<ElementSet>> = vec![None; p];
    let mut reps = vec![usize::MAX; p];
    for i in a.iter() {
        let c = projection.label(i);
        members[c]
            .get_or_insert_with(|| ElementSet::empty(group))
            .insert_unchecked(i);
        reps[c] = reps[c].min(i);
    }

    let mut classes: Vec<CosetClass> = members
        .into_iter()
        .enumerate()
        .filter_map(|(label, set)| {
            set.map(|s| {
                let rep = reps[label];
                CosetClass {
                    rep,
                    part: translate_index(&s, group.neg_index(rep)),
                    label,
                }
            })
        })
        .collect();
    classes.sort_by(|x, y| y.part.len().cmp(&x.part.len()).then(x.rep.cmp(&y.rep)));
    debug_assert!(classes
        .iter()
        .all(|c| c.part.iter().all(|x| projection.in_kernel(x))));
    Ok(CosetDecomposition {
        projection,
        classes,
    })
}
