use super::decompose::{decompose_by_prime_index_subgroup, CosetDecomposition};
use super::profile::{build_multiplicity_profile, MultiplicityProfile};
use super::quotient::Representations;
use super::{CaseTag, Certificate, Selection, WitnessSet};
use crate::bounds::restricted_bound;
use crate::error::{Error, Result};
use crate::sets::{
    graded_restricted_sum, iterated_sumset, restricted_sumset, translate_index, ElementSet,
};

fn construction(case: CaseTag, detail: impl Into<String>) -> Error {
    Error::Construction {
        case: case.to_string(),
        detail: detail.into(),
    }
}

struct Parts {
    witness: Vec<WitnessSet>,
    profile: Option<MultiplicityProfile>,
    selections: Vec<Selection>,
    representations: Vec<Vec<usize>>,
}

impl Parts {
    fn new() -> Self {
        Parts {
            witness: Vec::new(),
            profile: None,
            selections: Vec::new(),
            representations: Vec::new(),
        }
    }

    fn push(&mut self, coset_label: usize, elements: ElementSet) {
        self.witness.push(WitnessSet {
            coset_label,
            elements,
        });
    }

    fn finish(self, a: &ElementSet, k: usize, case: CaseTag) -> Result<Certificate> {
        if let Some(pos) = self.witness.iter().position(|w| w.elements.is_empty()) {
            return Err(construction(case, format!("witness set {pos} is empty")));
        }
        let group = a.group().clone();
        let claimed_total = self.witness.iter().map(|w| w.elements.len()).sum();
        Ok(Certificate {
            p_of_g: group.least_prime_divisor(),
            bound: restricted_bound(&group, a.len(), k),
            group,
            set: a.clone(),
            k,
            case,
            witness: self.witness,
            profile: self.profile,
            selections: self.selections,
            representations: self.representations,
            claimed_total,
        })
    }
}

fn one_based(tuple: &[usize]) -> Vec<usize> {
    tuple.iter().map(|i| i + 1).collect()
}

/// Decides which case [`build_witness`] takes for `(A, k)`.
pub fn route(a: &ElementSet, k: usize) -> Result<CaseTag> {
    Ok(plan(a, k)?.0)
}

type Plan = (
    CaseTag,
    Option<CosetDecomposition>,
    Option<MultiplicityProfile>,
);

fn plan(a: &ElementSet, k: usize) -> Result<Plan> {
    if a.is_empty() {
        return Err(Error::Precondition("the set must be non-empty".into()));
    }
    let group = a.group();
    if group.is_prime_order() || k <= 2 || a.len() <= k {
        return Ok((CaseTag::Base, None, None));
    }
    let d = decompose_by_prime_index_subgroup(a)?;
    let p = d.projection.prime();
    let m = d.m();
    if m >= k && restricted_sumset(&d.quotient_set(), k).len() == p {
        return Ok((CaseTag::Projection, Some(d), None));
    }
    if a.len() == m {
        return Ok((CaseTag::SingletonClasses, Some(d), None));
    }
    if m > k {
        return Ok((CaseTag::CaseLarge, Some(d), None));
    }
    let profile = build_multiplicity_profile(&d, k)?;
    let case = if m + profile.extra_count() <= p {
        CaseTag::CaseSmall
    } else {
        CaseTag::RProjection
    };
    Ok((case, Some(d), Some(profile)))
}

/// Builds a certificate for `|k^A| >= min{p(G), k|A| - k^2 + 1}` by the
/// first matching case of the coset argument.
pub fn build_witness(a: &ElementSet, k: usize) -> Result<Certificate> {
    let (case, d, profile) = plan(a, k)?;
    match (case, d, profile) {
        (CaseTag::Base, _, _) => certify_base(a, k),
        (CaseTag::Projection, Some(d), _) => certify_projection(&d, a, k),
        (CaseTag::SingletonClasses, Some(d), _) => certify_singleton_classes(&d, a, k),
        (CaseTag::CaseLarge, Some(d), _) => certify_case_large(&d, a, k),
        (CaseTag::CaseSmall, Some(d), Some(p)) => certify_case_small(&d, a, k, &p),
        (CaseTag::RProjection, Some(d), Some(p)) => certify_r_projection(&d, a, k, &p),
        (case, _, _) => unreachable!("plan for {case} lacks its data"),
    }
}

/// `k^A` computed directly and split by coset of `H`.
pub fn certify_base(a: &ElementSet, k: usize) -> Result<Certificate> {
    let group = a.group();
    let proj = group.least_prime_projection();
    let sums = restricted_sumset(a, k);
    let mut by_label = vec![ElementSet::empty(group); proj.prime()];
    for x in sums.iter() {
        by_label[proj.label(x)].insert_unchecked(x);
    }
    let mut parts = Parts::new();
    for (label, set) in by_label.into_iter().enumerate() {
        if !set.is_empty() {
            parts.push(label, set);
        }
    }
    parts.finish(a, k, CaseTag::Base)
}

/// Lifts each target `c̄` of `k^Ā` to `a_{i_1} + ... + a_{i_k}` for its
/// smallest index tuple.
fn lift_quotient_sums(d: &CosetDecomposition, k: usize, targets: &ElementSet, parts: &mut Parts) {
    let group = d.projection.parent();
    let reps = Representations::new(d.projection.quotient(), &d.labels(), k);
    for target in targets.iter() {
        let tuple = reps.find(target, k).expect("target lies in k^Ā");
        let x = group.sum_indices(tuple.iter().map(|&i| d.classes[i].rep));
        parts.push(target, ElementSet::singleton(group, x).expect("in range"));
        parts.representations.push(one_based(&tuple));
    }
}

/// `k^Ā = G/H`: one element of `k^A` in every coset.
pub fn certify_projection(d: &CosetDecomposition, a: &ElementSet, k: usize) -> Result<Certificate> {
    let sums = restricted_sumset(&d.quotient_set(), k);
    if sums.len() != d.projection.prime() {
        return Err(Error::CaseRouting(format!(
            "k^Ā has {} of {} cosets",
            sums.len(),
            d.projection.prime()
        )));
    }
    let mut parts = Parts::new();
    lift_quotient_sums(d, k, &sums, &mut parts);
    parts.finish(a, k, CaseTag::Projection)
}

/// `|A| = m`: every element of `k^Ā` lifts to one element of `k^A`.
pub fn certify_singleton_classes(
    d: &CosetDecomposition,
    a: &ElementSet,
    k: usize,
) -> Result<Certificate> {
    if d.total() != d.m() {
        return Err(Error::CaseRouting(
            "some class has more than one element".into(),
        ));
    }
    let sums = restricted_sumset(&d.quotient_set(), k);
    let mut parts = Parts::new();
    lift_quotient_sums(d, k, &sums, &mut parts);
    parts.finish(a, k, CaseTag::SingletonClasses)
}

/// `m >= k + 1`: the translates `b_j + U_j` for `j <= k + 1`, then one
/// translate `a_{i_1} + ... + a_{i_k} + (A_{i_1} + ... + A_{i_k})` for each
/// coset in `V_s`, `s = 1..m-k-1`.
pub fn certify_case_large(d: &CosetDecomposition, a: &ElementSet, k: usize) -> Result<Certificate> {
    let m = d.m();
    if m < k + 1 {
        return Err(Error::CaseRouting(format!(
            "m = {m} is below k + 1 = {}",
            k + 1
        )));
    }
    let group = a.group();
    let proj = &d.projection;
    let mut parts = Parts::new();

    for j in 0..=k {
        let others: Vec<usize> = (0..=k).filter(|&i| i != j).collect();
        let b = group.sum_indices(others.iter().map(|&i| d.classes[i].rep));
        let summands: Vec<ElementSet> = others.iter().map(|&i| d.classes[i].part.clone()).collect();
        let u = iterated_sumset(group, &summands)?;
        parts.push(proj.label(b), translate_index(&u, b));
    }

    let labels = d.labels();
    let mut previous = Representations::new(proj.quotient(), &labels[..=k], k)
        .sums(k)
        .clone();
    for s in 1..m - k {
        let reps = Representations::new(proj.quotient(), &labels[..k + s + 1], k);
        let current = reps.sums(k).clone();
        for c in current.difference(&previous)?.iter() {
            let tuple = reps.find(c, k).ok_or_else(|| {
                construction(
                    CaseTag::CaseLarge,
                    format!("no representation of {c} in V_{s}"),
                )
            })?;
            let shift = group.sum_indices(tuple.iter().map(|&i| d.classes[i].rep));
            let summands: Vec<ElementSet> =
                tuple.iter().map(|&i| d.classes[i].part.clone()).collect();
            let w = translate_index(&iterated_sumset(group, &summands)?, shift);
            if proj.label(shift) != c {
                return Err(construction(
                    CaseTag::CaseLarge,
                    format!("lift of {c} lands in another coset"),
                ));
            }
            parts.push(c, w);
            parts.representations.push(one_based(&tuple));
        }
        previous = current;
    }
    parts.finish(a, k, CaseTag::CaseLarge)
}

/// `n_{i,I}`: `n_i - 1` on `[r,t] \ I`, `n_i + 1` on `I \ [r,t]`, else `n_i`.
/// `indices` is 1-based.
fn adjusted(profile: &MultiplicityProfile, indices: &[usize]) -> Vec<usize> {
    let (r, t) = (profile.r, profile.t);
    profile
        .n
        .iter()
        .enumerate()
        .map(|(i0, &n)| {
            let i = i0 + 1;
            let in_range = (r..=t).contains(&i);
            let in_set = indices.contains(&i);
            match (in_range, in_set) {
                (true, false) => n - 1,
                (false, true) => n + 1,
                _ => n,
            }
        })
        .collect()
}

/// Quantities shared by the two `m <= k` cases.
struct SmallCase {
    /// `b_j` for `j = 1..m` (0-based storage).
    b: Vec<usize>,
    /// `d_j = b_j - (a_r + ... + a_t)`.
    d: Vec<usize>,
    /// `(t - r + 1)`-fold restricted sums over the first `t` labels.
    reps: Representations,
    q: usize,
}

impl SmallCase {
    fn new(dec: &CosetDecomposition, profile: &MultiplicityProfile) -> Self {
        let group = dec.projection.parent();
        let m = dec.m();
        let b: Vec<usize> = (0..m)
            .map(|j| {
                group.sum_indices((0..m).map(|i| {
                    let n = profile.n[i] - usize::from(i == j);
                    group.mul_index(dec.classes[i].rep, n)
                }))
            })
            .collect();
        let tail = group.sum_indices((profile.r - 1..profile.t).map(|i| dec.classes[i].rep));
        let neg_tail = group.neg_index(tail);
        let d = b.iter().map(|&x| group.add_index(x, neg_tail)).collect();
        let q = profile.t - profile.r + 1;
        let reps = Representations::new(dec.projection.quotient(), &dec.labels()[..profile.t], q);
        SmallCase { b, d, reps, q }
    }

    /// Smallest `(j, I)` (both 1-based) with `d̄_j + Σ_{i∈I} ā_i = target`.
    fn representation(
        &self,
        dec: &CosetDecomposition,
        target: usize,
    ) -> Option<(usize, Vec<usize>)> {
        let proj = &dec.projection;
        let zp = proj.quotient();
        self.d.iter().enumerate().find_map(|(j, &dj)| {
            let rest = zp.add_index(target, zp.neg_index(proj.label(dj)));
            self.reps
                .find(rest, self.q)
                .map(|tuple| (j + 1, one_based(&tuple)))
        })
    }

    /// `n_{·,I}` with the `j`-th entry lowered by one, checked against `|A_i|`.
    fn graded_multiplicities(
        &self,
        dec: &CosetDecomposition,
        profile: &MultiplicityProfile,
        j: usize,
        indices: &[usize],
        case: CaseTag,
    ) -> Result<Vec<usize>> {
        let mut n = adjusted(profile, indices);
        if n[j - 1] == 0 {
            return Err(construction(
                case,
                format!("n_{{{j},I}} = 0 for I = {indices:?}"),
            ));
        }
        n[j - 1] -= 1;
        for (i, (&ni, class)) in n.iter().zip(&dec.classes).enumerate() {
            if ni > class.part.len() {
                return Err(construction(
                    case,
                    format!(
                        "multiplicity {ni} exceeds |A_{}| = {}",
                        i + 1,
                        class.part.len()
                    ),
                ));
            }
        }
        Ok(n)
    }

    /// `c = d_j + Σ_{i∈I} a_i`.
    fn shift(&self, dec: &CosetDecomposition, j: usize, indices: &[usize]) -> usize {
        let group = dec.projection.parent();
        let lifted = group.sum_indices(indices.iter().map(|&i| dec.classes[i - 1].rep));
        group.add_index(self.d[j - 1], lifted)
    }
}

fn graded(dec: &CosetDecomposition, n: &[usize]) -> Result<ElementSet> {
    let parts: Vec<(ElementSet, usize)> = dec
        .classes
        .iter()
        .zip(n)
        .map(|(c, &l)| (c.part.clone(), l))
        .collect();
    graded_restricted_sum(dec.projection.parent(), &parts)
}

/// `m <= k`, `m + (t-r+1)(r-1) <= p(G)`: the translates `b_j + U_j` and
/// `(t-r+1)(r-1)` further translates `c_u + V_u` in fresh cosets.
pub fn certify_case_small(
    dec: &CosetDecomposition,
    a: &ElementSet,
    k: usize,
    profile: &MultiplicityProfile,
) -> Result<Certificate> {
    const CASE: CaseTag = CaseTag::CaseSmall;
    let proj = &dec.projection;
    let m = dec.m();
    let small = SmallCase::new(dec, profile);
    let mut parts = Parts::new();
    parts.profile = Some(profile.clone());

    let mut b_labels = ElementSet::empty(proj.quotient());
    for j in 0..m {
        let mut n = profile.n.clone();
        n[j] -= 1;
        let u = graded(dec, &n)?;
        if u.is_empty() {
            return Err(construction(CASE, format!("U_{} is empty", j + 1)));
        }
        let label = proj.label(small.b[j]);
        b_labels.insert_unchecked(label);
        parts.push(label, translate_index(&u, small.b[j]));
    }
    if b_labels.len() != m {
        return Err(construction(CASE, "the b_j do not lie in distinct cosets"));
    }

    let mut candidates: Vec<(usize, Vec<usize>, usize)> = (0..proj.prime())
        .filter(|&label| !b_labels.contains(label))
        .filter_map(|label| {
            small
                .representation(dec, label)
                .map(|(j, indices)| (j, indices, label))
        })
        .collect();
    candidates.sort();
    let need = profile.extra_count();
    if candidates.len() < need {
        return Err(construction(
            CASE,
            format!("found {} new cosets in R, need {need}", candidates.len()),
        ));
    }
    for (j, indices, label) in candidates.into_iter().take(need) {
        let n = small.graded_multiplicities(dec, profile, j, &indices, CASE)?;
        let v = graded(dec, &n)?;
        if v.is_empty() {
            return Err(construction(
                CASE,
                format!("V for (j={j}, I={indices:?}) is empty"),
            ));
        }
        let c = small.shift(dec, j, &indices);
        debug_assert_eq!(proj.label(c), label);
        parts.push(label, translate_index(&v, c));
        parts.selections.push(Selection { j, indices });
    }
    parts.finish(a, k, CASE)
}

/// `m <= k`, `m + (t-r+1)(r-1) > p(G)`: `R` covers `G/H`, and each of its
/// cosets gets one lifted element of `k^A`.
pub fn certify_r_projection(
    dec: &CosetDecomposition,
    a: &ElementSet,
    k: usize,
    profile: &MultiplicityProfile,
) -> Result<Certificate> {
    const CASE: CaseTag = CaseTag::RProjection;
    let group = a.group();
    let proj = &dec.projection;
    let small = SmallCase::new(dec, profile);
    let mut parts = Parts::new();
    parts.profile = Some(profile.clone());

    for label in 0..proj.prime() {
        let Some((j, indices)) = small.representation(dec, label) else {
            continue;
        };
        let n = small.graded_multiplicities(dec, profile, j, &indices, CASE)?;
        // One element of S: the smallest n_i members of each A_i.
        let inner = group.sum_indices(
            dec.classes
                .iter()
                .zip(&n)
                .flat_map(|(c, &l)| c.part.iter().take(l)),
        );
        let x = group.add_index(small.shift(dec, j, &indices), inner);
        debug_assert_eq!(proj.label(x), label);
        parts.push(label, ElementSet::singleton(group, x)?);
        parts.selections.push(Selection { j, indices });
    }
    parts.finish(a, k, CASE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn set(m: &[usize], xs: &[usize]) -> ElementSet {
        let g = GroupSpec::new(m).unwrap();
        ElementSet::from_indices(&g, xs.iter().copied()).unwrap()
    }

    fn witness_summary(c: &Certificate) -> Vec<Vec<usize>> {
        c.witness.iter().map(|w| w.elements.to_indices()).collect()
    }

    #[test]
    fn z8_case_small() {
        let a = set(&[8], &[0, 1, 2, 4]);
        let c = build_witness(&a, 3).unwrap();
        assert_eq!(c.case, CaseTag::CaseSmall);
        assert_eq!(witness_summary(&c), vec![vec![3, 5, 7], vec![6]]);
        assert_eq!((c.claimed_total, c.bound), (4, 2));
        assert_eq!(c.profile.as_ref().unwrap().n, vec![3, 1]);
    }

    #[test]
    fn z9_case_large_by_direct_constructor() {
        let a = set(&[9], &[0, 3, 1, 2]);
        // k = 2 is routed to the base case.
        assert_eq!(route(&a, 2).unwrap(), CaseTag::Base);
        let d = decompose_by_prime_index_subgroup(&a).unwrap();
        let c = certify_case_large(&d, &a, 2).unwrap();
        assert_eq!(witness_summary(&c), vec![vec![3], vec![2, 5], vec![1, 4]]);
        assert_eq!((c.claimed_total, c.bound), (5, 3));
    }

    #[test]
    fn prime_order_is_base() {
        let a = set(&[7], &[0, 1, 3, 5]);
        for k in 0..=5 {
            let c = build_witness(&a, k).unwrap();
            assert_eq!(c.case, CaseTag::Base);
            let mut all = ElementSet::empty(a.group());
            for w in &c.witness {
                all.union_with(&w.elements).unwrap();
            }
            assert_eq!(all, restricted_sumset(&a, k));
        }
    }

    #[test]
    fn routing_of_other_cases() {
        // Z_3 x Z_3: classes {0,1}, {3}, {6}; 3^Ā = {0}.
        let a = set(&[3, 3], &[0, 3, 6, 1]);
        assert_eq!(route(&a, 3).unwrap(), CaseTag::CaseSmall);
        assert_eq!(route(&a, 2).unwrap(), CaseTag::Base);
        // Z_5 x Z_5: four classes, 3^Ā = {0,1,3,4}.
        let b = set(&[5, 5], &[0, 1, 5, 10, 15]);
        assert_eq!(route(&b, 3).unwrap(), CaseTag::CaseLarge);
        // Z_25: Ā = Z_5, so 3^Ā = Z_5.
        let c = set(&[25], &[0, 1, 2, 3, 4, 5]);
        assert_eq!(route(&c, 3).unwrap(), CaseTag::Projection);
        // Z_5 x Z_5: four singleton classes, 3^Ā = {0,1,3,4}.
        let d = set(&[5, 5], &[0, 5, 10, 15]);
        assert_eq!(route(&d, 3).unwrap(), CaseTag::SingletonClasses);
        assert!(route(&ElementSet::empty(&GroupSpec::cyclic(9).unwrap()), 3).is_err());
    }

    #[test]
    fn direct_constructors_reject_wrong_routes() {
        let a = set(&[8], &[0, 1, 2, 4]);
        let d = decompose_by_prime_index_subgroup(&a).unwrap();
        assert!(matches!(
            certify_case_large(&d, &a, 3),
            Err(Error::CaseRouting(_))
        ));
        assert!(matches!(
            certify_singleton_classes(&d, &a, 3),
            Err(Error::CaseRouting(_))
        ));
        assert!(matches!(
            certify_projection(&d, &a, 3),
            Err(Error::CaseRouting(_))
        ));
    }
}
