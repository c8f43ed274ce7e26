//! Bit-parallel subsets of a finite abelian group and the sumset kernels.
//!
//! An [`ElementSet`] is a bit vector over canonical element indices. Sumsets
//! are built from one primitive, "OR the translate of a set into another",
//! which works a block of `n_d` indices at a time: translation by `g`
//! rotates every block by the last coordinate of `g` and permutes blocks by
//! the remaining coordinates.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bits::{self, Ones};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, SubgroupProjection};

/// Default cap on the number of subsets the brute-force oracle may visit.
pub const ORACLE_BUDGET: u64 = 1 << 26;

/// A subset of a group, stored as a bit vector of length `|G|`.
#[derive(Clone)]
pub struct ElementSet {
    group: GroupSpec,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(group: &GroupSpec) -> Self {
        ElementSet {
            group: group.clone(),
            words: vec![0; bits::words_for(group.order())],
        }
    }

    pub fn singleton(group: &GroupSpec, index: usize) -> Result<Self> {
        Self::from_indices(group, [index])
    }

    /// `{0}`.
    pub fn zero(group: &GroupSpec) -> Self {
        let mut s = Self::empty(group);
        s.words[0] = 1;
        s
    }

    pub fn full(group: &GroupSpec) -> Self {
        let mut s = Self::empty(group);
        for i in 0..group.order() {
            s.insert_unchecked(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        group: &GroupSpec,
        indices: I,
    ) -> Result<Self> {
        let mut s = Self::empty(group);
        for i in indices {
            s.insert(i)?;
        }
        Ok(s)
    }

    pub fn from_elements(group: &GroupSpec, elements: &[GroupElement]) -> Result<Self> {
        let mut s = Self::empty(group);
        for x in elements {
            s.insert_unchecked(group.index_of(x)?);
        }
        Ok(s)
    }

    /// Subset of a group of order at most 64 given by a bit mask.
    pub fn from_mask(group: &GroupSpec, mask: u64) -> Self {
        assert!(group.order() <= 64, "from_mask needs |G| <= 64");
        let mut s = Self::empty(group);
        let keep = if group.order() == 64 {
            u64::MAX
        } else {
            (1u64 << group.order()) - 1
        };
        s.words[0] = mask & keep;
        s
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Cardinality (population count).
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.group.order() && self.words[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) -> Result<bool> {
        if index >= self.group.order() {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.group.order(),
            });
        }
        let fresh = !self.contains(index);
        self.insert_unchecked(index);
        Ok(fresh)
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, index: usize) {
        self.words[index / 64] |= 1 << (index % 64);
    }

    pub fn remove(&mut self, index: usize) -> bool {
        let had = self.contains(index);
        if had {
            self.words[index / 64] &= !(1 << (index % 64));
        }
        had
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        Ones::new(&self.words)
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_index(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.iter()
            .map(|i| GroupElement(self.group.coords_of(i)))
            .collect()
    }

    pub fn union_with(&mut self, other: &ElementSet) -> Result<()> {
        self.group.ensure_same(&other.group)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        Ok(())
    }

    pub fn union(&self, other: &ElementSet) -> Result<ElementSet> {
        let mut out = self.clone();
        out.union_with(other)?;
        Ok(out)
    }

    pub fn intersection(&self, other: &ElementSet) -> Result<ElementSet> {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &ElementSet) -> Result<ElementSet> {
        self.zip_words(other, |a, b| a & !b)
    }

    fn zip_words(&self, other: &ElementSet, f: impl Fn(u64, u64) -> u64) -> Result<ElementSet> {
        self.group.ensure_same(&other.group)?;
        Ok(ElementSet {
            group: self.group.clone(),
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.group.same_group(&other.group)
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Parses a set literal: coordinate tuples `"(0,1),(1,2)"` or bare
    /// indices `"0,5,7"`, optionally wrapped in braces. `""` and `"{}"`
    /// are the empty set.
    pub fn parse(group: &GroupSpec, s: &str) -> Result<ElementSet> {
        let body = s.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body)
            .trim();
        let mut out = ElementSet::empty(group);
        if body.is_empty() {
            return Ok(out);
        }
        if body.contains('(') {
            let mut rest = body;
            loop {
                rest = rest.trim_start();
                let open = rest
                    .strip_prefix('(')
                    .ok_or_else(|| Error::parse(rest, "expected `(`"))?;
                let close = open
                    .find(')')
                    .ok_or_else(|| Error::parse(rest, "unterminated tuple"))?;
                let tuple = &rest[..close + 2];
                let coords = open[..close]
                    .split(',')
                    .map(|c| c.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| {
                        Error::parse(tuple, "coordinates must be non-negative integers")
                    })?;
                let x = group
                    .element(&coords)
                    .map_err(|e| Error::parse(tuple, e.to_string()))?;
                out.insert_unchecked(group.index_of(&x)?);
                rest = open[close + 1..].trim_start();
                if rest.is_empty() {
                    break;
                }
                rest = rest
                    .strip_prefix(',')
                    .ok_or_else(|| Error::parse(rest, "expected `,` between tuples"))?;
            }
        } else {
            for token in body.split(',') {
                let token = token.trim();
                let i: usize = token
                    .parse()
                    .map_err(|_| Error::parse(token, "expected a non-negative element index"))?;
                out.insert(i)
                    .map_err(|e| Error::parse(token, e.to_string()))?;
            }
        }
        Ok(out)
    }

    /// Coordinate-tuple rendering, e.g. `{(0,1),(1,2)}`.
    pub fn to_tuple_string(&self) -> String {
        let parts: Vec<String> = self.elements().iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_group(&other.group) && self.words == other.words
    }
}

impl Eq for ElementSet {}

impl Hash for ElementSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.words.hash(state);
    }
}

/// Index-lexicographic order on the sorted member lists.
impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.group
            .cmp(&other.group)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

/// `{i_1,i_2,...}` with indices ascending.
impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.group)
    }
}

/// `dst |= src + g`, where `g` is a canonical index.
pub(crate) fn or_translated(dst: &mut [u64], src: &ElementSet, g: usize) {
    let group = &src.group;
    let moduli = group.moduli();
    let last = *moduli.last().expect("rank >= 1");
    let blocks = group.order() / last;
    let block_cost = blocks * (last / 64 + 2);
    let sparse_cost = match group.cayley() {
        Some(_) => src.len(),
        None => src.len() * 2 * moduli.len(),
    };

    if sparse_cost <= block_cost {
        for i in src.iter() {
            let j = group.add_index(i, g);
            dst[j / 64] |= 1 << (j % 64);
        }
        return;
    }

    let shift = g % last;
    let prefix = moduli.len() - 1;
    let coords = group.coords_of(g);
    let block_strides: Vec<usize> = group.strides()[..prefix].iter().map(|s| s / last).collect();
    let mut digits = vec![0usize; prefix];
    let mut dest_block: usize = (0..prefix).map(|j| coords[j] * block_strides[j]).sum();

    for block in 0..blocks {
        let src_pos = block * last;
        let dst_pos = dest_block * last;
        bits::or_range(dst, dst_pos + shift, &src.words, src_pos, last - shift);
        if shift > 0 {
            bits::or_range(dst, dst_pos, &src.words, src_pos + last - shift, shift);
        }
        for j in (0..prefix).rev() {
            let n = moduli[j];
            let old = (digits[j] + coords[j]) % n;
            digits[j] = (digits[j] + 1) % n;
            let new = (digits[j] + coords[j]) % n;
            dest_block = dest_block + new * block_strides[j] - old * block_strides[j];
            if digits[j] != 0 {
                break;
            }
        }
    }
}

/// `{x + g : x in a}`.
pub fn translate(a: &ElementSet, g: &GroupElement) -> Result<ElementSet> {
    let gi = a.group.index_of(g)?;
    Ok(translate_index(a, gi))
}

/// [`translate`] by a canonical index.
pub fn translate_index(a: &ElementSet, g: usize) -> ElementSet {
    let mut out = ElementSet::empty(&a.group);
    or_translated(&mut out.words, a, g);
    out
}

/// `A + B`. Empty if either side is empty.
pub fn sumset(a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    a.group.ensure_same(&b.group)?;
    let (outer, inner) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut out = ElementSet::empty(&a.group);
    for g in outer.iter() {
        or_translated(&mut out.words, inner, g);
    }
    Ok(out)
}

/// `A_1 + ... + A_n`, with the empty sum equal to `{0}`.
pub fn iterated_sumset(group: &GroupSpec, parts: &[ElementSet]) -> Result<ElementSet> {
    let mut acc = ElementSet::zero(group);
    for part in parts {
        acc = sumset(&acc, part)?;
    }
    Ok(acc)
}

/// Layered subset-sum DP. With `target = Some(k)` only the layers that can
/// still reach `k` are updated, so only layer `k` is exact on return.
fn restricted_layers(a: &ElementSet, kmax: usize, target: Option<usize>) -> Vec<ElementSet> {
    let mut layers = vec![ElementSet::empty(&a.group); kmax + 1];
    layers[0] = ElementSet::zero(&a.group);
    let members = a.to_indices();
    let n = members.len();
    for (t, &g) in members.iter().enumerate() {
        let hi = kmax.min(t + 1);
        let lo = match target {
            Some(k) => k.saturating_sub(n - t - 1).max(1),
            None => 1,
        };
        for j in (lo..=hi).rev() {
            let (below, above) = layers.split_at_mut(j);
            or_translated(&mut above[0].words, &below[j - 1], g);
        }
    }
    layers
}

/// `k^A`: all sums of `k` pairwise distinct members of `a`.
///
/// `0^A = {0}`, `1^A = A`, and the result is empty when `k > |A|`.
pub fn restricted_sumset(a: &ElementSet, k: usize) -> ElementSet {
    if k > a.len() {
        return ElementSet::empty(&a.group);
    }
    restricted_layers(a, k, Some(k)).swap_remove(k)
}

/// `[0^A, 1^A, ..., kmax^A]` from a single DP pass.
pub fn restricted_sumset_layers(a: &ElementSet, kmax: usize) -> Vec<ElementSet> {
    restricted_layers(a, kmax, None)
}

/// `l_1^A_1 + ... + l_m^A_m`.
pub fn graded_restricted_sum(
    group: &GroupSpec,
    parts: &[(ElementSet, usize)],
) -> Result<ElementSet> {
    let mut acc = ElementSet::zero(group);
    for (set, l) in parts {
        group.ensure_same(set.group())?;
        if *l > set.len() {
            return Ok(ElementSet::empty(group));
        }
        acc = sumset(&acc, &restricted_sumset(set, *l))?;
    }
    Ok(acc)
}

/// Reference `k^A` by explicit enumeration of all `k`-subsets, with sums
/// taken in coordinates. Shares no code with the DP.
pub fn oracle_restricted_sumset(a: &ElementSet, k: usize) -> Result<ElementSet> {
    oracle_restricted_sumset_with_budget(a, k, ORACLE_BUDGET)
}

pub fn oracle_restricted_sumset_with_budget(
    a: &ElementSet,
    k: usize,
    budget: u64,
) -> Result<ElementSet> {
    let group = a.group();
    let members: Vec<GroupElement> = a.elements();
    let n = members.len();
    let mut out = ElementSet::empty(group);
    if k > n {
        return Ok(out);
    }
    let count = binomial(n as u64, k as u64);
    if count.is_none_or(|c| c > budget) {
        return Err(Error::Budget(format!(
            "C({n},{k}) subsets exceeds budget {budget}"
        )));
    }

    fn go(
        group: &GroupSpec,
        members: &[GroupElement],
        start: usize,
        left: usize,
        partial: &GroupElement,
        out: &mut ElementSet,
    ) {
        if left == 0 {
            out.insert_unchecked(group.index_of(partial).expect("valid sum"));
            return;
        }
        for i in start..=members.len() - left {
            let next = group.add(partial, &members[i]).expect("valid members");
            go(group, members, i + 1, left - 1, &next, out);
        }
    }
    go(group, &members, 0, k, &group.zero(), &mut out);
    Ok(out)
}

pub(crate) fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Image of `a` in the quotient `G/H`.
pub fn project(a: &ElementSet, proj: &SubgroupProjection) -> Result<ElementSet> {
    a.group.ensure_same(proj.parent())?;
    let mut out = ElementSet::empty(proj.quotient());
    for i in a.iter() {
        out.insert_unchecked(proj.label(i));
    }
    Ok(out)
}
