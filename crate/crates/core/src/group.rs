//! Finite abelian groups given as products of cyclic groups.
//!
//! A group `Z_{n_1} x ... x Z_{n_d}` is stored as its ordered list of moduli.
//! Elements are coordinate vectors, and each element also has a canonical
//! mixed-radix index in `[0, order)` with the *last* coordinate varying
//! fastest. That index fixes the bit layout used by [`crate::ElementSet`].

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Orders up to this size get a precomputed addition table on indices.
const CAYLEY_MAX_ORDER: usize = 256;

/// A finite abelian group `Z_{n_1} x ... x Z_{n_d}` with every `n_j >= 2`.
///
/// Cloning is cheap; the moduli and derived tables are shared.
#[derive(Clone)]
pub struct GroupSpec {
    inner: Arc<Inner>,
}

struct Inner {
    moduli: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
    cayley: Option<Vec<u16>>,
}

impl GroupSpec {
    /// Builds a group from a list of cyclic moduli. Entries equal to 1 are
    /// dropped; the remaining order is preserved.
    pub fn new(moduli: &[usize]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::TrivialGroup("empty moduli list".into()));
        }
        if let Some(pos) = moduli.iter().position(|&n| n == 0) {
            return Err(Error::Range(format!("modulus at position {pos} is 0")));
        }
        let kept: Vec<usize> = moduli.iter().copied().filter(|&n| n != 1).collect();
        if kept.is_empty() {
            return Err(Error::TrivialGroup(format!("{moduli:?} has order 1")));
        }
        let order = kept
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::Range(format!("order of {kept:?} overflows")))?;

        let mut strides = vec![1usize; kept.len()];
        for j in (0..kept.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * kept[j + 1];
        }
        let mut inner = Inner {
            moduli: kept,
            strides,
            order,
            cayley: None,
        };
        if order <= CAYLEY_MAX_ORDER {
            let mut table = vec![0u16; order * order];
            for i in 0..order {
                for j in 0..order {
                    table[i * order + j] = inner.add_index_slow(i, j) as u16;
                }
            }
            inner.cayley = Some(table);
        }
        Ok(GroupSpec {
            inner: Arc::new(inner),
        })
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn moduli(&self) -> &[usize] {
        &self.inner.moduli
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.inner.moduli.len()
    }

    pub(crate) fn strides(&self) -> &[usize] {
        &self.inner.strides
    }

    pub(crate) fn cayley(&self) -> Option<&[u16]> {
        self.inner.cayley.as_deref()
    }

    /// `p(G)`, the least prime dividing the order.
    pub fn least_prime_divisor(&self) -> usize {
        least_prime_factor(self.order())
    }

    pub fn is_prime_order(&self) -> bool {
        self.least_prime_divisor() == self.order()
    }

    pub fn same_group(&self, other: &GroupSpec) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.moduli() == other.moduli()
    }

    pub(crate) fn ensure_same(&self, other: &GroupSpec) -> Result<()> {
        if self.same_group(other) {
            Ok(())
        } else {
            Err(Error::IncompatibleGroups {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Validates coordinates and wraps them as an element.
    pub fn element(&self, coords: &[usize]) -> Result<GroupElement> {
        self.check(coords)?;
        Ok(GroupElement(coords.to_vec()))
    }

    fn check(&self, coords: &[usize]) -> Result<()> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidElement(format!(
                "{} coordinates given for a group of rank {}",
                coords.len(),
                self.rank()
            )));
        }
        for (j, (&c, &n)) in coords.iter().zip(self.moduli()).enumerate() {
            if c >= n {
                return Err(Error::InvalidElement(format!(
                    "coordinate {j} is {c}, must be below {n}"
                )));
            }
        }
        Ok(())
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check(&x.0)?;
        self.check(&y.0)?;
        Ok(GroupElement(
            x.0.iter()
                .zip(&y.0)
                .zip(self.moduli())
                .map(|((&a, &b), &n)| (a + b) % n)
                .collect(),
        ))
    }

    pub fn neg(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check(&x.0)?;
        Ok(GroupElement(
            x.0.iter()
                .zip(self.moduli())
                .map(|(&a, &n)| (n - a) % n)
                .collect(),
        ))
    }

    pub fn index_of(&self, x: &GroupElement) -> Result<usize> {
        self.check(&x.0)?;
        Ok(x.0.iter().zip(self.strides()).map(|(&c, &s)| c * s).sum())
    }

    pub fn element_of(&self, index: usize) -> Result<GroupElement> {
        if index >= self.order() {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.order(),
            });
        }
        Ok(GroupElement(self.coords_of(index)))
    }

    pub(crate) fn coords_of(&self, index: usize) -> Vec<usize> {
        self.moduli()
            .iter()
            .zip(self.strides())
            .map(|(&n, &s)| (index / s) % n)
            .collect()
    }

    /// Group addition on canonical indices. Both indices must be below the order.
    #[inline]
    pub fn add_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.order() && j < self.order());
        match self.cayley() {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.inner.add_index_slow(i, j),
        }
    }

    pub fn neg_index(&self, i: usize) -> usize {
        let mut out = 0;
        for (&n, &s) in self.moduli().iter().zip(self.strides()) {
            let c = (i / s) % n;
            out += ((n - c) % n) * s;
        }
        out
    }

    /// `m·x` for an index `x`.
    pub fn mul_index(&self, x: usize, m: usize) -> usize {
        let mut out = 0;
        for (&n, &s) in self.moduli().iter().zip(self.strides()) {
            let c = (x / s) % n;
            out += ((c * (m % n)) % n) * s;
        }
        out
    }

    /// Sum of a sequence of indices.
    pub fn sum_indices<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.add_index(acc, x))
    }

    /// The kernel of `x -> x_pivot mod p` for the smallest pivot coordinate
    /// whose modulus is divisible by `p`. The kernel has index `p`.
    pub fn prime_index_subgroup(&self, p: usize) -> Result<SubgroupProjection> {
        if p < 2 || least_prime_factor(p) != p {
            return Err(Error::Range(format!("{p} is not prime")));
        }
        let pivot = self
            .moduli()
            .iter()
            .position(|&n| n % p == 0)
            .ok_or_else(|| Error::Precondition(format!("{p} divides no modulus of {self}")))?;
        Ok(SubgroupProjection {
            parent: self.clone(),
            p,
            pivot,
            quotient: GroupSpec::cyclic(p)?,
        })
    }

    /// The projection onto `G/H` with `[G:H] = p(G)`.
    pub fn least_prime_projection(&self) -> SubgroupProjection {
        self.prime_index_subgroup(self.least_prime_divisor())
            .expect("p(G) divides some modulus")
    }
}

impl Inner {
    fn add_index_slow(&self, i: usize, j: usize) -> usize {
        let mut out = 0;
        for (&n, &s) in self.moduli.iter().zip(&self.strides) {
            let a = (i / s) % n;
            let b = (j / s) % n;
            let c = a + b;
            out += if c >= n { c - n } else { c } * s;
        }
        out
    }
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other)
    }
}

impl Eq for GroupSpec {}

impl Hash for GroupSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.moduli().hash(state);
    }
}

impl PartialOrd for GroupSpec {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupSpec {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), self.moduli()).cmp(&(other.order(), other.moduli()))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, n) in self.moduli().iter().enumerate() {
            if j > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec({self})")
    }
}

/// Parses `"Z4xZ3"`: case-insensitive, `x` between factors, optional `_`
/// after the `Z` and surrounding whitespace.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(s, "empty group string"));
        }
        let mut moduli = Vec::new();
        for token in trimmed.split(['x', 'X']) {
            let token = token.trim();
            let digits = token
                .strip_prefix(['z', 'Z'])
                .map(|rest| rest.strip_prefix('_').unwrap_or(rest))
                .ok_or_else(|| Error::parse(token, "expected a factor of the form Z<n>"))?;
            let n: usize = digits
                .parse()
                .map_err(|_| Error::parse(token, "modulus is not a positive integer"))?;
            moduli.push(n);
        }
        GroupSpec::new(&moduli)
    }
}

impl serde::Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for GroupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A coordinate vector. Validity is relative to a [`GroupSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub(crate) Vec<usize>);

impl GroupElement {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, c) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The coset map `G -> G/H` for a kernel `H` of prime index `p`.
///
/// `phi(x) = x_pivot mod p`, a surjective homomorphism onto `Z_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupProjection {
    parent: GroupSpec,
    p: usize,
    pivot: usize,
    quotient: GroupSpec,
}

impl SubgroupProjection {
    pub fn parent(&self) -> &GroupSpec {
        &self.parent
    }

    pub fn prime(&self) -> usize {
        self.p
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn quotient(&self) -> &GroupSpec {
        &self.quotient
    }

    /// Coset label of the element with canonical index `index`.
    #[inline]
    pub fn label(&self, index: usize) -> usize {
        let s = self.parent.strides()[self.pivot];
        let n = self.parent.moduli()[self.pivot];
        ((index / s) % n) % self.p
    }

    pub fn label_of(&self, x: &GroupElement) -> Result<usize> {
        self.parent.index_of(x).map(|i| self.label(i))
    }

    pub fn in_kernel(&self, index: usize) -> bool {
        self.label(index) == 0
    }

    /// `|H| = |G| / p`.
    pub fn kernel_order(&self) -> usize {
        self.parent.order() / self.p
    }
}

/// Smallest prime factor of `n >= 2`.
pub fn least_prime_factor(n: usize) -> usize {
    debug_assert!(n >= 2);
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Prime factorization as `(prime, exponent)` pairs in ascending prime order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    while n > 1 {
        let p = least_prime_factor(n);
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        out.push((p, e));
    }
    out
}

/// Partitions of `n` as non-increasing part lists, in descending
/// lexicographic order: `[n]` first, `[1,...,1]` last.
pub fn integer_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One group per isomorphism class for every order in `[min_order, max_order]`,
/// in primary-decomposition form: for each prime (ascending) the factors
/// `p^{lambda_1}, p^{lambda_2}, ...` of one partition `lambda` of its exponent.
pub fn enumerate_abelian_groups(min_order: usize, max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for order in min_order.max(2)..=max_order {
        let per_prime: Vec<Vec<Vec<usize>>> = factorize(order)
            .into_iter()
            .map(|(p, e)| {
                integer_partitions(e)
                    .into_iter()
                    .map(|parts| parts.into_iter().map(|l| p.pow(l)).collect())
                    .collect()
            })
            .collect();
        let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
        for choices in &per_prime {
            let mut next = Vec::with_capacity(combos.len() * choices.len());
            for prefix in &combos {
                for choice in choices {
                    let mut m = prefix.clone();
                    m.extend_from_slice(choice);
                    next.push(m);
                }
            }
            combos = next;
        }
        for moduli in combos {
            out.push(GroupSpec::new(&moduli).expect("order >= 2"));
        }
    }
    out
}
