//! Reference implementations used as oracles by the integration tests.
//! Nothing here calls the library's arithmetic; groups are handled through
//! their moduli alone.
#![allow(dead_code)]

use std::collections::BTreeSet;

use restricted_sumsets::{ElementSet, GroupSpec};

pub fn lpf(n: usize) -> usize {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && lpf(n) == n
}

/// `min{p, k n - k^2 + 1}` as a signed integer.
pub fn restricted_bound(order: usize, n: usize, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    (lpf(order) as i64).min(k * n - k * k + 1)
}

/// `min{p, Σ sizes - count + 1}`.
pub fn sum_bound(order: usize, sizes: &[usize]) -> i64 {
    let s: i64 = sizes.iter().map(|&x| x as i64).sum();
    (lpf(order) as i64).min(s - sizes.len() as i64 + 1)
}

/// Coordinates of `index`, last coordinate varying fastest.
pub fn decode(moduli: &[usize], mut index: usize) -> Vec<usize> {
    let mut c = vec![0; moduli.len()];
    for j in (0..moduli.len()).rev() {
        c[j] = index % moduli[j];
        index /= moduli[j];
    }
    c
}

pub fn encode(moduli: &[usize], coords: &[usize]) -> usize {
    coords
        .iter()
        .zip(moduli)
        .fold(0, |acc, (&c, &m)| acc * m + c)
}

/// Addition table on indices built from coordinates.
pub struct Table {
    pub moduli: Vec<usize>,
    pub order: usize,
    add: Vec<usize>,
}

impl Table {
    pub fn new(g: &GroupSpec) -> Table {
        let moduli = g.moduli().to_vec();
        let order: usize = moduli.iter().product();
        let mut add = vec![0; order * order];
        for x in 0..order {
            let cx = decode(&moduli, x);
            for y in 0..order {
                let cy = decode(&moduli, y);
                let sum: Vec<usize> = cx
                    .iter()
                    .zip(&cy)
                    .zip(&moduli)
                    .map(|((a, b), m)| (a + b) % m)
                    .collect();
                add[x * order + y] = encode(&moduli, &sum);
            }
        }
        Table { moduli, order, add }
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    /// Coset label in `G / H` for the least prime `p`: coordinate of the
    /// first factor divisible by `p`, reduced mod `p`.
    pub fn label(&self, x: usize) -> usize {
        let p = lpf(self.order);
        let pivot = self.moduli.iter().position(|m| m % p == 0).unwrap();
        decode(&self.moduli, x)[pivot] % p
    }
}

/// `[0^A, 1^A, ..., |A|^A]` by enumerating all subsets of `A`.
pub fn naive_restricted_layers(t: &Table, a: &[usize]) -> Vec<BTreeSet<usize>> {
    let n = a.len();
    let mut layers = vec![BTreeSet::new(); n + 1];
    fn go(t: &Table, a: &[usize], i: usize, size: usize, sum: usize, out: &mut [BTreeSet<usize>]) {
        if i == a.len() {
            out[size].insert(sum);
            return;
        }
        go(t, a, i + 1, size, sum, out);
        go(t, a, i + 1, size + 1, t.add(sum, a[i]), out);
    }
    go(t, a, 0, 0, 0, &mut layers);
    layers
}

pub fn naive_sumset(t: &Table, parts: &[Vec<usize>]) -> BTreeSet<usize> {
    let mut acc: BTreeSet<usize> = [0].into();
    for part in parts {
        acc = acc
            .iter()
            .flat_map(|&x| part.iter().map(move |&y| (x, y)))
            .map(|(x, y)| t.add(x, y))
            .collect();
    }
    acc
}

pub fn indices(s: &ElementSet) -> Vec<usize> {
    s.iter().collect()
}

pub fn to_set(s: &ElementSet) -> BTreeSet<usize> {
    s.iter().collect()
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Number of abelian groups of order `n` up to isomorphism.
pub fn abelian_group_count(mut n: usize) -> u64 {
    let mut count = 1;
    let mut p = 2;
    while n > 1 {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        count *= partition_count(e);
        p += 1;
    }
    count
}

/// Class sizes of `A` over the cosets of the least-prime-index subgroup,
/// largest first.
pub fn class_sizes(t: &Table, a: &[usize]) -> Vec<usize> {
    let p = lpf(t.order);
    let mut sizes = vec![0; p];
    for &x in a {
        sizes[t.label(x)] += 1;
    }
    sizes.retain(|&s| s > 0);
    sizes.sort_unstable_by(|x, y| y.cmp(x));
    sizes
}

/// Multiplicities of the first `k + 1` terms of the class sequence and the
/// position `(r, t, h)` of the last of them.
#[derive(Debug, PartialEq, Eq)]
pub struct Profile {
    pub n: Vec<usize>,
    pub r: usize,
    pub t: usize,
    pub h: usize,
}

pub fn naive_profile(sizes: &[usize], k: usize) -> Profile {
    let m = sizes.len();
    // (class, run end, repetition) for each term, classes 1-based.
    let mut terms: Vec<(usize, usize, usize)> = (1..=m).map(|i| (i, 0, 0)).collect();
    let mut i = 0;
    while i < m {
        let mut end = i;
        while end + 1 < m && sizes[end + 1] == sizes[i] {
            end += 1;
        }
        let t = end + 1;
        let next = if t < m { sizes[t] } else { 1 };
        for rep in 0..sizes[end] - next {
            for class in (1..=t).rev() {
                terms.push((class, t, rep));
            }
        }
        i = end + 1;
    }
    assert_eq!(terms.len(), sizes.iter().sum::<usize>());
    let mut n = vec![0; m];
    for &(class, _, _) in &terms[..=k] {
        n[class - 1] += 1;
    }
    let (r, t, h) = terms[k];
    Profile { n, r, t, h }
}

/// Names of the closed forms the profile fails.
pub fn closed_form_violations(sizes: &[usize], k: usize, p: &Profile) -> Vec<&'static str> {
    let m = sizes.len();
    let (r, t, h) = (p.r, p.t, p.h as i64);
    let a = |i: usize| sizes[i - 1] as i64;
    let n = |i: usize| p.n[i - 1] as i64;
    let mut bad = Vec::new();
    if p.n.iter().sum::<usize>() == 0 || !(1 <= r && r <= t && t <= m) {
        bad.push("shape");
        return bad;
    }
    let ok = [
        ("sumni", p.n.iter().sum::<usize>() == k + 1),
        ("ni1", (t + 1..=m).all(|i| n(i) == 1)),
        ("HleqAt-2", h <= a(t) - 2),
        (
            "Aini",
            (1..r).all(|i| a(i) - n(i) == a(t) - h - 1)
                && (r..=t).all(|i| a(i) - n(i) == a(t) - h - 2),
        ),
        ("nileqAi", (r..=m).all(|i| n(i) <= a(i))),
        ("nileqAi-1", (1..r).all(|i| n(i) < a(i))),
        (
            "AiniAjnj1",
            (1..r).all(|i| (r..=t).all(|j| a(i) - n(i) == a(j) - n(j) + 1)),
        ),
        (
            "AiniAjnj",
            (1..=t).all(|i| (t + 1..=m).all(|j| a(i) - n(i) >= a(j) - n(j))),
        ),
    ];
    for (name, good) in ok {
        if !good {
            bad.push(name);
        }
    }
    bad
}
