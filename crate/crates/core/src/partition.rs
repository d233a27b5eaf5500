//! Integer partitions, partition pairs, and the bounded enumerators behind
//! the sets `A`, `B`, `U` and `V`.
//!
//! Text format: `[7,5,5,4]` for a partition (`[]` for the empty one) and
//! `([5,4],[7,2,1])` for a pair.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Fails if `parts` is not weakly decreasing or contains a zero.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} contains a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Distinct part values with their counts, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Rebuilds a partition from `(part, multiplicity)` pairs in any order.
    pub fn from_multiplicities(mult: &[(usize, usize)]) -> Self {
        Self::from_unsorted(
            mult.iter()
                .flat_map(|&(v, c)| std::iter::repeat_n(v, c))
                .collect(),
        )
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Adds `count` copies of `part`.
    pub fn with_copies(&self, part: usize, count: usize) -> Partition {
        let copies = Partition { parts: vec![part; count] };
        self.union(&copies)
    }

    /// Removes `count` copies of `part`; `None` if there are fewer.
    pub fn without_copies(&self, part: usize, count: usize) -> Option<Partition> {
        let start = self.parts.iter().position(|&p| p == part)?;
        if self.multiplicity(part) < count {
            return None;
        }
        let mut parts = self.parts.clone();
        parts.drain(start..start + count);
        Some(Partition { parts })
    }

    /// True when every part occurs an even number of times.
    pub fn all_even_multiplicities(&self) -> bool {
        self.multiplicities().iter().all(|&(_, c)| c % 2 == 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{}` in `{s}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// An ordered pair `(lambda, mu)` of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionPair {
    pub first: Partition,
    pub second: Partition,
}

impl PartitionPair {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    /// `2|lambda| + |mu|`
    pub fn weight2(&self) -> usize {
        2 * self.first.weight() + self.second.weight()
    }

    /// `(-1)^len(lambda)`
    pub fn sign(&self) -> i64 {
        if self.first.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Membership in the fixed set `V`: every part of `lambda` has even
    /// multiplicity and `mu` has distinct parts.
    pub fn is_in_v(&self) -> bool {
        self.first.all_even_multiplicities() && self.second.is_distinct()
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl FromStr for PartitionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `([...],[...])`, got `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let split = inner.find(']').ok_or_else(bad)? + 1;
        let (a, b) = inner.split_at(split);
        let b = b.trim_start().strip_prefix(',').ok_or_else(bad)?;
        Ok(Self::new(a.parse()?, b.parse()?))
    }
}

/// Partitions with exactly `length` parts, each at most `max_part`, in
/// lexicographically decreasing order.
#[derive(Clone, Debug)]
pub struct Bounded {
    current: Option<Vec<usize>>,
}

impl Iterator for Bounded {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        let mut next = cur;
        if let Some(i) = next.iter().rposition(|&p| p > 1) {
            let v = next[i] - 1;
            next[i..].iter_mut().for_each(|p| *p = v);
            self.current = Some(next);
        }
        Some(out)
    }
}

pub fn enumerate_bounded(max_part: usize, length: usize) -> Bounded {
    let current = (length == 0 || max_part > 0).then(|| vec![max_part; length]);
    Bounded { current }
}

/// Partitions into `length` distinct parts, each at most `max_part`, in
/// lexicographically decreasing order.
#[derive(Clone, Debug)]
pub struct DistinctBounded {
    current: Option<Vec<usize>>,
}

impl Iterator for DistinctBounded {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        let len = cur.len();
        let mut next = cur;
        // position i can go down to len - i
        if let Some(i) = (0..len).rev().find(|&i| next[i] > len - i) {
            next[i] -= 1;
            for j in i + 1..len {
                next[j] = next[j - 1] - 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

pub fn enumerate_distinct_bounded(max_part: usize, length: usize) -> DistinctBounded {
    let current = (max_part >= length).then(|| (0..length).map(|i| max_part - i).collect());
    DistinctBounded { current }
}

/// `A(m, n)`: partitions with parts at most `m+1` and exactly `n` parts.
pub fn set_a(m: usize, n: usize) -> impl Iterator<Item = Partition> {
    enumerate_bounded(m + 1, n)
}

/// Pairs with `lambda` bounded by `m+1`, `mu` drawn from `second(k)` and
/// `weight_factor * len(lambda) + len(mu) = n`.
fn pairs_by_length<I, F>(
    m: usize,
    n: usize,
    weight_factor: usize,
    second: F,
) -> impl Iterator<Item = PartitionPair>
where
    I: Iterator<Item = Partition>,
    F: Fn(usize) -> I + Clone,
{
    (0..=n / weight_factor).flat_map(move |k| {
        let second = second.clone();
        enumerate_bounded(m + 1, k).flat_map(move |lambda| {
            second(n - weight_factor * k).map(move |mu| PartitionPair::new(lambda.clone(), mu))
        })
    })
}

/// `B(m, n)`: `mu` distinct, both bounded by `m+1`, `2 len(lambda) + len(mu) = n`.
pub fn set_b(m: usize, n: usize) -> impl Iterator<Item = PartitionPair> {
    pairs_by_length(m, n, 2, move |l| enumerate_distinct_bounded(m + 1, l))
}

/// `U(m, n)`: both bounded by `m+1`, `2 len(lambda) + len(mu) = n`.
pub fn set_u(m: usize, n: usize) -> impl Iterator<Item = PartitionPair> {
    pairs_by_length(m, n, 2, move |l| enumerate_bounded(m + 1, l))
}

/// `V(m, n)`: members of `U(m, n)` on which the involution is undefined.
pub fn set_v(m: usize, n: usize) -> impl Iterator<Item = PartitionPair> {
    set_u(m, n).filter(PartitionPair::is_in_v)
}

/// `mu` distinct, both bounded by `m+1`, `4 len(tau) + len(mu) = n`; the
/// index set of the four-fold sum.
pub fn set_w(m: usize, n: usize) -> impl Iterator<Item = PartitionPair> {
    pairs_by_length(m, n, 4, move |l| enumerate_distinct_bounded(m + 1, l))
}
