//! Integer partitions and the dominance order.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers.
//! Partitions of `N` parametrize nilpotent orbits of `gl(N)`; with parity
//! conditions (see [`crate::classical`]) they parametrize the orbits of the
//! classical Lie algebras. Everything downstream is built out of the
//! operations here: transpose, dominance comparison, multiset join, the
//! one-box modifications, and exhaustive enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on enumeration size; `ORBITCALC_MAX_N` overrides it.
pub const DEFAULT_MAX_N: u64 = 64;

/// Hard cap on how many parts a parsed literal may expand to.
const LITERAL_PART_CAP: u64 = 100_000;

/// Effective enumeration bound: `ORBITCALC_MAX_N` if set and parseable,
/// otherwise [`DEFAULT_MAX_N`].
pub fn enumeration_bound() -> u64 {
    std::env::var("ORBITCALC_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the part sequence (so sorting a
/// `Vec<Partition>` descending reproduces the enumeration order); it is *not*
/// the dominance order, which is partial and lives in [`Partition::compare`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

/// Outcome of a dominance comparison between partitions of equal total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::Less => "less",
            Relation::Equal => "equal",
            Relation::Greater => "greater",
            Relation::Incomparable => "incomparable",
        };
        f.write_str(s)
    }
}

impl Partition {
    /// Builds a partition from arbitrary non-negative values: zeros are
    /// dropped, the rest is sorted weakly decreasing. Negative values are
    /// rejected with [`Error::InvalidPart`].
    pub fn new<I>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut parts = Vec::new();
        for v in values {
            match v.cmp(&0) {
                Ordering::Less => return Err(Error::InvalidPart(v)),
                Ordering::Equal => {}
                Ordering::Greater => parts.push(v as u64),
            }
        }
        Ok(Self::from_unsorted(parts))
    }

    /// Trusted constructor: sorts and drops zeros, no sign check.
    pub(crate) fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `[n]`, or the empty partition when `n == 0`.
    pub fn row(n: u64) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Column `[1^n]`.
    pub fn column(n: u64) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of odd parts, counted with multiplicity.
    pub fn odd_part_count(&self) -> u64 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u64
    }

    /// Multiplicity of the value `v` among the parts.
    pub fn multiplicity(&self, v: u64) -> u64 {
        self.parts.iter().filter(|&&p| p == v).count() as u64
    }

    /// Runs of equal parts as `(value, multiplicity)`, descending in value.
    pub fn runs(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Conjugate partition: part `j` of the result counts the parts of
    /// `self` that are `>= j`.
    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0) as usize;
        let mut cols = vec![0u64; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Dominance comparison. Requires equal totals.
    pub fn compare(&self, other: &Partition) -> Result<Relation> {
        if self.total() != other.total() {
            return Err(Error::TotalMismatch {
                left: self.total(),
                right: other.total(),
            });
        }
        if self.parts == other.parts {
            return Ok(Relation::Equal);
        }
        let len = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0u64, 0u64);
        let (mut below, mut above) = (false, false);
        for k in 0..len {
            a += self.parts.get(k).copied().unwrap_or(0);
            b += other.parts.get(k).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Less => below = true,
                Ordering::Greater => above = true,
                Ordering::Equal => {}
            }
        }
        Ok(match (below, above) {
            (true, true) => Relation::Incomparable,
            (true, false) => Relation::Less,
            (false, true) => Relation::Greater,
            // equal prefix sums everywhere would force equal parts
            (false, false) => unreachable!("distinct partitions with identical prefix sums"),
        })
    }

    /// `self <= other` in dominance. Requires equal totals.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        Ok(matches!(
            self.compare(other)?,
            Relation::Less | Relation::Equal
        ))
    }

    /// Multiset union of parts.
    pub fn join<'a, I>(ps: I) -> Partition
    where
        I: IntoIterator<Item = &'a Partition>,
    {
        let mut parts = Vec::new();
        for p in ps {
            parts.extend_from_slice(&p.parts);
        }
        Self::from_unsorted(parts)
    }

    /// Reduces the smallest part by one; a part reaching zero disappears.
    pub fn decrement_min(&self) -> Result<Partition> {
        if self.parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut parts = self.parts.clone();
        let last = parts.len() - 1;
        parts[last] -= 1;
        if parts[last] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Increases the largest part by one; the empty partition becomes `[1]`.
    pub fn increment_max(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(p) => *p += 1,
            None => parts.push(1),
        }
        Partition { parts }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exponent form with descending parts: `[5^2 3 1]`, `[]` when empty.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (v, m)) in self.runs().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *m > 1 {
                write!(f, "{v}^{m}")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

/// Partition literal grammar: parts with optional `^multiplicity`, separated
/// by whitespace or commas, brackets optional. `[5^2 3 1]`, `5^2,3,1` and
/// `5^2 3 1` all denote the same partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = match (trimmed.starts_with('['), trimmed.ends_with(']')) {
            (true, true) => &trimmed[1..trimmed.len() - 1],
            (false, false) => trimmed,
            _ => return Err(Error::InvalidLiteral(format!("unbalanced brackets in {s:?}"))),
        };
        let mut parts: Vec<u64> = Vec::new();
        let mut count: u64 = 0;
        for token in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let (value, mult) = match token.split_once('^') {
                Some((v, m)) => (v, m),
                None => (token, "1"),
            };
            let value: u64 = value
                .parse()
                .map_err(|_| Error::InvalidLiteral(format!("bad part {token:?} in {s:?}")))?;
            let mult: u64 = mult
                .parse()
                .map_err(|_| Error::InvalidLiteral(format!("bad multiplicity {token:?} in {s:?}")))?;
            count = count.saturating_add(mult);
            if count > LITERAL_PART_CAP {
                return Err(Error::InvalidLiteral(format!(
                    "literal expands to more than {LITERAL_PART_CAP} parts"
                )));
            }
            if value > 0 {
                parts.extend(std::iter::repeat_n(value, mult as usize));
            }
        }
        Ok(Self::from_unsorted(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<i64>::deserialize(deserializer)?;
        Partition::new(values).map_err(serde::de::Error::custom)
    }
}

/// Iterator over all partitions of a fixed total in decreasing lexicographic
/// order: `[4] [3 1] [2^2] [2 1^2] [1^4]`.
pub struct Partitions {
    next: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition {
            parts: current,
        })
    }
}

fn successor(parts: &[u64]) -> Option<Vec<u64>> {
    // Rightmost part that can still shrink.
    let i = parts.iter().rposition(|&p| p > 1)?;
    let v = parts[i] - 1;
    // Everything from i onwards is redistributed greedily into chunks of v.
    let rest: u64 = parts[i..].iter().sum::<u64>();
    let mut out = parts[..i].to_vec();
    let full = rest / v;
    let rem = rest % v;
    out.extend(std::iter::repeat_n(v, full as usize));
    if rem > 0 {
        out.push(rem);
    }
    Some(out)
}

/// Streams every partition of `n` exactly once, in decreasing lexicographic
/// order, using the effective [`enumeration_bound`].
pub fn enumerate_partitions(n: u64) -> Result<Partitions> {
    enumerate_partitions_bounded(n, enumeration_bound())
}

/// Same as [`enumerate_partitions`] with an explicit bound.
pub fn enumerate_partitions_bounded(n: u64, bound: u64) -> Result<Partitions> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Ok(Partitions { next: Some(first) })
}
