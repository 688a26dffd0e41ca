use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
///
/// The derived `Ord` is lexicographic on the parts, so `(1,1,1,1) < (2,1,1) < (4)`.
/// Canonical listings ([`enumerate_partitions`]) run in the reverse of that
/// order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds a partition from its multiplicity vector, where `mult[i]` counts parts equal to `i`.
    /// `mult[0]` is ignored.
    pub fn from_multiplicities(mult: &[usize]) -> Self {
        let mut parts = Vec::new();
        for i in (1..mult.len()).rev() {
            parts.extend(std::iter::repeat_n(i, mult[i]));
        }
        Partition { parts }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::default()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `1^n`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Multiplicity vector of length `n + 1`; index `i` holds the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.n() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at least the matching prefix sum of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Exponential notation, e.g. `3,1^2`.
    pub fn to_exponential_string(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            if j - i == 1 {
                out.push(p.to_string());
            } else {
                out.push(format!("{p}^{}", j - i));
            }
            i = j;
        }
        out.join(",")
    }
}

impl fmt::Display for Partition {
    /// Comma form, e.g. `3,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts the comma form `3,1,1` and the exponential form `3,1^2`
    /// (optionally wrapped in parentheses). Parts must be listed in weakly
    /// decreasing order.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() {
            return Ok(Partition::default());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let bad = || Error::InvalidPartition(format!("cannot parse {s:?}"));
            let base: usize = base.parse().map_err(|_| bad())?;
            let exp: usize = exp.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `1^n` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
