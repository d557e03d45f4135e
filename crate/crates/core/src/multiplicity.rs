//! Multiplicity vectors and partition enumeration.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Non-increasing list of root multiplicities `mu_1 >= ... >= mu_m >= 1`,
/// i.e. an `m`-partition of `n = sum mu_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector {
    parts: Vec<usize>,
}

impl MultiplicityVector {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not non-increasing")));
        }
        Ok(MultiplicityVector { parts })
    }

    /// Sorts the multiplicities into non-increasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of distinct roots.
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// Degree of the polynomial.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn all_equal(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for MultiplicityVector {
    type Err = Error;

    /// Accepts `2,1`, `(2,1)` or `2 1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid multiplicity `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `n` into exactly `m` parts, in reverse lexicographic
/// order (largest first part first).
pub fn partitions(n: usize, m: usize) -> Vec<MultiplicityVector> {
    let mut out = Vec::new();
    if m == 0 || m > n {
        return out;
    }
    let mut current = Vec::with_capacity(m);
    fill(n, m, n - m + 1, &mut current, &mut out);
    out
}

fn fill(rest: usize, slots: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<MultiplicityVector>) {
    if slots == 0 {
        if rest == 0 {
            out.push(MultiplicityVector { parts: current.clone() });
        }
        return;
    }
    // each remaining slot needs at least 1, and no part may exceed `cap`
    let hi = cap.min(rest - (slots - 1));
    let lo = rest.div_ceil(slots);
    for part in (lo..=hi).rev() {
        current.push(part);
        fill(rest - part, slots - 1, part, current, out);
        current.pop();
    }
}

/// All partitions of `n` with any number of parts.
pub fn all_partitions(n: usize) -> Vec<MultiplicityVector> {
    (1..=n).rev().flat_map(|m| partitions(n, m)).collect()
}
