//! Integer partitions in canonical form: parts sorted non-increasing, no zeros.
//!
//! A partition is conceptually an infinite non-increasing sequence with finitely
//! many nonzero entries; [`Partition::part`] returns 0 past the stored length.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Canonicalizes arbitrary non-negative input: sorts non-increasing, drops zeros.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if let Some(&bad) = raw.iter().find(|&&x| x < 0) {
            return Err(Error::NegativePart(bad));
        }
        let mut parts: Vec<u64> = raw.iter().map(|&x| x as u64).filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Canonicalizes already non-negative input.
    pub fn from_unsigned(raw: &[u64]) -> Self {
        let mut parts: Vec<u64> = raw.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The i-th part (1-indexed, as in the usual lambda_i notation); 0 past the end.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .expect("partition sum overflow")
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x.checked_mul(x)?))
            .expect("partition square sum overflow")
    }

    /// Elementwise comparison with trailing zeros: self_i <= other_i for all i.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &x)| x <= other.part(i + 1))
    }

    /// Removes `take` (a sub-multiset) from self, returning the remainder.
    /// Fails with the offending value if some positive entry is not a part.
    pub fn remove_multiset(&self, take: &[u64]) -> std::result::Result<Partition, u64> {
        // single merge pass over the two sorted sequences
        let sorted: Vec<u64>;
        let take: &[u64] = if take.windows(2).all(|w| w[0] >= w[1]) {
            take
        } else {
            let mut t = take.to_vec();
            t.sort_unstable_by(|a, b| b.cmp(a));
            sorted = t;
            &sorted
        };
        let mut rest = Vec::with_capacity(self.parts.len());
        let mut i = 0;
        for &x in take {
            if x == 0 {
                break;
            }
            loop {
                match self.parts.get(i) {
                    Some(&p) if p > x => {
                        rest.push(p);
                        i += 1;
                    }
                    Some(&p) if p == x => {
                        i += 1;
                        break;
                    }
                    _ => return Err(x),
                }
            }
        }
        rest.extend_from_slice(&self.parts[i..]);
        Ok(Partition { parts: rest })
    }

    /// Merges an already non-increasing list of non-negative values with this
    /// partition's parts, dropping zeros.
    pub(crate) fn merge_sorted_desc(&self, other: &[u64]) -> Partition {
        debug_assert!(other.windows(2).all(|w| w[0] >= w[1]));
        let mut parts = Vec::with_capacity(self.parts.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() || j < other.len() {
            let a = self.parts.get(i).copied().unwrap_or(0);
            let b = other.get(j).copied().unwrap_or(0);
            if a == 0 && b == 0 {
                break;
            }
            if a >= b {
                parts.push(a);
                i += 1;
            } else {
                parts.push(b);
                j += 1;
            }
        }
        Partition { parts }
    }

    /// Multiset union, re-sorted.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Distinct part values with multiplicities, in decreasing value order.
    pub fn value_multiplicities(&self) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// All partitions of `n`, non-increasing parts, largest part at most `max_part`.
pub fn partitions_of(n: u64, max_part: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc: Vec<u64> = Vec::new();
    fn rec(remaining: u64, cap: u64, acc: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: acc.clone() });
            return;
        }
        let hi = cap.min(remaining);
        for next in (1..=hi).rev() {
            acc.push(next);
            rec(remaining - next, next, acc, out);
            acc.pop();
        }
    }
    rec(n, max_part.min(n), &mut acc, &mut out);
    out
}
