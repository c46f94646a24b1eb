//! The linkage formula on decorations.
//!
//! A link of a codimension-c decoration `(lambda, mu)` is determined by a
//! choice of c parts of lambda (zeros allowed). Writing `mu' = lambda \ choice`
//! and `p = |mu'| - |mu|`, the linked decoration is
//!
//! ```text
//! lambda' = rsort(choice_1 + p, ..., choice_c + p, mu_1, ..., mu_t),   mu' as above,
//! ```
//!
//! and the level moves by `p = (c-2)k + 1 - sum(choice)`. The four named links
//! (smallest minimal, largest minimal, generic, minimal tight double) are all
//! instances of [`link`] with specific choices.

use serde::{Deserialize, Serialize};

use crate::decoration::Decoration;
use crate::error::{Error, Result};

/// A multiset of c non-negative integers; positive entries must be parts of
/// the source lambda. Stored sorted non-increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinkChoice {
    entries: Vec<u64>,
}

impl LinkChoice {
    /// Validates arity and sub-multiset containment against `dec.lambda()`.
    pub fn new(dec: &Decoration, entries: &[u64]) -> Result<Self> {
        if entries.len() != dec.codim() as usize {
            return Err(Error::InvalidChoice(format!(
                "expected {} entries, got {}",
                dec.codim(),
                entries.len()
            )));
        }
        if let Err(bad) = dec.lambda().remove_multiset(entries) {
            return Err(Error::InvalidChoice(format!(
                "{bad} is not available as a part of λ={}",
                dec.lambda()
            )));
        }
        let mut entries = entries.to_vec();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LinkChoice { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// For callers that construct entries directly from the parts of lambda,
    /// already sorted non-increasing.
    pub(crate) fn from_sorted_unchecked(entries: Vec<u64>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        LinkChoice { entries }
    }
}

/// Outcome of one link: the chosen parts, the level shift p, and the target.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LinkResult {
    pub choice: LinkChoice,
    pub p: i64,
    pub target: Decoration,
}

impl LinkResult {
    /// The choice that links the target back to the source (entries shifted
    /// by p); applying it returns the source with level shift -p.
    pub fn reverse_choice(&self) -> Vec<u64> {
        self.choice
            .entries
            .iter()
            .map(|&x| (x as i64 + self.p) as u64)
            .collect()
    }
}

/// Applies the linkage formula for the given choice.
pub fn link(dec: &Decoration, choice: &LinkChoice) -> Result<LinkResult> {
    let mu_link = dec
        .lambda()
        .remove_multiset(choice.entries())
        .map_err(|bad| {
            Error::InvalidChoice(format!(
                "{bad} is not available as a part of λ={}",
                dec.lambda()
            ))
        })?;
    let p = mu_link.sum() as i64 - dec.level() as i64;
    let mut shifted: Vec<u64> = Vec::with_capacity(dec.codim() as usize);
    for &x in choice.entries() {
        let v = x as i64 + p;
        if v < 0 {
            return Err(Error::NegativePartProduced(v));
        }
        shifted.push(v as u64);
    }
    // both sequences are sorted non-increasing; rsort is a merge
    let lambda_link = dec.mu().merge_sorted_desc(&shifted);
    let target = Decoration::from_partitions(dec.codim(), lambda_link, mu_link)
        .expect("linkage formula preserves the sum identity");
    Ok(LinkResult {
        choice: choice.clone(),
        p,
        target,
    })
}

/// Convenience wrapper taking the choice as a raw slice.
pub fn link_with(dec: &Decoration, entries: &[u64]) -> Result<LinkResult> {
    let choice = LinkChoice::new(dec, entries)?;
    link(dec, &choice)
}

/// The choice `(lambda_1, ..., lambda_c)`: the c largest parts. Minimizes p.
pub fn smallest_minimal_link(dec: &Decoration) -> Result<LinkResult> {
    let c = dec.codim() as usize;
    if dec.gens() < c {
        return Err(Error::TooFewParts);
    }
    let entries: Vec<u64> = (1..=c).map(|i| dec.lambda().part(i)).collect();
    link_with(dec, &entries)
}

/// The choice `(lambda_{d+1}, ..., lambda_{d+c})`: the c smallest positive
/// parts. The minimal link maximizing p.
pub fn largest_minimal_link(dec: &Decoration) -> Result<LinkResult> {
    let c = dec.codim() as usize;
    let b = dec.gens();
    if b < c {
        return Err(Error::TooFewParts);
    }
    let entries: Vec<u64> = (b - c + 1..=b).map(|i| dec.lambda().part(i)).collect();
    link_with(dec, &entries)
}

/// The all-zeros choice; p = (c-2)k + 1 is the largest possible.
pub fn generic_link(dec: &Decoration) -> Result<LinkResult> {
    let entries = vec![0u64; dec.codim() as usize];
    link_with(dec, &entries)
}

/// Smallest minimal link followed by the link on
/// `(lambda_1 + p, ..., lambda_{c-1} + p, mu_1)`. The composite level shift is
/// `p + q` with `q = lambda_c - mu_1`, and the level strictly decreases on
/// decorations.
pub fn tight_double_link(dec: &Decoration) -> Result<(LinkResult, LinkResult)> {
    if dec.cmtype() < 1 {
        return Err(Error::TooFewParts);
    }
    let first = smallest_minimal_link(dec)?;
    let c = dec.codim() as usize;
    let mut entries: Vec<u64> = (1..c)
        .map(|i| (dec.lambda().part(i) as i64 + first.p) as u64)
        .collect();
    entries.push(dec.mu().part(1));
    let second = link_with(&first.target, &entries)?;
    Ok((first, second))
}

/// All formal neighbors: one [`LinkResult`] per distinct valid choice multiset
/// whose link produces no negative part. Loops (target = source) are retained;
/// two choices hitting the same target stay distinct edges.
pub fn neighbors(dec: &Decoration) -> Vec<LinkResult> {
    let c = dec.codim() as usize;
    let mut out = Vec::new();
    let values = dec.lambda().value_multiplicities();
    let mut acc: Vec<u64> = Vec::with_capacity(c);
    fn rec(
        dec: &Decoration,
        values: &[(u64, usize)],
        i: usize,
        remaining: usize,
        acc: &mut Vec<u64>,
        out: &mut Vec<LinkResult>,
    ) {
        if i == values.len() {
            let mut entries = acc.clone();
            entries.extend(std::iter::repeat_n(0, remaining));
            // entries are a valid sorted sub-multiset by construction
            let choice = LinkChoice::from_sorted_unchecked(entries);
            if let Ok(res) = link(dec, &choice) {
                out.push(res);
            }
            return;
        }
        let (v, m) = values[i];
        for take in 0..=m.min(remaining) {
            acc.extend(std::iter::repeat_n(v, take));
            rec(dec, values, i + 1, remaining - take, acc, out);
            acc.truncate(acc.len() - take);
        }
    }
    rec(dec, &values, 0, c, &mut acc, &mut out);
    out.sort_by(|a, b| b.choice.cmp(&a.choice));
    out
}
