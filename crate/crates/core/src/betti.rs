//! Graded Betti shapes of the special resolutions attached to decorations.
//!
//! A decoration at level k has a representative whose minimal graded free
//! resolution has first module `⊕ R(-(k+1-λ_i))` and last module
//! `⊕ R(-(k+c-2+μ_i))`; for c = 3 the middle is `R^{d+t+2}(-k-1)`. The
//! mapping-cone route recomputes the ends of a linked decoration's shape from
//! the source data alone through the shift identities
//!
//! ```text
//! c(k+1) - Σλ'_j - (k+1-λ_i)   = (k+p) + c - 2 + λ_i
//! k+1 - λ'_i                   = (k+p) + 1 - (λ'_i + p)
//! c(k+1) - Σλ'_j - (k+c-2+μ_i) = (k+p) + 1 - μ_i
//! ```
//!
//! and must agree with the direct shape of the target on both ends.

use std::fmt;

use serde::Serialize;

use crate::decoration::Decoration;
use crate::error::Result;
use crate::linkage::{self, LinkChoice};

/// Shift multisets of the two resolution ends (plus the middle for c = 3).
/// Shifts are internal degrees: the summand R(-s) is recorded as s.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BettiShape {
    pub c: u32,
    /// Degrees of the b generators: sorted multiset {k+1-λ_i}.
    pub first: Vec<i64>,
    /// For c = 3: (rank, degree) of the middle module, R^{d+t+2}(-k-1).
    pub middle: Option<(u64, i64)>,
    /// Degrees of the t top syzygies: sorted multiset {k+c-2+μ_i}.
    pub last: Vec<i64>,
}

/// Direct substitution into the special resolution shape.
pub fn betti_shape(dec: &Decoration) -> BettiShape {
    let k = dec.level() as i64;
    let c = dec.codim();
    let mut first: Vec<i64> = dec
        .lambda()
        .parts()
        .iter()
        .map(|&l| k + 1 - l as i64)
        .collect();
    first.sort_unstable();
    let mut last: Vec<i64> = dec
        .mu()
        .parts()
        .iter()
        .map(|&m| k + i64::from(c) - 2 + m as i64)
        .collect();
    last.sort_unstable();
    let middle = if c == 3 {
        let rank = (dec.deviation() + dec.cmtype() as i64 + 2).max(0) as u64;
        Some((rank, k + 1))
    } else {
        None
    };
    BettiShape {
        c,
        first,
        middle,
        last,
    }
}

/// The ends of the linked decoration's shape, computed from the source via
/// the mapping-cone shift identities. Contributions of choice entries with
/// `λ'_i + p = 0` sit in degree k+p+1 and cancel against the cone's middle,
/// so they are dropped. The middle rank is not derived here.
pub fn mapping_cone_shifts(dec: &Decoration, choice: &LinkChoice) -> Result<BettiShape> {
    let res = linkage::link(dec, choice)?;
    let p = res.p;
    let k = dec.level() as i64;
    let c = dec.codim();
    // last module: one summand per remaining part of lambda,
    // degree c(k+1) - Σλ' - (k+1-λ_i)
    let remainder = dec
        .lambda()
        .remove_multiset(choice.entries())
        .expect("choice validated by link");
    let choice_sum: i64 = choice.entries().iter().map(|&x| x as i64).sum();
    let total = i64::from(c) * (k + 1) - choice_sum;
    let mut last: Vec<i64> = remainder
        .parts()
        .iter()
        .map(|&l| total - (k + 1 - l as i64))
        .collect();
    last.sort_unstable();
    // first module: the chosen degrees k+1-λ'_i (minus the cancelled zero
    // parts) together with c(k+1) - Σλ' - (k+c-2+μ_i)
    let mut first: Vec<i64> = choice
        .entries()
        .iter()
        .filter(|&&x| x as i64 + p != 0)
        .map(|&x| k + 1 - x as i64)
        .collect();
    first.extend(
        dec.mu()
            .parts()
            .iter()
            .map(|&m| total - (k + i64::from(c) - 2 + m as i64)),
    );
    first.sort_unstable();
    Ok(BettiShape {
        c,
        first,
        middle: None,
        last,
    })
}

impl BettiShape {
    /// True when the two shapes agree on both resolution ends.
    pub fn ends_agree(&self, other: &BettiShape) -> bool {
        self.c == other.c && self.first == other.first && self.last == other.last
    }

    /// Conventional Betti-table rendering: columns are homological degrees,
    /// rows are (internal degree - column), entries are ranks. Unknown
    /// interior columns print `?`.
    pub fn render_table(&self) -> String {
        use std::collections::BTreeMap;
        let c = self.c as usize;
        // per-column multiset of internal degrees
        let mut columns: Vec<Option<BTreeMap<i64, u64>>> = vec![None; c + 1];
        let add = |col: usize, deg: i64, columns: &mut Vec<Option<BTreeMap<i64, u64>>>| {
            let entry = columns[col].get_or_insert_with(BTreeMap::new);
            *entry.entry(deg).or_insert(0) += 1;
        };
        add(0, 0, &mut columns);
        for &d in &self.first {
            add(1, d, &mut columns);
        }
        if let Some((rank, deg)) = self.middle {
            let entry = columns[2].get_or_insert_with(BTreeMap::new);
            if rank > 0 {
                *entry.entry(deg).or_insert(0) += rank;
            }
        }
        for &d in &self.last {
            add(c, d, &mut columns);
        }
        let rows: Vec<i64> = {
            let mut set = std::collections::BTreeSet::new();
            for (i, col) in columns.iter().enumerate() {
                if let Some(m) = col {
                    for &deg in m.keys() {
                        set.insert(deg - i as i64);
                    }
                }
            }
            if set.is_empty() {
                set.insert(0);
            }
            set.into_iter().collect()
        };
        let mut out = String::new();
        out.push_str("      ");
        for i in 0..=c {
            out.push_str(&format!("{i:>5}"));
        }
        out.push('\n');
        for &row in &rows {
            out.push_str(&format!("{row:>4}: "));
            for (i, col) in columns.iter().enumerate() {
                let cell = match col {
                    None => "?".to_string(),
                    Some(m) => match m.get(&(row + i as i64)) {
                        Some(&r) => r.to_string(),
                        None => ".".to_string(),
                    },
                };
                out.push_str(&format!("{cell:>5}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_table())
    }
}
