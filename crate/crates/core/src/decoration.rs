//! Decorations: the partition pairs labelling vertices of the licci graph.
//!
//! A decoration of codimension `c` is a pair of partitions `(lambda, mu)` with
//! `|lambda| = (c-1)|mu| + 1`. Derived invariants: the level `k = |mu|`, the
//! number of generators `b = len(lambda)`, the Cohen-Macaulay type
//! `t = len(mu)`, and the deviation `d = b - c`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Decoration {
    c: u32,
    lambda: Partition,
    mu: Partition,
}

impl Decoration {
    /// Validating constructor. Input lists are canonicalized (sorted
    /// non-increasing, zeros dropped) before the sum identity is checked.
    pub fn new(c: u32, lambda: &[i64], mu: &[i64]) -> Result<Self> {
        let lambda = Partition::new(lambda)?;
        let mu = Partition::new(mu)?;
        Self::from_partitions(c, lambda, mu)
    }

    pub fn from_partitions(c: u32, lambda: Partition, mu: Partition) -> Result<Self> {
        if c < 2 {
            return Err(Error::CodimTooSmall(c));
        }
        let expected = u64::from(c - 1)
            .checked_mul(mu.sum())
            .and_then(|x| x.checked_add(1))
            .expect("sum identity overflow");
        if lambda.sum() != expected {
            return Err(Error::SumIdentityViolated {
                lambda_sum: lambda.sum(),
                expected,
            });
        }
        Ok(Decoration { c, lambda, mu })
    }

    /// The unit-ideal decoration `(1); ()` at level 0.
    pub fn unit_ideal(c: u32) -> Self {
        Decoration::new(c, &[1], &[]).expect("unit ideal is always valid")
    }

    /// The complete-intersection decoration `(1^c); (1)` at level 1.
    pub fn complete_intersection(c: u32) -> Self {
        let lambda = vec![1i64; c as usize];
        Decoration::new(c, &lambda, &[1]).expect("complete intersection is always valid")
    }

    pub fn codim(&self) -> u32 {
        self.c
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// The level kappa = |mu|.
    pub fn level(&self) -> u64 {
        self.mu.sum()
    }

    /// Minimal number of generators b = number of positive parts of lambda.
    pub fn gens(&self) -> usize {
        self.lambda.len()
    }

    /// Cohen-Macaulay type t = number of positive parts of mu.
    pub fn cmtype(&self) -> usize {
        self.mu.len()
    }

    /// Deviation d = b - c; negative only for the unit ideal.
    pub fn deviation(&self) -> i64 {
        self.lambda.len() as i64 - i64::from(self.c)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.level() == 0
    }

    pub fn is_complete_intersection(&self) -> bool {
        self.level() == 1 && self.lambda.len() == self.c as usize
    }

    /// Gorenstein means mu has a single part (type 1), excluding the unit ideal.
    pub fn is_gorenstein(&self) -> bool {
        self.mu.len() == 1
    }

    pub fn format(&self) -> Format {
        Format::of(self)
    }

    /// Lexicographic-by-(level, lambda, mu) order used for deterministic output.
    pub fn sort_key(&self) -> (u64, Vec<u64>, Vec<u64>) {
        (
            self.level(),
            self.lambda.parts().to_vec(),
            self.mu.parts().to_vec(),
        )
    }
}

impl PartialOrd for Decoration {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decoration {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.c
            .cmp(&other.c)
            .then_with(|| self.level().cmp(&other.level()))
            .then_with(|| self.lambda.cmp(&other.lambda))
            .then_with(|| self.mu.cmp(&other.mu))
    }
}

impl fmt::Display for Decoration {
    /// Canonical text form, e.g. `c=3 λ=2,2,1,1,1 μ=2,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={} λ={} μ={}", self.c, self.lambda, self.mu)
    }
}

impl fmt::Debug for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Decoration {
    type Err = Error;

    /// Parses the canonical text form `c=3 λ=2,2,1,1,1 μ=2,1` (ASCII
    /// `lambda=`/`mu=` keys are accepted too).
    fn from_str(s: &str) -> Result<Self> {
        let mut c = None;
        let mut lambda = None;
        let mut mu = None;
        for tok in s.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{tok}`")))?;
            match key {
                "c" => {
                    c = Some(
                        val.parse::<u32>()
                            .map_err(|e| Error::Parse(format!("bad c: {e}")))?,
                    )
                }
                "λ" | "lambda" => lambda = Some(parse_int_list(val)?),
                "μ" | "mu" => mu = Some(parse_int_list(val)?),
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        let c = c.ok_or_else(|| Error::Parse("missing c=".into()))?;
        let lambda = lambda.ok_or_else(|| Error::Parse("missing λ=".into()))?;
        let mu = mu.unwrap_or_default();
        Decoration::new(c, &lambda, &mu)
    }
}

/// Parses a comma-separated integer list; the empty string is the empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer `{tok}`: {e}")))
        })
        .collect()
}

impl<'de> Deserialize<'de> for Decoration {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            c: u32,
            lambda: Vec<i64>,
            mu: Vec<i64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Decoration::new(raw.c, &raw.lambda, &raw.mu).map_err(serde::de::Error::custom)
    }
}

/// The rank vector `(1, r_1, ..., r_c)` of the minimal free resolution.
///
/// For c = 3 the whole vector is determined by (d, t): `(1, 3+d, 2+d+t, t)`.
/// For c >= 4 only the two ends are known; interior ranks are `None`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Format {
    pub ranks: Vec<Option<u64>>,
}

impl Format {
    pub fn of(dec: &Decoration) -> Format {
        let c = dec.codim() as usize;
        let b = dec.gens() as u64;
        let t = dec.cmtype() as u64;
        let mut ranks: Vec<Option<u64>> = vec![None; c + 1];
        ranks[0] = Some(1);
        ranks[1] = Some(b); // r_1 = c + d
        ranks[c] = Some(t);
        if c == 2 {
            // r_1 = b and r_2 = t already cover the whole vector
        } else if c == 3 {
            let d = dec.deviation();
            let r2 = 2 + d + t as i64;
            ranks[2] = Some(r2.max(0) as u64);
        }
        Format { ranks }
    }

    /// The fully-known rank tuple, or None when interior ranks are unknown.
    pub fn as_full(&self) -> Option<Vec<u64>> {
        self.ranks.iter().copied().collect()
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.ranks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match r {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "?")?,
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Dominance partial order on decorations of equal codimension:
/// `a <= b` iff `lambda_i(a) <= lambda_i(b)` and `mu_i(a) <= mu_i(b)` for all i.
pub fn dominance_leq(a: &Decoration, b: &Decoration) -> Result<bool> {
    if a.codim() != b.codim() {
        return Err(Error::CodimMismatch(a.codim(), b.codim()));
    }
    Ok(a.lambda().dominated_by(b.lambda()) && a.mu().dominated_by(b.mu()))
}
