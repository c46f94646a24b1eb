//! Multiplicative structure of the Tor algebra read off a c = 3 decoration.
//!
//! With bases e_i, f_j, g_l of the three resolution modules, the product
//! e_i.e_j is nonzero modulo the maximal ideal exactly when
//! `lambda_i + lambda_j = k+1`, and e_i.f = g_j happens exactly when
//! `lambda_i + mu_j = k+1`. Class G(r) requires r perfect pairings with g_1
//! and no Koszul product among the e_i.

use serde::Serialize;

use crate::decoration::Decoration;
use crate::error::{Error, Result};
use crate::linkage::{self, LinkResult};

/// Coarse multiplication class determined by the decoration.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorClass {
    UnitIdeal,
    CompleteIntersection,
    Gorenstein,
    KoszulPresent,
    ClassG(usize),
    TrivialMultiplication,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorProfile {
    /// Index pairs (i, j), i < j, 1-based, with lambda_i + lambda_j = k+1.
    pub koszul_pairs: Vec<(usize, usize)>,
    /// Index pairs (i, j) with lambda_i + mu_j = k+1.
    pub pairing_indices: Vec<(usize, usize)>,
    pub class: TorClass,
}

/// Computes both index sets and the class label. c = 3 only.
pub fn tor_profile(dec: &Decoration) -> Result<TorProfile> {
    if dec.codim() != 3 {
        return Err(Error::WrongCodim {
            expected: 3,
            got: dec.codim(),
        });
    }
    let k = dec.level();
    let b = dec.gens();
    let t = dec.cmtype();
    let lam = dec.lambda();
    let mu = dec.mu();
    let mut koszul_pairs = Vec::new();
    for i in 1..=b {
        for j in (i + 1)..=b {
            if lam.part(i) + lam.part(j) == k + 1 {
                koszul_pairs.push((i, j));
            }
        }
    }
    let mut pairing_indices = Vec::new();
    for i in 1..=b {
        for j in 1..=t {
            if lam.part(i) + mu.part(j) == k + 1 {
                pairing_indices.push((i, j));
            }
        }
    }
    let class = if dec.is_unit_ideal() {
        TorClass::UnitIdeal
    } else if dec.is_complete_intersection() {
        TorClass::CompleteIntersection
    } else if dec.is_gorenstein() {
        TorClass::Gorenstein
    } else if !koszul_pairs.is_empty() {
        TorClass::KoszulPresent
    } else {
        let r = pairing_indices.iter().filter(|&&(_, j)| j == 1).count();
        if r > 0 {
            TorClass::ClassG(r)
        } else {
            TorClass::TrivialMultiplication
        }
    };
    Ok(TorProfile {
        koszul_pairs,
        pairing_indices,
        class,
    })
}

/// The G-rank: the number of indices with `lambda_i + mu_1 = k+1`, or None
/// when a Koszul pair exists (the class is then not G). c = 3 only.
pub fn class_g_rank(dec: &Decoration) -> Result<Option<usize>> {
    let profile = tor_profile(dec)?;
    if !profile.koszul_pairs.is_empty() {
        return Ok(None);
    }
    Ok(Some(
        profile
            .pairing_indices
            .iter()
            .filter(|&&(_, j)| j == 1)
            .count(),
    ))
}

/// The dominating family of Koszul-bearing decorations:
/// `H_t = (2^{t-1}, 2^{t-1}, 2^{t-2}, 2^{t-2}, ..., 2, 2, 1, 1, 1); (2^{t-1},
/// ..., 2, 1)` at level 2^t - 1.
pub fn huneke_family(t: u32) -> Result<Decoration> {
    if t < 1 {
        return Err(Error::BadParams("huneke family needs t >= 1".into()));
    }
    let mut lambda: Vec<i64> = Vec::new();
    for e in (1..t).rev() {
        let v = 1i64 << e;
        lambda.push(v);
        lambda.push(v);
    }
    lambda.extend([1, 1, 1]);
    let mu: Vec<i64> = (0..t).rev().map(|e| 1i64 << e).collect();
    Decoration::new(3, &lambda, &mu)
}

/// The p = 0 link available exactly when `lambda_1 + lambda_2 = k+1`:
/// the choice `(lambda_1, lambda_2, 0)`. It is an involution on that family.
pub fn p0_link(dec: &Decoration) -> Result<LinkResult> {
    if dec.codim() != 3 {
        return Err(Error::WrongCodim {
            expected: 3,
            got: dec.codim(),
        });
    }
    let l1 = dec.lambda().part(1);
    let l2 = dec.lambda().part(2);
    if l1 + l2 != dec.level() + 1 {
        return Err(Error::NotApplicable(format!(
            "p0 needs λ1+λ2 = k+1, got {}+{} at level {}",
            l1,
            l2,
            dec.level()
        )));
    }
    let res = linkage::link_with(dec, &[l1, l2, 0])?;
    debug_assert_eq!(res.p, 0);
    Ok(res)
}
