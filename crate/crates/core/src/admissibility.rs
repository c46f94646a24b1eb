//! Deciding whether a partition pair is a genuine vertex of the licci graph.
//!
//! Three layers: fast necessary filters (the squares identity and the known
//! inequalities), the smallest-minimal-link chain (terminates at the CI or
//! unit ideal, detects cycles), and the level-descent procedure through tight
//! double links (level strictly decreases, so at most k recursions). The Weyl
//! oracle arbitrates if the two procedures ever disagree.

use serde::Serialize;

use crate::decoration::Decoration;
use crate::error::Error;
use crate::linkage;
use crate::weyl;

/// Machine-readable reason codes for verdicts and filter failures.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    UnitIdeal,
    CompleteIntersection,
    ChainReachedTerminal,
    DescentReachedBase,
    FilterSquares,
    FilterLambdaExceedsLevel,
    FilterWindowNegative,
    FilterWindowMu1,
    FilterLambda12,
    FilterMuLambda12,
    FilterLambdaMu,
    FilterGensBound,
    NegativePartInChain,
    CycleDetected,
    StepBudgetExhausted,
    OracleMember,
    OracleNonMember,
    OracleInconclusive,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Yes,
    No,
    Unknown,
}

/// Verdict of an admissibility procedure. `Yes` carries a certificate: the
/// link choices that carry the decoration to the CI or the unit ideal.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub reason: Reason,
    pub certificate: Option<Vec<Vec<u64>>>,
}

impl Verdict {
    fn yes(reason: Reason, certificate: Vec<Vec<u64>>) -> Self {
        Verdict {
            status: Status::Yes,
            reason,
            certificate: Some(certificate),
        }
    }

    fn no(reason: Reason) -> Self {
        Verdict {
            status: Status::No,
            reason,
            certificate: None,
        }
    }

    fn unknown(reason: Reason) -> Self {
        Verdict {
            status: Status::Unknown,
            reason,
            certificate: None,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::No
    }

    /// Replays the certificate from `source`, returning the terminal
    /// decoration it lands on.
    pub fn replay(&self, source: &Decoration) -> Option<Decoration> {
        let cert = self.certificate.as_ref()?;
        let mut cur = source.clone();
        for entries in cert {
            cur = linkage::link_with(&cur, entries).ok()?.target;
        }
        Some(cur)
    }
}

/// The p of the smallest minimal link, computed with trailing zeros:
/// `p = (c-2)k + 1 - (lambda_1 + ... + lambda_c)`.
fn smallest_p(dec: &Decoration) -> i64 {
    let c = dec.codim() as i64;
    let k = dec.level() as i64;
    let top: i64 = (1..=dec.codim() as usize)
        .map(|i| dec.lambda().part(i) as i64)
        .sum();
    (c - 2) * k + 1 - top
}

/// Fast necessary conditions, checked in order. `None` means "not excluded".
///
/// For every codimension: the squares identity
/// `sum(lambda_i^2) + sum(mu_j^2) = (c-2)k^2 + 2k + 1`, the bound
/// `lambda_i <= k`, and the window `0 <= lambda_c + p < mu_1` for the
/// smallest-minimal p. For c = 3 additionally `lambda_1 + lambda_2 <= k+1`,
/// `mu_1 + lambda_1 + lambda_2 > k+1`, `lambda_1 + mu_1 <= k+1`, and for
/// non-Gorenstein decorations `b <= k+2`.
pub fn necessary_filters(dec: &Decoration) -> Option<Reason> {
    let k = dec.level();
    if k == 0 {
        // the sum identity already forces lambda = (1)
        return None;
    }
    let c = dec.codim() as u64;
    let rhs = (c - 2) * k * k + 2 * k + 1;
    if dec.lambda().sum_of_squares() + dec.mu().sum_of_squares() != rhs {
        return Some(Reason::FilterSquares);
    }
    if dec.lambda().part(1) > k {
        return Some(Reason::FilterLambdaExceedsLevel);
    }
    let p = smallest_p(dec);
    let lam_c = dec.lambda().part(dec.codim() as usize) as i64;
    if lam_c + p < 0 {
        return Some(Reason::FilterWindowNegative);
    }
    if lam_c + p >= dec.mu().part(1) as i64 {
        return Some(Reason::FilterWindowMu1);
    }
    if dec.codim() == 3 {
        let l1 = dec.lambda().part(1);
        let l2 = dec.lambda().part(2);
        let m1 = dec.mu().part(1);
        if l1 + l2 > k + 1 {
            return Some(Reason::FilterLambda12);
        }
        if m1 + l1 + l2 <= k + 1 {
            return Some(Reason::FilterMuLambda12);
        }
        if l1 + m1 > k + 1 {
            return Some(Reason::FilterLambdaMu);
        }
        if !dec.is_gorenstein() && dec.gens() as u64 > k + 2 {
            return Some(Reason::FilterGensBound);
        }
    }
    None
}

/// Default step budget for the smallest-minimal chain. The chain length of a
/// genuine decoration is bounded by its level, but for rejected pairs the
/// walk may wander before hitting a cycle or a negative part.
pub const DEFAULT_MAX_STEPS: usize = 10_000;

/// Iterates the smallest minimal link. Yes on reaching the CI or the unit
/// ideal, No on a produced negative part or a revisited state, Unknown when
/// the step budget runs out.
pub fn is_decoration_smallest_chain(dec: &Decoration, max_steps: usize) -> Verdict {
    let c = dec.codim();
    if dec.is_unit_ideal() {
        return Verdict::yes(Reason::UnitIdeal, Vec::new());
    }
    if dec.is_complete_intersection() {
        return Verdict::yes(Reason::CompleteIntersection, Vec::new());
    }
    let mut visited = std::collections::HashSet::new();
    visited.insert(dec.clone());
    let mut path: Vec<Vec<u64>> = Vec::new();
    let mut current = dec.clone();
    for _ in 0..max_steps {
        // the smallest choice, padded with zeros when b < c
        let entries: Vec<u64> = (1..=c as usize).map(|i| current.lambda().part(i)).collect();
        let res = match linkage::link_with(&current, &entries) {
            Ok(r) => r,
            Err(Error::NegativePartProduced(_)) => return Verdict::no(Reason::NegativePartInChain),
            Err(_) => unreachable!("smallest choice is always a valid sub-multiset"),
        };
        path.push(entries);
        current = res.target;
        if current.is_unit_ideal() || current.is_complete_intersection() {
            return Verdict::yes(Reason::ChainReachedTerminal, path);
        }
        if !visited.insert(current.clone()) {
            return Verdict::no(Reason::CycleDetected);
        }
    }
    Verdict::unknown(Reason::StepBudgetExhausted)
}

/// Level descent through tight double links. Base cases k <= 1 are decided
/// directly; otherwise the window of the smallest-minimal p is checked and the
/// procedure recurses on the tight double link, whose level is strictly
/// smaller. Yes verdicts carry the two choices per level.
pub fn is_decoration_descent(dec: &Decoration) -> Verdict {
    let mut path: Vec<Vec<u64>> = Vec::new();
    let mut current = dec.clone();
    loop {
        let k = current.level();
        if k == 0 {
            // the sum identity forces lambda = (1)
            return Verdict::yes(Reason::DescentReachedBase, path);
        }
        if k == 1 {
            if current.is_complete_intersection() {
                return Verdict::yes(Reason::DescentReachedBase, path);
            }
            return Verdict::no(Reason::FilterSquares);
        }
        let p = smallest_p(&current);
        let lam_c = current.lambda().part(current.codim() as usize) as i64;
        if lam_c + p < 0 {
            return Verdict::no(Reason::FilterWindowNegative);
        }
        if lam_c + p >= current.mu().part(1) as i64 {
            return Verdict::no(Reason::FilterWindowMu1);
        }
        match linkage::tight_double_link(&current) {
            Ok((first, second)) => {
                debug_assert!(second.target.level() < k);
                path.push(first.choice.entries().to_vec());
                path.push(second.choice.entries().to_vec());
                current = second.target;
            }
            Err(Error::NegativePartProduced(_)) => return Verdict::no(Reason::NegativePartInChain),
            Err(_) => return Verdict::no(Reason::FilterWindowNegative),
        }
    }
}

/// Level cap under which the Weyl oracle is consulted on disagreement.
const ORACLE_LEVEL_CAP: u64 = 40;

/// Combined decision: filters first, then descent cross-checked against the
/// bounded smallest chain; the Weyl oracle (c = 3) arbitrates disagreements.
pub fn is_decoration(dec: &Decoration) -> Verdict {
    is_decoration_with_budget(dec, DEFAULT_MAX_STEPS)
}

pub fn is_decoration_with_budget(dec: &Decoration, max_steps: usize) -> Verdict {
    if let Some(reason) = necessary_filters(dec) {
        return Verdict::no(reason);
    }
    let descent = is_decoration_descent(dec);
    let chain = is_decoration_smallest_chain(dec, max_steps);
    match (descent.status, chain.status) {
        (Status::Yes, Status::Yes) | (Status::No, Status::No) => descent,
        // an exhausted chain budget leaves descent decisive
        (_, Status::Unknown) => descent,
        _ => {
            if dec.codim() == 3 && dec.level() <= ORACLE_LEVEL_CAP {
                match weyl::membership(dec) {
                    Ok(true) => Verdict::yes(
                        Reason::OracleMember,
                        chain.certificate.clone().unwrap_or_default(),
                    ),
                    Ok(false) => Verdict::no(Reason::OracleNonMember),
                    Err(_) => Verdict::unknown(Reason::OracleInconclusive),
                }
            } else {
                Verdict::unknown(Reason::OracleInconclusive)
            }
        }
    }
}
