//! Doubling, hyperplane section, and generators for the named families.

use crate::decoration::Decoration;
use crate::error::{Error, Result};
use crate::linkage::{self, LinkResult};

/// Doubling: `(lambda, mu)` at codimension c becomes
/// `(rsort(lambda ∪ mu), (k))` at codimension c+1. The doubling of a
/// decoration is the decoration of a Gorenstein class one codimension up.
pub fn doubling(dec: &Decoration) -> Decoration {
    let lambda = dec.lambda().merge(dec.mu());
    let mu: Vec<i64> = if dec.level() > 0 {
        vec![dec.level() as i64]
    } else {
        Vec::new()
    };
    let mu = crate::partition::Partition::new(&mu).expect("level is non-negative");
    Decoration::from_partitions(dec.codim() + 1, lambda, mu)
        .expect("doubling preserves the sum identity one codimension up")
}

/// Hyperplane section: prepends k to lambda and raises the codimension.
pub fn hyperplane_section(dec: &Decoration) -> Decoration {
    let k = dec.level();
    let mut parts: Vec<u64> = dec.lambda().parts().to_vec();
    parts.push(k);
    let lambda = crate::partition::Partition::from_unsigned(&parts);
    Decoration::from_partitions(dec.codim() + 1, lambda, dec.mu().clone())
        .expect("hyperplane section preserves the sum identity one codimension up")
}

/// A decoration is a hyperplane section exactly when `lambda_1 = k`.
pub fn is_hyperplane_section(dec: &Decoration) -> bool {
    dec.level() > 0 && dec.lambda().part(1) == dec.level()
}

/// The explicit double link carrying `D(S)` to `D(S')` where S' is the tight
/// double link of S: first the choice `(lambda_1, ..., lambda_c, mu_1)`, then
/// `(lambda_1 + p', ..., lambda_{c-1} + p', mu_1 + p', k)`.
pub fn doubling_double_link(dec: &Decoration) -> Result<(LinkResult, LinkResult)> {
    if dec.level() <= 1 {
        return Err(Error::BadParams("doubling replay needs level > 1".into()));
    }
    let d = doubling(dec);
    let c = dec.codim() as usize;
    let mut entries: Vec<u64> = (1..=c).map(|i| dec.lambda().part(i)).collect();
    entries.push(dec.mu().part(1));
    let first = linkage::link_with(&d, &entries)?;
    let p1 = first.p;
    let mut entries2: Vec<u64> = (1..c)
        .map(|i| (dec.lambda().part(i) as i64 + p1) as u64)
        .collect();
    entries2.push((dec.mu().part(1) as i64 + p1) as u64);
    entries2.push(dec.level());
    let second = linkage::link_with(&first.target, &entries2)?;
    Ok((first, second))
}

fn rep(v: i64, n: usize) -> Vec<i64> {
    vec![v; n]
}

/// `S_{I_k} = (2^{k-1}, 1, 1, 1); (k-1, 1)`, the type-2 classes closest to
/// the Gorenstein ones.
pub fn closest_to_gorenstein(k: u64) -> Result<Decoration> {
    if k < 2 {
        return Err(Error::BadParams("closest family needs k >= 2".into()));
    }
    let mut lam = rep(2, (k - 1) as usize);
    lam.extend([1, 1, 1]);
    Decoration::new(3, &lam, &[k as i64 - 1, 1])
}

/// The three families of format (1,6,8,3), parameterized by n >= 1 with
/// `a = n(3n+1)/2`.
pub mod format1683 {
    use super::*;

    fn a_of(n: i64) -> i64 {
        n * (3 * n + 1) / 2
    }

    pub fn family_i(n: i64) -> Result<Decoration> {
        if n < 1 {
            return Err(Error::BadParams("format-1683 family needs n >= 1".into()));
        }
        let a = a_of(n);
        Decoration::new(
            3,
            &[a + 2, a, a, a - 2 * n + 1, a - 2 * n + 1, a - 2 * n + 1],
            &[a - n + 1, a - n + 1, a - n],
        )
    }

    pub fn family_h(n: i64) -> Result<Decoration> {
        if n < 1 {
            return Err(Error::BadParams("format-1683 family needs n >= 1".into()));
        }
        let a = a_of(n);
        Decoration::new(
            3,
            &[
                a - n + 1,
                a - n + 1,
                a - n,
                a - 3 * n + 3,
                a - 3 * n + 1,
                a - 3 * n + 1,
            ],
            &[a - 2 * n + 1, a - 2 * n + 1, a - 2 * n + 1],
        )
    }

    pub fn family_j(n: i64) -> Result<Decoration> {
        if n < 1 {
            return Err(Error::BadParams("format-1683 family needs n >= 1".into()));
        }
        let a = a_of(n);
        Decoration::new(
            3,
            &[
                a - 2 * n + 1,
                a - 2 * n + 1,
                a - 2 * n + 1,
                a - 4 * n + 3,
                a - 4 * n + 3,
                a - 4 * n + 2,
            ],
            &[a - 3 * n + 3, a - 3 * n + 1, a - 3 * n + 1],
        )
    }
}

/// Codimension 4 Gorenstein classes with n generators, n in {6, 7, 8}.
pub fn gorenstein4_list(n: usize) -> Result<Vec<Decoration>> {
    let raw: Vec<(Vec<i64>, i64)> = match n {
        6 => vec![(vec![2, 1, 1, 1, 1, 1], 2)],
        7 => vec![
            (vec![2, 2, 2, 1, 1, 1, 1], 3),
            (vec![2, 2, 2, 2, 2, 2, 1], 4),
        ],
        8 => vec![
            (vec![3, 1, 1, 1, 1, 1, 1, 1], 3),
            (vec![3, 2, 2, 2, 1, 1, 1, 1], 4),
            (vec![3, 3, 2, 2, 2, 2, 1, 1], 5),
            (vec![4, 3, 2, 2, 2, 2, 2, 2], 6),
            (vec![3, 3, 3, 3, 2, 2, 2, 1], 6),
            (vec![4, 3, 3, 3, 3, 2, 2, 2], 7),
            (vec![3, 3, 3, 3, 3, 3, 3, 1], 7),
            (vec![4, 4, 3, 3, 3, 3, 3, 2], 8),
            (vec![4, 4, 4, 4, 3, 3, 3, 3], 9),
            (vec![4, 4, 4, 4, 4, 4, 4, 3], 10),
        ],
        _ => {
            return Err(Error::BadParams(format!(
                "codimension 4 Gorenstein lists exist for 6, 7, 8 generators, got {n}"
            )))
        }
    };
    raw.into_iter()
        .map(|(lam, k)| Decoration::new(4, &lam, &[k]))
        .collect()
}

/// The infinite family of codimension 4 Gorenstein classes with 9 generators:
/// the doubling of the format-(1,6,8,3) family I_n.
pub fn gorenstein4_9gens(n: i64) -> Result<Decoration> {
    Ok(doubling(&format1683::family_i(n)?))
}

/// Deviation 2 Gorenstein classes at codimension 5 and 6 (finitely many).
pub fn deviation2_list(c: u32) -> Result<Vec<Decoration>> {
    let raw: Vec<(Vec<i64>, i64)> = match c {
        5 => vec![
            (vec![2, 2, 1, 1, 1, 1, 1], 2),
            (vec![2, 2, 2, 2, 2, 2, 1], 3),
        ],
        6 => vec![
            (vec![2, 2, 2, 1, 1, 1, 1, 1], 2),
            (vec![3, 2, 2, 2, 2, 2, 2, 1], 3),
            (vec![3, 3, 3, 3, 3, 2, 2, 2], 4),
            (vec![4, 4, 3, 3, 3, 3, 3, 3], 5),
            (vec![4, 4, 4, 4, 4, 4, 4, 3], 6),
        ],
        _ => {
            return Err(Error::BadParams(format!(
                "deviation-2 lists exist for codimension 5 and 6, got {c}"
            )))
        }
    };
    raw.into_iter()
        .map(|(lam, k)| Decoration::new(c, &lam, &[k]))
        .collect()
}

/// The codimension 7, deviation 2 family S_a; the stated fractions are
/// integral on each parity branch, which the constructor re-checks through
/// the sum identity.
pub fn deviation2_c7(a: i64) -> Result<Decoration> {
    if a < 0 {
        return Err(Error::BadParams("the c=7 family needs a >= 0".into()));
    }
    let (lam, mu) = if a % 2 == 0 {
        let top = 3 * a * a + 7 * a + 4;
        let mid_hi = 3 * a * a + 6 * a + 4;
        let mid_lo = 3 * a * a + 6 * a + 2;
        let bot = 3 * a * a + 5 * a + 2;
        let level = 9 * a * a + 18 * a + 8;
        debug_assert!(top % 2 == 0 && mid_hi % 2 == 0 && mid_lo % 2 == 0 && bot % 2 == 0);
        debug_assert!(level % 4 == 0);
        (
            vec![
                top / 2,
                top / 2,
                top / 2,
                mid_hi / 2,
                mid_lo / 2,
                mid_lo / 2,
                bot / 2,
                bot / 2,
                bot / 2,
            ],
            vec![level / 4],
        )
    } else {
        let top = 3 * a * a + 7 * a + 4;
        let mid_hi = 3 * a * a + 6 * a + 5;
        let mid_lo = 3 * a * a + 6 * a + 3;
        let bot = 3 * a * a + 5 * a + 2;
        let level = 9 * a * a + 18 * a + 9;
        debug_assert!(top % 2 == 0 && mid_hi % 2 == 0 && mid_lo % 2 == 0 && bot % 2 == 0);
        debug_assert!(level % 4 == 0);
        (
            vec![
                top / 2,
                top / 2,
                top / 2,
                mid_hi / 2,
                mid_lo / 2,
                mid_lo / 2,
                bot / 2,
                bot / 2,
                bot / 2,
            ],
            vec![level / 4],
        )
    };
    Decoration::new(7, &lam, &mu)
}

/// The published class lists of the finite-class (b, t) formats, shipped as a
/// versioned data file. For the two largest formats the list covers levels up
/// to `max_level_listed` only (`complete = false`); the remaining classes are
/// duality images of these.
#[derive(Clone, Debug)]
pub struct DynkinList {
    pub b: usize,
    pub t: usize,
    pub complete: bool,
    pub max_level_listed: Option<u64>,
    pub classes: Vec<Decoration>,
}

pub fn dynkin_list(b: usize, t: usize) -> Result<DynkinList> {
    use serde::Deserialize;
    #[derive(Deserialize)]
    struct RawEntry {
        lambda: Vec<i64>,
        mu: Vec<i64>,
    }
    #[derive(Deserialize)]
    struct RawBlock {
        b: usize,
        t: usize,
        complete: bool,
        max_level_listed: Option<u64>,
        classes: Vec<RawEntry>,
    }
    #[derive(Deserialize)]
    struct RawDoc {
        version: u32,
        formats: Vec<RawBlock>,
    }
    static DATA: &str = include_str!("../data/dynkin_classes.json");
    let doc: RawDoc = serde_json::from_str(DATA).expect("embedded class data parses");
    assert_eq!(doc.version, 1, "unexpected class data version");
    let block = doc
        .formats
        .into_iter()
        .find(|f| f.b == b && f.t == t)
        .ok_or(Error::NeedsKCap((b, t)))?;
    let classes = block
        .classes
        .iter()
        .map(|e| Decoration::new(3, &e.lambda, &e.mu))
        .collect::<Result<Vec<_>>>()?;
    Ok(DynkinList {
        b: block.b,
        t: block.t,
        complete: block.complete,
        max_level_listed: block.max_level_listed,
        classes,
    })
}

/// Named family registry backing the CLI `family` subcommand.
pub fn family(name: &str, params: &[i64]) -> Result<Vec<Decoration>> {
    let one = |d: Result<Decoration>| d.map(|d| vec![d]);
    let arg = |i: usize| -> Result<i64> {
        params
            .get(i)
            .copied()
            .ok_or_else(|| Error::BadParams(format!("family `{name}` needs parameter #{}", i + 1)))
    };
    match name {
        "ci" => {
            let c = if params.is_empty() { 3 } else { arg(0)? };
            if c < 2 {
                return Err(Error::BadParams("ci needs c >= 2".into()));
            }
            one(Ok(Decoration::complete_intersection(c as u32)))
        }
        "unit" => {
            let c = if params.is_empty() { 3 } else { arg(0)? };
            if c < 2 {
                return Err(Error::BadParams("unit needs c >= 2".into()));
            }
            one(Ok(Decoration::unit_ideal(c as u32)))
        }
        "gorenstein3" => {
            let k = arg(0)?;
            if k < 1 {
                return Err(Error::BadParams("gorenstein3 needs k >= 1".into()));
            }
            one(Decoration::new(3, &rep(1, (2 * k + 1) as usize), &[k]))
        }
        "aci_even" => {
            let j = arg(0)?;
            if j < 1 {
                return Err(Error::BadParams("aci_even needs j >= 1".into()));
            }
            one(Decoration::new(
                3,
                &[j + 1, j, j, j],
                &rep(1, (2 * j) as usize),
            ))
        }
        "aci_odd" => {
            let j = arg(0)?;
            if j < 2 {
                return Err(Error::BadParams("aci_odd needs j >= 2".into()));
            }
            one(Decoration::new(
                3,
                &[j, j, j, j - 1],
                &rep(1, (2 * j - 1) as usize),
            ))
        }
        "hyperplane3" => {
            let k = arg(0)?;
            if k < 1 {
                return Err(Error::BadParams("hyperplane3 needs k >= 1".into()));
            }
            let mut lam = vec![k];
            lam.extend(rep(1, (k + 1) as usize));
            one(Decoration::new(3, &lam, &rep(1, k as usize)))
        }
        "brown" => one(Decoration::new(3, &[2, 2, 1, 1, 1], &[2, 1])),
        "e6" => one(Decoration::new(3, &[2, 2, 2, 2, 1], &[2, 2])),
        "closest" => one(closest_to_gorenstein(arg(0)?.max(0) as u64)),
        "huneke" => one(crate::tor::huneke_family(arg(0)?.max(0) as u32)),
        "f1683_I" => one(format1683::family_i(arg(0)?)),
        "f1683_H" => one(format1683::family_h(arg(0)?)),
        "f1683_J" => one(format1683::family_j(arg(0)?)),
        "gor4_list" => gorenstein4_list(arg(0)? as usize),
        "gor4_9gen" => one(gorenstein4_9gens(arg(0)?)),
        "dev2_list" => deviation2_list(arg(0)? as u32),
        "dev2_c7" => one(deviation2_c7(arg(0)?)),
        "dynkin_list" => Ok(dynkin_list(arg(0)? as usize, arg(1)? as usize)?.classes),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

/// Names accepted by [`family`], for help text.
pub const FAMILY_NAMES: &[&str] = &[
    "ci",
    "unit",
    "gorenstein3",
    "aci_even",
    "aci_odd",
    "hyperplane3",
    "brown",
    "e6",
    "closest",
    "huneke",
    "f1683_I",
    "f1683_H",
    "f1683_J",
    "gor4_list",
    "gor4_9gen",
    "dev2_list",
    "dev2_c7",
    "dynkin_list",
];

/// Replays the smallest-minimal chain `I_n -> H_n -> J_n -> I_{n-1}` and the
/// largest-minimal chain back up, for the format-(1,6,8,3) families.
pub fn check_1683_chain(n: i64) -> Result<()> {
    let i_n = format1683::family_i(n)?;
    let h_n = format1683::family_h(n)?;
    let j_n = format1683::family_j(n)?;
    let down_i = linkage::smallest_minimal_link(&i_n)?.target;
    if down_i != h_n {
        return Err(Error::BadParams(format!(
            "smallest link of I_{n} gave {down_i}, expected H_{n} = {h_n}"
        )));
    }
    let down_h = linkage::smallest_minimal_link(&h_n)?.target;
    if down_h != j_n {
        return Err(Error::BadParams(format!(
            "smallest link of H_{n} gave {down_h}, expected J_{n} = {j_n}"
        )));
    }
    let down_j = linkage::smallest_minimal_link(&j_n)?.target;
    let expected = if n >= 2 {
        format1683::family_i(n - 1)?
    } else {
        // I_0 degenerates to the almost complete intersection (2,1,1,1);(1,1)
        Decoration::new(3, &[2, 1, 1, 1], &[1, 1])?
    };
    if n >= 2 && down_j != expected {
        return Err(Error::BadParams(format!(
            "smallest link of J_{n} gave {down_j}, expected I_{} = {expected}",
            n - 1
        )));
    }
    // the largest minimal links walk back up
    if n >= 2 {
        let up_j = linkage::largest_minimal_link(&expected)?.target;
        if up_j != j_n {
            return Err(Error::BadParams(format!(
                "largest link of I_{} gave {up_j}, expected J_{n}",
                n - 1
            )));
        }
    }
    let up_h = linkage::largest_minimal_link(&j_n)?.target;
    if up_h != h_n {
        return Err(Error::BadParams(format!(
            "largest link of J_{n} gave {up_h}, expected H_{n}"
        )));
    }
    let up_i = linkage::largest_minimal_link(&h_n)?.target;
    if up_i != i_n {
        return Err(Error::BadParams(format!(
            "largest link of H_{n} gave {up_i}, expected I_{n}"
        )));
    }
    Ok(())
}

/// Replays the two-link climb `S_{I_k} -> S_{J_{k+2}} -> S_{I_{k+2}}`:
/// first the choice (2, 0, 0), then the minimal link on (k-1, k-1, k-1).
pub fn check_closest_up_chain(k: u64) -> Result<()> {
    let i_k = closest_to_gorenstein(k)?;
    let first = linkage::link_with(&i_k, &[2, 0, 0])?;
    let mut expected_j = vec![k as i64 + 1];
    expected_j.extend(rep(k as i64 - 1, 3));
    expected_j.push(1);
    let mut expected_j_mu = rep(2, (k - 2) as usize);
    expected_j_mu.extend([1, 1, 1]);
    let j_k2 = Decoration::new(3, &expected_j, &expected_j_mu)?;
    if first.target != j_k2 {
        return Err(Error::BadParams(format!(
            "link (2,0,0) of S_I_{k} gave {}, expected {j_k2}",
            first.target
        )));
    }
    let second = linkage::link_with(&j_k2, &[k - 1, k - 1, k - 1])?;
    let i_k2 = closest_to_gorenstein(k + 2)?;
    if second.target != i_k2 {
        return Err(Error::BadParams(format!(
            "link (k-1,k-1,k-1) of S_J_{} gave {}, expected {i_k2}",
            k + 2,
            second.target
        )));
    }
    Ok(())
}

/// Replays the six consecutive largest minimal links from S_{a-1} to S_a in
/// the codimension 7 deviation 2 family.
pub fn check_dev2_c7_chain(a: i64) -> Result<()> {
    if a < 1 {
        return Err(Error::BadParams("chain needs a >= 1".into()));
    }
    let mut cur = deviation2_c7(a - 1)?;
    for step in 0..6 {
        cur = linkage::largest_minimal_link(&cur)
            .map_err(|e| Error::BadParams(format!("step {step} failed: {e}")))?
            .target;
    }
    let expected = deviation2_c7(a)?;
    if cur != expected {
        return Err(Error::BadParams(format!(
            "six largest links from S_{} gave {cur}, expected {expected}",
            a - 1
        )));
    }
    Ok(())
}
