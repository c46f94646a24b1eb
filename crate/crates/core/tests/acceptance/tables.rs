//! The seven golden link tables: for each named source decoration, every
//! neighbor row (choice, p, target pair, level, resolution format).
//! Formats are stated for non-unit targets; the one row whose published
//! format cell contradicts its own target pair carries the derived format
//! (see the project notes).

use licci::Decoration;

use crate::data::dec;

pub struct Row {
    pub choice: Vec<u64>,
    pub p: i64,
    pub target: Decoration,
    pub kappa: u64,
    pub format: Option<(u64, u64, u64, u64)>,
}

fn row(
    choice: &[u64],
    p: i64,
    lam: &[i64],
    mu: &[i64],
    kappa: u64,
    format: Option<(u64, u64, u64, u64)>,
) -> Row {
    let target = dec(3, lam, mu);
    assert_eq!(target.level(), kappa, "frozen row has inconsistent level");
    Row {
        choice: choice.to_vec(),
        p,
        target,
        kappa,
        format,
    }
}

fn ones(n: i64) -> Vec<i64> {
    vec![1; n as usize]
}

fn reps(v: i64, n: i64) -> Vec<i64> {
    vec![v; n.max(0) as usize]
}

pub struct GoldenTable {
    pub name: &'static str,
    pub source: Decoration,
    pub rows: Vec<Row>,
}

pub fn ci_table() -> GoldenTable {
    GoldenTable {
        name: "complete intersection",
        source: dec(3, &[1, 1, 1], &[1]),
        rows: vec![
            row(&[1, 1, 1], -1, &[1], &[], 0, None),
            row(&[1, 1, 0], 0, &[1, 1, 1], &[1], 1, Some((1, 3, 3, 1))),
            row(&[1, 0, 0], 1, &[2, 1, 1, 1], &[1, 1], 2, Some((1, 4, 5, 2))),
            row(
                &[0, 0, 0],
                2,
                &[2, 2, 2, 1],
                &[1, 1, 1],
                3,
                Some((1, 4, 6, 3)),
            ),
        ],
    }
}

pub fn gorenstein_table(k: i64) -> GoldenTable {
    assert!(k >= 2);
    let kk = k as u64;
    GoldenTable {
        name: "gorenstein",
        source: dec(3, &ones(2 * k + 1), &[k]),
        rows: vec![
            row(
                &[1, 1, 1],
                k - 2,
                &[&[k][..], &reps(k - 1, 3)].concat(),
                &ones(2 * k - 2),
                2 * kk - 2,
                Some((1, 4, 2 * kk + 1, 2 * kk - 2)),
            ),
            row(
                &[1, 1, 0],
                k - 1,
                &[&reps(k, 3)[..], &[k - 1]].concat(),
                &ones(2 * k - 1),
                2 * kk - 1,
                Some((1, 4, 2 * kk + 2, 2 * kk - 1)),
            ),
            row(
                &[1, 0, 0],
                k,
                &[&[k + 1][..], &reps(k, 3)].concat(),
                &ones(2 * k),
                2 * kk,
                Some((1, 4, 2 * kk + 3, 2 * kk)),
            ),
            row(
                &[0, 0, 0],
                k + 1,
                &[&reps(k + 1, 3)[..], &[k]].concat(),
                &ones(2 * k + 1),
                2 * kk + 1,
                Some((1, 4, 2 * kk + 4, 2 * kk + 1)),
            ),
        ],
    }
}

pub fn aci_even_table(j: i64) -> GoldenTable {
    assert!(j >= 1);
    let ju = j as u64;
    GoldenTable {
        name: "almost complete intersection, even type",
        source: dec(3, &[j + 1, j, j, j], &ones(2 * j)),
        rows: vec![
            row(
                &[ju + 1, ju, ju],
                -j,
                &ones(2 * j + 1),
                &[j],
                ju,
                Some((1, 2 * ju + 1, 2 * ju + 1, 1)),
            ),
            row(
                &[ju, ju, ju],
                -j + 1,
                &ones(2 * j + 3),
                &[j + 1],
                ju + 1,
                Some((1, 2 * ju + 3, 2 * ju + 3, 1)),
            ),
            row(
                &[ju + 1, ju, 0],
                0,
                &[&[j + 1, j][..], &ones(2 * j)].concat(),
                &[j, j],
                2 * ju,
                Some((1, 2 * ju + 2, 2 * ju + 3, 2)),
            ),
            row(
                &[ju, ju, 0],
                1,
                &[&[j + 1, j + 1][..], &ones(2 * j + 1)].concat(),
                &[j + 1, j],
                2 * ju + 1,
                Some((1, 2 * ju + 3, 2 * ju + 4, 2)),
            ),
            row(
                &[ju + 1, 0, 0],
                j,
                &[&[2 * j + 1, j, j][..], &ones(2 * j)].concat(),
                &[j, j, j],
                3 * ju,
                Some((1, 2 * ju + 3, 2 * ju + 5, 3)),
            ),
            row(
                &[ju, 0, 0],
                j + 1,
                &[&[2 * j + 1, j + 1, j + 1][..], &ones(2 * j)].concat(),
                &[j + 1, j, j],
                3 * ju + 1,
                Some((1, 2 * ju + 3, 2 * ju + 5, 3)),
            ),
            row(
                &[0, 0, 0],
                2 * j + 1,
                &[&reps(2 * j + 1, 3)[..], &ones(2 * j)].concat(),
                &[j + 1, j, j, j],
                4 * ju + 1,
                Some((1, 2 * ju + 3, 2 * ju + 6, 4)),
            ),
        ],
    }
}

pub fn aci_odd_table(j: i64) -> GoldenTable {
    assert!(j >= 2);
    let ju = j as u64;
    GoldenTable {
        name: "almost complete intersection, odd type",
        source: dec(3, &[j, j, j, j - 1], &ones(2 * j - 1)),
        rows: vec![
            row(
                &[ju, ju, ju],
                -j,
                &ones(2 * j - 1),
                &[j - 1],
                ju - 1,
                Some((1, 2 * ju - 1, 2 * ju - 1, 1)),
            ),
            row(
                &[ju, ju, ju - 1],
                -j + 1,
                &ones(2 * j + 1),
                &[j],
                ju,
                Some((1, 2 * ju + 1, 2 * ju + 1, 1)),
            ),
            row(
                &[ju, ju, 0],
                0,
                &[&[j, j][..], &ones(2 * j - 1)].concat(),
                &[j, j - 1],
                2 * ju - 1,
                Some((1, 2 * ju + 1, 2 * ju + 2, 2)),
            ),
            row(
                &[ju, ju - 1, 0],
                1,
                &[&[j + 1, j][..], &ones(2 * j)].concat(),
                &[j, j],
                2 * ju,
                Some((1, 2 * ju + 2, 2 * ju + 3, 2)),
            ),
            row(
                &[ju, 0, 0],
                j,
                &[&[2 * j, j, j][..], &ones(2 * j - 1)].concat(),
                &[j, j, j - 1],
                3 * ju - 1,
                Some((1, 2 * ju + 2, 2 * ju + 4, 3)),
            ),
            row(
                &[ju - 1, 0, 0],
                j + 1,
                &[&[2 * j, j + 1, j + 1][..], &ones(2 * j - 1)].concat(),
                &[j, j, j],
                3 * ju,
                Some((1, 2 * ju + 2, 2 * ju + 4, 3)),
            ),
            row(
                &[0, 0, 0],
                2 * j,
                &[&reps(2 * j, 3)[..], &ones(2 * j - 1)].concat(),
                &[j, j, j, j - 1],
                4 * ju - 1,
                Some((1, 2 * ju + 2, 2 * ju + 5, 4)),
            ),
        ],
    }
}

pub fn hyperplane_table(k: i64) -> GoldenTable {
    assert!(k >= 3);
    let ku = k as u64;
    GoldenTable {
        name: "hyperplane section of a codimension 2 perfect ideal",
        source: dec(3, &[&[k][..], &ones(k + 1)].concat(), &ones(k)),
        rows: vec![
            row(
                &[ku, 1, 1],
                -1,
                &[&[k - 1][..], &ones(k)].concat(),
                &ones(k - 1),
                ku - 1,
                Some((1, ku + 1, 2 * ku - 1, ku - 1)),
            ),
            row(
                &[ku, 1, 0],
                0,
                &[&[k][..], &ones(k + 1)].concat(),
                &ones(k),
                ku,
                Some((1, ku + 2, 2 * ku + 1, ku)),
            ),
            row(
                &[ku, 0, 0],
                1,
                &[&[k + 1][..], &ones(k + 2)].concat(),
                &ones(k + 1),
                ku + 1,
                Some((1, ku + 3, 2 * ku + 3, ku + 1)),
            ),
            // format derived from the target pair (published cell is off)
            row(
                &[1, 1, 1],
                k - 2,
                &[&reps(k - 1, 3)[..], &ones(k)].concat(),
                &[&[k][..], &ones(k - 2)].concat(),
                2 * ku - 2,
                Some((1, ku + 3, 2 * ku + 1, ku - 1)),
            ),
            row(
                &[1, 1, 0],
                k - 1,
                &[&[k, k, k - 1][..], &ones(k)].concat(),
                &[&[k][..], &ones(k - 1)].concat(),
                2 * ku - 1,
                Some((1, ku + 3, 2 * ku + 2, ku)),
            ),
            row(
                &[1, 0, 0],
                k,
                &[&[k + 1, k, k][..], &ones(k)].concat(),
                &[&[k][..], &ones(k)].concat(),
                2 * ku,
                Some((1, ku + 3, 2 * ku + 3, ku + 1)),
            ),
            row(
                &[0, 0, 0],
                k + 1,
                &[&reps(k + 1, 3)[..], &ones(k)].concat(),
                &[&[k][..], &ones(k + 1)].concat(),
                2 * ku + 1,
                Some((1, ku + 3, 2 * ku + 4, ku + 2)),
            ),
        ],
    }
}

pub fn brown_table() -> GoldenTable {
    GoldenTable {
        name: "five generators, type 2, with a Koszul relation",
        source: dec(3, &[2, 2, 1, 1, 1], &[2, 1]),
        rows: vec![
            row(
                &[2, 2, 1],
                -1,
                &[2, 1, 1, 1],
                &[1, 1],
                2,
                Some((1, 4, 5, 2)),
            ),
            row(
                &[2, 1, 1],
                0,
                &[2, 2, 1, 1, 1],
                &[2, 1],
                3,
                Some((1, 5, 6, 2)),
            ),
            row(
                &[1, 1, 1],
                1,
                &[2, 2, 2, 2, 1],
                &[2, 2],
                4,
                Some((1, 5, 6, 2)),
            ),
            row(
                &[2, 2, 0],
                0,
                &[2, 2, 2, 1],
                &[1, 1, 1],
                3,
                Some((1, 4, 6, 3)),
            ),
            row(
                &[2, 1, 0],
                1,
                &[3, 2, 2, 1, 1],
                &[2, 1, 1],
                4,
                Some((1, 5, 7, 3)),
            ),
            row(
                &[1, 1, 0],
                2,
                &[3, 3, 2, 2, 1],
                &[2, 2, 1],
                5,
                Some((1, 5, 7, 3)),
            ),
            row(
                &[2, 0, 0],
                2,
                &[4, 2, 2, 2, 1],
                &[2, 1, 1, 1],
                5,
                Some((1, 5, 8, 4)),
            ),
            row(
                &[1, 0, 0],
                3,
                &[4, 3, 3, 2, 1],
                &[2, 2, 1, 1],
                6,
                Some((1, 5, 8, 4)),
            ),
            row(
                &[0, 0, 0],
                4,
                &[4, 4, 4, 2, 1],
                &[2, 2, 1, 1, 1],
                7,
                Some((1, 5, 9, 5)),
            ),
        ],
    }
}

pub fn e6_table() -> GoldenTable {
    GoldenTable {
        name: "five generators, type 2, Golod",
        source: dec(3, &[2, 2, 2, 2, 1], &[2, 2]),
        rows: vec![
            row(
                &[2, 2, 2],
                -1,
                &[2, 2, 1, 1, 1],
                &[2, 1],
                3,
                Some((1, 5, 6, 2)),
            ),
            row(
                &[2, 2, 1],
                0,
                &[2, 2, 2, 2, 1],
                &[2, 2],
                4,
                Some((1, 5, 6, 2)),
            ),
            row(
                &[2, 2, 0],
                1,
                &[3, 3, 2, 2, 1],
                &[2, 2, 1],
                5,
                Some((1, 5, 7, 3)),
            ),
            row(
                &[2, 1, 0],
                2,
                &[4, 3, 2, 2, 2],
                &[2, 2, 2],
                6,
                Some((1, 5, 7, 3)),
            ),
            row(
                &[2, 0, 0],
                3,
                &[5, 3, 3, 2, 2],
                &[2, 2, 2, 1],
                7,
                Some((1, 5, 8, 4)),
            ),
            row(
                &[1, 0, 0],
                4,
                &[5, 4, 4, 2, 2],
                &[2, 2, 2, 2],
                8,
                Some((1, 5, 8, 4)),
            ),
            row(
                &[0, 0, 0],
                5,
                &[5, 5, 5, 2, 2],
                &[2, 2, 2, 2, 1],
                9,
                Some((1, 5, 9, 5)),
            ),
        ],
    }
}

pub fn class_g_table(k: i64) -> GoldenTable {
    assert!(k >= 4);
    let ku = k as u64;
    let twos = |n: i64| reps(2, n);
    GoldenTable {
        name: "class G(k-1) family",
        source: dec(3, &[&twos(k - 1)[..], &[1, 1, 1]].concat(), &[k - 1, 1]),
        rows: vec![
            row(
                &[2, 2, 2],
                k - 5,
                &[&[k - 1, k - 3, k - 3, k - 3, 1][..]].concat(),
                &[&twos(k - 4)[..], &[1, 1, 1]].concat(),
                2 * ku - 5,
                Some((1, 5, ku + 3, ku - 1)),
            ),
            row(
                &[2, 2, 1],
                k - 4,
                &[k - 1, k - 2, k - 2, k - 3, 1],
                &[&twos(k - 3)[..], &[1, 1]].concat(),
                2 * ku - 4,
                Some((1, 5, ku + 3, ku - 1)),
            ),
            row(
                &[2, 1, 1],
                k - 3,
                &[k - 1, k - 1, k - 2, k - 2, 1],
                &[&twos(k - 2)[..], &[1]].concat(),
                2 * ku - 3,
                Some((1, 5, ku + 3, ku - 1)),
            ),
            row(
                &[1, 1, 1],
                k - 2,
                &[k - 1, k - 1, k - 1, k - 1, 1],
                &twos(k - 1),
                2 * ku - 2,
                Some((1, 5, ku + 3, ku - 1)),
            ),
            row(
                &[2, 2, 0],
                k - 3,
                &[k - 1, k - 1, k - 1, k - 3, 1],
                &[&twos(k - 3)[..], &[1, 1, 1]].concat(),
                2 * ku - 3,
                Some((1, 5, ku + 4, ku)),
            ),
            row(
                &[2, 1, 0],
                k - 2,
                &[k, k - 1, k - 1, k - 2, 1],
                &[&twos(k - 2)[..], &[1, 1]].concat(),
                2 * ku - 2,
                Some((1, 5, ku + 4, ku)),
            ),
            row(
                &[1, 1, 0],
                k - 1,
                &[k, k, k - 1, k - 1, 1],
                &[&twos(k - 1)[..], &[1]].concat(),
                2 * ku - 1,
                Some((1, 5, ku + 4, ku)),
            ),
            row(
                &[2, 0, 0],
                k - 1,
                &[k + 1, k - 1, k - 1, k - 1, 1],
                &[&twos(k - 2)[..], &[1, 1, 1]].concat(),
                2 * ku - 1,
                Some((1, 5, ku + 5, ku + 1)),
            ),
            row(
                &[1, 0, 0],
                k,
                &[k + 1, k, k, k - 1, 1],
                &[&twos(k - 1)[..], &[1, 1]].concat(),
                2 * ku,
                Some((1, 5, ku + 5, ku + 1)),
            ),
            row(
                &[0, 0, 0],
                k + 1,
                &[k + 1, k + 1, k + 1, k - 1, 1],
                &[&twos(k - 1)[..], &[1, 1, 1]].concat(),
                2 * ku + 1,
                Some((1, 5, ku + 6, ku + 2)),
            ),
        ],
    }
}

/// Every golden table instance exercised by the acceptance suite:
/// the parameterized families at all parameters up to 10.
pub fn all_tables() -> Vec<GoldenTable> {
    let mut out = vec![ci_table(), brown_table(), e6_table()];
    for k in 2..=10 {
        out.push(gorenstein_table(k));
    }
    for j in 1..=10 {
        out.push(aci_even_table(j));
    }
    for j in 2..=10 {
        out.push(aci_odd_table(j));
    }
    for k in 3..=10 {
        out.push(hyperplane_table(k));
    }
    for k in 4..=10 {
        out.push(class_g_table(k));
    }
    out
}
