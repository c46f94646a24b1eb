//! Bounded enumeration of the licci graph and deterministic export.
//!
//! The graph at level cap K is built by breadth-first search from the unit
//! ideal over the linkage formula. Intermediate vertices are explored up to
//! the working budget `B = max((c-1)K + 1 - c, K)`: a level-k decoration is
//! two links away from one of strictly smaller level via the tight double
//! link, whose intermediate has level `(c-1)k + 1 - (lambda_1 + ... +
//! lambda_c) <= (c-1)k + 1 - c`, so exploring to B reaches every vertex with
//! level at most K. (At c = 3 this is the familiar 2K-2.) Lowering the budget
//! clears the completeness flag.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::decoration::Decoration;
use crate::error::{Error, Result};
use crate::linkage::{self, LinkChoice};

/// One stored edge, oriented from the smaller endpoint; the reverse
/// orientation is derivable through the link involution.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Edge {
    pub source: Decoration,
    pub choice: LinkChoice,
    pub p: i64,
    pub target: Decoration,
}

#[derive(Clone, Debug)]
pub struct LicciGraph {
    pub c: u32,
    pub level_cap: u64,
    pub budget: u64,
    /// True when the derived working budget was honored and no resource cap
    /// truncated the search, so the vertex set at levels <= level_cap is
    /// provably complete.
    pub complete: bool,
    /// Set when the vertex resource cap stopped the search early.
    pub overflowed: bool,
    pub vertices: Vec<Decoration>,
    pub edges: Vec<Edge>,
}

/// Knobs for [`enumerate_with`]; `Default` derives the budget and applies a
/// generous vertex cap.
#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Working budget for intermediate levels; `None` derives
    /// `max((c-1)K+1-c, K)`.
    pub working_budget: Option<u64>,
    /// Hard cap on explored vertices; exceeding it stops the search and marks
    /// the graph overflowed.
    pub max_vertices: usize,
    /// Skip the edge pass (vertex sets only); large-budget counting runs
    /// don't need edges.
    pub with_edges: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            working_budget: None,
            max_vertices: 50_000_000,
            with_edges: true,
        }
    }
}

/// Compact canonical key for the visited set: lambda parts, a 0xff separator,
/// mu parts, each part in one byte. Keeps multi-million-vertex searches in
/// memory.
fn compact_key(dec: &Decoration) -> Box<[u8]> {
    let mut out = Vec::with_capacity(dec.gens() + dec.cmtype() + 1);
    for &x in dec.lambda().parts() {
        debug_assert!(x < 0xff);
        out.push(x as u8);
    }
    out.push(0xff);
    for &x in dec.mu().parts() {
        out.push(x as u8);
    }
    out.into_boxed_slice()
}

fn decode_key(c: u32, key: &[u8]) -> Decoration {
    let sep = key.iter().position(|&b| b == 0xff).expect("separator");
    let lam: Vec<u64> = key[..sep].iter().map(|&b| b as u64).collect();
    let mu: Vec<u64> = key[sep + 1..].iter().map(|&b| b as u64).collect();
    Decoration::from_partitions(
        c,
        crate::partition::Partition::from_unsigned(&lam),
        crate::partition::Partition::from_unsigned(&mu),
    )
    .expect("keys encode valid decorations")
}

pub fn derived_budget(c: u32, level_cap: u64) -> u64 {
    let b = (u64::from(c) - 1) * level_cap + 1;
    b.saturating_sub(u64::from(c)).max(level_cap)
}

/// BFS from the unit ideal; vertices with level <= level_cap and all edges
/// among them.
pub fn enumerate(c: u32, level_cap: u64) -> Result<LicciGraph> {
    enumerate_with(c, level_cap, EnumerateOptions::default())
}

pub fn enumerate_with(c: u32, level_cap: u64, opts: EnumerateOptions) -> Result<LicciGraph> {
    if c < 2 {
        return Err(Error::CodimTooSmall(c));
    }
    let derived = derived_budget(c, level_cap);
    let budget = opts.working_budget.unwrap_or(derived);
    if budget >= 0xff {
        return Err(Error::BadParams(format!(
            "working budget {budget} exceeds the part-encoding limit of 254"
        )));
    }
    let unit = Decoration::unit_ideal(c);
    let mut seen: HashSet<Box<[u8]>> = HashSet::new();
    let mut queue: VecDeque<Box<[u8]>> = VecDeque::new();
    let mut vertices: Vec<Decoration> = Vec::new();
    seen.insert(compact_key(&unit));
    if unit.level() <= level_cap {
        vertices.push(unit.clone());
    }
    queue.push_back(compact_key(&unit));
    let mut overflowed = false;
    while let Some(key) = queue.pop_front() {
        let v = decode_key(c, &key);
        for r in linkage::neighbors(&v) {
            if r.target.level() > budget {
                continue;
            }
            let tkey = compact_key(&r.target);
            if !seen.contains(&tkey) {
                if seen.len() >= opts.max_vertices {
                    overflowed = true;
                    queue.clear();
                    break;
                }
                seen.insert(tkey.clone());
                queue.push_back(tkey);
                if r.target.level() <= level_cap {
                    vertices.push(r.target);
                }
            }
        }
    }
    drop(seen);
    vertices.sort();
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    for v in vertices.iter().filter(|_| opts.with_edges) {
        for r in linkage::neighbors(v) {
            if r.target.level() > level_cap {
                continue;
            }
            let e = if *v <= r.target {
                Edge {
                    source: v.clone(),
                    choice: r.choice,
                    p: r.p,
                    target: r.target,
                }
            } else {
                // canonical orientation: from the smaller endpoint, using the
                // reversed choice
                let rev = r.reverse_choice();
                let choice =
                    LinkChoice::new(&r.target, &rev).expect("reverse choice is always valid");
                Edge {
                    source: r.target,
                    choice,
                    p: -r.p,
                    target: v.clone(),
                }
            };
            edges.insert(e);
        }
    }
    Ok(LicciGraph {
        c,
        level_cap,
        budget,
        complete: budget >= derived && !overflowed,
        overflowed,
        vertices,
        edges: edges.into_iter().collect(),
    })
}

impl LicciGraph {
    pub fn vertices_at_level(&self, k: u64) -> impl Iterator<Item = &Decoration> {
        self.vertices.iter().filter(move |v| v.level() == k)
    }

    /// The sub-data at a smaller level cap (vertex completeness carries over).
    pub fn restricted(&self, level_cap: u64) -> LicciGraph {
        assert!(level_cap <= self.level_cap);
        LicciGraph {
            c: self.c,
            level_cap,
            budget: self.budget,
            complete: self.complete,
            overflowed: self.overflowed,
            vertices: self
                .vertices
                .iter()
                .filter(|v| v.level() <= level_cap)
                .cloned()
                .collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| e.source.level() <= level_cap && e.target.level() <= level_cap)
                .cloned()
                .collect(),
        }
    }

    /// Graphviz DOT, deterministic: vertices sorted by (level, lambda, mu),
    /// labels `λ|μ|k`, loops rendered once.
    pub fn to_dot(&self) -> String {
        let mut ids = std::collections::BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            ids.insert(v.clone(), i);
        }
        let mut out = String::new();
        let _ = writeln!(out, "graph licci_{} {{", self.c);
        let _ = writeln!(
            out,
            "  // c={} level_cap={} budget={} complete={}",
            self.c, self.level_cap, self.budget, self.complete
        );
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                out,
                "  v{} [label=\"{}|{}|{}\"];",
                i,
                v.lambda(),
                v.mu(),
                v.level()
            );
        }
        for e in &self.edges {
            let mut label = String::new();
            for (i, x) in e.choice.entries().iter().enumerate() {
                if i > 0 {
                    label.push(',');
                }
                let _ = write!(label, "{x}");
            }
            let _ = writeln!(
                out,
                "  v{} -- v{} [label=\"{}\"];",
                ids[&e.source], ids[&e.target], label
            );
        }
        out.push_str("}\n");
        out
    }

    /// JSON lines: one meta record, one record per vertex, one per edge.
    pub fn to_jsonl(&self) -> String {
        #[derive(Serialize)]
        struct Meta<'a> {
            #[serde(rename = "type")]
            kind: &'a str,
            c: u32,
            level_cap: u64,
            budget: u64,
            complete: bool,
            vertices: usize,
            edges: usize,
        }
        #[derive(Serialize)]
        struct V<'a> {
            #[serde(rename = "type")]
            kind: &'a str,
            #[serde(flatten)]
            dec: &'a Decoration,
            k: u64,
            b: usize,
            t: usize,
        }
        #[derive(Serialize)]
        struct E<'a> {
            #[serde(rename = "type")]
            kind: &'a str,
            source: &'a Decoration,
            choice: &'a [u64],
            p: i64,
            target: &'a Decoration,
        }
        let mut out = String::new();
        out.push_str(
            &serde_json::to_string(&Meta {
                kind: "meta",
                c: self.c,
                level_cap: self.level_cap,
                budget: self.budget,
                complete: self.complete,
                vertices: self.vertices.len(),
                edges: self.edges.len(),
            })
            .unwrap(),
        );
        out.push('\n');
        for v in &self.vertices {
            out.push_str(
                &serde_json::to_string(&V {
                    kind: "vertex",
                    dec: v,
                    k: v.level(),
                    b: v.gens(),
                    t: v.cmtype(),
                })
                .unwrap(),
            );
            out.push('\n');
        }
        for e in &self.edges {
            out.push_str(
                &serde_json::to_string(&E {
                    kind: "edge",
                    source: &e.source,
                    choice: e.choice.entries(),
                    p: e.p,
                    target: &e.target,
                })
                .unwrap(),
            );
            out.push('\n');
        }
        out
    }
}

/// Level caps for the Dynkin (b, t) pairs at c = 3, taken from the largest
/// level occurring in the known complete class lists: Gorenstein formats cap
/// at (b-1)/2, almost complete intersections at t, and the exceptional
/// formats (1,5,6,2), (1,6,7,2), (1,5,7,3), (1,7,8,2), (1,5,8,4) at
/// 4, 8, 9, 20, 24.
pub fn dynkin_level_cap(b: usize, t: usize) -> Option<u64> {
    match (b, t) {
        (_, 1) => Some(((b as u64).saturating_sub(1)) / 2),
        (3, _) => Some(1),
        (4, _) => Some(t as u64),
        (5, 2) => Some(4),
        (6, 2) => Some(8),
        (5, 3) => Some(9),
        (7, 2) => Some(20),
        (5, 4) => Some(24),
        _ => None,
    }
}

/// All Herzog classes at c = 3 with the given resolution format, identified
/// by (b, t) = (r_1, r_3). Dynkin formats use the built-in level caps;
/// non-Dynkin formats require an explicit cap (their class sets are
/// infinite).
pub fn classes_by_format(b: usize, t: usize, cap: Option<u64>) -> Result<Vec<Decoration>> {
    let cap = match cap.or_else(|| dynkin_level_cap(b, t)) {
        Some(c) => c,
        None => return Err(Error::NeedsKCap((b, t))),
    };
    let graph = enumerate_with(
        3,
        cap,
        EnumerateOptions {
            with_edges: false,
            ..EnumerateOptions::default()
        },
    )?;
    Ok(graph
        .vertices
        .into_iter()
        .filter(|v| v.gens() == b && v.cmtype() == t)
        .collect())
}
