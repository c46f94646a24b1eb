//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities (run with `--nocapture` to see them). The heavy
//! enumerations are shared between criteria through lazy statics.

mod tables;

use std::collections::{BTreeMap, BTreeSet};

use once_cell::sync::Lazy;

use licci::admissibility;
use licci::betti::{betti_shape, mapping_cone_shifts};
use licci::decoration::dominance_leq;
use licci::families;
use licci::graph::{self, EnumerateOptions, LicciGraph};
use licci::linkage;
use licci::partition::partitions_of;
use licci::tor;
use licci::weyl;
use licci::Decoration;

/// c = 3 graph to level 24 (vertices only; working budget 46).
static BIG3: Lazy<LicciGraph> = Lazy::new(|| {
    graph::enumerate_with(
        3,
        24,
        EnumerateOptions {
            with_edges: false,
            ..EnumerateOptions::default()
        },
    )
    .expect("c=3 enumeration")
});

/// c = 3 graph to level 10 with all edges.
static EDGE10: Lazy<LicciGraph> = Lazy::new(|| graph::enumerate(3, 10).expect("c=3 edge graph"));

/// c = 4 graph to level 10 (vertices only; working budget 27).
static C4: Lazy<LicciGraph> = Lazy::new(|| {
    graph::enumerate_with(
        4,
        10,
        EnumerateOptions {
            with_edges: false,
            ..EnumerateOptions::default()
        },
    )
    .expect("c=4 enumeration")
});

#[test]
fn criterion_01_dynkin_class_counts() {
    // the three smaller formats through the public per-format entry point
    let n562 = graph::classes_by_format(5, 2, None).unwrap().len();
    let n672_classes = graph::classes_by_format(6, 2, None).unwrap();
    let n573_classes = graph::classes_by_format(5, 3, None).unwrap();
    assert_eq!(
        n672_classes.iter().cloned().collect::<BTreeSet<_>>(),
        data::format_672().into_iter().collect::<BTreeSet<_>>(),
        "(1,6,7,2) classes differ from the published list"
    );
    assert_eq!(
        n573_classes.iter().cloned().collect::<BTreeSet<_>>(),
        data::format_573().into_iter().collect::<BTreeSet<_>>(),
        "(1,5,7,3) classes differ from the published list"
    );

    // the two largest formats from the shared level-24 enumeration, whose
    // working budget 46 makes the level range complete; the caps 20 and 24
    // are the documented maximal levels of these formats
    assert!(BIG3.complete);
    assert_eq!(graph::dynkin_level_cap(7, 2), Some(20));
    assert_eq!(graph::dynkin_level_cap(5, 4), Some(24));
    let f782: Vec<&Decoration> = BIG3
        .vertices
        .iter()
        .filter(|v| v.gens() == 7 && v.cmtype() == 2)
        .collect();
    let f584: Vec<&Decoration> = BIG3
        .vertices
        .iter()
        .filter(|v| v.gens() == 5 && v.cmtype() == 4)
        .collect();

    // the published explicit slices are reproduced element by element
    let low782: BTreeSet<Decoration> = f782
        .iter()
        .filter(|v| v.level() <= 10)
        .map(|v| (*v).clone())
        .collect();
    assert_eq!(
        low782,
        data::format_782_low().into_iter().collect::<BTreeSet<_>>(),
        "(1,7,8,2) level<=10 slice differs from the published list"
    );
    let low584: BTreeSet<Decoration> = f584
        .iter()
        .filter(|v| v.level() <= 12)
        .map(|v| (*v).clone())
        .collect();
    assert_eq!(
        low584,
        data::format_584_low().into_iter().collect::<BTreeSet<_>>(),
        "(1,5,8,4) level<=12 slice differs from the published list"
    );

    let counts = (
        n562,
        n672_classes.len(),
        n573_classes.len(),
        f782.len(),
        f584.len(),
    );
    println!(
        "criterion 1: class counts (1,5,6,2)/(1,6,7,2)/(1,5,7,3)/(1,7,8,2)/(1,5,8,4) = {counts:?}, pinned (2, 7, 11, 53, 95)"
    );
    assert_eq!(
        counts,
        (2, 7, 11, 53, 95),
        "the two largest formats enumerate to 49 and 90, not the pinned 53 and 95: \
         the published explicit slices (20 and 39 entries) and both published maximal-level \
         elements are all present, the enumerated sets are closed under the formats' \
         dualities, and an independent reflection-oracle census over all candidate pairs \
         returns the same 49 and 90; the pinned totals appear to be erroneous"
    );
}

#[test]
fn criterion_02_small_k_lists() {
    for (k, expected) in data::small_k_lists() {
        let got: BTreeSet<Decoration> = BIG3.vertices_at_level(k).cloned().collect();
        let expected: BTreeSet<Decoration> = expected.into_iter().collect();
        assert_eq!(got, expected, "level {k} vertex set");
    }
    println!("criterion 2: levels 1..4 vertex sets equal the published lists (1, 2, 4, 7): PASS");
}

#[test]
fn criterion_03_link_tables() {
    let mut rows_checked = 0usize;
    for table in tables::all_tables() {
        let neighbors = linkage::neighbors(&table.source);
        assert_eq!(
            neighbors.len(),
            table.rows.len(),
            "{}: row count",
            table.name
        );
        let by_choice: BTreeMap<Vec<u64>, &linkage::LinkResult> = neighbors
            .iter()
            .map(|r| (r.choice.entries().to_vec(), r))
            .collect();
        for row in &table.rows {
            let got = by_choice
                .get(&row.choice)
                .unwrap_or_else(|| panic!("{}: missing choice {:?}", table.name, row.choice));
            assert_eq!(got.p, row.p, "{}: p at {:?}", table.name, row.choice);
            assert_eq!(
                got.target, row.target,
                "{}: target at {:?}",
                table.name, row.choice
            );
            assert_eq!(
                got.target.level(),
                row.kappa,
                "{}: kappa at {:?}",
                table.name,
                row.choice
            );
            if let Some((r0, r1, r2, r3)) = row.format {
                assert_eq!(
                    got.target.format().as_full(),
                    Some(vec![r0, r1, r2, r3]),
                    "{}: format at {:?}",
                    table.name,
                    row.choice
                );
            }
            rows_checked += 1;
        }
    }
    println!("criterion 3: {rows_checked} golden table rows reproduced exactly: PASS");
}

#[test]
fn criterion_04_weyl_oracle_agreement() {
    let t0 = std::time::Instant::now();
    // a complete small-level slice of the formula graph, independent of the
    // big shared enumeration so the timing budget below is meaningful
    let g8 = graph::enumerate_with(
        3,
        8,
        EnumerateOptions {
            with_edges: false,
            ..EnumerateOptions::default()
        },
    )
    .unwrap();
    assert!(g8.complete);

    // (a) membership oracle vs formula graph on every candidate pair, k <= 6
    let formula: BTreeSet<Decoration> = g8
        .vertices
        .iter()
        .filter(|v| v.level() <= 6)
        .cloned()
        .collect();
    let mut pairs = 0usize;
    for k in 0u64..=6 {
        for mu in partitions_of(k, k) {
            for lam in partitions_of(2 * k + 1, 2 * k + 1) {
                let d = Decoration::from_partitions(3, lam.clone(), mu.clone()).unwrap();
                let member = weyl::membership(&d).unwrap();
                assert_eq!(
                    member,
                    formula.contains(&d),
                    "oracle and formula disagree on {d}"
                );
                pairs += 1;
            }
        }
    }

    // (b) the length-14 orbit: every vertex it sees is a formula vertex, and
    // the fully covered levels agree in both directions
    let overts = weyl::enumerate_vertices(3, 14).unwrap();
    let oset: BTreeSet<Decoration> = overts.iter().map(|(d, _)| d.clone()).collect();
    for d in &oset {
        assert!(
            g8.vertices.binary_search(d).is_ok(),
            "oracle vertex {d} missing from the formula graph"
        );
    }
    let covered: Vec<u64> = (0..=8)
        .filter(|&k| g8.vertices_at_level(k).all(|v| oset.contains(v)))
        .collect();
    // the level-k Gorenstein vertex has word length 2k^2+k, so length 14
    // covers exactly the levels with 2k^2+k <= 14
    assert!(
        covered.contains(&0) && covered.contains(&1) && covered.contains(&2),
        "length 14 must cover levels 0..2 completely, covered: {covered:?}"
    );
    for &k in &covered {
        let formula_k: BTreeSet<_> = g8.vertices_at_level(k).cloned().collect();
        let oracle_k: BTreeSet<_> = oset.iter().filter(|d| d.level() == k).cloned().collect();
        assert_eq!(formula_k, oracle_k, "level {k} vertex sets");
    }

    // (c) the length-14 edge set embeds in the formula graph exactly
    let oedges = weyl::enumerate_edges(3, 14).unwrap();
    let max_level = oedges
        .iter()
        .flat_map(|e| {
            let (a, b) = e.pair();
            [a.level(), b.level()]
        })
        .max()
        .unwrap_or(0);
    let g = graph::enumerate(3, max_level).unwrap();
    let eset: BTreeSet<(Decoration, Decoration)> = g
        .edges
        .iter()
        .map(|e| (e.source.clone(), e.target.clone()))
        .collect();
    let opairs: BTreeSet<(Decoration, Decoration)> = oedges.iter().map(|e| e.pair()).collect();
    for pair in &opairs {
        assert!(
            eset.contains(pair),
            "oracle edge {} -- {} missing from the formula graph",
            pair.0,
            pair.1
        );
    }
    // fully covered levels: every formula edge among them appears in the orbit
    for e in g
        .edges
        .iter()
        .filter(|e| covered.contains(&e.source.level()) && covered.contains(&e.target.level()))
    {
        assert!(
            opairs.contains(&(e.source.clone(), e.target.clone())),
            "formula edge {} -- {} missing from the length-14 orbit",
            e.source,
            e.target
        );
    }

    // (d) a reflection witness for every formula edge at levels <= 6
    let small = graph::enumerate(3, 6).unwrap();
    let mut witnessed = 0usize;
    for v in &small.vertices {
        for r in linkage::neighbors(v) {
            if r.target.level() <= 6 {
                assert!(
                    weyl::verify_edge(v, &r).unwrap(),
                    "no reflection witness for {} --{:?}--> {}",
                    v,
                    r.choice,
                    r.target
                );
                witnessed += 1;
            }
        }
    }
    let dt = t0.elapsed();
    assert!(
        dt.as_secs() < 60,
        "oracle agreement took {dt:?}, budget 60s"
    );
    println!(
        "criterion 4: {pairs} membership pairs, {} orbit vertices, {} orbit edges, {witnessed} witnessed links, {dt:?}: PASS",
        oset.len(),
        opairs.len()
    );
}

#[test]
fn criterion_05_squares_invariant() {
    let mut checked = 0usize;
    let mut check_graph = |g: &LicciGraph| {
        let c = g.c as u64;
        for v in &g.vertices {
            let k = v.level();
            assert_eq!(
                v.lambda().sum_of_squares() + v.mu().sum_of_squares(),
                (c - 2) * k * k + 2 * k + 1,
                "squares identity fails on {v}"
            );
            checked += 1;
        }
    };
    check_graph(&BIG3);
    check_graph(&C4);
    for (c, cap) in [(2, 20), (5, 5), (6, 4), (7, 3), (8, 3)] {
        let g = graph::enumerate_with(
            c,
            cap,
            EnumerateOptions {
                with_edges: false,
                ..EnumerateOptions::default()
            },
        )
        .unwrap();
        assert!(g.complete);
        check_graph(&g);
    }
    println!("criterion 5: squares identity exact on {checked} vertices across c = 2..8: PASS");
}

#[test]
fn criterion_06_small_level_closure() {
    // iterated hyperplane sections of the bases, collected per codimension
    let mut closure: BTreeMap<u32, BTreeSet<Decoration>> = BTreeMap::new();
    for base in data::small_level_bases() {
        let mut cur = base;
        loop {
            let c = cur.codim();
            if c > 8 {
                break;
            }
            closure.entry(c).or_default().insert(cur.clone());
            cur = families::hyperplane_section(&cur);
        }
    }
    for c in 2..=8u32 {
        let g = graph::enumerate_with(
            c,
            3,
            EnumerateOptions {
                with_edges: false,
                ..EnumerateOptions::default()
            },
        )
        .unwrap();
        assert!(g.complete);
        let got: BTreeSet<Decoration> = g
            .vertices
            .iter()
            .filter(|v| (1..=3).contains(&v.level()))
            .cloned()
            .collect();
        let expected = closure.get(&c).cloned().unwrap_or_default();
        assert_eq!(got, expected, "codimension {c} levels 1..3");
    }
    println!("criterion 6: levels <= 3 equal the hyperplane-section closure for c = 2..8: PASS");
}

#[test]
fn criterion_07_doubling_replay() {
    let samples: Vec<&Decoration> = EDGE10.vertices.iter().filter(|v| v.level() > 1).collect();
    assert!(
        samples.len() >= 200,
        "need 200+ samples, got {}",
        samples.len()
    );
    for s in &samples {
        let d = families::doubling(s);
        assert!(
            admissibility::is_decoration(&d).is_yes(),
            "doubling of {s} fails admissibility"
        );
        let (_, second) = families::doubling_double_link(s).unwrap();
        let (_, tdl) = linkage::tight_double_link(s).unwrap();
        assert_eq!(
            second.target,
            families::doubling(&tdl.target),
            "doubling replay differs on {s}"
        );
    }
    println!(
        "criterion 7: doubling admissible and its double link replays on {} decorations: PASS",
        samples.len()
    );
}

#[test]
fn criterion_08_tor_class_theorems() {
    let verts: Vec<&Decoration> = BIG3
        .vertices
        .iter()
        .filter(|v| v.level() <= 20 && v.level() >= 1)
        .collect();

    // G-rank exclusions and the G(b-3) characterization
    let mut g_rank_b3: BTreeSet<Decoration> = BTreeSet::new();
    for v in &verts {
        let b = v.gens();
        let t = v.cmtype();
        if v.is_gorenstein() {
            continue;
        }
        if let Some(r) = tor::class_g_rank(v).unwrap() {
            // all non-unit vertices have b >= 3
            assert!(
                r < b - 2,
                "non-Gorenstein {v} has class-G rank {r} >= b-2 = {}",
                b - 2
            );
            if r > 0 && r == b - 3 {
                g_rank_b3.insert((*v).clone());
            }
            if t == 2 && b >= 5 {
                assert_ne!(r, b - 4, "type-2 vertex {v} has class G(b-4)");
            }
        }
    }
    let expected_b3: BTreeSet<Decoration> = (4..=20)
        .map(|k| families::closest_to_gorenstein(k).unwrap())
        .collect();
    assert_eq!(
        g_rank_b3, expected_b3,
        "class G(b-3) characterization of the closest-to-Gorenstein family"
    );
    println!(
        "criterion 8: rank exclusions and the G(b-3) = closest-family characterization hold on {} vertices",
        verts.len()
    );

    // dominance of Koszul-bearing vertices by H_t, with the derived bounds
    let mut koszul = 0usize;
    let mut violations: Vec<&Decoration> = Vec::new();
    for v in &verts {
        if v.lambda().part(1) + v.lambda().part(2) != v.level() + 1 {
            continue;
        }
        koszul += 1;
        let b = v.gens();
        let t = v.cmtype();
        let ht = tor::huneke_family(t as u32).unwrap();
        if !(dominance_leq(v, &ht).unwrap() && b <= 2 * t + 1 && t <= 2 * b - 5) {
            violations.push(v);
        }
    }
    println!(
        "criterion 8: dominance clause: {koszul} Koszul-bearing vertices, {} violate the pinned H_t bound",
        violations.len()
    );
    assert!(
        violations.is_empty(),
        "the pinned dominance bound fails on {} of {koszul} Koszul-bearing vertices \
         (smallest: {}, which is itself a member of the published level-4 list): \
         type-2 members such as c=3 λ=m,m,1,..,1 μ=m,m-1 exist at every level 2m-1, \
         so neither the H_t dominance nor b <= 2t+1 can hold as pinned; \
         the remaining three clauses of this criterion all hold",
        violations.len(),
        violations
            .first()
            .map(|v| v.to_string())
            .unwrap_or_default()
    );
}

#[test]
fn criterion_09_codim4_gorenstein() {
    assert!(C4.complete);
    for n in [6usize, 7, 8] {
        let got: BTreeSet<Decoration> = C4
            .vertices
            .iter()
            .filter(|v| v.cmtype() == 1 && v.gens() == n)
            .cloned()
            .collect();
        let expected: BTreeSet<Decoration> =
            families::gorenstein4_list(n).unwrap().into_iter().collect();
        assert_eq!(
            got, expected,
            "codimension 4 Gorenstein classes with {n} generators"
        );
    }
    // no Gorenstein almost complete intersections
    assert_eq!(
        C4.vertices
            .iter()
            .filter(|v| v.cmtype() == 1 && v.gens() == 5)
            .count(),
        0
    );
    println!("criterion 9: codimension 4 Gorenstein lists (1, 2, 10 classes) match element-by-element: PASS");
}

#[test]
fn criterion_10_family_chains() {
    for n in 2..=6 {
        families::check_1683_chain(n).unwrap();
    }
    for k in 2..=12 {
        families::check_closest_up_chain(k).unwrap();
    }
    for a in 1..=4 {
        families::check_dev2_c7_chain(a).unwrap();
    }
    println!("criterion 10: format-(1,6,8,3) chains (n<=6), closest-family climbs (k<=12), and six-link c=7 chains (a<=4) replay: PASS");
}

#[test]
fn criterion_11_betti_consistency() {
    let mut checked = 0usize;
    for e in &EDGE10.edges {
        let cone = mapping_cone_shifts(&e.source, &e.choice).unwrap();
        assert!(
            cone.ends_agree(&betti_shape(&e.target)),
            "cone ends differ on {} --{:?}--> {}",
            e.source,
            e.choice,
            e.target
        );
        // and in the reverse orientation
        let back = linkage::link_with(&e.target, &{
            let r = linkage::link(&e.source, &e.choice).unwrap();
            r.reverse_choice()
        })
        .unwrap();
        let cone_back = mapping_cone_shifts(&e.target, &back.choice).unwrap();
        assert!(
            cone_back.ends_agree(&betti_shape(&e.source)),
            "reverse cone ends differ on {} --{:?}--> {}",
            e.target,
            back.choice,
            e.source
        );
        checked += 2;
    }
    assert!(checked > 0);
    println!("criterion 11: mapping-cone ends equal direct shapes on {checked} oriented edges (kappa <= 10): PASS");
}
