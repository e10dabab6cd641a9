//! Strategies and property bodies shared by the property suite and the
//! acceptance report.

#![allow(dead_code)]

use detold_core::graph::{canonical_form, enumerate_cubic_girth5, named, trail_set};
use detold_core::grids::{lattices_of_index, torus_oracle, verify_pattern, GridFamily, PeriodicPattern};
use detold_core::solve::{solve_bb, solve_oracle};
use detold_core::verify::{check, check_exhaustive, satisfies};
use detold_core::{cubic, Graph, Level, VertexSet};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

/// A graph given by an edge mask over all pairs, with a detector mask.
#[derive(Clone, Debug)]
pub struct GraphCase {
    pub graph: Graph,
    pub set: VertexSet,
    pub extra: usize,
}

fn from_mask(n: usize, edges: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(edges).filter(|(_, &b)| b).map(|(p, _)| p)).unwrap()
}

pub fn graph_case(max_n: usize) -> impl Strategy<Value = GraphCase> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(prop::bool::weighted(0.45), n * (n - 1) / 2),
                prop::collection::vec(prop::bool::weighted(0.6), n),
                0..n,
            )
        })
        .prop_map(|(n, edges, members, extra)| GraphCase {
            graph: from_mask(n, &edges),
            set: VertexSet::from_elements(n, (0..n).filter(|&v| members[v])),
            extra,
        })
}

pub fn level() -> impl Strategy<Value = Level> {
    prop::sample::select(Level::ALL.to_vec())
}

/// Cubic C4-free graphs used for the conflict-graph properties.
pub fn cubic_pool() -> Vec<Graph> {
    let mut pool = enumerate_cubic_girth5(10).unwrap();
    pool.extend(enumerate_cubic_girth5(12).unwrap());
    pool.push(named::heawood());
    pool.push(named::truncation(&named::complete(4)));
    pool.push(named::truncation(&named::petersen()));
    pool
}

#[derive(Clone, Debug)]
pub struct CubicCase {
    pub graph: Graph,
    pub set: VertexSet,
}

pub fn cubic_case(pool: Vec<Graph>) -> impl Strategy<Value = CubicCase> {
    prop::sample::select(pool).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(prop::bool::weighted(0.7), n))
            .prop_map(move |(g, perm, members)| CubicCase {
                graph: g.permuted(&perm),
                set: VertexSet::from_elements(n, (0..n).filter(|&v| members[v])),
            })
    })
}

pub fn pattern_case(max_index: usize) -> impl Strategy<Value = (PeriodicPattern, (i64, i64))> {
    let lattices: Vec<_> = GridFamily::ALL
        .into_iter()
        .flat_map(|f| (1..=max_index).flat_map(move |d| lattices_of_index(f, d).into_iter().map(move |l| (f, l))))
        .collect();
    (prop::sample::select(lattices), -6i64..=6, -6i64..=6).prop_flat_map(|((f, l), tx, ty)| {
        let cells: Vec<_> = l.cells().collect();
        let t = if f.is_automorphism((tx, ty)) { (tx, ty) } else { (tx + 1, ty) };
        prop::collection::vec(prop::bool::weighted(0.65), cells.len()).prop_map(move |mask| {
            let chosen = cells.iter().zip(&mask).filter(|(_, &b)| b).map(|(&c, _)| c);
            (PeriodicPattern::on_lattice(f, l, chosen).unwrap(), t)
        })
    })
}

/// Adding a detector never breaks a satisfied level.
pub fn monotone(case: &GraphCase, level: Level) -> Result<(), TestCaseError> {
    if satisfies(&case.graph, &case.set, level) {
        let mut bigger = case.set.clone();
        bigger.insert(case.extra);
        prop_assert!(satisfies(&case.graph, &bigger, level));
    }
    Ok(())
}

/// DET:OLD implies RED:OLD implies OLD, for the same set.
pub fn hierarchy(case: &GraphCase) -> Result<(), TestCaseError> {
    let [old, red, det] = Level::ALL.map(|l| satisfies(&case.graph, &case.set, l));
    prop_assert!(!det || red, "DET:OLD without RED:OLD");
    prop_assert!(!red || old, "RED:OLD without OLD");
    Ok(())
}

/// The distance-two shortcut reports exactly the exhaustive failures.
pub fn shortcut(case: &GraphCase, level: Level) -> Result<(), TestCaseError> {
    let fast = check(&case.graph, &case.set, level);
    prop_assert_eq!(&fast, &check_exhaustive(&case.graph, &case.set, level));
    prop_assert_eq!(fast.is_ok(), satisfies(&case.graph, &case.set, level));
    Ok(())
}

/// Conflicts are symmetric, trail membership is symmetric, and the
/// independent-set test agrees with the general verifier.
pub fn conflict_symmetry(case: &CubicCase) -> Result<(), TestCaseError> {
    let g = &case.graph;
    let cg = cubic::build_conflict_graph(g).unwrap();
    for u in 0..g.n() {
        for v in 0..g.n() {
            prop_assert_eq!(cg.conflicts(u, v), cg.conflicts(v, u));
        }
    }
    for len in [2, 4] {
        let sets: Vec<_> = (0..g.n()).map(|v| trail_set(g, v, len).unwrap().others()).collect();
        for u in 0..g.n() {
            for v in sets[u].iter() {
                prop_assert!(sets[v].contains(u), "trail length {} not symmetric at {}-{}", len, u, v);
            }
        }
    }
    prop_assert_eq!(cubic::is_detold_cubic(g, &case.set).unwrap(), satisfies(g, &case.set, Level::DetOld));
    Ok(())
}

pub fn translation(p: &PeriodicPattern, t: (i64, i64), level: Level) -> Result<(), TestCaseError> {
    let q = p.translated(t).unwrap();
    let a = verify_pattern(p, level);
    let b = verify_pattern(&q, level);
    prop_assert_eq!(a.is_ok(), b.is_ok());
    prop_assert_eq!(a.failures.len(), b.failures.len());
    Ok(())
}

pub fn torus_agreement(p: &PeriodicPattern, level: Level) -> Result<(), TestCaseError> {
    prop_assert_eq!(verify_pattern(p, level).is_ok(), torus_oracle(p, level).unwrap().is_ok());
    Ok(())
}

pub fn solver_agreement(case: &GraphCase, level: Level) -> Result<(), TestCaseError> {
    let bb = solve_bb(&case.graph, level);
    let oracle = solve_oracle(&case.graph, level).unwrap();
    prop_assert_eq!(bb.optimum(), oracle.optimum());
    if let Some(w) = &bb.witness {
        prop_assert!(satisfies(&case.graph, w, level));
    }
    Ok(())
}

pub fn canonical_invariance(case: &GraphCase, perm: &[usize]) -> Result<(), TestCaseError> {
    prop_assert_eq!(canonical_form(&case.graph), canonical_form(&case.graph.permuted(perm)));
    Ok(())
}
