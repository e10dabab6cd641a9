mod support;

use std::collections::BTreeSet;

use detold_core::graph::{canonical_form, enumerate_graphs};
use detold_core::Level;
use proptest::prelude::*;
use support::*;

proptest! {
    #![proptest_config(config(10_000, 0x5eed_0001))]

    #[test]
    fn adding_a_detector_keeps_the_level(case in graph_case(10), level in level()) {
        monotone(&case, level)?;
    }

    #[test]
    fn levels_are_nested(case in graph_case(10)) {
        hierarchy(&case)?;
    }

    #[test]
    fn shortcut_matches_exhaustive_check(case in graph_case(12), level in level()) {
        shortcut(&case, level)?;
    }
}

proptest! {
    #![proptest_config(config(2_000, 0x5eed_0002))]

    #[test]
    fn conflicts_are_symmetric(case in cubic_case(cubic_pool())) {
        conflict_symmetry(&case)?;
    }

    #[test]
    fn branch_and_bound_matches_oracle(case in graph_case(9), level in level()) {
        solver_agreement(&case, level)?;
    }

    #[test]
    fn canonical_form_ignores_labels(
        (case, perm) in graph_case(9).prop_flat_map(|c| {
            let n = c.graph.n();
            (Just(c), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        canonical_invariance(&case, &perm)?;
    }
}

proptest! {
    #![proptest_config(config(500, 0x5eed_0003))]

    #[test]
    fn pattern_verdict_is_translation_invariant((p, t) in pattern_case(8), level in level()) {
        translation(&p, t, level)?;
    }

    #[test]
    fn pattern_verdict_matches_torus((p, _) in pattern_case(8), level in level()) {
        torus_agreement(&p, level)?;
    }
}

/// Smallest adjacency code over all relabelings, as an isomorphism
/// invariant that needs no cleverness.
fn brute_class(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            adj[perm[u] * n + perm[v]] = true;
            adj[perm[v] * n + perm[u]] = true;
        }
        if best.as_ref().is_none_or(|b| adj < *b) {
            best = Some(adj);
        }
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}

#[test]
fn enumeration_matches_brute_force_classes() {
    for n in 0..=5usize {
        let pairs: Vec<_> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        let mut classes = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            classes.insert(brute_class(n, &edges));
        }
        let listed: Vec<_> = enumerate_graphs(n, |_| true).unwrap().collect();
        assert_eq!(listed.len(), classes.len(), "n = {n}");
        let brute: BTreeSet<_> = listed.iter().map(|g| brute_class(n, &g.edges().collect::<Vec<_>>())).collect();
        assert_eq!(brute, classes, "n = {n}");
        let forms: BTreeSet<_> = listed.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), listed.len());
    }
}

#[test]
fn admits_iff_full_set_works() {
    use detold_core::graph::named;
    use detold_core::verify::{admits, satisfies};
    use detold_core::VertexSet;
    let g = named::petersen();
    for level in Level::ALL {
        assert_eq!(admits(&g, level), satisfies(&g, &VertexSet::full(g.n()), level));
    }
}
