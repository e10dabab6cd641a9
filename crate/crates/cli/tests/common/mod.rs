//! Round-trip properties for the file formats.

#![allow(dead_code)]

use detold::formats::{
    decode_graph6, encode_graph6, parse_cnf, parse_edge_list, parse_pattern, parse_role_map, parse_set, write_cnf,
    write_edge_list, write_pattern, write_role_map, write_set, RoleMap,
};
use detold_core::grids::{GridFamily, Lattice, PeriodicPattern};
use detold_core::reduction::{build_instance, Literal, SatInstance};
use detold_core::{Graph, VertexSet};
use proptest::prelude::*;

#[derive(Clone, Debug)]
pub struct FormatCase {
    pub graph: Graph,
    pub set: VertexSet,
    pub formula: SatInstance,
    pub pattern: PeriodicPattern,
}

fn edges_of(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    (g.n(), g.edges().collect())
}

fn graph() -> impl Strategy<Value = (Graph, VertexSet)> {
    (0usize..=80).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (prop::collection::vec(prop::bool::weighted(0.1), pairs), prop::collection::vec(any::<bool>(), n)).prop_map(
            move |(mask, members)| {
                let all = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
                let g = Graph::from_edges(n, all.zip(mask).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap();
                (g, VertexSet::from_elements(n, (0..n).filter(|&v| members[v])))
            },
        )
    })
}

fn formula() -> impl Strategy<Value = SatInstance> {
    (3usize..=7).prop_flat_map(|n| {
        let clause = (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::array::uniform3(any::<bool>()))
            .prop_map(|(vars, signs)| {
                core::array::from_fn(|i| if signs[i] { Literal::pos(vars[i]) } else { Literal::neg(vars[i]) })
            });
        prop::collection::vec(clause, 1..=6).prop_map(move |cs| SatInstance::new(n, cs).unwrap())
    })
}

fn pattern() -> impl Strategy<Value = PeriodicPattern> {
    (prop::sample::select(GridFamily::ALL.to_vec()), 1i64..=6, 0i64..6, 1i64..=6).prop_flat_map(|(f, a, b, c)| {
        let lattice = Lattice::new(a, b % a, c).unwrap();
        let lattice = if lattice.compatible_with(f) { lattice } else { Lattice::new(2, 0, 2).unwrap() };
        let cells: Vec<_> = lattice.cells().collect();
        prop::collection::vec(any::<bool>(), cells.len()).prop_map(move |mask| {
            let chosen = cells.iter().zip(&mask).filter(|(_, b)| **b).map(|(&c, _)| c);
            PeriodicPattern::on_lattice(f, lattice, chosen).unwrap()
        })
    })
}

pub fn format_case() -> impl Strategy<Value = FormatCase> {
    (graph(), formula(), pattern()).prop_map(|((graph, set), formula, pattern)| FormatCase { graph, set, formula, pattern })
}

pub fn round_trips(case: &FormatCase) -> Result<(), TestCaseError> {
    let g = &case.graph;
    let g6 = encode_graph6(g);
    prop_assert_eq!(edges_of(&decode_graph6(&g6).unwrap()), edges_of(g));
    prop_assert_eq!(edges_of(&parse_edge_list(&write_edge_list(g)).unwrap()), edges_of(g));
    prop_assert_eq!(parse_set(&write_set(&case.set), g.n()).unwrap(), case.set.clone());
    prop_assert_eq!(parse_cnf(&write_cnf(&case.formula)).unwrap(), case.formula.clone());
    prop_assert_eq!(parse_pattern(&write_pattern(&case.pattern)).unwrap(), case.pattern.clone());
    let art = build_instance(&case.formula).unwrap();
    let map = RoleMap::from_artifact(&art);
    let back = parse_role_map(&write_role_map(&map)).unwrap();
    prop_assert_eq!(&back, &map);
    prop_assert_eq!(back.to_roles().unwrap(), art.roles.clone());
    Ok(())
}
