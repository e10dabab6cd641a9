use detold_core::reduction::{
    build_instance, check_correctness, derive_gadget, derive_wiring, gadget_candidates, gadget_locality,
    set_to_assignment, validate_gadget, wiring_candidates, wiring_test_formulas, GadgetG6, Label, Literal, SatInstance,
    CANONICAL_WIRING,
};
use detold_core::solve::solve_bb;
use detold_core::verify::{forced_detectors, satisfies};
use detold_core::Level;

#[test]
fn gadget_derivation_is_unique_and_canonical() {
    let all = gadget_candidates();
    assert_eq!(all.len(), 1);
    let g = derive_gadget().unwrap();
    assert_eq!(g, GadgetG6::canonical());
    assert_eq!(g.edges().len(), 9);
    assert_eq!(g.neighbors(Label::F), [Label::D, Label::E]);
    assert!(validate_gadget(&g));
}

#[test]
fn wiring_derivation_matches_constant() {
    assert_eq!(derive_wiring().unwrap(), CANONICAL_WIRING);
    let formulas = wiring_test_formulas();
    assert_eq!(wiring_candidates(&formulas, false).unwrap().len(), 4);
    assert_eq!(wiring_candidates(&formulas, true).unwrap().len(), 2);
}

#[test]
fn unsatisfiable_formula_exceeds_k() {
    let phi = wiring_test_formulas().pop().unwrap();
    assert!(!phi.is_satisfiable().unwrap());
    let art = build_instance(&phi).unwrap();
    let r = check_correctness(&art).unwrap();
    assert!(r.holds());
    assert!(r.optimum.is_none_or(|o| o > art.k));
}

#[test]
fn solver_sets_decode_to_models() {
    let (p, n) = (Literal::pos, Literal::neg);
    let phi = SatInstance::new(4, vec![[p(0), n(1), p(2)], [n(0), p(1), n(3)]]).unwrap();
    let art = build_instance(&phi).unwrap();
    assert!(gadget_locality(&art));
    let forced = forced_detectors(&art.graph, Level::DetOld).unwrap();
    assert!(art.gadget_vertices().is_subset(&forced));
    let w = solve_bb(&art.graph, Level::DetOld).witness.unwrap();
    assert_eq!(w.len(), art.k);
    assert!(satisfies(&art.graph, &w, Level::DetOld));
    let assign = set_to_assignment(&art, &w).unwrap();
    assert!(phi.satisfied_by(&assign));
}
