//! The 3-SAT construction.
//!
//! Each variable `x_i` gets a block `F_i`: a copy of the forcing gadget
//! plus the literal vertices `x_i` and `x̄_i`. Each clause gets a block
//! `H_j`, a gadget copy whose `b` vertex `y_j` is joined to the clause's
//! three literal vertices. A formula is satisfiable exactly when the graph
//! has a DET:OLD set of size `K = 7N + 6M`.
//!
//! Vertex layout: `F_i` occupies `8i..8i+8` (labels `a..f`, then `x_i`,
//! then `x̄_i`). `H_j` occupies `8N + 6j..8N + 6j + 6` in label order.

mod gadget;
mod sat;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

pub use gadget::{
    derive_gadget, follows_forcing_chain, gadget_candidates, validate_gadget, GadgetG6, GadgetHarness, Label,
    CANONICAL_GADGET_EDGES,
};
pub use sat::{Clause, Literal, SatInstance, TRUTH_TABLE_MAX_VARS};

use crate::graph::{Graph, VertexSet};
use crate::solve::solve_bb;
use crate::verify::{forced_detectors, satisfies, Level};
use crate::{Error, Result};

/// One edge between a variable's literal vertices and its gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wire {
    /// `x_i` to the given gadget label.
    Positive(Label),
    /// `x̄_i` to the given gadget label.
    Negative(Label),
    /// `x_i` to `x̄_i`.
    Complement,
}

impl fmt::Display for Wire {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Wire::Positive(l) => write!(f, "x-{l}"),
            Wire::Negative(l) => write!(f, "~x-{l}"),
            Wire::Complement => write!(f, "x-~x"),
        }
    }
}

/// The five wires of each `F_i`. Both literals see `b`, so whichever
/// literal is a detector supplies `b`'s outside dominator. `a` and `d`
/// (together with the complement edge) separate `x_i` from `x̄_i`.
pub const CANONICAL_WIRING: [Wire; 5] = [
    Wire::Positive(Label::A),
    Wire::Positive(Label::B),
    Wire::Negative(Label::B),
    Wire::Negative(Label::D),
    Wire::Complement,
];

/// Which block a gadget vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Owner {
    Variable(usize),
    Clause(usize),
}

/// What a vertex of the constructed graph stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// `x_i` (positive) or `x̄_i`.
    Literal { var: usize, positive: bool },
    /// Internal gadget vertex. Clause gadgets never use label `b` here,
    /// that vertex is [`Role::Clause`].
    Gadget { owner: Owner, label: Label },
    /// The clause vertex `y_j`, label `b` of `H_j`.
    Clause(usize),
}

impl Role {
    /// Gadget label of the vertex, if it is internal to a gadget.
    pub fn gadget_label(self) -> Option<Label> {
        match self {
            Role::Gadget { label, .. } => Some(label),
            Role::Clause(_) => Some(Label::B),
            Role::Literal { .. } => None,
        }
    }

    pub fn owner(self) -> Option<Owner> {
        match self {
            Role::Gadget { owner, .. } => Some(owner),
            Role::Clause(j) => Some(Owner::Clause(j)),
            Role::Literal { .. } => None,
        }
    }
}

/// A built instance together with everything needed to map certificates.
#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub graph: Graph,
    pub k: usize,
    pub roles: Vec<Role>,
    pub instance: SatInstance,
}

impl ReductionArtifact {
    pub fn literal_vertex(&self, var: usize, positive: bool) -> usize {
        8 * var + if positive { 6 } else { 7 }
    }

    pub fn gadget_vertex(&self, owner: Owner, label: Label) -> usize {
        match owner {
            Owner::Variable(i) => 8 * i + label.index(),
            Owner::Clause(j) => 8 * self.instance.num_vars() + 6 * j + label.index(),
        }
    }

    pub fn clause_vertex(&self, j: usize) -> usize {
        self.gadget_vertex(Owner::Clause(j), Label::B)
    }

    /// The `6N + 6M` vertices internal to some gadget.
    pub fn gadget_vertices(&self) -> VertexSet {
        let n = self.graph.n();
        VertexSet::from_elements(n, (0..n).filter(|&v| self.roles[v].gadget_label().is_some()))
    }
}

/// Builds the instance with the canonical gadget and wiring.
pub fn build_instance(phi: &SatInstance) -> Result<ReductionArtifact> {
    build_instance_with(phi, &GadgetG6::canonical(), &CANONICAL_WIRING)
}

/// Builds the instance with an arbitrary gadget and variable wiring.
///
/// Formulas with fewer than three variables are rejected: the cyclic
/// inter-variable rule then repeats edges (or makes loops), so the edge
/// count cannot hold.
pub fn build_instance_with(phi: &SatInstance, gadget: &GadgetG6, wiring: &[Wire]) -> Result<ReductionArtifact> {
    let nv = phi.num_vars();
    let nc = phi.clauses().len();
    if nv < 3 {
        return Err(Error::Formula(format!("need at least 3 variables, got {nv}")));
    }
    let n = 8 * nv + 6 * nc;
    let mut roles = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(16 * nv + 12 * nc);
    let inner = |base: usize| gadget.edges().iter().map(move |&(x, y)| (base + x.index(), base + y.index()));
    for i in 0..nv {
        let base = 8 * i;
        roles.extend(Label::ALL.map(|label| Role::Gadget { owner: Owner::Variable(i), label }));
        roles.push(Role::Literal { var: i, positive: true });
        roles.push(Role::Literal { var: i, positive: false });
        edges.extend(inner(base));
        let (x, nx) = (base + 6, base + 7);
        for w in wiring {
            edges.push(match *w {
                Wire::Positive(l) => (x, base + l.index()),
                Wire::Negative(l) => (nx, base + l.index()),
                Wire::Complement => (x, nx),
            });
        }
        let next = 8 * ((i + 1) % nv);
        edges.push((nx, next + 6));
        edges.push((nx, next + 7));
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let base = 8 * nv + 6 * j;
        roles.extend(Label::ALL.map(|label| {
            if label == Label::B {
                Role::Clause(j)
            } else {
                Role::Gadget { owner: Owner::Clause(j), label }
            }
        }));
        edges.extend(inner(base));
        for lit in clause {
            edges.push((base + Label::B.index(), 8 * lit.var + if lit.positive { 6 } else { 7 }));
        }
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| Error::Formula(format!("construction failed: {e}")))?;
    Ok(ReductionArtifact { graph, k: 7 * nv + 6 * nc, roles, instance: phi.clone() })
}

/// All gadget vertices plus `x_i` for true variables and `x̄_i` for false
/// ones. The set is verified before it is returned.
pub fn assignment_to_set(art: &ReductionArtifact, assign: &[bool]) -> Result<VertexSet> {
    let nv = art.instance.num_vars();
    if assign.len() != nv {
        return Err(Error::Input(format!("assignment has {} values for {nv} variables", assign.len())));
    }
    let mut s = art.gadget_vertices();
    for (i, &t) in assign.iter().enumerate() {
        s.insert(art.literal_vertex(i, t));
    }
    if !satisfies(&art.graph, &s, Level::DetOld) {
        let why = match art.instance.first_unsatisfied(assign) {
            Some(j) => format!("clause {} is unsatisfied", j + 1),
            None => "set fails DET:OLD verification".into(),
        };
        return Err(Error::Certification(why));
    }
    Ok(s)
}

/// Reads variable `i` as true iff `x_i ∈ s`. `s` must be a DET:OLD set
/// of size at most `K`.
pub fn set_to_assignment(art: &ReductionArtifact, s: &VertexSet) -> Result<Vec<bool>> {
    if s.universe() != art.graph.n() {
        return Err(Error::Input(format!("set universe {} differs from graph order {}", s.universe(), art.graph.n())));
    }
    if s.len() > art.k {
        return Err(Error::Input(format!("set has {} detectors, more than K = {}", s.len(), art.k)));
    }
    if !satisfies(&art.graph, s, Level::DetOld) {
        return Err(Error::Input("set fails DET:OLD verification".into()));
    }
    let assign: Vec<bool> = (0..art.instance.num_vars()).map(|i| s.contains(art.literal_vertex(i, true))).collect();
    match art.instance.first_unsatisfied(&assign) {
        None => Ok(assign),
        Some(j) => Err(Error::Certification(format!("decoded assignment leaves clause {} unsatisfied", j + 1))),
    }
}

/// Structural check that gadgets only meet the rest of the graph through
/// `a`, `b` and `d`, no edge joins two gadgets, and the non-attachment
/// vertices of distinct gadgets are at distance at least 3.
pub fn gadget_locality(art: &ReductionArtifact) -> bool {
    let g = &art.graph;
    for (u, v) in g.edges() {
        let (ru, rv) = (art.roles[u], art.roles[v]);
        match (ru.owner(), rv.owner()) {
            (Some(a), Some(b)) if a != b => return false,
            (Some(_), None) | (None, Some(_)) => {
                let label = ru.gadget_label().or(rv.gadget_label()).expect("one side is a gadget vertex");
                if !Label::ATTACHMENTS.contains(&label) {
                    return false;
                }
            }
            _ => {}
        }
    }
    let deep = |v: usize| art.roles[v].gadget_label().is_some_and(|l| !Label::ATTACHMENTS.contains(&l));
    (0..g.n()).filter(|&v| deep(v)).all(|v| {
        let d = g.distances_from(v);
        (0..g.n())
            .filter(|&w| deep(w) && art.roles[w].owner() != art.roles[v].owner())
            .all(|w| d[w].is_none_or(|x| x >= 3))
    })
}

/// Outcome of [`check_correctness`] on one formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectnessReport {
    pub satisfiable: bool,
    pub optimum: Option<usize>,
    pub k: usize,
    pub forcing_floor: bool,
    pub nodes_explored: u64,
}

impl CorrectnessReport {
    /// Satisfiable iff some DET:OLD set has size at most `K`, and then the
    /// optimum is exactly `K`. The forcing floor must also hold.
    pub fn holds(&self) -> bool {
        let small = self.optimum.is_some_and(|o| o <= self.k);
        self.forcing_floor && self.satisfiable == small && (!small || self.optimum == Some(self.k))
    }
}

/// Solves the built instance exactly and compares with the truth table.
pub fn check_correctness(art: &ReductionArtifact) -> Result<CorrectnessReport> {
    let satisfiable = art.instance.is_satisfiable()?;
    let forcing_floor = match forced_detectors(&art.graph, Level::DetOld) {
        Ok(f) => art.gadget_vertices().is_subset(&f),
        Err(_) => false,
    };
    let r = solve_bb(&art.graph, Level::DetOld);
    Ok(CorrectnessReport { satisfiable, optimum: r.optimum(), k: art.k, forcing_floor, nodes_explored: r.nodes_explored })
}

/// Formulas used to select the wiring: every single-clause formula on
/// three variables (one per polarity pattern) and the unsatisfiable
/// formula made of all eight of them.
pub fn wiring_test_formulas() -> Vec<SatInstance> {
    let clause = |m: usize| -> Clause { [0, 1, 2].map(|v| Literal { var: v, positive: m >> v & 1 == 0 }) };
    let mut out: Vec<SatInstance> =
        (0..8).map(|m| SatInstance::new(3, alloc::vec![clause(m)]).expect("valid clause")).collect();
    out.push(SatInstance::new(3, (0..8).map(clause).collect()).expect("valid clauses"));
    out
}

/// Every 5-wire choice using both `x_i-b` and `x̄_i-b`, the other wires
/// landing on attachment labels or the complement edge, for which the
/// canonical gadget gives a correct reduction on `formulas`. Sorted.
///
/// With `all_attachments` set, each of `a`, `b` and `d` must carry a wire.
/// Correctness alone leaves four wirings; the extra rule keeps two, which
/// mirror each other by swapping the roles of `a` and `d`.
pub fn wiring_candidates(formulas: &[SatInstance], all_attachments: bool) -> Result<Vec<[Wire; 5]>> {
    let mut pool = Vec::new();
    for l in Label::ATTACHMENTS {
        pool.push(Wire::Positive(l));
        pool.push(Wire::Negative(l));
    }
    pool.push(Wire::Complement);
    pool.sort();
    let gadget = GadgetG6::canonical();
    let mut out = Vec::new();
    for mask in 0u32..1 << pool.len() {
        if mask.count_ones() != 5 {
            continue;
        }
        let w: Vec<Wire> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
        if !w.contains(&Wire::Positive(Label::B)) || !w.contains(&Wire::Negative(Label::B)) {
            continue;
        }
        let touches = |l: Label| w.iter().any(|&x| x == Wire::Positive(l) || x == Wire::Negative(l));
        if all_attachments && !Label::ATTACHMENTS.into_iter().all(touches) {
            continue;
        }
        let mut ok = true;
        for phi in formulas {
            let art = build_instance_with(phi, &gadget, &w)?;
            if !check_correctness(&art)?.holds() {
                ok = false;
                break;
            }
        }
        if ok {
            let mut arr = [Wire::Complement; 5];
            arr.copy_from_slice(&w);
            out.push(arr);
        }
    }
    out.sort();
    Ok(out)
}

/// First entry of [`wiring_candidates`] on [`wiring_test_formulas`] with
/// every attachment label wired.
pub fn derive_wiring() -> Result<[Wire; 5]> {
    wiring_candidates(&wiring_test_formulas(), true)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Gadget("no literal wiring yields a correct reduction".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn worked_example() -> SatInstance {
        let (p, n) = (Literal::pos, Literal::neg);
        SatInstance::new(
            5,
            vec![[p(0), p(1), n(3)], [p(0), n(1), p(2)], [n(1), p(2), n(4)], [n(0), p(3), n(4)]],
        )
        .unwrap()
    }

    #[test]
    fn counts() {
        let art = build_instance(&worked_example()).unwrap();
        assert_eq!((art.graph.n(), art.graph.m(), art.k), (64, 128, 59));
        let one = SatInstance::new(3, vec![[Literal::pos(0), Literal::pos(1), Literal::neg(2)]]).unwrap();
        let art = build_instance(&one).unwrap();
        assert_eq!((art.graph.n(), art.graph.m(), art.k), (30, 60, 27));
        assert_eq!(art.gadget_vertices().len(), 24);
    }

    #[test]
    fn small_formulas_rejected() {
        let lits = [Literal::pos(0), Literal::pos(1), Literal::pos(0)];
        assert!(SatInstance::new(2, vec![lits]).is_err());
    }

    #[test]
    fn worked_example_certificates() {
        let art = build_instance(&worked_example()).unwrap();
        let assign = [true, true, true, true, false];
        let s = assignment_to_set(&art, &assign).unwrap();
        assert_eq!(s.len(), 59);
        assert_eq!(set_to_assignment(&art, &s).unwrap(), assign);
        // x1 = x2 = F and x4 = T falsify the first clause
        let e = assignment_to_set(&art, &[false, false, false, true, false]).unwrap_err();
        assert_eq!(e.kind(), crate::ErrorKind::Certification);
        // ~x4, ~x2 and ~x1 cover every clause, so all-false is a model
        assert_eq!(assignment_to_set(&art, &[false; 5]).unwrap().len(), 59);
        let all = VertexSet::full(art.graph.n());
        assert_eq!(set_to_assignment(&art, &all).unwrap_err().kind(), crate::ErrorKind::Input);
    }

    #[test]
    fn roles_and_locality() {
        let art = build_instance(&worked_example()).unwrap();
        assert_eq!(art.roles[art.clause_vertex(2)], Role::Clause(2));
        assert_eq!(art.roles[art.literal_vertex(4, false)], Role::Literal { var: 4, positive: false });
        assert!(gadget_locality(&art));
    }

    #[test]
    fn single_clause_correctness() {
        let phi = &wiring_test_formulas()[3];
        let report = check_correctness(&build_instance(phi).unwrap()).unwrap();
        assert!(report.holds(), "{report:?}");
    }
}
