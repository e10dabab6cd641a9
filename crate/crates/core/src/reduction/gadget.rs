use alloc::vec::Vec;
use core::fmt;

use crate::graph::named::petersen;
use crate::graph::{Graph, VertexSet};
use crate::verify::{check, dominators, forced_detectors, satisfies, sharp_k_distinguished, Failure, Level};
use crate::{Error, Result};

/// Vertex names of the six-vertex forcing gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Label {
    pub const ALL: [Label; 6] = [Label::A, Label::B, Label::C, Label::D, Label::E, Label::F];

    /// The only labels allowed to carry edges leaving the gadget.
    pub const ATTACHMENTS: [Label; 3] = [Label::A, Label::B, Label::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Label> {
        Label::ALL.get(i).copied()
    }

    pub fn as_char(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn from_char(c: char) -> Option<Label> {
        Label::ALL.into_iter().find(|l| l.as_char() == c.to_ascii_lowercase())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

use Label::*;

/// Internal edges of the gadget used by the reduction. `f` is adjacent to
/// exactly `d` and `e`; `c`, `e` and `f` have no outside edges.
pub const CANONICAL_GADGET_EDGES: [(Label, Label); 9] =
    [(A, B), (A, C), (B, C), (B, D), (C, D), (C, E), (D, E), (D, F), (E, F)];

/// A candidate forcing gadget on the labels `a..f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetG6 {
    edges: Vec<(Label, Label)>,
    attachments: Vec<Label>,
}

impl GadgetG6 {
    /// Edges are normalized to `(low, high)` and sorted. Outside edges are
    /// permitted at `a`, `b` and `d`.
    pub fn new<I: IntoIterator<Item = (Label, Label)>>(edges: I) -> Result<GadgetG6> {
        let mut norm: Vec<(Label, Label)> = Vec::new();
        for (x, y) in edges {
            if x == y {
                return Err(Error::Gadget(alloc::format!("loop at {x}")));
            }
            norm.push((x.min(y), x.max(y)));
        }
        norm.sort();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Gadget("repeated edge".into()));
        }
        Ok(GadgetG6 { edges: norm, attachments: Label::ATTACHMENTS.to_vec() })
    }

    pub fn canonical() -> GadgetG6 {
        GadgetG6::new(CANONICAL_GADGET_EDGES).expect("constant gadget is simple")
    }

    /// Replaces the set of labels that carry outside edges.
    pub fn with_attachments(mut self, mut attachments: Vec<Label>) -> GadgetG6 {
        attachments.sort();
        attachments.dedup();
        self.attachments = attachments;
        self
    }

    pub fn edges(&self) -> &[(Label, Label)] {
        &self.edges
    }

    pub fn attachments(&self) -> &[Label] {
        &self.attachments
    }

    pub fn neighbors(&self, l: Label) -> Vec<Label> {
        self.edges.iter().filter_map(|&(x, y)| if x == l { Some(y) } else if y == l { Some(x) } else { None }).collect()
    }

    /// The gadget alone, vertex `i` being `Label::ALL[i]`.
    pub fn graph(&self) -> Graph {
        Graph::from_edges(6, self.edges.iter().map(|&(x, y)| (x.index(), y.index()))).expect("gadget edges are simple")
    }
}

/// Test host for a gadget: vertices `0..6` are the gadget, and each
/// attachment label is joined to one vertex (its hook) of a private Petersen
/// graph. Petersen graphs are DET:OLD with room to spare, so any failure
/// near the gadget comes from the gadget itself.
#[derive(Clone, Debug)]
pub struct GadgetHarness {
    pub graph: Graph,
    pub hooks: Vec<(Label, usize)>,
}

impl GadgetHarness {
    pub fn new(gadget: &GadgetG6) -> GadgetHarness {
        let p = petersen();
        let mut edges: Vec<(usize, usize)> = gadget.edges.iter().map(|&(x, y)| (x.index(), y.index())).collect();
        let mut hooks = Vec::new();
        let mut offset = 6;
        for &l in &gadget.attachments {
            edges.extend(p.edges().map(|(u, v)| (u + offset, v + offset)));
            edges.push((l.index(), offset));
            hooks.push((l, offset));
            offset += p.n();
        }
        let graph = Graph::from_edges(offset, edges).expect("harness is simple");
        GadgetHarness { graph, hooks }
    }

    pub fn hook(&self, l: Label) -> Option<usize> {
        self.hooks.iter().find(|h| h.0 == l).map(|h| h.1)
    }

    fn without(&self, drop: &[usize]) -> VertexSet {
        let mut s = VertexSet::full(self.graph.n());
        for &v in drop {
            s.remove(v);
        }
        s
    }
}

/// Checks the forcing behaviour of a candidate inside its [`GadgetHarness`]:
///
/// 1. outside edges occur only at `a`, `b` and `d`;
/// 2. the host admits DET:OLD and all six gadget vertices are forced;
/// 3. dropping `b`'s outside neighbor from `V` leaves no DET:OLD set, so by
///    monotonicity every DET:OLD set (optimal ones included) contains it;
/// 4. with `b`'s outside neighbor kept and the outside neighbors of `a` and
///    `d` dropped, no condition at a gadget vertex fails.
pub fn validate_gadget(cand: &GadgetG6) -> bool {
    if cand.attachments != Label::ATTACHMENTS {
        return false;
    }
    let h = GadgetHarness::new(cand);
    let Ok(forced) = forced_detectors(&h.graph, Level::DetOld) else {
        return false;
    };
    if !(0..6).all(|v| forced.contains(v)) {
        return false;
    }
    let (Some(ha), Some(hb), Some(hd)) = (h.hook(A), h.hook(B), h.hook(D)) else {
        return false;
    };
    if satisfies(&h.graph, &h.without(&[hb]), Level::DetOld) {
        return false;
    }
    let verdict = check(&h.graph, &h.without(&[ha, hd]), Level::DetOld);
    !verdict.failures.iter().any(|f| match *f {
        Failure::UnderDominated { vertex, .. } => vertex < 6,
        Failure::Undistinguished { u, v, .. } => u < 6 || v < 6,
    })
}

/// A single condition: `Dom(v)` is "v is 2-dominated", `Pair(u, v)` is
/// "u and v are sharp-2-distinguished".
#[derive(Clone, Copy, Debug)]
enum Condition {
    Dom(Label),
    Pair(Label, Label),
}

/// The chain by which the gadget forces its detectors, each step naming a
/// condition and the vertices it cannot do without. `None` stands for `b`'s
/// outside neighbor.
const FORCING_CHAIN: [(Condition, [Option<Label>; 2]); 4] = [
    (Condition::Dom(F), [Some(D), Some(E)]),
    (Condition::Pair(E, F), [Some(C), Some(F)]),
    (Condition::Pair(C, F), [Some(A), Some(B)]),
    (Condition::Pair(E, B), [None, None]),
];

/// Whether removing each listed vertex alone from `V` breaks the step's
/// condition in the harness, for every step of the forcing chain.
pub fn follows_forcing_chain(cand: &GadgetG6) -> bool {
    let h = GadgetHarness::new(cand);
    let Some(hb) = h.hook(B) else { return false };
    let holds = |s: &VertexSet, c: Condition| match c {
        Condition::Dom(x) => dominators(&h.graph, s, x.index()).map(|d| d.len() >= 2).unwrap_or(false),
        Condition::Pair(x, y) => sharp_k_distinguished(&h.graph, s, x.index(), y.index(), 2).unwrap_or(false),
    };
    FORCING_CHAIN.iter().all(|&(cond, needs)| {
        holds(&h.without(&[]), cond)
            && needs.iter().all(|r| {
                let v = r.map_or(hb, Label::index);
                !holds(&h.without(&[v]), cond)
            })
    })
}

/// All 9-edge gadgets on `a..f` that pass [`validate_gadget`] and
/// [`follows_forcing_chain`], in lexicographic order of sorted edge lists.
pub fn gadget_candidates() -> Vec<GadgetG6> {
    let pairs: Vec<(Label, Label)> =
        (0..6).flat_map(|i| ((i + 1)..6).map(move |j| (Label::ALL[i], Label::ALL[j]))).collect();
    let mut out: Vec<GadgetG6> = (0u32..1 << pairs.len())
        .filter(|m| m.count_ones() == 9)
        .map(|m| GadgetG6::new((0..pairs.len()).filter(|i| m >> i & 1 == 1).map(|i| pairs[i])).expect("distinct pairs"))
        .filter(|g| validate_gadget(g) && follows_forcing_chain(g))
        .collect();
    out.sort_by(|x, y| x.edges.cmp(&y.edges));
    out
}

/// Lexicographically first gadget from [`gadget_candidates`].
pub fn derive_gadget() -> Result<GadgetG6> {
    gadget_candidates().into_iter().next().ok_or_else(|| Error::Gadget("no 9-edge gadget passes validation".into()))
}
