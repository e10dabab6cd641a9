//! DET:OLD on cubic graphs through trail conflicts.
//!
//! On a cubic graph a set `S` is DET:OLD exactly when the graph is C4-free
//! and no two non-detectors are joined by a trail of length 2 or 4. The
//! non-detectors of a DET:OLD set are therefore the independent sets of the
//! [`ConflictGraph`], and minimizing `S` means finding a maximum independent
//! set there.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{trail_set, Graph, VertexSet};
use crate::solve::SolveResult;
use crate::{Error, Ratio, Result};

/// `u ~ v` iff `u != v` and `u` lies in `T2(v) ∪ T4(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    adjacency: Vec<VertexSet>,
}

impl ConflictGraph {
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn conflicts(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adjacency[v].is_disjoint(set))
    }

    /// True when `V - s` is independent, i.e. `s` is a DET:OLD set.
    pub fn accepts(&self, s: &VertexSet) -> bool {
        self.is_independent(&s.complement())
    }

    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.n()).flat_map(|u| self.adjacency[u].iter().filter(move |&v| v > u).map(move |v| (u, v)));
        Graph::from_edges(self.n(), edges).expect("conflict relation is symmetric and loop-free")
    }
}

/// A cubic graph admits DET:OLD iff it is C4-free.
pub fn cubic_has_detold(g: &Graph) -> Result<bool> {
    g.require_cubic()?;
    Ok(g.is_c4_free())
}

fn require_cubic_c4_free(g: &Graph) -> Result<()> {
    g.require_cubic()?;
    if g.is_c4_free() {
        Ok(())
    } else {
        Err(Error::NotC4Free)
    }
}

pub fn build_conflict_graph(g: &Graph) -> Result<ConflictGraph> {
    require_cubic_c4_free(g)?;
    let adjacency = (0..g.n())
        .map(|v| {
            let mut s = trail_set(g, v, 2)?.others();
            s.union_with(&trail_set(g, v, 4)?.others());
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConflictGraph { adjacency })
}

/// DET:OLD test on a cubic graph via the trail characterization.
pub fn is_detold_cubic(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.require_cubic()?;
    if !g.is_c4_free() {
        return Ok(false);
    }
    Ok(build_conflict_graph(g)?.accepts(s))
}

/// Exact `DET:OLD(g)` as `n` minus the independence number of the conflict graph.
pub fn detold_min_cubic(g: &Graph) -> Result<SolveResult> {
    let conflict = build_conflict_graph(g)?;
    let (mis, nodes) = max_independent_set(&conflict.adjacency);
    Ok(SolveResult { witness: Some(mis.complement()), nodes_explored: nodes })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyBound {
    pub detectors: VertexSet,
    pub density: Ratio,
}

/// Grows the non-detector set greedily in ascending vertex order, keeping it
/// independent in the conflict graph. Any maximal such set covers every
/// vertex with `T0 ∪ T2 ∪ T4` of some member, so the density is at most 30/31.
pub fn greedy_density_bound(g: &Graph) -> Result<GreedyBound> {
    let conflict = build_conflict_graph(g)?;
    let n = g.n();
    let mut free = VertexSet::new(n);
    for v in 0..n {
        if conflict.neighbors(v).is_disjoint(&free) {
            free.insert(v);
        }
    }
    let detectors = free.complement();
    let density = Ratio::new(detectors.len() as u64, n.max(1) as u64);
    Ok(GreedyBound { detectors, density })
}

/// Maximum independent set by branching on a vertex of largest remaining
/// degree. Vertices of remaining degree 0 or 1 are taken without branching.
/// Returns the set and the number of search nodes.
pub fn max_independent_set(adjacency: &[VertexSet]) -> (VertexSet, u64) {
    let n = adjacency.len();
    let mut mis = Mis { adjacency, best: VertexSet::new(n), nodes: 0 };
    mis.search(VertexSet::full(n), VertexSet::new(n));
    (mis.best, mis.nodes)
}

struct Mis<'a> {
    adjacency: &'a [VertexSet],
    best: VertexSet,
    nodes: u64,
}

impl Mis<'_> {
    fn search(&mut self, mut cand: VertexSet, mut chosen: VertexSet) {
        self.nodes += 1;
        loop {
            if chosen.len() + cand.len() <= self.best.len() {
                return;
            }
            let free = cand.iter().find(|&v| self.adjacency[v].intersection_len(&cand) <= 1);
            let Some(v) = free else { break };
            chosen.insert(v);
            cand.remove(v);
            cand.difference_with(&self.adjacency[v]);
        }
        let Some(pivot) = cand.iter().max_by_key(|&v| (self.adjacency[v].intersection_len(&cand), core::cmp::Reverse(v)))
        else {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return;
        };
        let mut with_cand = cand.clone();
        with_cand.remove(pivot);
        with_cand.difference_with(&self.adjacency[pivot]);
        let mut with = chosen.clone();
        with.insert(pivot);
        self.search(with_cand, with);
        cand.remove(pivot);
        self.search(cand, chosen);
    }
}

/// Best density found for one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    pub density: Ratio,
    pub optimum: usize,
    pub witness: Graph,
    pub graphs: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
    /// Entries that were not cubic or contained a 4-cycle.
    pub skipped: usize,
}

/// Highest `DET:OLD(g) / n` per order over a corpus of cubic graphs. The
/// first graph reaching the maximum is kept as the witness.
pub fn extremal_scan<I, F>(corpus: I, n_filter: F) -> ScanTable
where
    I: IntoIterator<Item = Graph>,
    F: Fn(usize) -> bool,
{
    tabulate(corpus.into_iter().filter(|g| n_filter(g.n())).map(|g| {
        let optimum = detold_min_cubic(&g).ok().and_then(|r| r.optimum());
        (g, optimum)
    }))
}

/// Builds a [`ScanTable`] from graphs paired with their DET:OLD optimum,
/// `None` marking entries outside the characterization. Entries are taken
/// in order, so callers may compute the optima in parallel.
pub fn tabulate<I>(entries: I) -> ScanTable
where
    I: IntoIterator<Item = (Graph, Option<usize>)>,
{
    let mut rows: BTreeMap<usize, ScanRow> = BTreeMap::new();
    let mut skipped = 0;
    for (g, optimum) in entries {
        let Some(optimum) = optimum else {
            skipped += 1;
            continue;
        };
        let density = Ratio::new(optimum as u64, g.n() as u64);
        let n = g.n();
        match rows.get_mut(&n) {
            Some(row) => {
                row.graphs += 1;
                if density > row.density {
                    row.density = density;
                    row.optimum = optimum;
                    row.witness = g;
                }
            }
            None => {
                rows.insert(n, ScanRow { n, density, optimum, witness: g, graphs: 1 });
            }
        }
    }
    ScanTable { rows: rows.into_values().collect(), skipped }
}
