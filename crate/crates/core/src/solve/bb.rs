use alloc::vec::Vec;

use super::SolveResult;
use crate::graph::{Graph, VertexSet};
use crate::verify::{forced_detectors, satisfies, Level};

/// Exact minimization by certificate-driven branch and bound.
///
/// Feasibility is settled first by checking `V`. The search starts from the
/// forced detectors and an incumbent obtained by greedily thinning `V`. At
/// each node the violated conditions of the current partial set are
/// collected; one with the fewest candidate fixes is branched on (include
/// candidate `i`, exclude candidates `0..i`). Nodes are cut when the
/// optimistic completion (everything not excluded) fails, or when a packing
/// of vertex-disjoint deficits shows the incumbent cannot be beaten.
///
/// A second pass walks vertices in index order, inclusion first, under the
/// optimum as a cap, so the reported witness is the lexicographically
/// smallest optimal set.
pub fn solve_bb(g: &Graph, level: Level) -> SolveResult {
    let n = g.n();
    let Ok(forced) = forced_detectors(g, level) else {
        return SolveResult::infeasible(1);
    };
    let mut incumbent = VertexSet::full(n);
    for v in 0..n {
        if !forced.contains(v) {
            incumbent.remove(v);
            if !satisfies(g, &incumbent, level) {
                incumbent.insert(v);
            }
        }
    }
    let mut search = Search { g, level, best: incumbent, nodes: 0 };
    search.minimize(forced.clone(), VertexSet::new(n));
    let optimum = search.best.len();
    let witness = search
        .lex_first(optimum, 0, forced, VertexSet::new(n))
        .expect("an optimal set exists at the proven optimum");
    SolveResult { witness: Some(witness), nodes_explored: search.nodes }
}

/// A violated condition: at least `deficit` vertices of `candidates` must join.
struct Certificate {
    deficit: usize,
    candidates: VertexSet,
}

struct Search<'a> {
    g: &'a Graph,
    level: Level,
    best: VertexSet,
    nodes: u64,
}

impl Search<'_> {
    /// Violations of `inc`, with fixes drawn from vertices in neither set.
    /// Domination failures alone are returned when there are any, since
    /// separation of far pairs is only implied once domination holds.
    fn certificates(&self, inc: &VertexSet, exc: &VertexSet) -> Vec<Certificate> {
        let g = self.g;
        let n = g.n();
        let mut free = inc | exc;
        free = free.complement();
        let doms: Vec<VertexSet> = (0..n).map(|v| g.row(v) & inc).collect();
        let need = self.level.min_dominators();
        let under: Vec<Certificate> = (0..n)
            .filter(|&v| doms[v].len() < need)
            .map(|v| Certificate { deficit: need - doms[v].len(), candidates: g.row(v) & &free })
            .collect();
        if !under.is_empty() {
            return under;
        }
        let pair_need = self.level.pair_need();
        let mut certs = Vec::new();
        for u in 0..n {
            for v in g.ball2(u).iter().filter(|&v| v > u) {
                let have = self.level.separation(&doms[u], &doms[v]);
                if have < pair_need {
                    let mut candidates = g.row(u) ^ g.row(v);
                    candidates.intersect_with(&free);
                    certs.push(Certificate { deficit: pair_need - have, candidates });
                }
            }
        }
        certs
    }

    /// Additions still required: deficits of greedily packed certificates
    /// with pairwise disjoint candidate sets.
    fn lower_bound(certs: &[Certificate]) -> usize {
        let mut order: Vec<&Certificate> = certs.iter().collect();
        order.sort_by_key(|c| c.candidates.len());
        let mut used: Option<VertexSet> = None;
        let mut packed = 0;
        for c in order {
            let fits = used.as_ref().is_none_or(|u| u.is_disjoint(&c.candidates));
            if fits {
                packed += c.deficit;
                match used.as_mut() {
                    Some(u) => u.union_with(&c.candidates),
                    None => used = Some(c.candidates.clone()),
                }
            }
        }
        let widest = certs.iter().map(|c| c.deficit).max().unwrap_or(0);
        packed.max(widest)
    }

    /// `None` if the node is dead, otherwise the certificates of `inc`.
    fn expand(&mut self, inc: &VertexSet, exc: &VertexSet, cap: usize) -> Option<Vec<Certificate>> {
        self.nodes += 1;
        if !satisfies(self.g, &exc.complement(), self.level) {
            return None;
        }
        let certs = self.certificates(inc, exc);
        if certs.iter().any(|c| c.deficit > c.candidates.len()) {
            return None;
        }
        if inc.len() + Self::lower_bound(&certs) > cap {
            return None;
        }
        Some(certs)
    }

    fn minimize(&mut self, inc: VertexSet, exc: VertexSet) {
        if inc.len() >= self.best.len() {
            return;
        }
        let Some(certs) = self.expand(&inc, &exc, self.best.len() - 1) else {
            return;
        };
        let Some(branch) = certs.iter().min_by_key(|c| c.candidates.len()) else {
            self.best = inc;
            return;
        };
        let mut exc = exc;
        for c in branch.candidates.to_vec() {
            let mut next = inc.clone();
            next.insert(c);
            self.minimize(next, exc.clone());
            exc.insert(c);
        }
    }

    fn lex_first(&mut self, cap: usize, from: usize, inc: VertexSet, exc: VertexSet) -> Option<VertexSet> {
        if inc.len() > cap {
            return None;
        }
        let certs = self.expand(&inc, &exc, cap)?;
        if certs.is_empty() {
            return Some(inc);
        }
        if inc.len() == cap {
            return None;
        }
        let v = (from..self.g.n()).find(|&v| !inc.contains(v) && !exc.contains(v))?;
        let mut with = inc.clone();
        with.insert(v);
        if let Some(found) = self.lex_first(cap, v + 1, with, exc.clone()) {
            return Some(found);
        }
        let mut without = exc;
        without.insert(v);
        self.lex_first(cap, v + 1, inc, without)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::solve::solve_oracle;

    #[test]
    fn petersen() {
        let r = solve_bb(&crate::graph::named::petersen(), Level::DetOld);
        assert_eq!(r.optimum(), Some(9));
        assert_eq!(r.witness, solve_oracle(&crate::graph::named::petersen(), Level::DetOld).unwrap().witness);
    }

    #[test]
    fn cycle_seven() {
        assert!(!solve_bb(&cycle(7), Level::DetOld).feasible());
        // every pair of C7 has symmetric difference at least 2 under S = V
        assert_eq!(solve_bb(&cycle(7), Level::RedOld).optimum(), Some(7));
    }

    #[test]
    fn agrees_with_oracle_on_small_named_graphs() {
        let graphs = [cycle(7), cycle(9), path(6), complete(5), prism(5), heawood(), complete_bipartite(2, 4)];
        for g in &graphs {
            for level in Level::ALL {
                let a = solve_bb(g, level);
                let b = solve_oracle(g, level).unwrap();
                assert_eq!(a.witness, b.witness, "{g:?} {level}");
            }
        }
    }
}
