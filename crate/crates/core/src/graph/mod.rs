//! Simple undirected graphs and the neighborhood queries everything else
//! is built on.

use alloc::vec::Vec;

use crate::{Error, Result};

mod canon;
mod enumerate;
pub mod named;
mod set;
mod trail;

pub use canon::{canonical_form, canonical_relabel, CanonicalForm};
pub use enumerate::{enumerate_cubic_girth5, enumerate_graphs, CUBIC_ENUMERATION_MAX_N, ENUMERATION_MAX_N};
pub use set::{Iter, VertexSet};
pub use trail::{trail_set, TrailSet};

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency is kept both as sorted neighbor lists and as bit rows; the
/// distance-two balls used by the verifier are precomputed on construction.
#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    ball2: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = alloc::vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !rows[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            rows[v].insert(u);
        }
        Ok(Graph::from_rows(rows))
    }

    /// The graph whose adjacency rows are `rows`; rows must be symmetric
    /// and loop-free.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let adjacency: Vec<Vec<usize>> = rows.iter().map(VertexSet::to_vec).collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let n = rows.len();
        let ball2 = (0..n)
            .map(|v| {
                let mut ball = rows[v].clone();
                for &w in &adjacency[v] {
                    ball.union_with(&rows[w]);
                }
                ball.remove(v);
                ball
            })
            .collect();
        Graph { adjacency, rows, ball2, edge_count }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(alloc::vec![VertexSet::new(n); n])
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// `N(v)` as a bit row. Panics if `v` is out of range.
    #[inline]
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Vertices at distance 1 or 2 from `v`, excluding `v`.
    #[inline]
    pub fn ball2(&self, v: usize) -> &VertexSet {
        &self.ball2[v]
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.rows[v].clone();
        s.insert(v);
        Ok(s)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Minimum degree; `0` for the empty graph on zero vertices.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|a| a.len() == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Fails with [`Error::NotCubic`] naming the first vertex of degree other than 3.
    pub fn require_cubic(&self) -> Result<()> {
        match (0..self.n()).find(|&v| self.degree(v) != 3) {
            Some(v) => Err(Error::NotCubic { vertex: v, degree: self.degree(v) }),
            None => Ok(()),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// True iff no two distinct vertices have two common neighbors, which is
    /// the same as having no 4-cycle subgraph.
    pub fn is_c4_free(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| ((u + 1)..n).all(|v| self.rows[u].intersection_len(&self.rows[v]) <= 1))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(n);
        let mut stack = alloc::vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = alloc::vec![None; self.n()];
        let mut queue = alloc::collections::VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = alloc::vec![usize::MAX; n];
            let mut parent = alloc::vec![usize::MAX; n];
            let mut queue = alloc::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.n(), edges).expect("union of simple graphs is simple")
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation preserves simplicity")
    }

    /// The subgraph induced by `keep`, with vertices renumbered in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let mut index = alloc::vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph is simple")
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]).unwrap_err(), Error::SelfLoop(0));
        assert_eq!(Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap_err(), Error::DuplicateEdge(0, 1));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 2, n: 2 }
        );
    }

    #[test]
    fn neighborhoods() {
        let p = path(3);
        assert_eq!(p.open_neighborhood(1).unwrap().to_vec(), [0, 2]);
        assert_eq!(p.closed_neighborhood(1).unwrap().to_vec(), [0, 1, 2]);
        let iso = Graph::empty(1);
        assert!(iso.open_neighborhood(0).unwrap().is_empty());
        assert_eq!(iso.closed_neighborhood(0).unwrap().to_vec(), [0]);
        assert_eq!(cycle(7).open_neighborhood(0).unwrap().to_vec(), [1, 6]);
        assert_eq!(complete(4).closed_neighborhood(2).unwrap().len(), 4);
        assert!(matches!(p.open_neighborhood(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn degrees() {
        assert_eq!(cycle(7).min_degree(), 2);
        assert_eq!(petersen().min_degree(), 3);
        assert_eq!(path(2).min_degree(), 1);
        assert_eq!(path(3).degree(1), 2);
    }

    #[test]
    fn c4_freeness() {
        assert!(!complete_bipartite(3, 3).is_c4_free());
        assert!(petersen().is_c4_free());
        assert!(!cycle(4).is_c4_free());
        assert!(!complete(4).is_c4_free());
        assert!(cycle(5).is_c4_free());
    }

    #[test]
    fn girth_values() {
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(heawood().girth(), Some(6));
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(path(5).girth(), None);
        assert_eq!(complete_bipartite(3, 3).girth(), Some(4));
    }

    #[test]
    fn ball2_excludes_self() {
        let c = cycle(7);
        assert_eq!(c.ball2(0).to_vec(), [1, 2, 5, 6]);
    }

    #[test]
    fn adjacency_is_symmetric_on_named_graphs() {
        for g in [petersen(), heawood(), cycle(9), complete(5), complete_bipartite(2, 5)] {
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
        }
    }
}
