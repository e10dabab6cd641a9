use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{canonical_form, CanonicalForm, Graph, VertexSet};
use crate::{Error, Result};

/// Largest order for which [`enumerate_graphs`] generates all isomorphism
/// classes itself; larger orders need an external corpus.
pub const ENUMERATION_MAX_N: usize = 8;

/// One graph per isomorphism class on `n` vertices that passes `filter`.
///
/// Classes are grown vertex by vertex: every class on `k - 1` vertices is
/// extended by a new vertex with each possible neighborhood, and the results
/// are deduplicated by canonical form. Output is in canonical-form order and
/// each yielded graph is in canonical labeling.
pub fn enumerate_graphs<F>(n: usize, filter: F) -> Result<impl Iterator<Item = Graph>>
where
    F: FnMut(&Graph) -> bool,
{
    if n > ENUMERATION_MAX_N {
        return Err(Error::TooLarge { what: "graph enumeration", n, cap: ENUMERATION_MAX_N });
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(0)));
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph();
            for mask in 0u32..(1 << (k - 1)) {
                next.insert(canonical_form(&extend(&base, mask)));
            }
        }
        level = next;
    }
    let mut filter = filter;
    Ok(level.into_iter().map(|f| f.to_graph()).filter(move |g| filter(g)))
}

/// Adds vertex `g.n()` adjacent to the vertices whose bits are set in `mask`.
fn extend(g: &Graph, mask: u32) -> Graph {
    let k = g.n() + 1;
    let mut rows: Vec<VertexSet> = (0..g.n())
        .map(|v| {
            let mut r = VertexSet::from_elements(k, g.neighbors(v).iter().copied());
            if mask >> v & 1 == 1 {
                r.insert(k - 1);
            }
            r
        })
        .collect();
    rows.push(VertexSet::from_elements(k, (0..g.n()).filter(|v| mask >> v & 1 == 1)));
    Graph::from_rows(rows)
}

/// Largest order accepted by [`enumerate_cubic_girth5`].
pub const CUBIC_ENUMERATION_MAX_N: usize = 20;

/// One graph per isomorphism class of connected cubic graphs of girth at
/// least five on `n` vertices, in canonical-form order.
///
/// In such a graph the ball of radius two around any vertex is a tree on
/// ten vertices, so every graph contains that tree on `0..10` with root 0.
/// The remaining edges are placed by backtracking: the lowest vertex short
/// of degree three is joined to each admissible partner in turn, untouched
/// vertices are interchangeable so only the first is tried, and an edge is
/// admissible only if its endpoints are at distance at least four.
pub fn enumerate_cubic_girth5(n: usize) -> Result<Vec<Graph>> {
    if n > CUBIC_ENUMERATION_MAX_N {
        return Err(Error::TooLarge { what: "cubic enumeration", n, cap: CUBIC_ENUMERATION_MAX_N });
    }
    if n < 10 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    let link = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
    };
    for i in 1..4 {
        link(&mut adj, 0, i);
        link(&mut adj, i, 2 * i + 2);
        link(&mut adj, i, 2 * i + 3);
    }
    let mut found = BTreeSet::new();
    place(&mut adj, &mut found);
    Ok(found.into_iter().map(|f| f.to_graph()).collect())
}

fn far_apart(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    // BFS to depth three
    let mut frontier = alloc::vec![u];
    let mut seen = alloc::vec![u];
    for _ in 0..3 {
        let mut next = Vec::new();
        for &x in &frontier {
            for &y in &adj[x] {
                if y == v {
                    return false;
                }
                if !seen.contains(&y) {
                    seen.push(y);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    true
}

fn place(adj: &mut Vec<Vec<usize>>, found: &mut BTreeSet<CanonicalForm>) {
    let n = adj.len();
    let Some(u) = (0..n).find(|&v| adj[v].len() < 3) else {
        let g = Graph::from_edges(n, (0..n).flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v))))
            .expect("construction keeps the graph simple");
        if g.is_connected() {
            found.insert(canonical_form(&g));
        }
        return;
    };
    let mut fresh_tried = false;
    for v in (u + 1)..n {
        if adj[v].len() == 3 {
            continue;
        }
        if adj[v].is_empty() {
            if fresh_tried {
                continue;
            }
            fresh_tried = true;
        }
        if !far_apart(adj, u, v) {
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
        place(adj, found);
        adj[u].pop();
        adj[v].pop();
    }
}
