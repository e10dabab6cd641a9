//! Canonical labeling by partition refinement with individualization.
//!
//! Every discrete partition reached by the search is a candidate labeling; the
//! canonical one maximizes the packed upper-triangle adjacency string. The
//! refinement procedure only looks at cell memberships, so it commutes with
//! relabeling and the maximum is an isomorphism invariant. No automorphism
//! pruning is done, which is fine for the small orders this crate enumerates.

use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, VertexSet};

/// Isomorphism-invariant certificate of a graph: equal forms mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The graph on `0..n` whose adjacency is this form.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let mut rows = vec![VertexSet::new(n); n];
        let mut t = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.bits[t / 64] >> (63 - t % 64) & 1 == 1 {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
                t += 1;
            }
        }
        Graph::from_rows(rows)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (bits, _) = best_leaf(g);
    CanonicalForm { n: g.n(), bits }
}

/// `g` relabeled into canonical order; isomorphic inputs give equal outputs.
pub fn canonical_relabel(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

fn best_leaf(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let n = g.n();
    let mut best = None;
    let start = if n == 0 { Vec::new() } else { vec![(0..n).collect::<Vec<_>>()] };
    search(g, start, &mut best);
    best.unwrap_or_else(|| (Vec::new(), Vec::new()))
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    refine(g, &mut cells);
    match cells.iter().position(|c| c.len() > 1) {
        Some(idx) => {
            let target = cells[idx].clone();
            for &v in &target {
                let mut next = Vec::with_capacity(cells.len() + 1);
                next.extend_from_slice(&cells[..idx]);
                next.push(vec![v]);
                next.push(target.iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&cells[idx + 1..]);
                search(g, next, best);
            }
        }
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bits = encode(g, &order);
            if best.as_ref().is_none_or(|(b, _)| bits > *b) {
                *best = Some((bits, order));
            }
        }
    }
}

/// Splits cells by neighbor counts into every cell until the partition is equitable.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u16>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u16; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(core::mem::take(&mut group));
                }
                group.push(keyed[i].1);
            }
            next.push(group);
        }
        let stable = next.len() == k;
        *cells = next;
        if stable {
            return;
        }
    }
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; pairs.div_ceil(64)];
    let mut t = 0;
    for i in 0..n {
        let row = g.row(order[i]);
        for &w in &order[(i + 1)..] {
            if row.contains(w) {
                bits[t / 64] |= 1 << (63 - t % 64);
            }
            t += 1;
        }
    }
    bits
}
