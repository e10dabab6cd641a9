use alloc::vec;
use alloc::vec::Vec;

use super::solve_bb;
use crate::graph::{Graph, VertexSet};
use crate::verify::{admits, Level};
use crate::{Error, Result};

/// Least number of edges a graph on `n` vertices needs to admit DET:OLD:
/// `ceil((3n - floor(n/2)) / 2)`. Graphs with DET:OLD have at least 7 vertices.
pub fn min_edge_bound(n: usize) -> Result<usize> {
    if n < 7 {
        return Err(Error::Input(alloc::format!("no graph on {n} < 7 vertices admits DET:OLD")));
    }
    Ok((3 * n - n / 2).div_ceil(2))
}

/// Every vertex has at most one neighbor of degree 2 (necessary for DET:OLD).
pub fn deg2_neighbor_ok(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) == 2).count() <= 1)
}

#[derive(Clone, Debug)]
pub struct MinEdgeWitness {
    pub graph: Graph,
    pub optimum: usize,
    /// Complete labeled graphs tested against the DET:OLD condition.
    pub candidates_checked: u64,
}

/// Searches for a graph on `n` vertices with exactly `min_edge_bound(n)`
/// edges whose only DET:OLD set is `V`.
///
/// The search space follows the counting argument behind the bound: minimum
/// degree 2, and each of the `p` degree-2 vertices `i < p` is matched to a
/// private neighbor `p + i` of degree at least 3 that has no other degree-2
/// neighbor. Degree sequences are fixed up front; edges are then placed
/// vertex by vertex.
pub fn min_edge_witness(n: usize) -> Result<Option<MinEdgeWitness>> {
    let m = min_edge_bound(n)?;
    let mut checked = 0;
    let p_min = (3 * n).saturating_sub(2 * m);
    for p in p_min..=n / 2 {
        let extra = 2 * m - 2 * p - 3 * (n - p);
        for split in 0..=extra {
            for partner_extra in partitions(split, p) {
                for other_extra in partitions(extra - split, n - 2 * p) {
                    let mut degree = vec![2; p];
                    degree.extend(partner_extra.iter().map(|e| 3 + e));
                    degree.extend(other_extra.iter().map(|e| 3 + e));
                    if let Some(w) = place_edges(&degree, p, &mut checked) {
                        return Ok(Some(MinEdgeWitness { candidates_checked: checked, ..w }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Non-increasing sequences of `parts` non-negative integers summing to `total`.
fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for x in (0..=total.min(cap)).rev() {
            prefix.push(x);
            go(total - x, parts - 1, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, total, &mut Vec::new(), &mut out);
    out
}

struct Placement<'a> {
    target: &'a [usize],
    rows: Vec<VertexSet>,
    checked: &'a mut u64,
}

fn place_edges(target: &[usize], p: usize, checked: &mut u64) -> Option<MinEdgeWitness> {
    let n = target.len();
    let mut pl = Placement { target, rows: vec![VertexSet::new(n); n], checked };
    for i in 0..p {
        pl.link(i, p + i);
    }
    pl.fill(0)
}

impl Placement<'_> {
    fn link(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    fn unlink(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    fn deg2_neighbors(&self, v: usize) -> usize {
        self.rows[v].iter().filter(|&w| self.target[w] == 2).count()
    }

    fn can_link(&self, u: usize, v: usize) -> bool {
        let (t, r) = (self.target, &self.rows);
        !r[u].contains(v)
            && r[v].len() < t[v]
            && (t[u] != 2 || self.deg2_neighbors(v) == 0)
            && (t[v] != 2 || self.deg2_neighbors(u) == 0)
    }

    fn fill(&mut self, u: usize) -> Option<MinEdgeWitness> {
        let n = self.target.len();
        if u == n {
            *self.checked += 1;
            let g = Graph::from_rows(self.rows.clone());
            if !admits(&g, Level::DetOld) {
                return None;
            }
            let optimum = solve_bb(&g, Level::DetOld).optimum()?;
            return (optimum == n).then_some(MinEdgeWitness { graph: g, optimum, candidates_checked: 0 });
        }
        let missing = self.target[u].checked_sub(self.rows[u].len())?;
        let options: Vec<usize> = ((u + 1)..n).filter(|&v| self.can_link(u, v)).collect();
        self.choose(u, missing, &options, 0)
    }

    fn choose(&mut self, u: usize, missing: usize, options: &[usize], from: usize) -> Option<MinEdgeWitness> {
        if missing == 0 {
            return self.fill(u + 1);
        }
        for i in from..options.len() {
            if options.len() - i < missing {
                break;
            }
            let v = options[i];
            if !self.can_link(u, v) {
                continue;
            }
            self.link(u, v);
            let found = self.choose(u, missing - 1, options, i + 1);
            self.unlink(u, v);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn bound_values() {
        assert_eq!(min_edge_bound(9).unwrap(), 12);
        assert_eq!(min_edge_bound(10).unwrap(), 13);
        assert_eq!(min_edge_bound(7).unwrap(), 9);
        assert!(min_edge_bound(6).is_err());
    }

    #[test]
    fn degree_two_neighbors() {
        assert!(!deg2_neighbor_ok(&cycle(7)));
        assert!(deg2_neighbor_ok(&petersen()));
        assert!(deg2_neighbor_ok(&path(3)));
    }

    #[test]
    fn partition_shapes() {
        assert_eq!(partitions(2, 2), [[2, 0], [1, 1]]);
        assert_eq!(partitions(0, 3), [[0, 0, 0]]);
        assert!(partitions(1, 0).is_empty());
    }
}
