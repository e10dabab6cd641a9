//! The three detection levels and the shared verifier.
//!
//! For a detector set `S`, `N_S(v) = N(v) ∩ S` is the set of dominators of
//! `v`. A level fixes how many dominators each vertex needs and how two
//! vertices' dominator sets must differ:
//!
//! | level   | dominators | pair condition                          |
//! |---------|-----------:|-----------------------------------------|
//! | OLD     | ≥ 1        | `|N_S(u) △ N_S(v)| ≥ 1`                 |
//! | RED:OLD | ≥ 2        | `|N_S(u) △ N_S(v)| ≥ 2`                 |
//! | DET:OLD | ≥ 2        | `|N_S(u) − N_S(v)| ≥ 2` or the reverse  |

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Old,
    RedOld,
    DetOld,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::Old, Level::RedOld, Level::DetOld];

    pub fn min_dominators(self) -> usize {
        match self {
            Level::Old => 1,
            Level::RedOld | Level::DetOld => 2,
        }
    }

    pub fn pair_kind(self) -> PairKind {
        match self {
            Level::Old | Level::RedOld => PairKind::Plain,
            Level::DetOld => PairKind::Sharp,
        }
    }

    pub fn pair_need(self) -> usize {
        match self {
            Level::Old => 1,
            Level::RedOld | Level::DetOld => 2,
        }
    }

    /// How well `a` and `b` are told apart under this level's pair measure.
    #[inline]
    pub fn separation(self, a: &VertexSet, b: &VertexSet) -> usize {
        match self.pair_kind() {
            PairKind::Plain => a.symmetric_difference_len(b),
            PairKind::Sharp => a.difference_len(b).max(b.difference_len(a)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Level::Old => "old",
            Level::RedOld => "red-old",
            Level::DetOld => "det-old",
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Old => "OLD",
            Level::RedOld => "RED:OLD",
            Level::DetOld => "DET:OLD",
        })
    }
}

impl core::str::FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Level> {
        match s.to_ascii_lowercase().as_str() {
            "old" => Ok(Level::Old),
            "red-old" | "redold" | "red:old" => Ok(Level::RedOld),
            "det-old" | "detold" | "det:old" => Ok(Level::DetOld),
            _ => Err(Error::Input(alloc::format!("unknown level {s:?}"))),
        }
    }
}

/// Symmetric-difference (`Plain`) or one-sided-difference (`Sharp`) separation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    Plain,
    Sharp,
}

/// One violated condition. `have < need` always holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure<V = usize> {
    UnderDominated { vertex: V, have: usize, need: usize },
    Undistinguished { u: V, v: V, kind: PairKind, have: usize, need: usize },
}

/// Result of checking a detector set: every violated condition, in order.
///
/// Under-domination failures come first by vertex, then undistinguished
/// pairs by `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<V = usize> {
    pub failures: Vec<Failure<V>>,
}

impl<V> Verdict<V> {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn dominators(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    Ok(g.row(v) & s)
}

fn pair_sets(g: &Graph, s: &VertexSet, u: usize, v: usize) -> Result<(VertexSet, VertexSet)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::IdenticalPair(u));
    }
    Ok((g.row(u) & s, g.row(v) & s))
}

/// `|N_S(u) △ N_S(v)| >= k`
pub fn k_distinguished(g: &Graph, s: &VertexSet, u: usize, v: usize, k: usize) -> Result<bool> {
    let (a, b) = pair_sets(g, s, u, v)?;
    Ok(a.symmetric_difference_len(&b) >= k)
}

/// `|N_S(u) − N_S(v)| >= k` or `|N_S(v) − N_S(u)| >= k`
pub fn sharp_k_distinguished(g: &Graph, s: &VertexSet, u: usize, v: usize, k: usize) -> Result<bool> {
    let (a, b) = pair_sets(g, s, u, v)?;
    Ok(a.difference_len(&b) >= k || b.difference_len(&a) >= k)
}

fn dominator_sets(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    (0..g.n()).map(|v| g.row(v) & s).collect()
}

/// Checks `s` against `level`, listing every failure.
///
/// Pairs at distance three or more have disjoint dominator sets, so once
/// both endpoints meet the domination requirement they are separated; only
/// pairs inside a distance-two ball, or touching an under-dominated vertex,
/// are examined. [`check_exhaustive`] examines all pairs and must agree.
pub fn check(g: &Graph, s: &VertexSet, level: Level) -> Verdict {
    let n = g.n();
    let doms = dominator_sets(g, s);
    let need = level.min_dominators();
    let mut failures = Vec::new();
    let mut under = VertexSet::new(n);
    for (v, d) in doms.iter().enumerate() {
        let have = d.len();
        if have < need {
            under.insert(v);
            failures.push(Failure::UnderDominated { vertex: v, have, need });
        }
    }
    let pair_need = level.pair_need();
    for u in 0..n {
        let mut push = |v: usize| {
            let have = level.separation(&doms[u], &doms[v]);
            if have < pair_need {
                failures.push(Failure::Undistinguished { u, v, kind: level.pair_kind(), have, need: pair_need });
            }
        };
        if under.contains(u) {
            ((u + 1)..n).for_each(&mut push);
        } else {
            let near = g.ball2(u) | &under;
            near.iter().filter(|&v| v > u).for_each(&mut push);
        }
    }
    Verdict { failures }
}

/// Definition-level check over all vertices and all pairs; the test oracle
/// for [`check`].
pub fn check_exhaustive(g: &Graph, s: &VertexSet, level: Level) -> Verdict {
    let n = g.n();
    let doms = dominator_sets(g, s);
    let mut failures = Vec::new();
    for (v, d) in doms.iter().enumerate() {
        if d.len() < level.min_dominators() {
            failures.push(Failure::UnderDominated { vertex: v, have: d.len(), need: level.min_dominators() });
        }
    }
    for u in 0..n {
        for v in (u + 1)..n {
            let have = level.separation(&doms[u], &doms[v]);
            if have < level.pair_need() {
                failures.push(Failure::Undistinguished {
                    u,
                    v,
                    kind: level.pair_kind(),
                    have,
                    need: level.pair_need(),
                });
            }
        }
    }
    Verdict { failures }
}

/// Early-exit variant of [`check`] for search loops.
pub fn satisfies(g: &Graph, s: &VertexSet, level: Level) -> bool {
    let doms = dominator_sets(g, s);
    if doms.iter().any(|d| d.len() < level.min_dominators()) {
        return false;
    }
    let need = level.pair_need();
    (0..g.n()).all(|u| g.ball2(u).iter().filter(|&v| v > u).all(|v| level.separation(&doms[u], &doms[v]) >= need))
}

/// Whether any detector set of this level exists; by monotonicity this is
/// the same as `V` itself qualifying.
pub fn admits(g: &Graph, level: Level) -> bool {
    satisfies(g, &VertexSet::full(g.n()), level)
}

/// Vertices that belong to every detector set of the level: those whose
/// removal from `V` already breaks it.
pub fn forced_detectors(g: &Graph, level: Level) -> Result<VertexSet> {
    let n = g.n();
    let mut all = VertexSet::full(n);
    if !satisfies(g, &all, level) {
        return Err(Error::NoSolution);
    }
    let mut forced = VertexSet::new(n);
    for v in 0..n {
        all.remove(v);
        if !satisfies(g, &all, level) {
            forced.insert(v);
        }
        all.insert(v);
    }
    Ok(forced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_elements(n, xs.iter().copied())
    }

    /// Star-like host where u=0 and v=4 see prescribed dominators among 1..=3 or more.
    fn host_with(nu: &[usize], nv: &[usize], n: usize) -> (Graph, VertexSet) {
        let mut edges = Vec::new();
        for &x in nu {
            edges.push((0, x));
        }
        for &x in nv {
            edges.push((n - 1, x));
        }
        (Graph::from_edges(n, edges).unwrap(), VertexSet::full(n))
    }

    #[test]
    fn dominator_examples() {
        let c = cycle(7);
        assert_eq!(dominators(&c, &VertexSet::full(7), 0).unwrap().to_vec(), [1, 6]);
        assert!(dominators(&c, &VertexSet::new(7), 3).unwrap().is_empty());
        let p = petersen();
        for v in 0..10 {
            assert_eq!(dominators(&p, &VertexSet::full(10), v).unwrap().to_vec(), p.neighbors(v));
        }
        assert!(dominators(&c, &VertexSet::full(7), 7).is_err());
    }

    #[test]
    fn distinguishing_examples() {
        // N_S(u) = {1,2}, N_S(v) = {1,3}
        let (g, s) = host_with(&[1, 2], &[1, 3], 5);
        assert!(k_distinguished(&g, &s, 0, 4, 2).unwrap());
        assert!(!k_distinguished(&g, &s, 0, 4, 3).unwrap());
        assert!(!sharp_k_distinguished(&g, &s, 0, 4, 2).unwrap());
        // identical dominator sets
        let (g, s) = host_with(&[1, 2], &[1, 2], 4);
        assert!(!k_distinguished(&g, &s, 0, 3, 1).unwrap());
        // {1,2,3} vs {3}
        let (g, s) = host_with(&[1, 2, 3], &[3], 5);
        assert!(sharp_k_distinguished(&g, &s, 0, 4, 2).unwrap());
        // disjoint pairs {1,2} vs {3,4}
        let (g, s) = host_with(&[1, 2], &[3, 4], 6);
        assert!(sharp_k_distinguished(&g, &s, 0, 5, 2).unwrap());
        assert_eq!(k_distinguished(&g, &s, 2, 2, 1).unwrap_err(), Error::IdenticalPair(2));
        assert_eq!(sharp_k_distinguished(&g, &s, 0, 0, 1).unwrap_err(), Error::IdenticalPair(0));
    }

    #[test]
    fn petersen_full_set_is_detold() {
        assert!(check(&petersen(), &VertexSet::full(10), Level::DetOld).is_ok());
    }

    #[test]
    fn cycle_full_set() {
        let c = cycle(7);
        let full = VertexSet::full(7);
        let v = check(&c, &full, Level::DetOld);
        assert!(!v.is_ok());
        assert!(v.failures.contains(&Failure::Undistinguished { u: 0, v: 2, kind: PairKind::Sharp, have: 1, need: 2 }));
        assert!(check(&c, &full, Level::Old).is_ok());
        assert_eq!(v, check_exhaustive(&c, &full, Level::DetOld));
    }

    #[test]
    fn empty_set_fails_domination_everywhere() {
        let p = petersen();
        let v = check(&p, &VertexSet::new(10), Level::Old);
        let under = v.failures.iter().filter(|f| matches!(f, Failure::UnderDominated { .. })).count();
        assert_eq!(under, 10);
        assert_eq!(v, check_exhaustive(&p, &VertexSet::new(10), Level::Old));
    }

    #[test]
    fn forced_examples() {
        assert!(forced_detectors(&petersen(), Level::DetOld).unwrap().is_empty());
        assert_eq!(forced_detectors(&cycle(7), Level::DetOld).unwrap_err(), Error::NoSolution);
    }

    #[test]
    fn failures_are_ordered() {
        let c = cycle(8);
        let s = set(8, &[0, 1, 2, 3]);
        let v = check(&c, &s, Level::RedOld);
        let keys: Vec<(u8, usize, usize)> = v
            .failures
            .iter()
            .map(|f| match *f {
                Failure::UnderDominated { vertex, .. } => (0, vertex, 0),
                Failure::Undistinguished { u, v, .. } => (1, u, v),
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(v, check_exhaustive(&c, &s, Level::RedOld));
    }

    #[test]
    fn level_parsing() {
        assert_eq!("det-old".parse::<Level>().unwrap(), Level::DetOld);
        assert_eq!("RED-OLD".parse::<Level>().unwrap(), Level::RedOld);
        assert!("fast".parse::<Level>().is_err());
    }
}
