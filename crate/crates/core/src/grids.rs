//! Periodic detector patterns on the four planar grids.
//!
//! Cells are integer pairs `(x, y)`. The neighbor conventions are fixed:
//!
//! - `SQR`: the four axis offsets.
//! - `TRI`: `(±1, 0)`, `(0, ±1)`, `(1, 1)` and `(-1, -1)`.
//! - `KNG`: all eight surrounding cells.
//! - `HEX`: a brick wall. `(x ± 1, y)` plus `(x, y + 1)` when `x + y` is
//!   even, `(x, y - 1)` otherwise.
//!
//! A pattern is a set of cells modulo a period lattice `L`. Lattices are held
//! in Hermite normal form with basis `(a, 0)`, `(b, c)`, `0 <= b < a`, and
//! the fundamental domain is `0 <= x < a`, `0 <= y < c`. HEX lattices must
//! preserve the parity of `x + y`, otherwise translation by a period would
//! not be a grid automorphism.
//!
//! [`verify_pattern`] evaluates every neighborhood in the infinite grid and
//! only reduces cells modulo `L` to test membership, so small or skewed
//! periods are handled exactly and no period multiplication is needed.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{Graph, VertexSet};
use crate::verify::{self, Failure, Level, Verdict};
use crate::{Error, Ratio, Result};

pub type Cell = (i64, i64);

/// Detectors per cell, reduced.
pub type Density = Ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GridFamily {
    Sqr,
    Tri,
    Kng,
    Hex,
}

impl GridFamily {
    pub const ALL: [GridFamily; 4] = [GridFamily::Sqr, GridFamily::Tri, GridFamily::Kng, GridFamily::Hex];

    pub fn degree(self) -> usize {
        match self {
            GridFamily::Sqr => 4,
            GridFamily::Tri => 6,
            GridFamily::Kng => 8,
            GridFamily::Hex => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GridFamily::Sqr => "sqr",
            GridFamily::Tri => "tri",
            GridFamily::Kng => "kng",
            GridFamily::Hex => "hex",
        }
    }

    /// Whether translation by `t` maps the grid onto itself.
    pub fn is_automorphism(self, t: Cell) -> bool {
        self != GridFamily::Hex || (t.0 + t.1).rem_euclid(2) == 0
    }
}

impl fmt::Display for GridFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name().to_ascii_uppercase())
    }
}

impl FromStr for GridFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<GridFamily> {
        GridFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown grid family {s:?}")))
    }
}

const SQR: [Cell; 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const TRI: [Cell; 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)];
const KNG: [Cell; 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)];

pub fn grid_neighbors(family: GridFamily, (x, y): Cell) -> Vec<Cell> {
    let offsets: &[Cell] = match family {
        GridFamily::Sqr => &SQR,
        GridFamily::Tri => &TRI,
        GridFamily::Kng => &KNG,
        GridFamily::Hex => {
            let dy = if (x + y).rem_euclid(2) == 0 { 1 } else { -1 };
            return alloc::vec![(x + 1, y), (x - 1, y), (x, y + dy)];
        }
    };
    offsets.iter().map(|&(dx, dy)| (x + dx, y + dy)).collect()
}

/// Cells at distance one or two from `cell`, sorted.
pub fn grid_ball2(family: GridFamily, cell: Cell) -> Vec<Cell> {
    let mut out = BTreeSet::new();
    for n in grid_neighbors(family, cell) {
        out.insert(n);
        out.extend(grid_neighbors(family, n));
    }
    out.remove(&cell);
    out.into_iter().collect()
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - a.div_euclid(b) * t)
    }
}

/// A full-rank sublattice of `Z²` in Hermite normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    a: i64,
    b: i64,
    c: i64,
}

impl Lattice {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Lattice> {
        if a <= 0 || c <= 0 || !(0..a).contains(&b) {
            return Err(Error::Pattern(format!("({a},0),({b},{c}) is not in Hermite normal form")));
        }
        Ok(Lattice { a, b, c })
    }

    /// The lattice spanned by two period vectors.
    pub fn from_periods(p1: Cell, p2: Cell) -> Result<Lattice> {
        let det = p1.0 * p2.1 - p2.0 * p1.1;
        if det == 0 {
            return Err(Error::Pattern(format!("periods {p1:?} and {p2:?} are linearly dependent")));
        }
        let (c, s, t) = ext_gcd(p1.1, p2.1);
        let bx = s * p1.0 + t * p2.0;
        let a = ((p2.1 / c) * p1.0 - (p1.1 / c) * p2.0).abs();
        debug_assert_eq!(a * c, det.abs());
        Lattice::new(a, bx.rem_euclid(a), c)
    }

    pub fn basis(&self) -> (Cell, Cell) {
        ((self.a, 0), (self.b, self.c))
    }

    /// Number of cells in the fundamental domain.
    pub fn index(&self) -> usize {
        (self.a * self.c) as usize
    }

    pub fn reduce(&self, (x, y): Cell) -> Cell {
        let q = y.div_euclid(self.c);
        ((x - q * self.b).rem_euclid(self.a), y - q * self.c)
    }

    pub fn contains(&self, v: Cell) -> bool {
        self.reduce(v) == (0, 0)
    }

    /// Position of a cell's representative in [`Lattice::cells`].
    pub fn class_of(&self, cell: Cell) -> usize {
        let (x, y) = self.reduce(cell);
        (y * self.a + x) as usize
    }

    /// Fundamental-domain representatives, ordered by `(y, x)`.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.c).flat_map(move |y| (0..self.a).map(move |x| (x, y)))
    }

    pub fn compatible_with(&self, family: GridFamily) -> bool {
        family.is_automorphism((self.a, 0)) && family.is_automorphism((self.b, self.c))
    }

    /// Smallest `k` with `kZ² ⊆ L`.
    pub fn exponent(&self) -> i64 {
        let mut k = lcm(self.a, self.c);
        while !self.contains((0, k)) {
            k += lcm(self.a, self.c);
        }
        k
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / ext_gcd(a, b).0 * b
}

/// All lattices of index `d` usable on `family`, in `(a, b)` order.
pub fn lattices_of_index(family: GridFamily, d: usize) -> Vec<Lattice> {
    let d = d as i64;
    let mut out = Vec::new();
    for a in (1..=d).filter(|a| d % a == 0) {
        for b in 0..a {
            let l = Lattice { a, b, c: d / a };
            if l.compatible_with(family) {
                out.push(l);
            }
        }
    }
    out
}

/// Detector cells modulo a period lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicPattern {
    family: GridFamily,
    p1: Cell,
    p2: Cell,
    lattice: Lattice,
    detectors: Vec<Cell>,
}

impl PeriodicPattern {
    /// Reduces `detectors` to fundamental-domain representatives (sorted,
    /// duplicates merged).
    pub fn new<I: IntoIterator<Item = Cell>>(family: GridFamily, p1: Cell, p2: Cell, detectors: I) -> Result<Self> {
        let lattice = Lattice::from_periods(p1, p2)?;
        if !lattice.compatible_with(family) {
            return Err(Error::Pattern(format!("periods {p1:?}, {p2:?} do not preserve the HEX parity")));
        }
        let set: BTreeSet<Cell> = detectors.into_iter().map(|c| lattice.reduce(c)).collect();
        Ok(PeriodicPattern { family, p1, p2, lattice, detectors: set.into_iter().collect() })
    }

    pub fn on_lattice<I: IntoIterator<Item = Cell>>(family: GridFamily, lattice: Lattice, detectors: I) -> Result<Self> {
        let (p1, p2) = lattice.basis();
        PeriodicPattern::new(family, p1, p2, detectors)
    }

    pub fn family(&self) -> GridFamily {
        self.family
    }

    pub fn periods(&self) -> (Cell, Cell) {
        (self.p1, self.p2)
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn detectors(&self) -> &[Cell] {
        &self.detectors
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.detectors.binary_search(&self.lattice.reduce(cell)).is_ok()
    }

    /// The same pattern shifted by `t`.
    pub fn translated(&self, t: Cell) -> Result<PeriodicPattern> {
        if !self.family.is_automorphism(t) {
            return Err(Error::Pattern(format!("shift {t:?} is not a {} automorphism", self.family)));
        }
        let shifted = self.detectors.iter().map(|&(x, y)| (x + t.0, y + t.1));
        PeriodicPattern::new(self.family, self.p1, self.p2, shifted)
    }
}

pub fn pattern_density(p: &PeriodicPattern) -> Density {
    Ratio::new(p.detectors.len() as u64, p.lattice.index() as u64)
}

/// Checks the level's conditions for every cell of one fundamental domain
/// and every pair within distance two.
///
/// Failures report the domain representative `u` and, for pairs, the
/// partner `v > u` in infinite coordinates. Pairs further apart are not
/// listed: their neighborhoods are disjoint, so they fail only when an
/// endpoint is under-dominated, and that is already reported.
pub fn verify_pattern(p: &PeriodicPattern, level: Level) -> Verdict<Cell> {
    let fam = p.family;
    let detected = |c: &Cell| p.contains(*c);
    let need = level.min_dominators();
    let pair_need = level.pair_need();
    let mut failures = Vec::new();
    let mut pairs = Vec::new();
    for u in p.lattice.cells() {
        let nu = grid_neighbors(fam, u);
        let have = nu.iter().filter(|c| detected(c)).count();
        if have < need {
            failures.push(Failure::UnderDominated { vertex: u, have, need });
        }
        for v in grid_ball2(fam, u).into_iter().filter(|&v| v > u) {
            let nv = grid_neighbors(fam, v);
            let only = |a: &[Cell], b: &[Cell]| a.iter().filter(|c| detected(c) && !b.contains(c)).count();
            let (ab, ba) = (only(&nu, &nv), only(&nv, &nu));
            let have = match level.pair_kind() {
                verify::PairKind::Plain => ab + ba,
                verify::PairKind::Sharp => ab.max(ba),
            };
            if have < pair_need {
                pairs.push(Failure::Undistinguished { u, v, kind: level.pair_kind(), have, need: pair_need });
            }
        }
    }
    failures.extend(pairs);
    Verdict { failures }
}

/// The `k × k` torus quotient of the grid, cell `(x, y)` at index `y * k + x`.
pub fn torus_graph(family: GridFamily, k: usize) -> Result<Graph> {
    if k < 5 || (family == GridFamily::Hex && k % 2 == 1) {
        return Err(Error::Pattern(format!("{family} torus of side {k} wraps distance-two balls")));
    }
    let ki = k as i64;
    let mut edges = Vec::new();
    for y in 0..ki {
        for x in 0..ki {
            let u = (y * ki + x) as usize;
            for (nx, ny) in grid_neighbors(family, (x, y)) {
                let v = (ny.rem_euclid(ki) * ki + nx.rem_euclid(ki)) as usize;
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(k * k, edges)
}

/// Smallest torus side, at least 12, on which the pattern is well defined.
pub fn torus_side(p: &PeriodicPattern) -> usize {
    let e = p.lattice.exponent() as usize;
    e * 12usize.div_ceil(e)
}

/// The pattern lifted to the explicit torus of [`torus_side`], checked with
/// the general verifier.
pub fn torus_oracle(p: &PeriodicPattern, level: Level) -> Result<Verdict> {
    let k = torus_side(p);
    let g = torus_graph(p.family, k)?;
    let ki = k as i64;
    let s = VertexSet::from_elements(
        k * k,
        (0..ki).flat_map(|y| (0..ki).map(move |x| (x, y))).filter(|&c| p.contains(c)).map(|(x, y)| (y * ki + x) as usize),
    );
    Ok(verify::check(&g, &s, level))
}

/// DET:OLD constraints of one lattice over domain classes, kept as lists
/// of classes with multiplicity.
struct Constraints {
    /// Each class's neighbor classes.
    dom: Vec<Vec<u8>>,
    /// `(A, B)`: at least two detectors among `A` or among `B`.
    pairs: Vec<(Vec<u8>, Vec<u8>)>,
    /// Indices of pair constraints mentioning each class.
    touching: Vec<Vec<u32>>,
    /// Classes whose domination involves each class.
    dominated_by: Vec<Vec<u8>>,
}

impl Constraints {
    fn new(family: GridFamily, l: &Lattice) -> Constraints {
        let d = l.index();
        let cls = |c: &Cell| l.class_of(*c) as u8;
        let mut dom = Vec::with_capacity(d);
        let mut pairs = Vec::new();
        for u in l.cells() {
            let nu = grid_neighbors(family, u);
            dom.push(nu.iter().map(cls).collect());
            for v in grid_ball2(family, u).into_iter().filter(|&v| v > u) {
                let nv = grid_neighbors(family, v);
                let a: Vec<u8> = nu.iter().filter(|c| !nv.contains(c)).map(cls).collect();
                let b: Vec<u8> = nv.iter().filter(|c| !nu.contains(c)).map(cls).collect();
                pairs.push((a, b));
            }
        }
        let mut touching = alloc::vec![Vec::new(); d];
        for (i, (a, b)) in pairs.iter().enumerate() {
            let mut seen: Vec<u8> = a.iter().chain(b).copied().collect();
            seen.sort_unstable();
            seen.dedup();
            for c in seen {
                touching[c as usize].push(i as u32);
            }
        }
        let mut dominated_by = alloc::vec![Vec::new(); d];
        for (u, ns) in dom.iter().enumerate() {
            for &c in ns {
                if !dominated_by[c as usize].contains(&(u as u8)) {
                    dominated_by[c as usize].push(u as u8);
                }
            }
        }
        Constraints { dom, pairs, touching, dominated_by }
    }
}

fn count(classes: &[u8], s: u64) -> usize {
    classes.iter().filter(|&&c| s >> c & 1 == 1).count()
}

struct LatticeSearch<'a> {
    cons: &'a Constraints,
    d: usize,
    nodes: u64,
    stop: &'a dyn Fn() -> bool,
    stopped: bool,
}

impl LatticeSearch<'_> {
    /// Whether the constraints that mention `c` still hold for `s`.
    fn ok_after_removing(&self, c: usize, s: u64) -> bool {
        self.cons.dominated_by[c].iter().all(|&u| count(&self.cons.dom[u as usize], s) >= 2)
            && self.cons.touching[c].iter().all(|&i| {
                let (a, b) = &self.cons.pairs[i as usize];
                count(a, s) >= 2 || count(b, s) >= 2
            })
    }

    /// Removes `left` more classes from `s`, each above `from`; undecided
    /// classes count as detectors, so every failure is final.
    fn dfs(&mut self, s: u64, from: usize, left: usize) -> Option<u64> {
        self.nodes += 1;
        if left == 0 {
            return Some(s);
        }
        if self.nodes.is_multiple_of(4096) && (self.stop)() {
            self.stopped = true;
        }
        if self.stopped {
            return None;
        }
        for c in from..=(self.d - left) {
            let t = s & !(1u64 << c);
            if self.ok_after_removing(c, t) {
                if let Some(found) = self.dfs(t, c + 1, left - 1) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Largest fundamental domain [`search_pattern`] accepts.
pub const SEARCH_MAX_CELLS: usize = 36;

/// Searches one lattice for a DET:OLD pattern with at most `detectors`
/// detector classes. Returns the pattern (if any) and the search nodes used.
pub fn search_lattice(family: GridFamily, lattice: Lattice, detectors: usize) -> Result<(Option<PeriodicPattern>, u64)> {
    search_lattice_until(family, lattice, detectors, &|| false)
}

/// [`search_lattice`] that gives up, reporting no pattern, once `stop`
/// returns true. `stop` is polled every few thousand nodes.
pub fn search_lattice_until(
    family: GridFamily,
    lattice: Lattice,
    detectors: usize,
    stop: &dyn Fn() -> bool,
) -> Result<(Option<PeriodicPattern>, u64)> {
    let d = lattice.index();
    if d > SEARCH_MAX_CELLS {
        return Err(Error::TooLarge { what: "fundamental domain", n: d, cap: SEARCH_MAX_CELLS });
    }
    let cons = Constraints::new(family, &lattice);
    let full = (1u64 << d) - 1;
    let mut search = LatticeSearch { cons: &cons, d, nodes: 0, stop, stopped: false };
    let zeros = d.saturating_sub(detectors);
    let found = if zeros == 0 {
        let ok = (0..d).all(|u| count(&cons.dom[u], full) >= 2)
            && cons.pairs.iter().all(|(a, b)| count(a, full) >= 2 || count(b, full) >= 2);
        ok.then_some(full)
    } else {
        // translating the pattern moves any non-detector to class 0
        let first = full & !1;
        if search.ok_after_removing(0, first) {
            search.dfs(first, 1, zeros - 1)
        } else {
            None
        }
    };
    let pattern = match found {
        Some(s) => {
            let cells: Vec<Cell> = lattice.cells().enumerate().filter(|(i, _)| s >> i & 1 == 1).map(|(_, c)| c).collect();
            Some(PeriodicPattern::on_lattice(family, lattice, cells)?)
        }
        None => None,
    };
    Ok((pattern, search.nodes))
}

/// Result of [`search_pattern`].
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub pattern: Option<PeriodicPattern>,
    pub lattices_tried: u64,
    pub nodes_explored: u64,
}

/// Tries domain sizes `1..=bound` in order and every lattice of each size,
/// returning the first DET:OLD pattern with density at most `target`.
pub fn search_pattern(family: GridFamily, bound: usize, target: Density) -> Result<SearchOutcome> {
    if bound > SEARCH_MAX_CELLS {
        return Err(Error::TooLarge { what: "search bound", n: bound, cap: SEARCH_MAX_CELLS });
    }
    let mut out = SearchOutcome { pattern: None, lattices_tried: 0, nodes_explored: 0 };
    for d in 1..=bound {
        let Some(budget) = detector_budget(target, d) else { continue };
        for l in lattices_of_index(family, d) {
            let (p, nodes) = search_lattice(family, l, budget)?;
            out.lattices_tried += 1;
            out.nodes_explored += nodes;
            if p.is_some() {
                out.pattern = p;
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Tries every lattice of index `d` for a DET:OLD pattern with at most
/// `detectors` detector classes.
pub fn search_at_index(family: GridFamily, d: usize, detectors: usize) -> Result<SearchOutcome> {
    let mut out = SearchOutcome { pattern: None, lattices_tried: 0, nodes_explored: 0 };
    for l in lattices_of_index(family, d) {
        let (p, nodes) = search_lattice(family, l, detectors)?;
        out.lattices_tried += 1;
        out.nodes_explored += nodes;
        if p.is_some() {
            out.pattern = p;
            break;
        }
    }
    Ok(out)
}

/// Most detectors a domain of `d` cells may hold at density `target`;
/// `None` when fewer than two would be allowed, which can never dominate.
pub fn detector_budget(target: Density, d: usize) -> Option<usize> {
    let c = (*target.numer() as usize * d) / *target.denom() as usize;
    (c >= 2).then_some(c.min(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbor_conventions() {
        let mut n = grid_neighbors(GridFamily::Sqr, (0, 0));
        n.sort();
        assert_eq!(n, [(-1, 0), (0, -1), (0, 1), (1, 0)]);
        for f in GridFamily::ALL {
            for c in [(0, 0), (3, -2), (-5, 4), (1, 0)] {
                let ns = grid_neighbors(f, c);
                assert_eq!(ns.len(), f.degree());
                for m in ns {
                    assert!(grid_neighbors(f, m).contains(&c), "{f} {c:?} {m:?}");
                }
            }
        }
    }

    #[test]
    fn hermite_normal_form() {
        let l = Lattice::from_periods((2, 0), (0, 2)).unwrap();
        assert_eq!(l.basis(), ((2, 0), (0, 2)));
        let l = Lattice::from_periods((3, 1), (1, 2)).unwrap();
        assert_eq!(l.index(), 5);
        assert!(l.contains((3, 1)) && l.contains((1, 2)) && l.contains((2, -1)));
        assert!(!l.contains((1, 0)));
        assert!(Lattice::from_periods((2, 4), (1, 2)).is_err());
        let e = l.exponent();
        assert!(l.contains((e, 0)) && l.contains((0, e)));
    }

    #[test]
    fn lattice_counts() {
        // sublattices of index d number sigma(d)
        assert_eq!(lattices_of_index(GridFamily::Sqr, 6).len(), 12);
        assert!(lattices_of_index(GridFamily::Hex, 7).is_empty());
        assert!(lattices_of_index(GridFamily::Hex, 14).iter().all(|l| l.compatible_with(GridFamily::Hex)));
    }

    #[test]
    fn density_and_domination() {
        let p = PeriodicPattern::new(GridFamily::Sqr, (2, 0), (0, 2), [(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(pattern_density(&p), Ratio::new(3, 4));
        let empty = PeriodicPattern::new(GridFamily::Kng, (3, 0), (0, 3), Vec::new()).unwrap();
        let v = verify_pattern(&empty, Level::DetOld);
        assert!(matches!(v.failures[0], Failure::UnderDominated { have: 0, .. }));
    }

    #[test]
    fn full_triangular_pattern() {
        let l = Lattice::new(2, 0, 2).unwrap();
        let p = PeriodicPattern::on_lattice(GridFamily::Tri, l, l.cells().collect::<Vec<_>>()).unwrap();
        assert!(verify_pattern(&p, Level::DetOld).is_ok());
        assert!(torus_oracle(&p, Level::DetOld).unwrap().is_ok());
    }

    #[test]
    fn hex_parity_enforced() {
        assert!(PeriodicPattern::new(GridFamily::Hex, (1, 0), (0, 2), Vec::new()).is_err());
        assert!(PeriodicPattern::new(GridFamily::Hex, (2, 0), (1, 1), Vec::new()).is_ok());
        assert!(torus_graph(GridFamily::Hex, 13).is_err());
    }

    #[test]
    fn square_search() {
        let r = search_pattern(GridFamily::Sqr, 16, Ratio::new(3, 4)).unwrap();
        let p = r.pattern.unwrap();
        assert_eq!(pattern_density(&p), Ratio::new(3, 4));
        assert!(verify_pattern(&p, Level::DetOld).is_ok());
        assert!(torus_oracle(&p, Level::DetOld).unwrap().is_ok());
    }
}
