//! Small named graphs used throughout the tests and examples.

use alloc::vec::Vec;

use super::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("named graph is simple")
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `K_{1,k}` with center `0`.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// The (3,6)-cage: the 14-cycle with chords `i -- i+5` at even `i`.
pub fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    build(14, edges)
}

/// Prism over `C_k`: cycles `0..k` and `k..2k` joined by rungs `i -- i+k`.
pub fn prism(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    build(2 * k, edges)
}

/// Replaces every vertex of a cubic graph by a triangle. The result is
/// cubic; when the input has girth at least 5 it is also C4-free.
pub fn truncation(g: &Graph) -> Graph {
    assert!(g.is_cubic(), "truncation is defined here for cubic graphs");
    // vertex v becomes 3v, 3v+1, 3v+2; slot i of v faces its i-th neighbor
    let slot = |v: usize, w: usize| 3 * v + g.neighbors(v).iter().position(|&x| x == w).unwrap();
    let mut edges = Vec::new();
    for v in 0..g.n() {
        edges.extend([(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v, 3 * v + 2)]);
    }
    for (u, v) in g.edges() {
        edges.push((slot(u, v), slot(v, u)));
    }
    build(3 * g.n(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((petersen().n(), petersen().m()), (10, 15));
        assert_eq!((heawood().n(), heawood().m()), (14, 21));
        assert!(petersen().is_cubic() && heawood().is_cubic());
        assert_eq!(prism(5).m(), 15);
        let t = truncation(&complete(4));
        assert_eq!((t.n(), t.m()), (12, 18));
        assert!(t.is_cubic());
        let tp = truncation(&petersen());
        assert!(tp.is_cubic() && tp.is_c4_free());
    }
}
