use super::{Graph, VertexSet};
use crate::{Error, Result};

/// The vertices joined to `origin` by a trail (a walk that never reuses an
/// edge) of exactly `length` edges.
///
/// `origin` itself is a member when a closed trail of that length exists;
/// callers that need distinct endpoints remove it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrailSet {
    pub origin: usize,
    pub length: usize,
    pub members: VertexSet,
}

impl TrailSet {
    /// Members other than the origin.
    pub fn others(&self) -> VertexSet {
        let mut s = self.members.clone();
        s.remove(self.origin);
        s
    }
}

pub fn trail_set(g: &Graph, origin: usize, length: usize) -> Result<TrailSet> {
    g.check_vertex(origin)?;
    if !matches!(length, 0 | 2 | 4) {
        return Err(Error::UnsupportedTrailLength(length));
    }
    let mut members = VertexSet::new(g.n());
    let mut used = EdgeStack::default();
    walk(g, origin, length, &mut used, &mut members);
    Ok(TrailSet { origin, length, members })
}

fn walk(g: &Graph, at: usize, remaining: usize, used: &mut EdgeStack, out: &mut VertexSet) {
    if remaining == 0 {
        out.insert(at);
        return;
    }
    for &next in g.neighbors(at) {
        let edge = (at.min(next), at.max(next));
        if used.contains(edge) {
            continue;
        }
        used.push(edge);
        walk(g, next, remaining - 1, used, out);
        used.pop();
    }
}

/// Edges of the current partial trail; trails here have at most 4 edges.
#[derive(Default)]
struct EdgeStack {
    edges: [(usize, usize); 4],
    len: usize,
}

impl EdgeStack {
    fn contains(&self, e: (usize, usize)) -> bool {
        self.edges[..self.len].contains(&e)
    }
    fn push(&mut self, e: (usize, usize)) {
        self.edges[self.len] = e;
        self.len += 1;
    }
    fn pop(&mut self) {
        self.len -= 1;
    }
}
