use super::{subsets_of_size, Graph, VertexSet};
use crate::error::{Error, Result};

/// Whether `G[s]` is acyclic: a forest on `|s|` vertices with `c` components has `|s| − c` edges.
pub fn induced_is_forest(g: &Graph, s: VertexSet) -> bool {
    let components = g.components_within(s).len();
    g.induced_size(s) + components == s.len()
}

/// Whether `G[s]` has no edges.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// Whether `G − s` has at least two components. Requires a connected `g`;
/// an empty remainder is not disconnected.
pub fn is_vertex_cut(g: &Graph, s: VertexSet) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    Ok(separates(g, s))
}

/// [`is_vertex_cut`] without the connectivity precondition check.
pub(crate) fn separates(g: &Graph, s: VertexSet) -> bool {
    let rest = g.vertices().difference(s);
    !g.is_connected_within(rest)
}

/// Whether `g` is `k`-connected: complete on at least `k + 1` vertices, or no
/// set of fewer than `k` vertices is a cut. Enumerates all subsets of size `< k`,
/// so it is meant for small `k`.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if g.is_complete() {
        return n > k;
    }
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    (0..k).all(|r| subsets_of_size(n, r).all(|s| !separates(g, s)))
}
