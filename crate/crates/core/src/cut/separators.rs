use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// All minimal a-b separators (sets with at least two full components), by
/// close-neighborhood expansion: seed with `N(C)` for the components `C` of
/// `G − N[v]`, then grow each separator `S` through `N(C)` for the components
/// of `G − (S ∪ N(x))`, `x ∈ S`. Output is sorted by size, then bit pattern.
pub fn minimal_ab_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut push = |s: VertexSet, queue: &mut VecDeque<VertexSet>| {
        if !s.is_empty() && seen.insert(s) {
            queue.push_back(s);
        }
    };
    for v in 0..g.order() {
        for c in g.components_without(g.closed_neighbors(v)) {
            push(g.neighborhood_of_set(c), &mut queue);
        }
    }
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        for x in s.iter() {
            for c in g.components_without(s.union(g.neighbors(x))) {
                push(g.neighborhood_of_set(c), &mut queue);
            }
        }
        out.push(s);
    }
    out.sort_by_key(|s| (s.len(), s.bits()));
    Ok(out)
}

/// Every inclusion-minimal vertex cut of `g` exactly once, ordered by size then
/// bit pattern. A cut is inclusion-minimal iff each of its vertices has a
/// neighbor in every component of `G − S`, i.e. all components are full.
pub fn enumerate_minimal_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    let mut seps = minimal_ab_separators(g)?;
    seps.retain(|&s| {
        g.components_without(s)
            .into_iter()
            .all(|c| g.neighborhood_of_set(c) == s)
    });
    Ok(seps)
}
