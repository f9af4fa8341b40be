//! Simple undirected graphs on at most 128 vertices with bit-set adjacency.

mod connectivity;
mod formats;
mod profile;
mod set;

pub use connectivity::{induced_is_forest, is_independent, is_vertex_cut, vertex_connectivity_at_least};
pub use formats::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use profile::DegreeProfile;
pub use set::{subsets_of_size, Iter as VertexSetIter, VertexSet};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 128;

/// An immutable simple graph. `adj[v]` is the open neighborhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; order],
        })
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        let all = VertexSet::full(order);
        for v in 0..order {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    pub fn cycle(order: usize) -> Result<Self> {
        if order < 3 {
            return Err(Error::BadParameters(format!("cycle needs order >= 3, got {order}")));
        }
        let edges: Vec<_> = (0..order).map(|i| (i, (i + 1) % order)).collect();
        Graph::new(order, &edges)
    }

    pub fn path(order: usize) -> Result<Self> {
        let edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
        Graph::new(order, &edges)
    }

    /// Builds directly from neighborhoods, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let all = VertexSet::full(n);
        for (v, nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(Error::LoopEdge(v));
            }
            if let Some(w) = nb.difference(all).first() {
                return Err(Error::OutOfRange { vertex: w, order: n });
            }
            for w in nb.iter() {
                if !adj[w].contains(v) {
                    return Err(Error::BadParameters(format!("asymmetric adjacency {v}-{w}")));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::OutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    /// `d_G(S)`, the degree sum over `s`.
    pub fn degree_sum(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.degree(v)).sum()
    }

    /// Union of the neighborhoods of `s`, minus `s` itself.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s.iter() {
            out = out.union(self.adj[v]);
        }
        out.difference(s)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of edges of `G[s]`.
    pub fn induced_size(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection(s).len()).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|s| s.len() == n - 1)
    }

    /// The vertex set of the component of `G[within]` containing `start`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// Components of `G − removed`.
    pub fn components_without(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices().difference(removed))
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, self.vertices()) == self.vertices()
    }

    /// `G[within]` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.component_of(v, within) == within,
        }
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let n = self.order();
        (0..n).filter(|&v| self.degree(v) == n - 1).collect()
    }

    /// `G − v` with vertices above `v` shifted down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        let n = self.order();
        if v >= n {
            return Err(Error::OutOfRange { vertex: v, order: n });
        }
        let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// `G[keep]`, where vertex `keep[i]` becomes `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &w) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}
