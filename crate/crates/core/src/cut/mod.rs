//! Forest cuts and independent cuts.
//!
//! Every finder returns a [`CutWitness`] that can be revalidated against the
//! graph. The production finders walk inclusion-minimal vertex cuts: a subset of
//! an acyclic (or independent) set is again acyclic (independent), and every
//! vertex cut contains an inclusion-minimal one, so restricting the search to
//! minimal cuts never loses existence.

mod separators;

pub use separators::{enumerate_minimal_separators, minimal_ab_separators};

use crate::error::{Error, Result};
use crate::graph::{induced_is_forest, is_independent, subsets_of_size, Graph, VertexSet};

/// Exhaustive search is capped at this order.
pub const EXHAUSTIVE_MAX_ORDER: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutKind {
    Forest,
    Independent,
}

impl CutKind {
    /// Whether `G[s]` has the structure this kind demands.
    pub fn admits(self, g: &Graph, s: VertexSet) -> bool {
        match self {
            CutKind::Forest => induced_is_forest(g, s),
            CutKind::Independent => is_independent(g, s),
        }
    }
}

/// A vertex cut with two representatives from distinct components of `G − cut`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub cut: VertexSet,
    pub rep_a: usize,
    pub rep_b: usize,
    pub kind: CutKind,
}

impl CutWitness {
    /// Builds a witness for `cut`, or `None` if `cut` is not a cut of the
    /// required kind. Representatives are the smallest vertices of the two
    /// components with the smallest minima.
    pub fn new(g: &Graph, cut: VertexSet, kind: CutKind) -> Option<Self> {
        if !kind.admits(g, cut) {
            return None;
        }
        let comps = g.components_without(cut);
        if comps.len() < 2 {
            return None;
        }
        Some(CutWitness {
            cut,
            rep_a: comps[0].first()?,
            rep_b: comps[1].first()?,
            kind,
        })
    }

    /// Rechecks the witness from scratch.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.rep_a >= n || self.rep_b >= n || !self.cut.is_subset(g.vertices()) {
            return false;
        }
        if self.cut.contains(self.rep_a) || self.cut.contains(self.rep_b) {
            return false;
        }
        let rest = g.vertices().difference(self.cut);
        let comp_a = g.component_of(self.rep_a, rest);
        !comp_a.contains(self.rep_b) && self.kind.admits(g, self.cut)
    }
}

fn check_input(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    Ok(())
}

/// Brute-force oracle: subsets by increasing size, then ascending bit pattern;
/// the first cut of `kind` avoiding `avoid` wins.
pub fn find_cut_exhaustive(g: &Graph, kind: CutKind, avoid: Option<usize>) -> Result<Option<CutWitness>> {
    check_input(g)?;
    let n = g.order();
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::SearchTooLarge {
            order: n,
            max: EXHAUSTIVE_MAX_ORDER,
        });
    }
    if n < 3 {
        return Ok(None);
    }
    for r in 1..=n - 2 {
        for s in subsets_of_size(n, r) {
            if avoid.is_some_and(|u| s.contains(u)) {
                continue;
            }
            if let Some(w) = CutWitness::new(g, s, kind) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Exhaustive forest-cut oracle (order ≤ 28).
pub fn find_forest_cut_exhaustive(g: &Graph) -> Result<Option<CutWitness>> {
    find_cut_exhaustive(g, CutKind::Forest, None)
}

/// If `g` has a universal vertex, returns the lowest one and `G − u`.
pub fn universal_vertex_reduction(g: &Graph) -> Option<(usize, Graph)> {
    if g.order() < 2 {
        return None;
    }
    let u = g.universal_vertices().first()?;
    let h = g.remove_vertex(u).expect("u < order");
    Some((u, h))
}

/// Maps a vertex set of `G − u` back to labels of `G`.
fn lift(s: VertexSet, u: usize) -> VertexSet {
    s.iter().map(|v| if v < u { v } else { v + 1 }).collect()
}

/// Finds a forest cut, or proves none exists.
///
/// With a universal vertex `u`, forest cuts of `G` are exactly `{u} ∪ S` for
/// independent cuts `S` of `G − u` (or `{u}` alone when `G − u` is
/// disconnected). Otherwise the inclusion-minimal cuts are scanned in order.
/// Worst-case exponential in the number of minimal separators.
pub fn find_forest_cut(g: &Graph) -> Result<Option<CutWitness>> {
    check_input(g)?;
    if g.order() < 3 {
        return Ok(None);
    }
    if let Some((u, h)) = universal_vertex_reduction(g) {
        let inner = if h.is_connected() {
            match find_independent_cut(&h)? {
                Some(w) => lift(w.cut, u),
                None => return Ok(None),
            }
        } else {
            VertexSet::EMPTY
        };
        let w = CutWitness::new(g, inner.with(u), CutKind::Forest);
        debug_assert!(w.is_some(), "reduction produced an invalid cut");
        return Ok(w);
    }
    first_minimal_cut(g, CutKind::Forest, None)
}

/// Finds an independent cut, or proves none exists.
pub fn find_independent_cut(g: &Graph) -> Result<Option<CutWitness>> {
    find_independent_cut_inner(g, None)
}

/// Finds an independent cut that does not contain `u`.
pub fn find_independent_cut_avoiding(g: &Graph, u: usize) -> Result<Option<CutWitness>> {
    if u >= g.order() {
        return Err(Error::OutOfRange {
            vertex: u,
            order: g.order(),
        });
    }
    find_independent_cut_inner(g, Some(u))
}

fn find_independent_cut_inner(g: &Graph, avoid: Option<usize>) -> Result<Option<CutWitness>> {
    check_input(g)?;
    if g.order() < 3 {
        return Ok(None);
    }
    // Every cut contains every universal vertex, so an independent cut through a
    // universal vertex w can only be {w}.
    if let Some(w) = g.universal_vertices().first() {
        if avoid == Some(w) {
            return Ok(None);
        }
        return Ok(CutWitness::new(g, VertexSet::singleton(w), CutKind::Independent));
    }
    first_minimal_cut(g, CutKind::Independent, avoid)
}

fn first_minimal_cut(g: &Graph, kind: CutKind, avoid: Option<usize>) -> Result<Option<CutWitness>> {
    let seps = enumerate_minimal_separators(g)?;
    Ok(seps
        .into_iter()
        .filter(|s| avoid.is_none_or(|u| !s.contains(u)))
        .find_map(|s| CutWitness::new(g, s, kind)))
}

/// All inclusion-minimal vertex cuts inducing a forest, ordered by size then bits.
pub fn all_minimal_forest_cuts(g: &Graph) -> Result<Vec<VertexSet>> {
    let seps = enumerate_minimal_separators(g)?;
    Ok(seps.into_iter().filter(|&s| induced_is_forest(g, s)).collect())
}
