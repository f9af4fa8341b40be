//! Explicit graph families, clique gluing and named fixtures.
//!
//! Numbering is fixed: cycle vertices come first in cyclic order, a universal
//! vertex (if any) comes last.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cycle `x_0 … x_{2k−1}` with the `k` long diagonals `x_i x_{i+k}` and a
/// universal vertex `2k`. Order `2k + 1`, size `5k`.
pub fn cycle_diagonals_universal(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    let c = 2 * k;
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    edges.extend((0..k).map(|i| (i, i + k)));
    edges.extend((0..c).map(|i| (i, c)));
    Graph::new(c + 1, &edges)
}

/// `K_{3,n−3}` with a `c`-cycle on the first `c` vertices of the large side.
/// Vertices `0, 1, 2` form the small side; the cycle runs `3, 4, …, c + 2`.
pub fn k3_band_cycle(n: usize, c: usize) -> Result<Graph> {
    if n <= 6 || c < 3 || c >= n - 3 {
        return Err(Error::BadParameters(format!(
            "k3_band_cycle needs n > 6 and 3 <= c < n - 3, got n={n}, c={c}"
        )));
    }
    let mut edges = Vec::new();
    for a in 0..3 {
        edges.extend((3..n).map(|b| (a, b)));
    }
    edges.extend((0..c).map(|i| (3 + i, 3 + (i + 1) % c)));
    Graph::new(n, &edges)
}

/// `G_k`: the cycle `u_0 … u_{3k+2}` with chords `u_{3i} u_{3i+2}` for
/// `i = 0..=k` and a universal vertex `3k + 3`. Order `3k + 4`, size `7k + 7`.
pub fn conjecture2_family(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    let c = 3 * k + 3;
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    edges.extend((0..=k).map(|i| (3 * i, 3 * i + 2)));
    edges.extend((0..c).map(|i| (i, c)));
    Graph::new(c + 1, &edges)
}

/// Which cliques to identify when gluing two graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueSpec {
    pub clique_a: Vec<usize>,
    pub clique_b: Vec<usize>,
}

impl GlueSpec {
    pub fn new(clique_a: Vec<usize>, clique_b: Vec<usize>) -> Self {
        GlueSpec { clique_a, clique_b }
    }
}

fn check_clique(g: &Graph, tuple: &[usize]) -> Result<()> {
    for &v in tuple {
        if v >= g.order() {
            return Err(Error::OutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    let distinct: VertexSet = tuple.iter().collect();
    let complete =
        distinct.len() == tuple.len() && tuple.iter().all(|&u| distinct.without(u).is_subset(g.neighbors(u)));
    if !complete {
        return Err(Error::NotAClique(tuple.to_vec()));
    }
    Ok(())
}

/// Identifies `clique_b[i]` of `g2` with `clique_a[i]` of `g1`. Vertices of `g1`
/// keep their labels; the remaining vertices of `g2` follow in ascending order.
pub fn clique_glue(g1: &Graph, g2: &Graph, spec: &GlueSpec) -> Result<Graph> {
    let t = spec.clique_a.len();
    if t != spec.clique_b.len() || !(2..=4).contains(&t) {
        return Err(Error::BadParameters(format!(
            "glue tuples must have equal length 2, 3 or 4, got {} and {}",
            t,
            spec.clique_b.len()
        )));
    }
    check_clique(g1, &spec.clique_a)?;
    check_clique(g2, &spec.clique_b)?;
    let n1 = g1.order();
    let mut map = vec![usize::MAX; g2.order()];
    for (&a, &b) in spec.clique_a.iter().zip(&spec.clique_b) {
        map[b] = a;
    }
    let mut next = n1;
    for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    edges.extend(g2.edges().map(|(u, v)| (map[u], map[v])));
    Graph::new(next, &edges)
}

/// Seeded random connected graph: a random recursive spanning tree plus each
/// remaining pair independently with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        g.add_edge(parent, v)?;
    }
    for v in 1..n {
        for u in 0..v {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] = &[
    "k4",
    "k33",
    "prism",
    "octahedron",
    "icosahedron",
    "wheel5",
    "fig1_a",
    "fig1_b",
    "fig1_c",
    "fig1_d",
];

/// Named graphs. `fig1_*` are the four graphs of the n ∈ {6, 7} census, with
/// the drawing's labels `1..=k` shifted to `0..k`.
pub fn fixture(name: &str) -> Result<Graph> {
    let (n, edges): (usize, &[(usize, usize)]) = match name {
        "k4" => return Graph::complete(4),
        "k33" => (
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        ),
        // triangles 0-1-2 and 3-4-5 matched by 0-3, 1-4, 2-5
        "prism" => (
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        ),
        // poles 0 and 5, equator 1-2-3-4
        "octahedron" => (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 4),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4),
            ],
        ),
        "icosahedron" => return Ok(crate::planar::icosahedron().graph().clone()),
        // C4 on 0..3, hub 4
        "wheel5" => (5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
        // hexagon with the three long diagonals
        "fig1_a" => (
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3), (1, 4), (2, 5)],
        ),
        "fig1_b" => (
            6,
            &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (3, 4), (1, 5), (2, 5), (4, 5)],
        ),
        "fig1_c" => (
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (2, 5),
                (3, 5),
                (2, 6),
                (1, 6),
                (0, 4),
                (4, 5),
                (4, 6),
            ],
        ),
        "fig1_d" => (
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 6),
                (4, 6),
                (3, 6),
                (5, 6),
                (2, 5),
                (1, 5),
            ],
        ),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Graph::new(n, edges)
}
