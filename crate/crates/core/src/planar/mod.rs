//! Plane triangulations as rotation systems, and the constructive forest cut
//! for a triangulation with one edge deleted.

mod prop1;
mod rotation;

pub use prop1::{prop1_forest_cut, Prop1Case, Prop1Outcome};
pub use rotation::{parse_rotation, write_rotation, Face, RotationSystem};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A sphere triangulation with a distinguished face playing the unbounded face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTriangulation {
    embedding: RotationSystem,
    outer_face: [usize; 3],
}

impl PlaneTriangulation {
    /// Checks that every face is a triangle and that `outer` is one of them
    /// (in any rotation or orientation).
    pub fn new(embedding: RotationSystem, outer: [usize; 3]) -> Result<Self> {
        if !embedding.is_plane_triangulation() {
            return Err(Error::NotATriangulation);
        }
        let face = embedding.find_triangle(outer).ok_or(Error::NotAFace(outer))?;
        Ok(PlaneTriangulation {
            embedding,
            outer_face: face,
        })
    }

    /// Uses the first traced face as the outer face.
    pub fn with_default_outer(embedding: RotationSystem) -> Result<Self> {
        let faces = embedding.faces()?;
        let f = faces.first().ok_or(Error::NotATriangulation)?;
        if f.len() != 3 {
            return Err(Error::NotATriangulation);
        }
        Self::new(embedding, [f[0], f[1], f[2]])
    }

    pub fn embedding(&self) -> &RotationSystem {
        &self.embedding
    }

    pub fn graph(&self) -> &Graph {
        self.embedding.graph()
    }

    /// The outer face as traced by [`RotationSystem::faces`].
    pub fn outer_face(&self) -> [usize; 3] {
        self.outer_face
    }

    /// Same embedding, with the first traced face containing edge `uv` as the
    /// outer face.
    pub fn rerooted_at_edge(&self, u: usize, v: usize) -> Result<Self> {
        let faces = self.embedding.faces()?;
        let f = faces
            .iter()
            .find(|f| f.contains(&u) && f.contains(&v))
            .ok_or(Error::EdgeNotOnChosenFace(u, v))?;
        Ok(PlaneTriangulation {
            embedding: self.embedding.clone(),
            outer_face: [f[0], f[1], f[2]],
        })
    }

    /// Inserts a new vertex into `face`, joined to its three corners.
    pub fn stack_vertex(&self, face: [usize; 3]) -> Result<Self> {
        let [a, b, c] = self.embedding.find_triangle(face).ok_or(Error::NotAFace(face))?;
        let w = self.graph().order();
        let mut rot = self.embedding.rotations().to_vec();
        // Traced face a→b→c means c follows a at b, a follows b at c, b follows c at a.
        insert_after(&mut rot[b], a, w);
        insert_after(&mut rot[c], b, w);
        insert_after(&mut rot[a], c, w);
        rot.push(vec![b, a, c]);
        let embedding = RotationSystem::new(rot)?;
        let stacked: VertexSet = [a, b, c].into_iter().collect();
        let outer_set: VertexSet = self.outer_face.into_iter().collect();
        let outer = if outer_set == stacked {
            [a, b, w]
        } else {
            self.outer_face
        };
        PlaneTriangulation::new(embedding, outer)
    }
}

fn insert_after(list: &mut Vec<usize>, after: usize, new: usize) {
    let pos = list.iter().position(|&x| x == after).expect("corner adjacency");
    list.insert(pos + 1, new);
}

/// The triangle with its two faces.
pub fn triangle() -> PlaneTriangulation {
    let r = RotationSystem::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).expect("valid");
    PlaneTriangulation::new(r, [0, 1, 2]).expect("triangle")
}

/// `K4` drawn as the triangle 0-1-2 with 3 inside.
pub fn k4() -> PlaneTriangulation {
    let r = RotationSystem::new(vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![2, 0, 1]]).expect("valid");
    PlaneTriangulation::with_default_outer(r).expect("K4 triangulation")
}

/// Octahedron with poles 0, 5 and equator 1-2-3-4, labelled as the `octahedron` fixture.
pub fn octahedron() -> PlaneTriangulation {
    let mut rot = vec![vec![1, 2, 3, 4]];
    for i in 1..=4 {
        let next = i % 4 + 1;
        let prev = (i + 2) % 4 + 1;
        rot.push(vec![next, 0, prev, 5]);
    }
    rot.push(vec![4, 3, 2, 1]);
    let r = RotationSystem::new(rot).expect("valid");
    PlaneTriangulation::with_default_outer(r).expect("octahedron")
}

/// Icosahedron: pole 0, upper ring 1..=5, lower ring 6..=10, pole 11.
/// Lower vertex `5 + i` sits between upper vertices `i` and `i + 1`.
pub fn icosahedron() -> PlaneTriangulation {
    let up = |i: usize| (i + 4) % 5 + 1; // i in any residue → 1..=5
    let low = |i: usize| (i + 4) % 5 + 6;
    let mut rot = vec![vec![1, 2, 3, 4, 5]];
    for i in 1..=5 {
        rot.push(vec![up(i + 1), 0, up(i + 4), low(i + 4), low(i)]);
    }
    for i in 1..=5 {
        rot.push(vec![low(i + 1), up(i + 1), up(i), low(i + 4), 11]);
    }
    rot.push(vec![10, 9, 8, 7, 6]);
    let r = RotationSystem::new(rot).expect("valid");
    PlaneTriangulation::with_default_outer(r).expect("icosahedron")
}

/// Stacks vertices into uniformly chosen faces, starting from `K4`, until the
/// order is `n`. Identical `(n, seed)` give identical embeddings.
pub fn random_stacked_triangulation(n: usize, seed: u64) -> Result<PlaneTriangulation> {
    if !(4..=crate::graph::MAX_ORDER).contains(&n) {
        return Err(Error::BadParameters(format!(
            "stacked triangulation needs 4 <= n <= 128, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = k4();
    while t.graph().order() < n {
        let faces = t.embedding().faces()?;
        let f = &faces[rng.gen_range(0..faces.len())];
        t = t.stack_vertex([f[0], f[1], f[2]])?;
    }
    Ok(t)
}
