use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A face as the cyclic sequence of vertices met while tracing it.
pub type Face = Vec<usize>;

/// Cyclic neighbor orders, one list per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    graph: Graph,
    rot: Vec<Vec<usize>>,
    /// `pos[v][w]` = index of `w` in `rot[v]`.
    pos: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Builds the graph from the lists and checks that each list is a
    /// permutation of the neighborhood it defines.
    pub fn new(rot: Vec<Vec<usize>>) -> Result<Self> {
        let n = rot.len();
        let mut graph = Graph::empty(n)?;
        for (v, list) in rot.iter().enumerate() {
            for &w in list {
                graph.add_edge(v, w)?;
            }
        }
        let mut pos = vec![vec![usize::MAX; n]; n];
        for (v, list) in rot.iter().enumerate() {
            let as_set: VertexSet = list.iter().collect();
            if as_set.len() != list.len() {
                return Err(Error::InvalidRotation(format!("vertex {v} lists a neighbor twice")));
            }
            if as_set != graph.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at {v} is not a permutation of its neighborhood"
                )));
            }
            for (i, &w) in list.iter().enumerate() {
                pos[v][w] = i;
            }
        }
        Ok(RotationSystem { graph, rot, pos })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    /// The neighbor following `w` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, w: usize) -> usize {
        let list = &self.rot[v];
        list[(self.pos[v][w] + 1) % list.len()]
    }

    /// The neighbor preceding `w` in the cyclic order at `v`.
    pub fn predecessor(&self, v: usize, w: usize) -> usize {
        let list = &self.rot[v];
        list[(self.pos[v][w] + list.len() - 1) % list.len()]
    }

    /// Traces all faces: the dart `(u, v)` is followed by `(v, successor(v, u))`.
    /// Darts are started in vertex order, then rotation order. Fails unless
    /// `n − m + f = 2`.
    pub fn faces(&self) -> Result<Vec<Face>> {
        let n = self.graph.order();
        let mut used: Vec<Vec<bool>> = self.rot.iter().map(|l| vec![false; l.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..self.rot[u].len() {
                if used[u][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, self.rot[u][i]);
                loop {
                    let slot = self.pos[a][b];
                    if used[a][slot] {
                        break;
                    }
                    used[a][slot] = true;
                    face.push(a);
                    let next = self.successor(b, a);
                    (a, b) = (b, next);
                }
                faces.push(face);
            }
        }
        let euler = n as i64 - self.graph.size() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NotSphereEmbedding(euler));
        }
        Ok(faces)
    }

    /// True iff this is a sphere embedding all of whose faces are triangles.
    pub fn is_plane_triangulation(&self) -> bool {
        self.graph.order() >= 3 && self.faces().is_ok_and(|fs| fs.iter().all(|f| f.len() == 3))
    }

    /// The traced face matching `tri`: a face that is a cyclic rotation of
    /// `tri` if there is one, else any triangular face on the same vertices.
    pub fn find_triangle(&self, tri: [usize; 3]) -> Option<[usize; 3]> {
        let faces = self.faces().ok()?;
        let same_cycle = |f: &Face| (0..3).any(|r| (0..3).all(|i| f[(i + r) % 3] == tri[i]));
        let target: VertexSet = tri.iter().collect();
        let triangles = faces.iter().filter(|f| f.len() == 3);
        let found = triangles
            .clone()
            .find(|f| same_cycle(f))
            .or_else(|| triangles.clone().find(|f| f.iter().collect::<VertexSet>() == target))?;
        Some([found[0], found[1], found[2]])
    }
}

/// Parses a rotation file: a line `n`, then `n` lines `v: w1 w2 … wd`.
/// Blank lines are ignored; vertex lines may come in any order.
pub fn parse_rotation(text: &str) -> Result<RotationSystem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing order line".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: hl,
        message: format!("bad order {header:?}"),
    })?;
    let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
    for (ln, l) in lines {
        let bad = |message: String| Error::Parse { line: ln, message };
        let (head, tail) = l.split_once(':').ok_or_else(|| bad("expected `v: w1 w2 …`".into()))?;
        let v: usize = head.trim().parse().map_err(|_| bad(format!("bad vertex {head:?}")))?;
        if v >= n {
            return Err(bad(format!("vertex {v} out of range")));
        }
        if rot[v].is_some() {
            return Err(bad(format!("vertex {v} listed twice")));
        }
        let list = tail
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad neighbor {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        rot[v] = Some(list);
    }
    let rot = rot
        .into_iter()
        .enumerate()
        .map(|(v, l)| {
            l.ok_or(Error::Parse {
                line: hl,
                message: format!("vertex {v} missing"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    RotationSystem::new(rot)
}

pub fn write_rotation(r: &RotationSystem) -> String {
    let mut out = format!("{}\n", r.graph().order());
    for (v, list) in r.rotations().iter().enumerate() {
        let ws: Vec<String> = list.iter().map(|w| w.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", ws.join(" ")));
    }
    out
}
