use std::collections::HashMap;

use super::PlaneTriangulation;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Which branch of the construction produced the cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop1Case {
    /// `z` has no neighbors besides `x` and `y`; the cut is `{z}`.
    Triangle,
    /// The cycle `Q + xy` encloses vertices; the cut is `V(Q)`.
    EnclosedVertices,
    /// Nothing is enclosed; the cut is `{z, u_{i_1}}`.
    EmptyInterior,
}

/// Full trace of one run, for inspection and testing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Outcome {
    pub cut: VertexSet,
    pub case: Prop1Case,
    /// Third corner of the outer face.
    pub z: usize,
    /// `x, u_1, …, u_k, y`: the neighbors of `z` in cyclic order.
    pub fan: Vec<usize>,
    /// The shortest index-increasing `x`–`y` path through the fan, avoiding `xy`.
    pub path: Vec<usize>,
    /// Vertices strictly inside `Q + xy`, on the side away from `z`.
    pub enclosed: VertexSet,
}

/// A forest cut of `T − xy`, where `xy` is an edge of the outer face of `T`.
pub fn prop1_forest_cut(t: &PlaneTriangulation, x: usize, y: usize) -> Result<Prop1Outcome> {
    let outer = t.outer_face();
    if x == y || !outer.contains(&x) || !outer.contains(&y) {
        return Err(Error::EdgeNotOnChosenFace(x, y));
    }
    let z = *outer
        .iter()
        .find(|&&v| v != x && v != y)
        .expect("three distinct corners");
    let r = t.embedding();
    let g = t.graph();

    let fan = fan_from_x_to_y(r, z, x, y);
    if fan.len() == 2 {
        return Ok(Prop1Outcome {
            cut: VertexSet::singleton(z),
            case: Prop1Case::Triangle,
            z,
            fan,
            path: vec![x, y],
            enclosed: VertexSet::EMPTY,
        });
    }

    let path = shortest_increasing_path(&fan, |a, b| g.has_edge(a, b) && !is_pair(a, b, x, y));
    let enclosed = enclosed_vertices(t, &path, z)?;
    let (cut, case) = if enclosed.is_empty() {
        (VertexSet::singleton(z).with(path[1]), Prop1Case::EmptyInterior)
    } else {
        (path.iter().collect(), Prop1Case::EnclosedVertices)
    };
    Ok(Prop1Outcome {
        cut,
        case,
        z,
        fan,
        path,
        enclosed,
    })
}

fn is_pair(a: usize, b: usize, x: usize, y: usize) -> bool {
    (a == x && b == y) || (a == y && b == x)
}

/// Neighbors of `z` from `x` around to `y`, walking away from `y`
/// (`x` and `y` are consecutive at `z` because `xyz` is a face).
fn fan_from_x_to_y(r: &super::RotationSystem, z: usize, x: usize, y: usize) -> Vec<usize> {
    let step: fn(&super::RotationSystem, usize, usize) -> usize = if r.successor(z, x) == y {
        super::RotationSystem::predecessor
    } else {
        super::RotationSystem::successor
    };
    let mut fan = vec![x];
    let mut cur = x;
    while cur != y {
        cur = step(r, z, cur);
        fan.push(cur);
    }
    fan
}

/// Among paths `fan[0] = p_0, p_{i_1}, …, p_last` with strictly increasing
/// indices and consecutive vertices adjacent, the one with fewest vertices;
/// ties go to the lexicographically smallest index sequence.
pub(crate) fn shortest_increasing_path(fan: &[usize], adjacent: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let last = fan.len() - 1;
    // hops[i] = fewest hops from index i to the end
    let mut hops = vec![usize::MAX; fan.len()];
    hops[last] = 0;
    for i in (0..last).rev() {
        hops[i] = (i + 1..=last)
            .filter(|&j| hops[j] != usize::MAX && adjacent(fan[i], fan[j]))
            .map(|j| hops[j] + 1)
            .min()
            .unwrap_or(usize::MAX);
    }
    assert!(hops[0] != usize::MAX, "the fan itself is an increasing path");
    let mut path = vec![fan[0]];
    let mut i = 0;
    while i != last {
        i = (i + 1..=last)
            .find(|&j| hops[j] + 1 == hops[i] && adjacent(fan[i], fan[j]))
            .expect("hop counts are consistent");
        path.push(fan[i]);
    }
    path
}

/// Vertices on the far side of the cycle `path + (last, first)` from `z`,
/// found by flooding faces from the outer face without crossing cycle edges.
fn enclosed_vertices(t: &PlaneTriangulation, path: &[usize], z: usize) -> Result<VertexSet> {
    let faces = t.embedding().faces()?;
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut cycle_edges: Vec<(usize, usize)> = path.windows(2).map(|w| key(w[0], w[1])).collect();
    cycle_edges.push(key(path[0], path[path.len() - 1]));

    let mut faces_on_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            faces_on_edge
                .entry(key(f[i], f[(i + 1) % f.len()]))
                .or_default()
                .push(fi);
        }
    }
    let outer: VertexSet = t.outer_face().into_iter().collect();
    let start = faces
        .iter()
        .position(|f| f.iter().collect::<VertexSet>() == outer && f.contains(&z))
        .expect("outer face is traced");

    let mut reached = vec![false; faces.len()];
    reached[start] = true;
    let mut stack = vec![start];
    while let Some(fi) = stack.pop() {
        let f = &faces[fi];
        for i in 0..f.len() {
            let e = key(f[i], f[(i + 1) % f.len()]);
            if cycle_edges.contains(&e) {
                continue;
            }
            for &other in &faces_on_edge[&e] {
                if !reached[other] {
                    reached[other] = true;
                    stack.push(other);
                }
            }
        }
    }
    let mut near = VertexSet::EMPTY;
    for (fi, f) in faces.iter().enumerate() {
        if reached[fi] {
            near = near.union(f.iter().collect());
        }
    }
    let on_cycle: VertexSet = path.iter().collect();
    Ok(t.graph().vertices().difference(near).difference(on_cycle))
}
