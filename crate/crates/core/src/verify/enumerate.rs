use std::collections::BTreeMap;

use super::canon::{canonical_form, CanonKey};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par::map_ordered;

pub const ENUMERATION_MAX_ORDER: usize = 7;

/// One canonical representative of every isomorphism class of graphs of
/// order `n` (connected or not), sorted by canonical key.
///
/// Classes of order `n` are grown from those of order `n − 1` by attaching a
/// new vertex to every subset of the old ones; every graph arises this way
/// because deleting any vertex leaves some smaller class.
pub fn enumerate_graphs(n: usize, workers: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > ENUMERATION_MAX_ORDER {
        return Err(Error::OrderTooLargeForEnumeration(n));
    }
    let mut level = vec![Graph::empty(1)?];
    for order in 2..=n {
        let old = order - 1;
        let jobs: Vec<(usize, u128)> = (0..level.len())
            .flat_map(|i| (0u128..1 << old).map(move |mask| (i, mask)))
            .collect();
        let extended = map_ordered(&jobs, workers, |&(i, mask)| {
            let parent = &level[i];
            let mut adj: Vec<VertexSet> = (0..old).map(|v| parent.neighbors(v)).collect();
            let attach = VertexSet::from_bits(mask);
            for v in attach.iter() {
                adj[v].insert(old);
            }
            adj.push(attach);
            let g = Graph::from_adjacency(adj).expect("valid extension");
            canonical_form(&g)
        });
        let classes: BTreeMap<CanonKey, Graph> = extended.into_iter().map(|(g, k)| (k, g)).collect();
        level = classes.into_values().collect();
    }
    Ok(level)
}

/// One representative per isomorphism class of connected graphs of order
/// `n ≤ 7`, relabelled canonically and sorted by canonical key.
pub fn enumerate_connected_graphs(n: usize, workers: usize) -> Result<Vec<Graph>> {
    let mut all = enumerate_graphs(n, workers)?;
    all.retain(Graph::is_connected);
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected_graphs(n, 1).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        let all: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n, 1).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
        let three = enumerate_connected_graphs(3, 1).unwrap();
        assert_eq!(three.iter().map(Graph::size).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(
            enumerate_connected_graphs(8, 1),
            Err(Error::OrderTooLargeForEnumeration(8))
        );
    }

    #[test]
    fn worker_count_does_not_change_output() {
        assert_eq!(enumerate_graphs(5, 1).unwrap(), enumerate_graphs(5, 4).unwrap());
    }
}
