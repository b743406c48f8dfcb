use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::automorphism::{canonical_graph, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ENUMERATION_MAX: usize = 9;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by canonical code. Each representative is the canonical
/// relabeling of its class.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the classes on `n` vertices are reached by joining a new vertex to every
/// nonempty subset of each class on `n - 1` vertices.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(1..=ENUMERATION_MAX).contains(&n) {
        return Err(Error::TooLarge { n, limit: ENUMERATION_MAX });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let found: BTreeMap<CanonicalCode, Graph> = level
            .par_iter()
            .flat_map_iter(|g| (1u64..1 << (k - 1)).map(move |mask| extend(g, mask)))
            .map(|g| canonical_graph(&g).map(|(c, code)| (code, c)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .collect();
        level = found.into_values().collect();
    }
    Ok(level)
}

/// All connected graphs with `lo ..= hi` vertices, smallest first.
pub fn connected_corpus(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo.max(1)..=hi {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

fn extend(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let mut adj: Vec<u64> = g.adjacency().to_vec();
    for (x, row) in adj.iter_mut().enumerate() {
        *row |= (mask >> x & 1) << n;
    }
    adj.push(mask);
    Graph::from_adjacency(adj).expect("extension of a simple graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn representatives_are_connected_and_canonical() {
        for g in enumerate_connected(5).unwrap() {
            assert!(g.is_connected());
            assert_eq!(canonical_graph(&g).unwrap().0, g);
        }
    }

    #[test]
    fn range_checked() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(10).is_err());
    }
}
