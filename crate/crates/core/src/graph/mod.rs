//! Simple undirected graphs on at most 62 vertices, stored as adjacency bitsets.
//!
//! Vertices are the integers `0..n`. Every constructor enforces the simple-graph
//! invariants: no loops, symmetric adjacency, endpoints in range.

mod family;
pub(crate) mod graph6;
mod ops;
mod structural;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use family::{make_family, FamilyKind, FamilySpec};
pub use graph6::{parse_graph6, to_graph6};
pub use ops::{OpKind, Site};
pub use structural::{structural_sets, StructuralSets};

/// Largest vertex count supported by the bitset representation and graph6 short form.
pub const MAX_VERTICES: usize = 62;

/// An unordered pair of distinct vertices, stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge { u: a.min(b), v: a.max(b) })
    }

    /// Smaller endpoint.
    pub fn u(&self) -> usize {
        self.u
    }

    /// Larger endpoint.
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|e| e.to_string()).collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(" "))
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, limit: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, limit: MAX_VERTICES });
        }
        let range = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (v, &row) in adj.iter().enumerate() {
            if row & !range != 0 {
                return Err(Error::Parse(format!("vertex {v} has neighbors out of range")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            let mut rest = row;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[w] >> v & 1 == 0 {
                    return Err(Error::Parse(format!("adjacency not symmetric at {v},{w}")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Construction without validation, for internal callers that maintain the invariants.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.v())?;
        if self.has_edge(e.u(), e.v()) {
            Ok(())
        } else {
            Err(Error::MissingEdge(e))
        }
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// All edges in lexicographic `(u, v)` order. Edge labelings are indexed by this order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Position of `e` in [`Graph::edges`], if present.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges().binary_search(&e).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for w in self.neighbors(v) {
                adj[perm[v]] |= 1 << perm[w];
            }
        }
        Graph { n: self.n, adj }
    }
}

/// Iterates the set bits of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_canonical() {
        let e = Edge::new(4, 1).unwrap();
        assert_eq!(e.endpoints(), (1, 4));
        assert!(Edge::new(2, 2).is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::empty(63).is_err());
    }

    #[test]
    fn from_adjacency_checks_symmetry() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
    }

    #[test]
    fn connectivity() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_connected());
        assert!(!Graph::empty(3).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn edge_listing_order() {
        let g = Graph::from_edges(4, [(2, 3), (0, 2), (0, 1)]).unwrap();
        let es: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
        assert_eq!(es, vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_index(Edge::new(3, 2).unwrap()), Some(2));
        assert_eq!(g.edge_count(), 3);
    }
}
