//! The five local operations. Deletions and contractions compact the surviving
//! vertices in rank order; an edge contraction merges into the smaller endpoint.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{bits, Edge, Graph};
use crate::error::{Error, Result};

/// The five operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpKind {
    RemoveVertex,
    RemoveEdge,
    Odot,
    ContractVertex,
    ContractEdge,
}

impl OpKind {
    pub const ALL: [OpKind; 5] =
        [OpKind::RemoveVertex, OpKind::RemoveEdge, OpKind::Odot, OpKind::ContractVertex, OpKind::ContractEdge];

    pub fn name(self) -> &'static str {
        match self {
            OpKind::RemoveVertex => "remove-vertex",
            OpKind::RemoveEdge => "remove-edge",
            OpKind::Odot => "odot",
            OpKind::ContractVertex => "contract-vertex",
            OpKind::ContractEdge => "contract-edge",
        }
    }

    /// True when the site of this operation is an edge.
    pub fn on_edges(self) -> bool {
        matches!(self, OpKind::RemoveEdge | OpKind::ContractEdge)
    }

    /// Every site of `g` this operation applies to, vertices or edges in order.
    pub fn sites(self, g: &Graph) -> Vec<Site> {
        if self.on_edges() {
            g.edges().into_iter().map(Site::Edge).collect()
        } else {
            (0..g.n()).map(Site::Vertex).collect()
        }
    }

    pub fn apply(self, g: &Graph, site: Site) -> Result<Graph> {
        match (self, site) {
            (OpKind::RemoveVertex, Site::Vertex(v)) => g.remove_vertex(v),
            (OpKind::Odot, Site::Vertex(v)) => g.odot(v),
            (OpKind::ContractVertex, Site::Vertex(v)) => g.contract_vertex(v),
            (OpKind::RemoveEdge, Site::Edge(e)) => g.remove_edge(e),
            (OpKind::ContractEdge, Site::Edge(e)) => g.contract_edge(e),
            _ => Err(Error::Parse(format!("operation {} does not take site {site}", self.name()))),
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OpKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OpKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::Parse(format!("unknown operation '{s}'")))
    }
}

impl Serialize for OpKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Where an operation or construction acts: `v=K` or `e=U,V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Site {
    Vertex(usize),
    Edge(Edge),
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Vertex(v) => write!(f, "v={v}"),
            Site::Edge(e) => write!(f, "e={},{}", e.u(), e.v()),
        }
    }
}

impl FromStr for Site {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("site '{s}' is not v=K or e=U,V"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix("v=") {
            Ok(Site::Vertex(num(rest)?))
        } else if let Some(rest) = s.strip_prefix("e=") {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            Ok(Site::Edge(Edge::new(num(a)?, num(b)?)?))
        } else {
            Err(bad())
        }
    }
}

impl Serialize for Site {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Drops bit `v` from `mask` and shifts the higher bits down by one.
#[inline]
fn squeeze(mask: u64, v: usize) -> u64 {
    let low = mask & ((1u64 << v) - 1);
    let high = mask >> (v + 1) << v;
    low | high
}

impl Graph {
    /// New index of surviving vertex `x` after deleting `removed`.
    pub fn compacted_index(x: usize, removed: usize) -> usize {
        debug_assert_ne!(x, removed);
        if x > removed {
            x - 1
        } else {
            x
        }
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let adj = (0..self.n).filter(|&x| x != v).map(|x| squeeze(self.adj[x], v)).collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `G - e`.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        let mut adj = self.adj.clone();
        adj[e.u()] &= !(1 << e.v());
        adj[e.v()] &= !(1 << e.u());
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `G ⊙ v`: removes every edge joining two neighbors of `v`; `v` stays.
    pub fn odot(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let nbhd = self.adj[v];
        let adj = (0..self.n).map(|x| if nbhd >> x & 1 == 1 { self.adj[x] & !nbhd } else { self.adj[x] }).collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `G ∘ v`: deletes `v` and turns its open neighborhood into a clique.
    pub fn contract_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let nbhd = self.adj[v];
        let mut adj = self.adj.clone();
        for x in bits(nbhd) {
            adj[x] |= nbhd & !(1 << x);
        }
        let adj = (0..self.n).filter(|&x| x != v).map(|x| squeeze(adj[x], v)).collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `G ∘ e`: merges the endpoints of `e` into its smaller endpoint.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        let (keep, gone) = e.endpoints();
        let mut adj = self.adj.clone();
        let merged = (adj[keep] | adj[gone]) & !(1 << keep) & !(1 << gone);
        adj[keep] = merged;
        for (x, row) in adj.iter_mut().enumerate() {
            if x != keep && x != gone {
                if merged >> x & 1 == 1 {
                    *row |= 1 << keep;
                }
                *row &= !(1 << gone);
            }
        }
        let adj = (0..self.n).filter(|&x| x != gone).map(|x| squeeze(adj[x], gone)).collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }
}
