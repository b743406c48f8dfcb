//! Distinguishing labelings: verification and exact minimization.
//!
//! `D(G)` and `D'(G)` are computed by increasing `d` from 1. At each level a few
//! random labelings are tried first; a negative answer only ever comes from an
//! exhausted search over restricted-growth labelings, which enumerates labelings
//! up to renaming of label values.

mod oracle;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::automorphism::{
    aut_cap_from_env, automorphisms_with_cap, edge_action_is_faithful, edge_action_unchecked, AutomorphismGroup,
    Permutation,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use oracle::{brute_force_value, restricted_growth_strings, ORACLE_MAX_EDGES, ORACLE_MAX_VERTICES};

/// Which elements carry labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of partial assignments per solve.
    pub node_budget: u64,
    /// Random labelings tried at each level before the exhaustive search.
    pub random_tries: usize,
    pub seed: u64,
    pub aut_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_budget: 100_000_000, random_tries: 64, seed: 0x5eed_d157, aut_cap: aut_cap_from_env() }
    }
}

/// Labels indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexLabeling(pub Vec<u32>);

impl VertexLabeling {
    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn distinct_count(&self) -> usize {
        distinct(self.0.iter().copied())
    }
}

impl fmt::Display for VertexLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().enumerate().map(|(v, l)| format!("{v}={l}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Labels keyed by canonical edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeLabeling(pub BTreeMap<Edge, u32>);

impl EdgeLabeling {
    /// Pairs `labels[i]` with the `i`-th edge of `g.edges()`.
    pub fn from_indexed(g: &Graph, labels: &[u32]) -> Result<EdgeLabeling> {
        let edges = g.edges();
        if edges.len() != labels.len() {
            return Err(Error::LabelingSize { expected: edges.len(), got: labels.len() });
        }
        Ok(EdgeLabeling(edges.into_iter().zip(labels.iter().copied()).collect()))
    }

    /// Labels in `g.edges()` order; fails unless the domain is exactly `E(g)`.
    pub fn to_indexed(&self, g: &Graph) -> Result<Vec<u32>> {
        let edges = g.edges();
        if edges.len() != self.0.len() {
            return Err(Error::EdgeLabelingDomain);
        }
        edges.iter().map(|e| self.0.get(e).copied().ok_or(Error::EdgeLabelingDomain)).collect()
    }

    pub fn get(&self, e: &Edge) -> Option<u32> {
        self.0.get(e).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn distinct_count(&self) -> usize {
        distinct(self.0.values().copied())
    }
}

impl fmt::Display for EdgeLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(e, l)| format!("{e}={l}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for EdgeLabeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(e, l)| (e.to_string(), l)))
    }
}

fn distinct(labels: impl Iterator<Item = u32>) -> usize {
    let mut v: Vec<u32> = labels.collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Minimal label count with a verified witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistResult<L> {
    pub value: usize,
    pub witness: L,
}

/// A non-identity automorphism preserving every vertex label, if one exists.
pub fn preserving_vertex_automorphism<'a>(
    g: &Graph,
    auts: &'a AutomorphismGroup,
    labeling: &VertexLabeling,
) -> Result<Option<&'a Permutation>> {
    if labeling.len() != g.n() || auts.degree() != g.n() {
        return Err(Error::LabelingSize { expected: g.n(), got: labeling.len() });
    }
    let l = labeling.labels();
    Ok(auts.non_identity().iter().find(|p| (0..g.n()).all(|v| l[v] == l[p.apply(v)])))
}

/// A non-identity automorphism whose edge action preserves every edge label, if one exists.
pub fn preserving_edge_automorphism<'a>(
    g: &Graph,
    auts: &'a AutomorphismGroup,
    labeling: &EdgeLabeling,
) -> Result<Option<&'a Permutation>> {
    if auts.degree() != g.n() {
        return Err(Error::LabelingSize { expected: g.n(), got: auts.degree() });
    }
    let l = labeling.to_indexed(g)?;
    let edges = g.edges();
    Ok(auts.non_identity().iter().find(|p| {
        let act = edge_action_unchecked(&edges, p);
        act.iter().enumerate().all(|(i, &j)| l[i] == l[j])
    }))
}

pub fn is_distinguishing_vertex(g: &Graph, auts: &AutomorphismGroup, labeling: &VertexLabeling) -> Result<bool> {
    Ok(preserving_vertex_automorphism(g, auts, labeling)?.is_none())
}

pub fn is_distinguishing_edge(g: &Graph, auts: &AutomorphismGroup, labeling: &EdgeLabeling) -> Result<bool> {
    Ok(preserving_edge_automorphism(g, auts, labeling)?.is_none())
}

/// `D(g)` with default configuration.
pub fn distinguishing_number(g: &Graph) -> Result<DistResult<VertexLabeling>> {
    let config = SolverConfig::default();
    let auts = automorphisms_with_cap(g, config.aut_cap)?;
    distinguishing_number_with(g, &auts, &config)
}

pub fn distinguishing_number_with(
    g: &Graph,
    auts: &AutomorphismGroup,
    config: &SolverConfig,
) -> Result<DistResult<VertexLabeling>> {
    let perms: Vec<Vec<u32>> =
        auts.non_identity().iter().map(|p| p.image().iter().map(|&x| x as u32).collect()).collect();
    let (value, labels) = search::minimize(g.n(), &perms, config)?;
    let witness = VertexLabeling(labels);
    debug_assert!(is_distinguishing_vertex(g, auts, &witness).unwrap());
    Ok(DistResult { value, witness })
}

/// `D'(g)` with default configuration. Fails with [`Error::IndexUndefined`] when some
/// non-identity automorphism fixes every edge.
pub fn distinguishing_index(g: &Graph) -> Result<DistResult<EdgeLabeling>> {
    let config = SolverConfig::default();
    let auts = automorphisms_with_cap(g, config.aut_cap)?;
    distinguishing_index_with(g, &auts, &config)
}

pub fn distinguishing_index_with(
    g: &Graph,
    auts: &AutomorphismGroup,
    config: &SolverConfig,
) -> Result<DistResult<EdgeLabeling>> {
    if !edge_action_is_faithful(g, auts) {
        return Err(Error::IndexUndefined);
    }
    let edges = g.edges();
    let perms: Vec<Vec<u32>> = auts
        .non_identity()
        .iter()
        .map(|p| edge_action_unchecked(&edges, p).into_iter().map(|x| x as u32).collect())
        .collect();
    let (value, labels) = search::minimize(edges.len(), &perms, config)?;
    let witness = EdgeLabeling::from_indexed(g, &labels)?;
    debug_assert!(is_distinguishing_edge(g, auts, &witness).unwrap());
    Ok(DistResult { value, witness })
}
