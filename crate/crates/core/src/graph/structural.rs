use serde::Serialize;

use super::{bits, Edge, Graph};
use crate::error::{Error, Result};

/// Neighborhood sets used by the shift constructions, for a site `x` (and optionally `y`).
///
/// Vertex sets are sorted ascending; edge sets follow [`Graph::edges`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralSets {
    /// `N(x)`
    pub open_nbhd: Vec<usize>,
    /// `N[x]`
    pub closed_nbhd: Vec<usize>,
    /// `V \ N[x]`
    pub closed_complement: Vec<usize>,
    /// `N_1(x)`: degree-one neighbors of `x`.
    pub deg1_nbrs: Vec<usize>,
    /// `N(x, y)`: vertices adjacent to both `x` and `y`.
    pub common_nbrs: Vec<usize>,
    /// `E_1(x)`: edges from `x` to a degree-one vertex.
    pub pendant_edges: Vec<Edge>,
    /// `E(x, y)`: edges from `x` or `y` to a member of `N(x, y)`.
    pub common_edges: Vec<Edge>,
}

pub fn structural_sets(g: &Graph, x: usize, y: Option<usize>) -> Result<StructuralSets> {
    g.check_vertex(x)?;
    let nx = g.neighbor_mask(x);
    let closed = nx | 1 << x;
    let all = (1u64 << g.n()) - 1;
    let deg1: u64 = bits(nx).filter(|&w| g.degree(w) == 1).fold(0, |m, w| m | 1 << w);

    let (common_nbrs, common_edges) = match y {
        None => (Vec::new(), Vec::new()),
        Some(y) => {
            g.check_vertex(y)?;
            if y == x {
                return Err(Error::SameVertex(x));
            }
            let common = nx & g.neighbor_mask(y);
            let mut edges: Vec<Edge> = bits(common)
                .flat_map(|c| [Edge::new(x, c), Edge::new(y, c)])
                .map(|e| e.expect("common neighbor differs from both sites"))
                .collect();
            edges.sort();
            (bits(common).collect(), edges)
        }
    };

    Ok(StructuralSets {
        open_nbhd: bits(nx).collect(),
        closed_nbhd: bits(closed).collect(),
        closed_complement: bits(all & !closed).collect(),
        deg1_nbrs: bits(deg1).collect(),
        common_nbrs,
        pendant_edges: bits(deg1).map(|w| Edge::new(x, w).unwrap()).collect(),
        common_edges,
    })
}
