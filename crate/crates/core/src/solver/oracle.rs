//! Independent reference for the solver: every restricted-growth labeling with
//! at most `d` classes, `d` ascending, checked against the automorphisms found
//! by the filtered `n!` scan.

use std::collections::HashMap;

use super::Mode;
use crate::automorphism::automorphisms_brute_force;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const ORACLE_MAX_VERTICES: usize = 6;
pub const ORACLE_MAX_EDGES: usize = 10;

/// All strings `a` of length `len` with `a[0] = 0` and `a[i] <= 1 + max(a[..i])`,
/// values below `max_blocks`, in lexicographic order.
pub fn restricted_growth_strings(len: usize, max_blocks: usize) -> impl Iterator<Item = Vec<u32>> {
    let mut current: Option<Vec<u32>> = if len == 0 || max_blocks > 0 { Some(vec![0; len]) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        current = advance(&out, max_blocks as u32);
        Some(out)
    })
}

fn advance(a: &[u32], max_blocks: u32) -> Option<Vec<u32>> {
    let mut prefix_max = vec![0u32; a.len()];
    let mut m = 0;
    for (i, &x) in a.iter().enumerate() {
        prefix_max[i] = m;
        m = m.max(x);
    }
    // rightmost position that can still grow (position 0 is pinned to 0)
    let i = (1..a.len()).rev().find(|&i| a[i] <= prefix_max[i] && a[i] + 1 < max_blocks)?;
    let mut next = a.to_vec();
    next[i] += 1;
    next[i + 1..].fill(0);
    Some(next)
}

pub fn brute_force_value(g: &Graph, mode: Mode) -> Result<usize> {
    if g.n() > ORACLE_MAX_VERTICES && mode == Mode::Vertex {
        return Err(Error::OracleBound(format!("n = {} > {ORACLE_MAX_VERTICES}", g.n())));
    }
    let edges = g.edges();
    if mode == Mode::Edge && edges.len() > ORACLE_MAX_EDGES {
        return Err(Error::OracleBound(format!("|E| = {} > {ORACLE_MAX_EDGES}", edges.len())));
    }
    let group = automorphisms_brute_force(g).map_err(|e| Error::OracleBound(e.to_string()))?;

    // Each non-identity automorphism as a permutation of the labeled domain.
    let actions: Vec<Vec<usize>> = match mode {
        Mode::Vertex => group.non_identity().iter().map(|p| p.image().to_vec()).collect(),
        Mode::Edge => {
            let index: HashMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            group
                .non_identity()
                .iter()
                .map(|p| edges.iter().map(|e| index[&Edge::new(p.apply(e.u()), p.apply(e.v())).unwrap()]).collect())
                .collect()
        }
    };
    if actions.iter().any(|a| a.iter().enumerate().all(|(i, &j)| i == j)) {
        return Err(Error::IndexUndefined);
    }
    let len = match mode {
        Mode::Vertex => g.n(),
        Mode::Edge => edges.len(),
    };
    for d in 1..=len.max(1) {
        let found =
            restricted_growth_strings(len, d).any(|lab| actions.iter().all(|a| (0..len).any(|x| lab[x] != lab[a[x]])));
        if found {
            return Ok(d);
        }
    }
    unreachable!("the all-distinct labeling is distinguishing for a faithful action")
}
