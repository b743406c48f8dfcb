//! Canonical codes for isomorphism rejection.
//!
//! The code of `G` is the lexicographically smallest graph6 string over the
//! vertex orderings reached by individualization-refinement from the equitable
//! partition. A cell whose members are pairwise twins is individualized at its
//! first member only, since swapping two twins is an automorphism that fixes
//! the current partition.

use std::fmt;

use super::refine::{self, Coloring};
use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

/// Default vertex-count bound for [`canonical_form`].
pub const DEFAULT_CANON_BOUND: usize = 10;

/// Byte string equal for two graphs iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("graph6 is ASCII"))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    canonical_form_bounded(g, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<CanonicalCode> {
    Ok(canonical_graph_bounded(g, bound)?.1)
}

/// The canonical relabeling of `g` together with its code.
pub fn canonical_graph(g: &Graph) -> Result<(Graph, CanonicalCode)> {
    canonical_graph_bounded(g, DEFAULT_CANON_BOUND)
}

fn canonical_graph_bounded(g: &Graph, bound: usize) -> Result<(Graph, CanonicalCode)> {
    if g.n() > bound {
        return Err(Error::TooLarge { n: g.n(), limit: bound });
    }
    let mut best: Option<(Vec<u8>, Graph)> = None;
    search(g, &refine::initial(g), &mut best);
    let (code, graph) = best.expect("search visits at least one leaf");
    Ok((graph, CanonicalCode(code)))
}

fn search(g: &Graph, colors: &Coloring, best: &mut Option<(Vec<u8>, Graph)>) {
    let Some((_, cell)) = refine::target_cell(colors) else {
        let order: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let h = g.relabel(&order);
        let code = graph6::encode(&h);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, h));
        }
        return;
    };
    let branches = if all_twins(g, &cell) { &cell[..1] } else { &cell[..] };
    for &v in branches {
        search(g, &refine::individualize(g, colors, v), best);
    }
}

fn all_twins(g: &Graph, cell: &[usize]) -> bool {
    cell.iter()
        .enumerate()
        .all(|(i, &a)| cell[i + 1..].iter().all(|&b| g.neighbor_mask(a) & !(1 << b) == g.neighbor_mask(b) & !(1 << a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::next_permutation;
    use crate::graph::{make_family, FamilyKind, FamilySpec};
    use std::collections::HashSet;

    #[test]
    fn relabelings_of_p3_agree() {
        let p3 = make_family(FamilySpec::new(FamilyKind::Path, 3)).unwrap();
        let base = canonical_form(&p3).unwrap();
        let mut perm = vec![0, 1, 2];
        loop {
            assert_eq!(canonical_form(&p3.relabel(&perm)).unwrap(), base);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let k3 = make_family(FamilySpec::new(FamilyKind::Complete, 3)).unwrap();
        assert_ne!(canonical_form(&k3).unwrap(), base);
    }

    #[test]
    fn dedup_of_all_labeled_five_vertex_graphs() {
        // 2^10 labeled graphs on 5 vertices: 34 classes, 21 of them connected.
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let mut all = HashSet::new();
        let mut connected = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            let g = Graph::from_edges(5, edges).unwrap();
            let code = canonical_form(&g).unwrap();
            if g.is_connected() {
                connected.insert(code.clone());
            }
            all.insert(code);
        }
        assert_eq!(all.len(), 34);
        assert_eq!(connected.len(), 21);
    }

    #[test]
    fn canonical_graph_has_its_own_code() {
        let g = make_family(FamilySpec::new(FamilyKind::Spider, 3)).unwrap();
        let (h, code) = canonical_graph(&g).unwrap();
        assert_eq!(code.to_string(), crate::graph::to_graph6(&h).unwrap());
        assert_eq!(canonical_form(&h).unwrap(), code);
    }

    #[test]
    fn bound_is_enforced() {
        let g = Graph::empty(11).unwrap();
        assert!(canonical_form(&g).is_err());
        assert!(canonical_form_bounded(&g, 11).is_ok());
    }
}
