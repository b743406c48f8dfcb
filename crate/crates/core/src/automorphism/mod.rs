//! Explicit automorphism groups.
//!
//! Groups are enumerated element by element with an individualization-refinement
//! search run in lockstep on a domain and an image partition. Every leaf is
//! verified against the adjacency before it is accepted. A filtered `n!` scan is
//! kept as the reference path for small graphs.

mod canon;
mod refine;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use canon::{canonical_form, canonical_form_bounded, canonical_graph, CanonicalCode, DEFAULT_CANON_BOUND};

/// Default ceiling on `|Aut(G)|`.
pub const DEFAULT_AUT_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_AUT_CAP`].
pub const AUT_CAP_ENV: &str = "DISTING_AUT_CAP";

/// Group-order cap from `DISTING_AUT_CAP`, falling back to the default.
pub fn aut_cap_from_env() -> usize {
    std::env::var(AUT_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_AUT_CAP)
}

/// A bijection on `0..n`; `image[v]` is the image of `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, e.g. `(0 1)(2 4 3)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.image.len()];
        let mut any = false;
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            any = true;
            write!(f, "({start}")?;
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                write!(f, " {x}")?;
                seen[x] = true;
                x = self.image[x];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn from_vec(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("{image:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().enumerate().filter(|(x, y)| x != *y).map(|(x, _)| x)
    }

    /// True iff `self` maps edges to edges and non-edges to non-edges.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.degree() == g.n()
            && (0..g.n()).all(|v| {
                let mut img = 0u64;
                for w in g.neighbors(v) {
                    img |= 1 << self.image[w];
                }
                img == g.neighbor_mask(self.image[v])
            })
    }
}

/// All automorphisms of a graph, identity first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn non_identity(&self) -> &[Permutation] {
        &self.elements[1..]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Orbits of the natural action, each sorted, listed by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut orbit_of = vec![usize::MAX; self.n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            if orbit_of[v] != usize::MAX {
                continue;
            }
            let mut orbit: Vec<usize> = self.elements.iter().map(|p| p.apply(v)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &x in &orbit {
                orbit_of[x] = orbits.len();
            }
            orbits.push(orbit);
        }
        orbits
    }
}

/// `Aut(g)` with the cap taken from the environment.
pub fn automorphisms(g: &Graph) -> Result<AutomorphismGroup> {
    automorphisms_with_cap(g, aut_cap_from_env())
}

pub fn automorphisms_with_cap(g: &Graph, cap: usize) -> Result<AutomorphismGroup> {
    let n = g.n();
    let root = refine::initial(g);
    let mut elements = Vec::new();
    let mut search = AutSearch { g, cap, out: &mut elements };
    search.descend(&root, &root)?;
    // the leftmost branch always maps each individualized vertex to itself
    debug_assert!(elements[0].is_identity());
    Ok(AutomorphismGroup { n, elements })
}

struct AutSearch<'a> {
    g: &'a Graph,
    cap: usize,
    out: &'a mut Vec<Permutation>,
}

impl AutSearch<'_> {
    fn descend(&mut self, dom: &refine::Coloring, img: &refine::Coloring) -> Result<()> {
        let Some((_, cell)) = refine::target_cell(dom) else {
            let n = self.g.n();
            let mut by_color = vec![0; n];
            for (w, &c) in img.iter().enumerate() {
                by_color[c as usize] = w;
            }
            let image = (0..n).map(|v| by_color[dom[v] as usize]).collect();
            let p = Permutation { image };
            if p.is_automorphism_of(self.g) {
                if self.out.len() >= self.cap {
                    return Err(Error::AutCapExceeded { cap: self.cap });
                }
                self.out.push(p);
            }
            return Ok(());
        };
        let v = cell[0];
        let c = dom[v];
        let dom_next = refine::individualize(self.g, dom, v);
        let dom_sig = refine::quotient_signature(self.g, &dom_next);
        for w in (0..img.len()).filter(|&w| img[w] == c) {
            let img_next = refine::individualize(self.g, img, w);
            if refine::quotient_signature(self.g, &img_next) == dom_sig {
                self.descend(&dom_next, &img_next)?;
            }
        }
        Ok(())
    }
}

/// Reference path: every one of the `n!` permutations, filtered by adjacency.
pub fn automorphisms_brute_force(g: &Graph) -> Result<AutomorphismGroup> {
    const LIMIT: usize = 9;
    let n = g.n();
    if n > LIMIT {
        return Err(Error::TooLarge { n, limit: LIMIT });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut elements = Vec::new();
    loop {
        let p = Permutation { image: perm.clone() };
        if p.is_automorphism_of(g) {
            elements.push(p);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    // lexicographic order starts at the identity
    Ok(AutomorphismGroup { n, elements })
}

/// Advances to the next permutation in lexicographic order; false after the last.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Orbits of `Aut(g)` on vertices.
pub fn vertex_orbits(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Ok(automorphisms(g)?.orbits())
}

/// The permutation of `g.edges()` induced by the automorphism `p`:
/// entry `i` is the index of the image of edge `i`.
pub fn induced_edge_action(g: &Graph, p: &Permutation) -> Result<Vec<usize>> {
    if !p.is_automorphism_of(g) {
        return Err(Error::NotAutomorphism);
    }
    Ok(edge_action_unchecked(&g.edges(), p))
}

pub(crate) fn edge_action_unchecked(edges: &[Edge], p: &Permutation) -> Vec<usize> {
    edges
        .iter()
        .map(|e| {
            let img = Edge::new(p.apply(e.u()), p.apply(e.v())).expect("bijection keeps endpoints distinct");
            edges.binary_search(&img).expect("automorphism maps edges to edges")
        })
        .collect()
}

/// True iff no non-identity automorphism fixes every edge.
pub fn edge_action_is_faithful(g: &Graph, group: &AutomorphismGroup) -> bool {
    let edges = g.edges();
    group.non_identity().iter().all(|p| edge_action_unchecked(&edges, p).iter().enumerate().any(|(i, &j)| i != j))
}
