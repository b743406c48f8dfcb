//! Ordered equitable partitions, represented as a color per vertex.
//!
//! Colors are `0..k` and their order is isomorphism invariant: refinement sorts
//! cells by (old color, multiset of neighbor colors), so for every bijection `σ`
//! we have `refine(σ·p) = σ·refine(p)`.

use crate::graph::{bits, Graph};

pub(crate) type Coloring = Vec<u32>;

pub(crate) fn cell_count(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Refines `colors` in place to the coarsest equitable partition below it.
pub(crate) fn refine(g: &Graph, colors: &mut Coloring) {
    let n = g.n();
    if n == 0 {
        return;
    }
    let mut cells = cell_count(colors);
    let mut sigs: Vec<(Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut sig = Vec::with_capacity(1 + g.degree(v));
            sig.push(colors[v]);
            let start = sig.len();
            sig.extend(bits(g.neighbor_mask(v)).map(|w| colors[w]));
            sig[start..].sort_unstable();
            sigs.push((sig, v));
        }
        sigs.sort_unstable();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                next += 1;
            }
            colors[sigs[i].1] = next;
        }
        let now = next as usize + 1;
        if now == cells {
            return;
        }
        cells = now;
    }
}

/// Splits `v` off its cell, placing the singleton first, then refines.
pub(crate) fn individualize(g: &Graph, colors: &Coloring, v: usize) -> Coloring {
    let c = colors[v];
    let mut out: Coloring =
        colors.iter().enumerate().map(|(x, &cx)| if cx > c || (cx == c && x != v) { cx + 1 } else { cx }).collect();
    refine(g, &mut out);
    out
}

/// Equitable refinement of the unit partition.
pub(crate) fn initial(g: &Graph) -> Coloring {
    let mut colors = vec![0; g.n()];
    refine(g, &mut colors);
    colors
}

/// Cell sizes plus the quotient matrix (neighbors of a cell representative in each cell).
/// Equal for two colorings whenever one is the image of the other under an automorphism.
pub(crate) fn quotient_signature(g: &Graph, colors: &Coloring) -> Vec<u32> {
    let k = cell_count(colors);
    let mut sizes = vec![0u32; k];
    let mut rep = vec![usize::MAX; k];
    for (v, &c) in colors.iter().enumerate() {
        sizes[c as usize] += 1;
        if rep[c as usize] == usize::MAX {
            rep[c as usize] = v;
        }
    }
    let mut sig = sizes;
    for &r in &rep {
        let mut row = vec![0u32; k];
        for w in bits(g.neighbor_mask(r)) {
            row[colors[w] as usize] += 1;
        }
        sig.extend(row);
    }
    sig
}

/// First non-singleton cell, as `(color, members)`.
pub(crate) fn target_cell(colors: &Coloring) -> Option<(u32, Vec<usize>)> {
    let k = cell_count(colors);
    let mut sizes = vec![0usize; k];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let c = sizes.iter().position(|&s| s > 1)? as u32;
    Some((c, (0..colors.len()).filter(|&v| colors[v] == c).collect()))
}
