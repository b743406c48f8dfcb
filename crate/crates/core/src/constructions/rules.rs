use std::collections::BTreeMap;

use super::{finish, fresh_labels, require_distinguishing, ConstructionOutcome, Labeling, Rule, RuleFamily};
use crate::error::{Error, Result};
use crate::graph::{structural_sets, Edge, Graph, Site};
use crate::solver::{EdgeLabeling, VertexLabeling};

fn compact(x: usize, removed: usize) -> usize {
    Graph::compacted_index(x, removed)
}

fn compact_edge(e: Edge, removed: usize) -> Edge {
    Edge::new(compact(e.u(), removed), compact(e.v(), removed)).expect("edge avoids the removed vertex")
}

/// Inverse of [`Graph::compacted_index`].
fn expand(x: usize, removed: usize) -> usize {
    if x >= removed {
        x + 1
    } else {
        x
    }
}

fn check_mode(rule: Rule, base: &Labeling) -> Result<()> {
    if base.mode() != rule.mode() {
        return Err(Error::NotApplicable(format!("{rule} expects a {:?} labeling", rule.mode()).to_lowercase()));
    }
    Ok(())
}

fn vertex_labels(base: &Labeling) -> &[u32] {
    match base {
        Labeling::Vertex(l) => l.labels(),
        Labeling::Edge(_) => unreachable!("mode checked"),
    }
}

fn edge_labels(base: &Labeling) -> &EdgeLabeling {
    match base {
        Labeling::Edge(l) => l,
        Labeling::Vertex(_) => unreachable!("mode checked"),
    }
}

fn edge_label(base: &EdgeLabeling, e: Edge) -> u32 {
    base.get(&e).expect("base covers every edge of its graph")
}

fn edge_labeling(g: &Graph, mut label: impl FnMut(Edge) -> u32) -> Labeling {
    Labeling::Edge(EdgeLabeling(g.edges().into_iter().map(|e| (e, label(e))).collect::<BTreeMap<_, _>>()))
}

fn adjacent_twins(g: &Graph, v: usize, w: usize) -> bool {
    g.neighbor_mask(v) & !(1 << w) == g.neighbor_mask(w) & !(1 << v)
}

/// Distance between disjoint copies of the base alphabet: `max - min + 1`.
fn shift_of(base: &Labeling) -> u32 {
    let values = base.values();
    let lo = values.iter().copied().min().unwrap_or(0);
    let hi = values.iter().copied().max().unwrap_or(0);
    hi - lo + 1
}

/// Shared prologue: rule kind, site, base mode, and base validity on its own graph.
fn prepare(rule: Rule, accepted: bool, g: &Graph, site: Site, base: &Labeling, aut_cap: usize) -> Result<Graph> {
    if !accepted {
        return Err(Error::NotApplicable(format!("{rule} is handled by a different construction")));
    }
    rule.check_site(g, site)?;
    check_mode(rule, base)?;
    let derived = rule.op().apply(g, site)?;
    require_distinguishing(if rule.base_on_derived() { &derived } else { g }, base, aut_cap)?;
    Ok(derived)
}

/// Extends a distinguishing labeling of the derived graph to `g` with one fresh label.
///
/// For a contracted edge `e = vw` the vertex rule labels both `v` and `w` fresh
/// and the edge rule labels only `e` fresh, with every edge `vx` or `wx`
/// inheriting the label of the merged edge. When `v` and `w` are adjacent
/// twins, swapping them would survive that, so `w` alone carries the fresh
/// label (vertex rule) or every edge at `w` does (edge rule), and `v` takes
/// the merged vertex's labels.
pub fn lift_with_fresh_label(
    rule: Rule,
    g: &Graph,
    site: Site,
    base: &Labeling,
    aut_cap: usize,
) -> Result<ConstructionOutcome> {
    let derived = prepare(rule, rule.family() == RuleFamily::Lift, g, site, base, aut_cap)?;
    let fresh = fresh_labels(base, 1)[0];
    let labeling = match (rule, site) {
        (Rule::LiftVdel | Rule::LiftVcon, Site::Vertex(v)) => {
            let b = vertex_labels(base);
            Labeling::Vertex(VertexLabeling(
                (0..g.n()).map(|x| if x == v { fresh } else { b[compact(x, v)] }).collect(),
            ))
        }
        (Rule::LiftOdotV, Site::Vertex(v)) => {
            let mut l = vertex_labels(base).to_vec();
            l[v] = fresh;
            Labeling::Vertex(VertexLabeling(l))
        }
        (Rule::SpanningSub, Site::Vertex(v)) => {
            let b = edge_labels(base);
            edge_labeling(g, |e| if e.contains(v) { fresh } else { edge_label(b, compact_edge(e, v)) })
        }
        (Rule::LiftEdelE, Site::Edge(e0)) => {
            let b = edge_labels(base);
            edge_labeling(g, |e| if e == e0 { fresh } else { edge_label(b, e) })
        }
        (Rule::LiftOdotE, Site::Vertex(_)) => {
            let b = edge_labels(base);
            edge_labeling(g, |e| if derived.has_edge(e.u(), e.v()) { edge_label(b, e) } else { fresh })
        }
        (Rule::LiftEconV, Site::Edge(e0)) => {
            let (v, w) = e0.endpoints();
            let b = vertex_labels(base);
            let twins = adjacent_twins(g, v, w);
            let l = (0..g.n())
                .map(|x| match x {
                    _ if x == w => fresh,
                    _ if x == v && !twins => fresh,
                    _ => b[compact(x, w)],
                })
                .collect();
            Labeling::Vertex(VertexLabeling(l))
        }
        (Rule::LiftEconE, Site::Edge(e0)) => {
            let (v, w) = e0.endpoints();
            let b = edge_labels(base);
            let twins = adjacent_twins(g, v, w);
            // the merged vertex keeps index v, so (w, x) lands on (v, x)
            let merged = |x: usize| if x == w { v } else { compact(x, w) };
            edge_labeling(g, |e| {
                if e == e0 || (twins && e.contains(w)) {
                    fresh
                } else {
                    edge_label(b, Edge::new(merged(e.u()), merged(e.v())).unwrap())
                }
            })
        }
        _ => unreachable!("site kind checked against rule"),
    };
    let claimed = base.distinct_count() + 1;
    finish(rule, site, g, g, base.clone(), labeling, claimed, aut_cap)
}

/// Pushes a distinguishing labeling of `g` to the derived graph by shifting the
/// labels of a designated set into disjoint copies of the base alphabet.
pub fn push_with_shift(
    rule: Rule,
    g: &Graph,
    site: Site,
    base: &Labeling,
    aut_cap: usize,
) -> Result<ConstructionOutcome> {
    let derived = prepare(rule, rule.family() == RuleFamily::Push && rule != Rule::PushEdelE, g, site, base, aut_cap)?;
    let s = shift_of(base);
    let (labeling, factor) = match (rule, site) {
        (Rule::PushVdel, Site::Vertex(v)) => {
            let b = vertex_labels(base);
            let nv = g.neighbor_mask(v);
            let l = (0..g.n()).filter(|&x| x != v).map(|x| if nv >> x & 1 == 1 { b[x] + s } else { b[x] }).collect();
            (Labeling::Vertex(VertexLabeling(l)), 2)
        }
        (Rule::PushVdelE, Site::Vertex(v)) => {
            let b = edge_labels(base);
            let nv = g.neighbor_mask(v);
            let l = edge_labeling(&derived, |e| {
                let orig = Edge::new(expand(e.u(), v), expand(e.v(), v)).unwrap();
                let touches = (nv >> orig.u() | nv >> orig.v()) & 1 == 1;
                edge_label(b, orig) + if touches { s } else { 0 }
            });
            (l, 2)
        }
        (Rule::PushEconV, Site::Edge(e0)) => {
            let (v, w) = e0.endpoints();
            let sets = structural_sets(g, v, Some(w))?;
            let b = vertex_labels(base);
            let l = (0..g.n())
                .filter(|&x| x != w)
                .map(|x| {
                    let mut l = b[x];
                    if sets.deg1_nbrs.contains(&x) {
                        l += s;
                    }
                    if sets.common_nbrs.contains(&x) {
                        l += 2 * s;
                    }
                    l
                })
                .collect();
            (Labeling::Vertex(VertexLabeling(l)), 3)
        }
        (Rule::PushEconE, Site::Edge(e0)) => {
            let (v, w) = e0.endpoints();
            let sets = structural_sets(g, v, Some(w))?;
            let b = edge_labels(base);
            let shifted = |e: Edge| {
                let mut l = edge_label(b, e);
                if sets.pendant_edges.contains(&e) {
                    l += s;
                }
                if sets.common_edges.contains(&e) {
                    l += 2 * s;
                }
                l
            };
            let l = edge_labeling(&derived, |e| {
                let (x, y) = (expand(e.u(), w), expand(e.v(), w));
                if x != v && y != v {
                    return shifted(Edge::new(x, y).unwrap());
                }
                let other = if x == v { y } else { x };
                // merged edges keep the label from the v side when both existed
                if g.has_edge(v, other) {
                    shifted(Edge::new(v, other).unwrap())
                } else {
                    shifted(Edge::new(w, other).unwrap())
                }
            });
            (l, 3)
        }
        _ => unreachable!("site kind checked against rule"),
    };
    let claimed = factor * base.distinct_count();
    finish(rule, site, g, &derived, base.clone(), labeling, claimed, aut_cap)
}

/// Two-fresh-label constructions across an edge deletion.
///
/// `g` is always the graph containing `e`. The vertex rules give `v` and `w`
/// one fresh label each, with the base on `g` (towards `g - e`) or on `g - e`
/// (towards `g`). The edge rule relabels every edge at `v` other than `e` with
/// one fresh label and every edge at `w` other than `e` with another.
pub fn relabel_endpoints(
    rule: Rule,
    g: &Graph,
    site: Site,
    base: &Labeling,
    aut_cap: usize,
) -> Result<ConstructionOutcome> {
    let derived =
        prepare(rule, rule.family() == RuleFamily::Relabel || rule == Rule::PushEdelE, g, site, base, aut_cap)?;
    let Site::Edge(e0) = site else { unreachable!("site kind checked against rule") };
    let (v, w) = e0.endpoints();
    let fresh = fresh_labels(base, 2);
    let labeling = match rule {
        Rule::RelabelEndpointsV | Rule::RelabelEndpointsVInv => {
            let mut l = vertex_labels(base).to_vec();
            l[v] = fresh[0];
            l[w] = fresh[1];
            Labeling::Vertex(VertexLabeling(l))
        }
        Rule::PushEdelE => {
            let b = edge_labels(base);
            edge_labeling(&derived, |e| match () {
                _ if e.contains(v) => fresh[0],
                _ if e.contains(w) => fresh[1],
                _ => edge_label(b, e),
            })
        }
        _ => unreachable!("family checked"),
    };
    let target = if rule.base_on_derived() { g } else { &derived };
    let claimed = base.distinct_count() + 2;
    finish(rule, site, g, target, base.clone(), labeling, claimed, aut_cap)
}

/// Edge labeling of `g ∘ v` from a distinguishing edge labeling of `g`.
///
/// Base labels are renumbered to `1..=k` and the clique on `N(v)` uses `{0, 1}`:
/// with neighbors `w_1 < ... < w_m`, the path `w_1 w_2 ... w_m` gets 1 and the
/// other clique edges get 0. With exactly two neighbors `w, w'`, the edge `ww'`
/// gets 1 and `zw` gets 0, where `z` is the least outside neighbor of the first
/// of `w, w'` that has one. When `v` is adjacent to every other vertex, base
/// labels are kept and the new clique edges share one fresh label.
pub fn clique_edge_construction(
    g: &Graph,
    v: usize,
    base: &EdgeLabeling,
    aut_cap: usize,
) -> Result<ConstructionOutcome> {
    let rule = Rule::CliqueVconE;
    let site = Site::Vertex(v);
    let base_l = Labeling::Edge(base.clone());
    let derived = prepare(rule, true, g, site, &base_l, aut_cap)?;
    let nv = g.neighbor_mask(v);
    let orig = |e: Edge| Edge::new(expand(e.u(), v), expand(e.v(), v)).unwrap();

    let labeling = if g.degree(v) + 1 == g.n() {
        let fresh = fresh_labels(&base_l, 1)[0];
        edge_labeling(&derived, |e| {
            let o = orig(e);
            if g.has_edge(o.u(), o.v()) {
                edge_label(base, o)
            } else {
                fresh
            }
        })
    } else {
        let mut values: Vec<u32> = base.0.values().copied().collect();
        values.sort_unstable();
        values.dedup();
        let rank = |l: u32| values.binary_search(&l).unwrap() as u32 + 1;

        let members: Vec<usize> = (0..g.n()).filter(|&x| nv >> x & 1 == 1).collect();
        let mut special: BTreeMap<Edge, u32> = BTreeMap::new();
        let in_clique = |o: Edge| nv >> o.u() & 1 == 1 && nv >> o.v() & 1 == 1;
        if members.len() == 2 {
            let (a, b) = (members[0], members[1]);
            special.insert(Edge::new(a, b).unwrap(), 1);
            let outside = |x: usize, y: usize| (0..g.n()).find(|&z| z != v && z != y && g.has_edge(x, z));
            if let Some((x, z)) = outside(a, b).map(|z| (a, z)).or_else(|| outside(b, a).map(|z| (b, z))) {
                special.insert(Edge::new(x, z).unwrap(), 0);
            }
        } else {
            for pair in members.windows(2) {
                special.insert(Edge::new(pair[0], pair[1]).unwrap(), 1);
            }
        }
        edge_labeling(&derived, |e| {
            let o = orig(e);
            if let Some(&l) = special.get(&o) {
                l
            } else if in_clique(o) {
                0
            } else {
                rank(edge_label(base, o))
            }
        })
    };
    let claimed = base.distinct_count() + 1;
    finish(rule, site, g, &derived, base_l, labeling, claimed, aut_cap)
}
