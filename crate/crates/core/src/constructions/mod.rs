//! Executable versions of the labelings built in the bound proofs.
//!
//! A rule takes a distinguishing labeling of one side of an operation (the
//! "base") and builds a labeling of the other side. The result is always
//! re-checked against the automorphism group of the target graph; a failed
//! check carries the preserving automorphism as a certificate.

mod rules;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::automorphism::{automorphisms_with_cap, AutomorphismGroup, Permutation};
use crate::error::{Error, Result};
use crate::graph::{to_graph6, Graph, OpKind, Site};
use crate::solver::{
    distinguishing_index_with, distinguishing_number_with, preserving_edge_automorphism,
    preserving_vertex_automorphism, EdgeLabeling, Mode, SolverConfig, VertexLabeling,
};

pub use rules::{clique_edge_construction, lift_with_fresh_label, push_with_shift, relabel_endpoints};

/// A vertex or an edge labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Labeling {
    Vertex(VertexLabeling),
    Edge(EdgeLabeling),
}

impl Labeling {
    pub fn mode(&self) -> Mode {
        match self {
            Labeling::Vertex(_) => Mode::Vertex,
            Labeling::Edge(_) => Mode::Edge,
        }
    }

    pub fn distinct_count(&self) -> usize {
        match self {
            Labeling::Vertex(l) => l.distinct_count(),
            Labeling::Edge(l) => l.distinct_count(),
        }
    }

    fn values(&self) -> Vec<u32> {
        match self {
            Labeling::Vertex(l) => l.labels().to_vec(),
            Labeling::Edge(l) => l.0.values().copied().collect(),
        }
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Labeling::Vertex(l) => l.fmt(f),
            Labeling::Edge(l) => l.fmt(f),
        }
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which proof step a rule comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleFamily {
    Lift,
    Push,
    Relabel,
    Clique,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    LiftVdel,
    PushVdel,
    PushVdelE,
    SpanningSub,
    RelabelEndpointsV,
    RelabelEndpointsVInv,
    LiftEdelE,
    PushEdelE,
    LiftOdotV,
    LiftOdotE,
    LiftVcon,
    CliqueVconE,
    LiftEconV,
    LiftEconE,
    PushEconV,
    PushEconE,
}

impl Rule {
    pub const ALL: [Rule; 16] = [
        Rule::LiftVdel,
        Rule::PushVdel,
        Rule::PushVdelE,
        Rule::SpanningSub,
        Rule::RelabelEndpointsV,
        Rule::RelabelEndpointsVInv,
        Rule::LiftEdelE,
        Rule::PushEdelE,
        Rule::LiftOdotV,
        Rule::LiftOdotE,
        Rule::LiftVcon,
        Rule::CliqueVconE,
        Rule::LiftEconV,
        Rule::LiftEconE,
        Rule::PushEconV,
        Rule::PushEconE,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::LiftVdel => "LIFT-VDEL",
            Rule::PushVdel => "PUSH-VDEL",
            Rule::PushVdelE => "PUSH-VDEL-E",
            Rule::SpanningSub => "SPANNING-SUB",
            Rule::RelabelEndpointsV => "RELABEL-ENDPOINTS-V",
            Rule::RelabelEndpointsVInv => "RELABEL-ENDPOINTS-V-INV",
            Rule::LiftEdelE => "LIFT-EDEL-E",
            Rule::PushEdelE => "PUSH-EDEL-E",
            Rule::LiftOdotV => "LIFT-ODOT-V",
            Rule::LiftOdotE => "LIFT-ODOT-E",
            Rule::LiftVcon => "LIFT-VCON",
            Rule::CliqueVconE => "CLIQUE-VCON-E",
            Rule::LiftEconV => "LIFT-ECON-V",
            Rule::LiftEconE => "LIFT-ECON-E",
            Rule::PushEconV => "PUSH-ECON-V",
            Rule::PushEconE => "PUSH-ECON-E",
        }
    }

    /// The operation relating the two graphs involved.
    pub fn op(self) -> OpKind {
        match self {
            Rule::LiftVdel | Rule::PushVdel | Rule::PushVdelE | Rule::SpanningSub => OpKind::RemoveVertex,
            Rule::RelabelEndpointsV | Rule::RelabelEndpointsVInv | Rule::LiftEdelE | Rule::PushEdelE => {
                OpKind::RemoveEdge
            }
            Rule::LiftOdotV | Rule::LiftOdotE => OpKind::Odot,
            Rule::LiftVcon | Rule::CliqueVconE => OpKind::ContractVertex,
            Rule::LiftEconV | Rule::LiftEconE | Rule::PushEconV | Rule::PushEconE => OpKind::ContractEdge,
        }
    }

    pub fn mode(self) -> Mode {
        match self {
            Rule::LiftVdel
            | Rule::PushVdel
            | Rule::RelabelEndpointsV
            | Rule::RelabelEndpointsVInv
            | Rule::LiftOdotV
            | Rule::LiftVcon
            | Rule::LiftEconV
            | Rule::PushEconV => Mode::Vertex,
            _ => Mode::Edge,
        }
    }

    pub fn family(self) -> RuleFamily {
        match self {
            Rule::PushVdel | Rule::PushVdelE | Rule::PushEdelE | Rule::PushEconV | Rule::PushEconE => RuleFamily::Push,
            Rule::RelabelEndpointsV | Rule::RelabelEndpointsVInv => RuleFamily::Relabel,
            Rule::CliqueVconE => RuleFamily::Clique,
            _ => RuleFamily::Lift,
        }
    }

    /// True when the base lives on the derived graph and the result on `g`.
    pub fn base_on_derived(self) -> bool {
        matches!(
            self,
            Rule::LiftVdel
                | Rule::SpanningSub
                | Rule::RelabelEndpointsVInv
                | Rule::LiftEdelE
                | Rule::LiftOdotV
                | Rule::LiftOdotE
                | Rule::LiftVcon
                | Rule::LiftEconV
                | Rule::LiftEconE
        )
    }

    pub fn sites(self, g: &Graph) -> Vec<Site> {
        self.op().sites(g)
    }

    pub(crate) fn check_site(self, g: &Graph, site: Site) -> Result<()> {
        let ok = match site {
            Site::Vertex(v) => !self.op().on_edges() && g.check_vertex(v).is_ok(),
            Site::Edge(e) => self.op().on_edges() && g.check_edge(e).is_ok(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::RuleSiteMismatch { rule: self.id().to_string(), site: site.to_string() })
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rule::ALL
            .into_iter()
            .find(|r| r.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown rule '{s}'")))
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutcomeStatus {
    Verified,
    Refuted,
    /// The derived graph has a non-identity automorphism fixing every edge.
    UndefinedTarget,
}

impl fmt::Display for OutcomeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeStatus::Verified => "verified",
            OutcomeStatus::Refuted => "refuted",
            OutcomeStatus::UndefinedTarget => "undefined-target",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionOutcome {
    pub rule: Rule,
    pub site: Site,
    pub graph6: String,
    pub target_graph6: String,
    pub base: Option<Labeling>,
    pub labeling: Option<Labeling>,
    pub labels_used: usize,
    pub claimed_bound: usize,
    pub status: OutcomeStatus,
    pub verified: bool,
    #[serde(serialize_with = "serialize_certificate")]
    pub certificate: Option<Permutation>,
    pub finding: Option<String>,
}

fn serialize_certificate<S: Serializer>(p: &Option<Permutation>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}

impl ConstructionOutcome {
    pub fn is_finding(&self) -> bool {
        self.status != OutcomeStatus::Verified
    }
}

/// Every `Graph` fits the short graph6 form.
pub(crate) fn g6(g: &Graph) -> String {
    to_graph6(g).expect("vertex count within graph6 short form")
}

/// Checks `labeling` on `target` and packages the outcome.
#[allow(clippy::too_many_arguments)]
pub(crate) fn finish(
    rule: Rule,
    site: Site,
    g: &Graph,
    target: &Graph,
    base: Labeling,
    labeling: Labeling,
    claimed_bound: usize,
    aut_cap: usize,
) -> Result<ConstructionOutcome> {
    let auts = automorphisms_with_cap(target, aut_cap)?;
    let certificate = preserving(target, &auts, &labeling)?;
    let labels_used = labeling.distinct_count();
    let mut status = if certificate.is_none() { OutcomeStatus::Verified } else { OutcomeStatus::Refuted };
    let mut finding = None;
    if let (Some(p), Labeling::Edge(_)) = (&certificate, &labeling) {
        if edge_trivial(target, p) {
            status = OutcomeStatus::UndefinedTarget;
            finding = Some(format!("edge action of {} is not faithful", g6(target)));
        }
    }
    if status == OutcomeStatus::Refuted {
        finding = Some(format!(
            "{rule} at {site} on {}: automorphism {} preserves the constructed labeling",
            g6(g),
            certificate.as_ref().unwrap()
        ));
    } else if status == OutcomeStatus::Verified && labels_used > claimed_bound {
        finding = Some(format!("{rule} at {site}: {labels_used} labels exceed the claimed {claimed_bound}"));
    }
    Ok(ConstructionOutcome {
        rule,
        site,
        graph6: g6(g),
        target_graph6: g6(target),
        base: Some(base),
        labeling: Some(labeling),
        labels_used,
        claimed_bound,
        verified: status == OutcomeStatus::Verified,
        status,
        certificate,
        finding,
    })
}

fn preserving(g: &Graph, auts: &AutomorphismGroup, labeling: &Labeling) -> Result<Option<Permutation>> {
    Ok(match labeling {
        Labeling::Vertex(l) => preserving_vertex_automorphism(g, auts, l)?.cloned(),
        Labeling::Edge(l) => preserving_edge_automorphism(g, auts, l)?.cloned(),
    })
}

/// True when `p` maps every edge of `g` to itself.
fn edge_trivial(g: &Graph, p: &Permutation) -> bool {
    g.edges().iter().all(|e| {
        let (a, b) = (p.apply(e.u()), p.apply(e.v()));
        (a.min(b), a.max(b)) == e.endpoints()
    })
}

/// Errors unless `base` distinguishes `source`.
pub(crate) fn require_distinguishing(source: &Graph, base: &Labeling, aut_cap: usize) -> Result<()> {
    let auts = automorphisms_with_cap(source, aut_cap)?;
    if preserving(source, &auts, base)?.is_some() {
        return Err(Error::BaseNotDistinguishing);
    }
    Ok(())
}

/// Smallest `k` non-negative integers not used by `base`.
pub(crate) fn fresh_labels(base: &Labeling, k: usize) -> Vec<u32> {
    let mut used = base.values();
    used.sort_unstable();
    used.dedup();
    (0u32..).filter(|x| used.binary_search(x).is_err()).take(k).collect()
}

/// Applies `rule` at `site`, computing a minimum distinguishing base with the solver.
pub fn construct(rule: Rule, g: &Graph, site: Site, config: &SolverConfig) -> Result<ConstructionOutcome> {
    rule.check_site(g, site)?;
    let derived = rule.op().apply(g, site)?;
    let source = if rule.base_on_derived() { &derived } else { g };
    let auts = automorphisms_with_cap(source, config.aut_cap)?;
    let base = match rule.mode() {
        Mode::Vertex => Labeling::Vertex(distinguishing_number_with(source, &auts, config)?.witness),
        Mode::Edge => match distinguishing_index_with(source, &auts, config) {
            Ok(r) => Labeling::Edge(r.witness),
            Err(Error::IndexUndefined) => {
                let certificate = auts.non_identity().iter().find(|p| edge_trivial(source, p)).cloned();
                return Ok(ConstructionOutcome {
                    rule,
                    site,
                    graph6: g6(g),
                    target_graph6: g6(if rule.base_on_derived() { g } else { &derived }),
                    base: None,
                    labeling: None,
                    labels_used: 0,
                    claimed_bound: 0,
                    status: OutcomeStatus::UndefinedTarget,
                    verified: false,
                    certificate,
                    finding: Some(format!("edge action of {} is not faithful", g6(source))),
                });
            }
            Err(e) => return Err(e),
        },
    };
    apply_rule(rule, g, site, &base, config.aut_cap)
}

/// Applies `rule` at `site` to a caller-supplied base labeling.
pub fn apply_rule(rule: Rule, g: &Graph, site: Site, base: &Labeling, aut_cap: usize) -> Result<ConstructionOutcome> {
    match rule.family() {
        RuleFamily::Lift => lift_with_fresh_label(rule, g, site, base, aut_cap),
        RuleFamily::Push if rule == Rule::PushEdelE => relabel_endpoints(rule, g, site, base, aut_cap),
        RuleFamily::Push => push_with_shift(rule, g, site, base, aut_cap),
        RuleFamily::Relabel => relabel_endpoints(rule, g, site, base, aut_cap),
        RuleFamily::Clique => match (site, base) {
            (Site::Vertex(v), Labeling::Edge(b)) => clique_edge_construction(g, v, b, aut_cap),
            _ => Err(Error::RuleSiteMismatch { rule: rule.id().to_string(), site: site.to_string() }),
        },
    }
}

/// Every rule at every site of `g`.
pub fn all_outcomes(g: &Graph, config: &SolverConfig) -> Result<Vec<ConstructionOutcome>> {
    let mut out = Vec::new();
    for rule in Rule::ALL {
        for site in rule.sites(g) {
            out.push(construct(rule, g, site, config)?);
        }
    }
    Ok(out)
}
