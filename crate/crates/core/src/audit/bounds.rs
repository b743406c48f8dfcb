use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use serde::{Serialize, Serializer};

use crate::automorphism::{automorphisms_with_cap, canonical_form, CanonicalCode};
use crate::constructions::g6;
use crate::error::{Error, Result};
use crate::graph::{Graph, OpKind, Site};
use crate::solver::{distinguishing_index_with, distinguishing_number_with, Mode, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IneqId {
    Thm22iLo,
    Thm22iHi,
    Thm22iiLo,
    Thm22iiHi,
    Thm24,
    Thm25Lo,
    Thm25Hi,
    Thm31i,
    Thm31ii,
    Thm41i,
    Thm41ii,
    Thm44iLo,
    Thm44iHi,
    Thm44iiLo,
    Thm44iiHi,
}

impl IneqId {
    pub const ALL: [IneqId; 15] = [
        IneqId::Thm22iLo,
        IneqId::Thm22iHi,
        IneqId::Thm22iiLo,
        IneqId::Thm22iiHi,
        IneqId::Thm24,
        IneqId::Thm25Lo,
        IneqId::Thm25Hi,
        IneqId::Thm31i,
        IneqId::Thm31ii,
        IneqId::Thm41i,
        IneqId::Thm41ii,
        IneqId::Thm44iLo,
        IneqId::Thm44iHi,
        IneqId::Thm44iiLo,
        IneqId::Thm44iiHi,
    ];

    pub fn id(self) -> &'static str {
        match self {
            IneqId::Thm22iLo => "thm2.2i-lo",
            IneqId::Thm22iHi => "thm2.2i-hi",
            IneqId::Thm22iiLo => "thm2.2ii-lo",
            IneqId::Thm22iiHi => "thm2.2ii-hi",
            IneqId::Thm24 => "thm2.4",
            IneqId::Thm25Lo => "thm2.5-lo",
            IneqId::Thm25Hi => "thm2.5-hi",
            IneqId::Thm31i => "thm3.1i",
            IneqId::Thm31ii => "thm3.1ii",
            IneqId::Thm41i => "thm4.1i",
            IneqId::Thm41ii => "thm4.1ii",
            IneqId::Thm44iLo => "thm4.4i-lo",
            IneqId::Thm44iHi => "thm4.4i-hi",
            IneqId::Thm44iiLo => "thm4.4ii-lo",
            IneqId::Thm44iiHi => "thm4.4ii-hi",
        }
    }

    pub fn op(self) -> OpKind {
        use IneqId::*;
        match self {
            Thm22iLo | Thm22iHi | Thm22iiLo | Thm22iiHi => OpKind::RemoveVertex,
            Thm24 | Thm25Lo | Thm25Hi => OpKind::RemoveEdge,
            Thm31i | Thm31ii => OpKind::Odot,
            Thm41i | Thm41ii => OpKind::ContractVertex,
            Thm44iLo | Thm44iHi | Thm44iiLo | Thm44iiHi => OpKind::ContractEdge,
        }
    }

    /// Whether the inequality is about `D` or `D'`.
    pub fn mode(self) -> Mode {
        use IneqId::*;
        match self {
            Thm22iLo | Thm22iHi | Thm24 | Thm31i | Thm41i | Thm44iLo | Thm44iHi => Mode::Vertex,
            _ => Mode::Edge,
        }
    }

    /// The inequalities checked for one operation.
    pub fn for_op(op: OpKind) -> impl Iterator<Item = IneqId> {
        IneqId::ALL.into_iter().filter(move |i| i.op() == op)
    }

    /// Slack of the inequality for `before` (the value on `G`) and `after`
    /// (on the derived graph): non-negative iff it holds, zero iff tight.
    pub fn slack(self, before: usize, after: usize) -> i64 {
        let (b, a) = (before as i64, after as i64);
        use IneqId::*;
        match self {
            // b - 1 <= a
            Thm22iLo | Thm22iiLo | Thm25Lo | Thm31i | Thm31ii | Thm41i | Thm44iLo | Thm44iiLo => a - (b - 1),
            Thm22iHi | Thm22iiHi => 2 * b - a,
            Thm24 => 2 - (a - b).abs(),
            Thm25Hi | Thm41ii => b + if self == Thm25Hi { 2 } else { 1 } - a,
            Thm44iHi | Thm44iiHi => 3 * b - a,
        }
    }

    pub fn verdict(self, before: Option<usize>, after: Option<usize>) -> Verdict {
        match (before, after) {
            (Some(b), Some(a)) if self.slack(b, a) >= 0 => Verdict::Pass,
            (Some(_), Some(_)) => Verdict::Fail,
            _ => Verdict::Undefined,
        }
    }

    pub fn is_tight(self, before: Option<usize>, after: Option<usize>) -> bool {
        matches!((before, after), (Some(b), Some(a)) if self.slack(b, a) == 0)
    }
}

impl fmt::Display for IneqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for IneqId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IneqId::ALL
            .into_iter()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown inequality id '{s}'")))
    }
}

impl Serialize for IneqId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undefined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undefined => "undefined",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Deltas {
    #[serde(rename = "D")]
    pub d: Option<i64>,
    #[serde(rename = "Dp")]
    pub dp: Option<i64>,
}

/// One operation at one site of a graph, with the inequality verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub graph6: String,
    pub op_kind: OpKind,
    pub site: Site,
    #[serde(rename = "D_before")]
    pub d_before: Option<usize>,
    #[serde(rename = "D_after")]
    pub d_after: Option<usize>,
    #[serde(rename = "Dp_before")]
    pub dp_before: Option<usize>,
    #[serde(rename = "Dp_after")]
    pub dp_after: Option<usize>,
    pub deltas: Deltas,
    pub verdicts: BTreeMap<IneqId, Verdict>,
    pub tight: BTreeSet<IneqId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl BoundCheck {
    fn new(graph6: String, op: OpKind, site: Site, before: Values, after: Values, error: Option<String>) -> BoundCheck {
        let mut verdicts = BTreeMap::new();
        let mut tight = BTreeSet::new();
        for id in IneqId::for_op(op) {
            let (b, a) = match id.mode() {
                Mode::Vertex => (before.d, after.d),
                Mode::Edge => (before.dp, after.dp),
            };
            verdicts.insert(id, id.verdict(b, a));
            if id.is_tight(b, a) {
                tight.insert(id);
            }
        }
        let delta = |b: Option<usize>, a: Option<usize>| Some(a? as i64 - b? as i64);
        BoundCheck {
            graph6,
            op_kind: op,
            site,
            d_before: before.d,
            d_after: after.d,
            dp_before: before.dp,
            dp_after: after.dp,
            deltas: Deltas { d: delta(before.d, after.d), dp: delta(before.dp, after.dp) },
            verdicts,
            tight,
            error,
        }
    }

    pub fn has_fail(&self) -> bool {
        self.verdicts.values().any(|v| *v == Verdict::Fail)
    }

    /// Verdicts recomputed from the stored values.
    pub fn recomputed_verdicts(&self) -> BTreeMap<IneqId, Verdict> {
        IneqId::for_op(self.op_kind)
            .map(|id| {
                let (b, a) = match id.mode() {
                    Mode::Vertex => (self.d_before, self.d_after),
                    Mode::Edge => (self.dp_before, self.dp_after),
                };
                (id, id.verdict(b, a))
            })
            .collect()
    }
}

/// `D` and `D'` of one graph; `dp` is `None` when the edge action is not faithful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Values {
    pub d: Option<usize>,
    pub dp: Option<usize>,
}

/// Exact `D`/`D'` computation, memoized by canonical code.
pub struct Evaluator {
    config: SolverConfig,
    memo: Mutex<HashMap<CanonicalCode, Values>>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator::new(SolverConfig::default())
    }
}

impl Evaluator {
    pub fn new(config: SolverConfig) -> Evaluator {
        Evaluator { config, memo: Mutex::new(HashMap::new()) }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    pub fn values(&self, g: &Graph) -> Result<Values> {
        let code = match canonical_form(g) {
            Ok(c) => Some(c),
            Err(Error::TooLarge { .. }) => None,
            Err(e) => return Err(e),
        };
        if let Some(v) = code.as_ref().and_then(|c| self.memo.lock().unwrap().get(c).copied()) {
            return Ok(v);
        }
        let auts = automorphisms_with_cap(g, self.config.aut_cap)?;
        let d = distinguishing_number_with(g, &auts, &self.config)?.value;
        let dp = match distinguishing_index_with(g, &auts, &self.config) {
            Ok(r) => Some(r.value),
            Err(Error::IndexUndefined) => None,
            Err(e) => return Err(e),
        };
        let v = Values { d: Some(d), dp };
        if let Some(c) = code {
            self.memo.lock().unwrap().insert(c, v);
        }
        Ok(v)
    }

    /// One record per operation and site of `g`, sorted by operation name then site.
    pub fn check_bounds(&self, g: &Graph) -> Result<Vec<BoundCheck>> {
        require_audit_graph(g)?;
        let name = g6(g);
        let before = self.values(g)?;
        let mut out = Vec::new();
        for op in OpKind::ALL {
            for site in op.sites(g) {
                let derived = op.apply(g, site)?;
                let record = match self.values(&derived) {
                    Ok(after) => BoundCheck::new(name.clone(), op, site, before, after, None),
                    Err(e @ (Error::BudgetExceeded { .. } | Error::AutCapExceeded { .. })) => {
                        BoundCheck::new(name.clone(), op, site, before, Values::default(), Some(e.to_string()))
                    }
                    Err(e) => return Err(e),
                };
                out.push(record);
            }
        }
        out.sort_by(|a, b| (a.op_kind.name(), a.site).cmp(&(b.op_kind.name(), b.site)));
        Ok(out)
    }
}

pub(crate) fn require_audit_graph(g: &Graph) -> Result<()> {
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::NotApplicable(format!("{} is not a connected graph on at least 3 vertices", g6(g))));
    }
    Ok(())
}

/// [`Evaluator::check_bounds`] with a fresh memo and default configuration.
pub fn check_bounds(g: &Graph) -> Result<Vec<BoundCheck>> {
    Evaluator::default().check_bounds(g)
}
