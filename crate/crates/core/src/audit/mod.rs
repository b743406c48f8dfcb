//! Exhaustive checking of the bound inequalities and proof constructions over
//! small connected graphs, plus the family tables and report emission.

mod bounds;
mod enumerate;
mod families;
mod report;
mod sharpness;

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use bounds::{check_bounds, BoundCheck, Deltas, Evaluator, IneqId, Values, Verdict};
pub use enumerate::{connected_corpus, enumerate_connected, ENUMERATION_MAX};
pub use families::{
    family_audit, family_param_limit, friendship_formula, friendship_pair_count, FamilyCheck, FamilyRow,
};
pub use report::{write_csv, write_jsonl};
pub use sharpness::{sharpness_search, Witness, SHARPNESS_MAX_N};

use crate::constructions::{all_outcomes, g6, ConstructionOutcome, OutcomeStatus};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, FamilyKind, Graph};
use crate::solver::SolverConfig;

/// Records of every rule at every site of `g` that did not verify.
pub fn verify_constructions(g: &Graph, config: &SolverConfig) -> Result<Vec<ConstructionOutcome>> {
    Ok(construction_outcomes(g, config)?.into_iter().filter(|o| o.is_finding()).collect())
}

/// Every construction outcome for `g`, verified or not.
pub fn construction_outcomes(g: &Graph, config: &SolverConfig) -> Result<Vec<ConstructionOutcome>> {
    bounds::require_audit_graph(g)?;
    all_outcomes(g, config)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Corpus {
    /// All connected graphs with `n_min ..= n_max` vertices.
    Enumerated { n_min: usize, n_max: usize },
    /// One graph6 record per line.
    File(PathBuf),
}

impl Corpus {
    fn describe(&self) -> String {
        match self {
            Corpus::Enumerated { n_min, n_max } => format!("connected graphs, {n_min} <= n <= {n_max}"),
            Corpus::File(p) => format!("file {}", p.display()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub constructions: bool,
    /// Construction checks only run on graphs with at most this many vertices.
    pub construction_n_max: usize,
    pub families: bool,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub config: SolverConfig,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            constructions: false,
            construction_n_max: 6,
            families: false,
            jobs: None,
            config: SolverConfig::default(),
        }
    }
}

/// A corpus line or graph that could not be audited.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusError {
    pub line: Option<usize>,
    pub graph6: Option<String>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub bound_checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub undefined: usize,
    pub record_errors: usize,
    pub constructions_checked: usize,
    pub construction_findings: usize,
    pub refuted: usize,
    pub undefined_target: usize,
    pub corpus_errors: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub corpus: String,
    pub tool_version: String,
    pub wall_time_secs: f64,
    pub bound_checks: Vec<BoundCheck>,
    pub findings: Vec<ConstructionOutcome>,
    pub families: Vec<FamilyRow>,
    pub errors: Vec<CorpusError>,
    pub summary: Summary,
}

impl AuditReport {
    /// Nonzero iff some inequality verdict is a fail.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }
}

/// Family ranges included in a full audit report.
pub const DEFAULT_FAMILY_RANGES: [(FamilyKind, usize, usize); 5] = [
    (FamilyKind::Complete, 3, 8),
    (FamilyKind::Star, 3, 8),
    (FamilyKind::Friendship, 2, 5),
    (FamilyKind::Spider, 2, 6),
    (FamilyKind::ApexPair, 3, 6),
];

struct GraphResult {
    checks: Vec<BoundCheck>,
    outcomes: Vec<ConstructionOutcome>,
    constructions_checked: usize,
}

pub fn run_audit(corpus: &Corpus, options: &AuditOptions) -> Result<AuditReport> {
    let start = Instant::now();
    let mut errors = Vec::new();
    let graphs: Vec<Graph> = match corpus {
        Corpus::Enumerated { n_min, n_max } => connected_corpus((*n_min).max(3), *n_max)?,
        Corpus::File(path) => {
            let text = std::fs::read_to_string(path)?;
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let record = line.trim();
                if record.is_empty() {
                    continue;
                }
                match parse_graph6(record).and_then(|g| bounds::require_audit_graph(&g).map(|_| g)) {
                    Ok(g) => graphs.push(g),
                    Err(e) => errors.push(CorpusError {
                        line: Some(i + 1),
                        graph6: Some(record.to_string()),
                        message: e.to_string(),
                    }),
                }
            }
            graphs
        }
    };

    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = options.jobs {
            b = b.num_threads(j);
        }
        b.build().map_err(|e| Error::NotApplicable(format!("thread pool: {e}")))?
    };
    let eval = Evaluator::new(options.config);

    let (results, families) = pool.install(|| {
        let results: Vec<std::result::Result<GraphResult, CorpusError>> =
            graphs.par_iter().map(|g| audit_graph(g, &eval, options)).collect();
        let families: Result<Vec<FamilyRow>> = if options.families {
            DEFAULT_FAMILY_RANGES
                .iter()
                .map(|&(kind, lo, hi)| family_audit(kind, lo..=hi, &eval))
                .collect::<Result<Vec<_>>>()
                .map(|t| t.into_iter().flatten().collect())
        } else {
            Ok(Vec::new())
        };
        (results, families)
    });

    let mut summary = Summary { graphs: graphs.len(), ..Summary::default() };
    let mut bound_checks = Vec::new();
    let mut findings = Vec::new();
    for r in results {
        match r {
            Ok(r) => {
                bound_checks.extend(r.checks);
                summary.constructions_checked += r.constructions_checked;
                findings.extend(r.outcomes);
            }
            Err(e) => errors.push(e),
        }
    }
    bound_checks.sort_by(|a, b| (&a.graph6, a.op_kind.name(), a.site).cmp(&(&b.graph6, b.op_kind.name(), b.site)));
    findings.sort_by(|a, b| (&a.graph6, a.rule.id(), a.site).cmp(&(&b.graph6, b.rule.id(), b.site)));
    errors.sort_by(|a, b| (a.line, &a.graph6).cmp(&(b.line, &b.graph6)));

    summary.bound_checks = bound_checks.len();
    for c in &bound_checks {
        summary.record_errors += usize::from(c.error.is_some());
        for v in c.verdicts.values() {
            match v {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Undefined => summary.undefined += 1,
            }
        }
    }
    summary.construction_findings = findings.len();
    summary.refuted = findings.iter().filter(|o| o.status == OutcomeStatus::Refuted).count();
    summary.undefined_target = findings.iter().filter(|o| o.status == OutcomeStatus::UndefinedTarget).count();
    summary.corpus_errors = errors.len();

    Ok(AuditReport {
        corpus: corpus.describe(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        wall_time_secs: start.elapsed().as_secs_f64(),
        bound_checks,
        findings,
        families: families?,
        errors,
        summary,
    })
}

fn audit_graph(g: &Graph, eval: &Evaluator, options: &AuditOptions) -> std::result::Result<GraphResult, CorpusError> {
    let fail = |e: Error| CorpusError { line: None, graph6: Some(g6(g)), message: e.to_string() };
    let checks = eval.check_bounds(g).map_err(fail)?;
    let (outcomes, constructions_checked) = if options.constructions && g.n() <= options.construction_n_max {
        let all = construction_outcomes(g, eval.config()).map_err(fail)?;
        let n = all.len();
        (all.into_iter().filter(|o| o.is_finding()).collect(), n)
    } else {
        (Vec::new(), 0)
    };
    Ok(GraphResult { checks, outcomes, constructions_checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    #[test]
    fn path_has_no_lift_findings() {
        let g = make_family(FamilySpec::new(FamilyKind::Path, 4)).unwrap();
        let findings = verify_constructions(&g, &SolverConfig::default()).unwrap();
        assert!(findings
            .iter()
            .all(|o| o.rule.family() != crate::constructions::RuleFamily::Lift
                || o.status == OutcomeStatus::UndefinedTarget));
        assert!(findings.iter().all(|o| o.certificate.is_some()));
    }

    #[test]
    fn star_center_push_is_clean() {
        let g = make_family(FamilySpec::new(FamilyKind::Star, 3)).unwrap();
        let findings = verify_constructions(&g, &SolverConfig::default()).unwrap();
        assert!(!findings
            .iter()
            .any(|o| o.rule == crate::constructions::Rule::PushVdel && o.site == crate::graph::Site::Vertex(0)));
    }

    #[test]
    fn small_corpus_passes() {
        let report = run_audit(&Corpus::Enumerated { n_min: 3, n_max: 5 }, &AuditOptions::default()).unwrap();
        assert_eq!(report.summary.graphs, 29);
        assert_eq!(report.summary.fail, 0);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn file_corpus_reports_bad_lines() {
        let dir = std::env::temp_dir().join(format!("disting-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.g6");
        std::fs::write(&path, "Bw\n\nB?\nzz\nCF\n").unwrap();
        let report = run_audit(&Corpus::File(path.clone()), &AuditOptions::default()).unwrap();
        assert_eq!(report.summary.graphs, 2);
        let lines: Vec<_> = report.errors.iter().map(|e| e.line).collect();
        assert_eq!(lines, vec![Some(3), Some(4)]);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
