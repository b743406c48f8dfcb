use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use disting_core::audit::{
    family_audit, run_audit, sharpness_search, write_csv, write_jsonl, AuditOptions, Corpus, Evaluator, IneqId,
};
use disting_core::constructions::{construct, Rule};
use disting_core::graph::{make_family, parse_graph6, to_graph6, FamilyKind, FamilySpec, Graph, OpKind, Site};
use disting_core::solver::{distinguishing_index, distinguishing_number};

#[derive(Parser)]
#[command(name = "disting", version, about = "Distinguishing number and index of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// File with one graph6 record per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Input {
    fn graphs(&self) -> Result<Vec<(String, Graph)>> {
        let records: Vec<String> = match (&self.graph6, &self.file) {
            (Some(s), _) => vec![s.clone()],
            (None, Some(p)) => std::fs::read_to_string(p)
                .with_context(|| format!("reading {}", p.display()))?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect(),
            (None, None) => unreachable!("clap enforces the group"),
        };
        records
            .into_iter()
            .map(|r| {
                let g = parse_graph6(&r).with_context(|| format!("parsing '{r}'"))?;
                Ok((r, g))
            })
            .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print D (or D' with --edges) and a witness labeling.
    Compute {
        #[arg(long)]
        edges: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Apply an operation and print the derived graph in graph6.
    Op {
        #[arg(long)]
        kind: OpKind,
        /// "v=K" or "e=U,V".
        #[arg(long)]
        site: Site,
        #[command(flatten)]
        input: Input,
    },
    /// Print a family member in graph6.
    Family {
        #[arg(long)]
        name: FamilyKind,
        #[arg(long)]
        param: usize,
    },
    /// Build the labeling of one proof rule at a site.
    Construct {
        #[arg(long)]
        rule: Rule,
        #[arg(long)]
        site: Site,
        #[arg(long)]
        graph6: String,
        /// Also print the verification verdict and certificate.
        #[arg(long)]
        verify: bool,
    },
    /// Check every bound inequality over a corpus and write JSON Lines.
    Audit {
        #[arg(long, conflicts_with = "corpus", default_value_t = 7)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        nmin: usize,
        /// graph6 file to audit instead of the enumerated corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the bound checks as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Verify the proof constructions (graphs with at most --construction-nmax vertices).
        #[arg(long)]
        constructions: bool,
        #[arg(long, default_value_t = 6)]
        construction_nmax: usize,
        /// Include the family tables.
        #[arg(long)]
        families: bool,
    },
    /// List graphs and sites meeting an inequality with equality.
    Sharpness {
        #[arg(long)]
        ineq: IneqId,
        #[arg(long)]
        nmax: usize,
    },
    /// Exact values for a family across a parameter range.
    Families {
        #[arg(long)]
        name: FamilyKind,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Compute { edges, input } => {
            for (record, g) in input.graphs()? {
                if edges {
                    match distinguishing_index(&g) {
                        Ok(r) => writeln!(out, "{record}\tD'={}\t{}", r.value, r.witness)?,
                        Err(disting_core::error::Error::IndexUndefined) => writeln!(out, "{record}\tD'=undefined")?,
                        Err(e) => return Err(e.into()),
                    }
                } else {
                    let r = distinguishing_number(&g)?;
                    writeln!(out, "{record}\tD={}\t{}", r.value, r.witness)?;
                }
            }
        }
        Command::Op { kind, site, input } => {
            for (_, g) in input.graphs()? {
                writeln!(out, "{}", to_graph6(&kind.apply(&g, site)?)?)?;
            }
        }
        Command::Family { name, param } => {
            writeln!(out, "{}", to_graph6(&make_family(FamilySpec::new(name, param))?)?)?;
        }
        Command::Construct { rule, site, graph6, verify } => {
            let g = parse_graph6(&graph6)?;
            let o = construct(rule, &g, site, &Default::default())?;
            let labeling = o.labeling.as_ref().map_or("none".to_string(), |l| l.to_string());
            writeln!(out, "target\t{}", o.target_graph6)?;
            writeln!(out, "labeling\t{labeling}")?;
            writeln!(out, "labels_used\t{}", o.labels_used)?;
            writeln!(out, "claimed_bound\t{}", o.claimed_bound)?;
            if verify {
                writeln!(out, "verified\t{}", o.verified)?;
                writeln!(out, "status\t{}", o.status)?;
                if let Some(c) = &o.certificate {
                    writeln!(out, "certificate\t{c}")?;
                }
            }
        }
        Command::Audit { nmax, nmin, corpus, out: path, csv, jobs, constructions, construction_nmax, families } => {
            let corpus = match corpus {
                Some(p) => Corpus::File(p),
                None => Corpus::Enumerated { n_min: nmin, n_max: nmax },
            };
            let options = AuditOptions {
                constructions,
                construction_n_max: construction_nmax,
                families,
                jobs,
                ..AuditOptions::default()
            };
            let report = run_audit(&corpus, &options)?;
            match path {
                Some(p) => write_jsonl(&report, BufWriter::new(File::create(&p)?))?,
                None => write_jsonl(&report, &mut out)?,
            }
            if let Some(p) = csv {
                write_csv(&report, BufWriter::new(File::create(&p)?))?;
            }
            let s = &report.summary;
            eprintln!(
                "{} graphs, {} records: {} pass, {} fail, {} undefined; {} construction findings of {}",
                s.graphs, s.bound_checks, s.pass, s.fail, s.undefined, s.construction_findings, s.constructions_checked
            );
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
        Command::Sharpness { ineq, nmax } => {
            for w in sharpness_search(ineq, nmax, &Evaluator::default())? {
                writeln!(out, "{}\t{}\t{}\t{}\t{:+}", w.graph6, w.site, w.before, w.after, w.sign)?;
            }
        }
        Command::Families { name, from, to } => {
            if from > to {
                bail!("--from must not exceed --to");
            }
            writeln!(out, "param\tgraph6\tD\tD'\tD_predicted\tD'_predicted\tD_match\tD'_match")?;
            let show = |x: Option<String>| x.unwrap_or_else(|| "-".to_string());
            for r in family_audit(name, from..=to, &Evaluator::default())? {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.param,
                    r.graph6,
                    r.d,
                    show(r.dp.map(|x| x.to_string())),
                    show(r.d_predicted.map(|x| x.to_string())),
                    show(r.dp_predicted.map(|x| x.to_string())),
                    show(r.d_match.map(|x| x.to_string())),
                    show(r.dp_match.map(|x| x.to_string())),
                )?;
                for c in &r.checks {
                    writeln!(out, "#\t{}\t{}", if c.holds { "holds" } else { "FAILS" }, c.statement)?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
