//! `snark-cordial`: construct Goldberg snarks and their compositions, label
//! them, and check cordiality and snark properties.
//!
//! Exit codes: 0 success, 1 the checked property does not hold, 2 invalid
//! input, 3 a search budget ran out before a decision.

mod source;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use snark_core::certificate::certify_snark_with_progress;
use snark_core::compositions::FamilyParams;
use snark_core::graph::CutBudget;
use snark_core::io::{
    graph_to_dot, graph_to_graphml, graph_to_json, labeling_from_json, labeling_to_json,
    report_to_json,
};
use snark_core::labeling::{
    one_point_union_schedule, open_star_schedule, path_union_schedule,
    search_cordial_with_progress, Pattern, PatternSchedule, SearchBudget, SearchOutcome,
};
use snark_core::{cordiality_report, induce_edge_labels, CertifyOptions, Labeling, Verdict};

use source::{GraphSource, Target};

const PROGRESS_INTERVAL: Duration = Duration::from_secs(10);

#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<snark_core::Error> for Failure {
    fn from(e: snark_core::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "snark-cordial",
    version,
    about = "Goldberg snarks, their compositions and cordial labelings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph and write it as JSON, DOT or GraphML.
    Construct {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Label a graph with a fixed pattern or the family's schedule, then
    /// report cordiality.
    Label {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = PatternArg::Theorem)]
        pattern: PatternArg,
        /// Labeling JSON output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report JSON output; stdout when absent.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Search for a cordial labeling when the pattern's is not.
        #[arg(long)]
        repair: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check a stored labeling against a graph.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        labeling: PathBuf,
        /// Report JSON output; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every snark check and write the certificate.
    CheckSnark {
        #[command(flatten)]
        source: GraphSource,
        /// Branch limit for the 3-edge-coloring search.
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Edge subsets the cyclic-cut enumeration may visit.
        #[arg(long, default_value_t = CutBudget::default().max_subsets)]
        max_cuts: u64,
        /// Keep wall-clock timings in the certificate.
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a cordial labeling.
    Search {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        search: SearchArgs,
        /// Labeling JSON output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report JSON output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Convert a graph, optionally with a labeling, to another format.
    Export {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        labeling: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
struct SearchArgs {
    #[arg(long, env = "SNARK_CORDIAL_SEED", default_value_t = 0)]
    seed: u64,
    /// Flip moves allowed to the local search.
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    max_nodes: u64,
}

impl SearchArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.max_nodes,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Graphml,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    P1,
    P2,
    /// The family's own schedule: P1 on every block of G_n, the
    /// alternating schedules on compositions.
    Theorem,
    Constant0,
    Constant1,
}

#[derive(Serialize)]
struct SearchSummary {
    status: &'static str,
    nodes: u64,
    exhaustive: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::invalid(format!("{}: {e}", p.display())))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::invalid(e.to_string())),
    }
}

fn read_labeling(path: &Path) -> Result<Labeling, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    Ok(labeling_from_json(&text)?)
}

fn render(
    g: &snark_core::Graph,
    labeling: Option<&Labeling>,
    format: Format,
) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => graph_to_json(g),
        Format::Dot => graph_to_dot(g, labeling)?,
        Format::Graphml => graph_to_graphml(g, labeling)?,
    })
}

/// Prints a progress line to stderr at most every ten seconds.
fn ticker(what: &'static str) -> impl FnMut(u64) {
    let start = Instant::now();
    let mut next = PROGRESS_INTERVAL;
    move |nodes| {
        let now = start.elapsed();
        if now >= next {
            eprintln!("{what}: {nodes} nodes after {}s", now.as_secs());
            next = now + PROGRESS_INTERVAL;
        }
    }
}

fn scheduled_labeling(target: &Target, pattern: PatternArg) -> Result<Labeling, Failure> {
    let g = target.graph();
    let labels = match pattern {
        PatternArg::Constant0 => vec![0; g.vertex_count()],
        PatternArg::Constant1 => vec![1; g.vertex_count()],
        PatternArg::P1 | PatternArg::P2 | PatternArg::Theorem => {
            let layout = target.layout().ok_or_else(|| {
                Failure::invalid(
                    "patterns p1, p2 and theorem need a goldberg graph or a composition of one",
                )
            })?;
            let schedule = match (pattern, target) {
                (PatternArg::P1, _) => PatternSchedule::uniform(&layout, Pattern::P1),
                (PatternArg::P2, _) => PatternSchedule::uniform(&layout, Pattern::P2),
                (_, Target::Composite(c)) => match c.params() {
                    FamilyParams::PathUnion { .. } => path_union_schedule(&layout),
                    FamilyParams::OpenStar { .. } => open_star_schedule(&layout),
                    FamilyParams::OnePointUnion { .. } => one_point_union_schedule(&layout),
                },
                _ => PatternSchedule::uniform(&layout, Pattern::P1),
            };
            schedule.vertex_labels(&layout)?
        }
    };
    Ok(induce_edge_labels(g, labels)?)
}

fn run_search(
    g: &snark_core::Graph,
    args: &SearchArgs,
) -> (SearchOutcome, snark_core::labeling::SearchStats) {
    let mut tick = ticker("search");
    search_cordial_with_progress(g, &args.budget(), &mut |s| tick(s.nodes))
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Construct {
            source,
            format,
            out,
        } => {
            let target = source.build()?;
            write_output(out.as_deref(), &render(target.graph(), None, format)?)?;
            Ok(0)
        }
        Command::Label {
            source,
            pattern,
            out,
            report,
            repair,
            search,
        } => {
            let target = source.build()?;
            let g = target.graph();
            let mut labeling = scheduled_labeling(&target, pattern)?;
            let mut r = cordiality_report(g, &labeling)?;
            let mut code = if r.is_cordial { 0 } else { 1 };
            if !r.is_cordial {
                eprintln!(
                    "pattern labeling is not cordial (vertex_diff {}, edge_diff {})",
                    r.vertex_diff, r.edge_diff
                );
                if repair {
                    let (outcome, stats) = run_search(g, &search);
                    match outcome {
                        SearchOutcome::Found(l) => {
                            eprintln!("repaired by search after {} nodes", stats.nodes);
                            labeling = l;
                            r = cordiality_report(g, &labeling)?;
                            code = 0;
                        }
                        SearchOutcome::Absent => {
                            eprintln!("search proved no cordial labeling exists")
                        }
                        SearchOutcome::Unknown => {
                            eprintln!("search budget exhausted after {} nodes", stats.nodes);
                            code = 3;
                        }
                    }
                }
            }
            if let Some(p) = out.as_deref() {
                write_output(Some(p), &labeling_to_json(&labeling))?;
            }
            write_output(report.as_deref(), &report_to_json(&r))?;
            Ok(code)
        }
        Command::Verify {
            source,
            labeling,
            out,
        } => {
            let target = source.build()?;
            let l = read_labeling(&labeling)?;
            let r = cordiality_report(target.graph(), &l)?;
            write_output(out.as_deref(), &report_to_json(&r))?;
            Ok(if r.is_cordial { 0 } else { 1 })
        }
        Command::CheckSnark {
            source,
            max_nodes,
            max_cuts,
            timings,
            out,
        } => {
            let target = source.build()?;
            let options = CertifyOptions {
                cut_budget: CutBudget {
                    max_subsets: max_cuts,
                },
                coloring_node_limit: max_nodes,
            };
            let mut tick = ticker("3-edge-coloring search");
            let mut cert =
                certify_snark_with_progress(target.graph(), &options, &mut |s| tick(s.nodes));
            if !timings {
                cert.search_stats.elapsed_ms = None;
            }
            let mut text = serde_json::to_string_pretty(&cert).expect("certificate serializes");
            text.push('\n');
            write_output(out.as_deref(), &text)?;
            Ok(match cert.verdict {
                Verdict::Snark => 0,
                Verdict::NotSnark => 1,
                Verdict::Undetermined => 3,
            })
        }
        Command::Search {
            source,
            search,
            out,
            report,
        } => {
            let target = source.build()?;
            let g = target.graph();
            let (outcome, stats) = run_search(g, &search);
            let status = match &outcome {
                SearchOutcome::Found(_) => "found",
                SearchOutcome::Absent => "absent",
                SearchOutcome::Unknown => "unknown",
            };
            if let SearchOutcome::Found(l) = &outcome {
                if let Some(p) = out.as_deref() {
                    write_output(Some(p), &labeling_to_json(l))?;
                }
                if let Some(p) = report.as_deref() {
                    write_output(Some(p), &report_to_json(&cordiality_report(g, l)?))?;
                }
            }
            let summary = SearchSummary {
                status,
                nodes: stats.nodes,
                exhaustive: stats.exhaustive,
            };
            let mut text = serde_json::to_string(&summary).expect("summary serializes");
            text.push('\n');
            write_output(None, &text)?;
            Ok(match outcome {
                SearchOutcome::Found(_) => 0,
                SearchOutcome::Absent => 1,
                SearchOutcome::Unknown => 3,
            })
        }
        Command::Export {
            source,
            labeling,
            format,
            out,
        } => {
            let target = source.build()?;
            let l = labeling.as_deref().map(read_labeling).transpose()?;
            if let Some(l) = &l {
                cordiality_report(target.graph(), l)?;
            }
            write_output(out.as_deref(), &render(target.graph(), l.as_ref(), format)?)?;
            Ok(0)
        }
    }
}
