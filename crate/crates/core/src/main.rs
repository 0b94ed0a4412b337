use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rees_commute::graph::SimpleGraph;
use rees_commute::report::{analyze, export_dot, to_json_pretty, GroupSpec, MatrixEntry, MatrixSpec, ReesSpec, ResolvedSpec};
use rees_commute::verify::{characterize_graph_with_limits, run_suite, GroupCatalog, SuiteFixture, SuiteMode, SuiteSummary};
use rees_commute::{Error, Limits};

/// Commuting graphs of Rees matrix semigroups over finite groups.
#[derive(Parser)]
#[command(name = "rees-commute", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariants of one commuting graph as a JSON report.
    Analyze {
        #[command(flatten)]
        input: SpecArgs,
        /// Also write the commuting graph as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Include per-stage timings (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the verification suite over a fixture matrix.
    Verify {
        /// Fixture JSON; the built-in matrix when omitted.
        fixture: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Suite::Full)]
        suite: Suite,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decide whether a graph is the commuting graph of a completely simple
    /// semigroup.
    Characterize {
        /// Graph in text format.
        graph: PathBuf,
        #[arg(long, default_value_t = 15)]
        catalog_order: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Write a commuting graph as DOT.
    ExportDot {
        #[command(flatten)]
        input: SpecArgs,
        /// Use the extended commuting graph (all elements).
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Full,
    Fast,
}

#[derive(Args)]
struct SpecArgs {
    /// Rees spec JSON file; overrides the inline flags.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Named group, or @file with a Cayley table.
    #[arg(short, long)]
    group: Option<String>,
    /// |Λ|, the number of sandwich matrix rows.
    #[arg(long, default_value_t = 1)]
    rows: usize,
    /// |I|, the number of sandwich matrix columns.
    #[arg(long, default_value_t = 1)]
    cols: usize,
    /// random, identity, or @file with a JSON array of rows.
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Analyze the group itself rather than a Rees matrix semigroup.
    #[arg(long)]
    as_group: bool,
}

#[derive(Args)]
struct CommonArgs {
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Node expansions allowed in left-path search.
    #[arg(long, env = "REES_COMMUTE_BUDGET")]
    max_path_budget: Option<u64>,
}

impl CommonArgs {
    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(b) = self.max_path_budget {
            limits.path_budget = b;
        }
        limits
    }
}

enum Failure {
    Input(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.clone(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn resolve(input: &SpecArgs, limits: &Limits) -> Result<ResolvedSpec, Failure> {
    let spec = match &input.spec {
        Some(path) => ReesSpec::from_json(&read(path)?)?,
        None => {
            let group = match input.group.as_deref() {
                None => return Err(Error::Parse("--group or --spec is required".into()).into()),
                Some(g) => match g.strip_prefix('@') {
                    Some(path) => GroupSpec::Cayley {
                        cayley: read(Path::new(path))?,
                    },
                    None => GroupSpec::Named(g.to_string()),
                },
            };
            let keyword = if input.seed.is_some() { "random" } else { "identity" };
            let p = match input.matrix.as_deref().unwrap_or(keyword) {
                m if m.starts_with('@') => {
                    let rows: Vec<Vec<MatrixEntry>> = serde_json::from_str(&read(Path::new(&m[1..]))?)
                        .map_err(|e| Error::Parse(e.to_string()))?;
                    MatrixSpec::Rows(rows)
                }
                m => MatrixSpec::Keyword(m.to_string()),
            };
            ReesSpec {
                group,
                i_size: input.cols,
                lambda_size: input.rows,
                p,
                seed: input.seed,
            }
        }
    };
    Ok(spec.resolve(input.as_group, limits)?)
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Analyze {
            input,
            dot,
            timings,
            common,
        } => {
            let limits = common.limits();
            let resolved = resolve(&input, &limits)?;
            let report = analyze(&resolved, &limits, timings)?;
            if let Some(path) = dot {
                let text = export_dot(&resolved.subject, false)?;
                fs::write(&path, text).map_err(|e| Failure::Io(path.clone(), e))?;
            }
            write_output(&common.out, &to_json_pretty(&report))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { fixture, suite, common } => {
            let limits = common.limits();
            let fixture = match fixture {
                Some(path) => SuiteFixture::from_json(&read(&path)?)?,
                None => SuiteFixture::default_matrix(),
            };
            let mode = match suite {
                Suite::Full => SuiteMode::Full,
                Suite::Fast => SuiteMode::Fast,
            };
            let results = run_suite(&fixture, mode, &limits)?;
            write_output(&common.out, &to_json_pretty(&results))?;
            let summary = SuiteSummary::of(&results);
            eprintln!(
                "{} checks: {} passed, {} failed, {} skipped",
                summary.total, summary.passed, summary.failed, summary.skipped
            );
            if let Some(first) = results.iter().find(|r| r.is_violation()) {
                eprintln!(
                    "first failure: {} on {}: {}",
                    first.check_id,
                    first.instance,
                    first.witness.as_ref().map_or_else(String::new, |w| w.to_string())
                );
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Characterize {
            graph,
            catalog_order,
            common,
        } => {
            let g = SimpleGraph::from_text(&read(&graph)?)?;
            let catalog = GroupCatalog::up_to(catalog_order);
            let verdict = characterize_graph_with_limits(&g, &catalog, &common.limits());
            write_output(&common.out, &to_json_pretty(&verdict))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot {
            input,
            extended,
            common,
        } => {
            let resolved = resolve(&input, &common.limits())?;
            write_output(&common.out, &export_dot(&resolved.subject, extended)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            let (code, kind, message) = match failure {
                Failure::Input(e) => (if e.is_resource_limit() { 3 } else { 2 }, e.kind(), e.to_string()),
                Failure::Io(path, e) => (2, "Io", format!("{}: {e}", path.display())),
            };
            println!("{}", json!({ "error": { "kind": kind, "message": message } }));
            ExitCode::from(code)
        }
    }
}
