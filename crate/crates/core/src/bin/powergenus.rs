use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use powergenus::cli::{self, CatalogAction, Command, ExportFormat, Format, ReportKind, RunConfig};
use powergenus::genus::{Budget, Surface};

#[derive(Parser)]
#[command(
    name = "powergenus",
    version,
    about = "Power graphs of finite groups and their genus"
)]
struct Opts {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Global {
    /// Search nodes allowed per genus level.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget_nodes: u64,
    /// Wall-clock seconds allowed per genus level.
    #[arg(long, global = true, default_value_t = 600.0)]
    budget_seconds: f64,
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Catalog file to use instead of the built-in one.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Write the report (or, for `genus`, the certificate) here.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Search even where a closed genus formula applies.
    #[arg(long, global = true)]
    no_formulas: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, element orders, order-6 subgroups, involutions and center.
    GroupInfo { target: String },
    /// Export the power graph as DOT or an edge list.
    Powergraph {
        target: String,
        #[arg(long, conflicts_with = "edges")]
        dot: bool,
        #[arg(long)]
        edges: bool,
    },
    /// Exact genus or crosscap number of an edge-list graph.
    Genus {
        file: PathBuf,
        #[arg(long, conflicts_with = "orientable")]
        nonorientable: bool,
        #[arg(long)]
        orientable: bool,
    },
    /// Classify one group, or the whole catalog with --all-catalog.
    Classify {
        #[arg(required_unless_present = "all_catalog")]
        target: Option<String>,
        #[arg(long, conflicts_with = "target")]
        all_catalog: bool,
    },
    /// Reproduce a table or run a rule's check: table1 | table2 | lemma <id>.
    Report {
        #[arg(value_parser = ["table1", "table2", "lemma"])]
        which: String,
        id: Option<String>,
    },
    /// Re-trace an embedding certificate.
    Verify { certificate: PathBuf },
    /// Dump or re-validate the catalog.
    Catalog {
        #[arg(value_parser = ["dump", "validate"])]
        action: String,
    },
}

fn main() -> ExitCode {
    // Usage errors exit with 1; 2 is reserved for bounds-only results.
    let opts = match Opts::try_parse() {
        Ok(o) => o,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let g = opts.global;
    let config = RunConfig {
        budget: Budget::nodes(g.budget_nodes),
        format: match g.format {
            FormatArg::Text => Format::Text,
            FormatArg::Records => Format::Records,
        },
        output: g.output,
        jobs: g.jobs.unwrap_or(RunConfig::default().jobs),
        catalog: g.catalog,
        timestamp: !g.no_timestamp,
        formulas: !g.no_formulas,
    }
    .with_budget_seconds(g.budget_seconds);
    let command = match opts.command {
        Cmd::GroupInfo { target } => Command::GroupInfo(target),
        Cmd::Powergraph { target, dot, .. } => {
            Command::PowerGraph(target, if dot { ExportFormat::Dot } else { ExportFormat::Edges })
        }
        Cmd::Genus {
            file, nonorientable, ..
        } => Command::Genus(
            file,
            if nonorientable {
                Surface::Nonorientable
            } else {
                Surface::Orientable
            },
        ),
        Cmd::Classify { target, .. } => Command::Classify(target),
        Cmd::Report { which, id } => Command::Report(match (which.as_str(), id) {
            ("table1", _) => ReportKind::Table1,
            ("table2", _) => ReportKind::Table2,
            (_, Some(id)) => ReportKind::Lemma(id),
            (_, None) => {
                eprintln!("error: report lemma needs a rule id");
                return ExitCode::from(1);
            }
        }),
        Cmd::Verify { certificate } => Command::Verify(certificate),
        Cmd::Catalog { action } => Command::Catalog(if action == "dump" {
            CatalogAction::Dump
        } else {
            CatalogAction::Validate
        }),
    };
    match config.and_then(|c| cli::run(&c, &command)) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
