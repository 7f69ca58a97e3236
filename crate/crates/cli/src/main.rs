//! `mvtop`: build, inspect and verify finite MV-topological spaces.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mvtop::{Exec, Settings};

use mvtop_cli::commands::{self, CheckKind, Context, Outcome};
use mvtop_cli::doc::Caps;
use mvtop_cli::error::CliError;

#[derive(Parser)]
#[command(name = "mvtop", version, about = "Finite MV-topological spaces over Łukasiewicz chains")]
struct Cli {
    /// Largest number of opens any closure may produce.
    #[arg(long, global = true)]
    max_opens: Option<usize>,
    /// Node budget for the cover solvers and brute-force searches.
    #[arg(long, global = true)]
    max_nodes: Option<u64>,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
    /// Write to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the topology of a space document.
    Gen { input: Option<PathBuf> },
    /// Decide a property of a space.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        input: Option<PathBuf>,
        /// Decide compactness by enumerating covers.
        #[arg(long)]
        oracle: bool,
    },
    /// Product of one or more spaces over the same chain.
    Product {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Emit the product subbase instead of all opens.
        #[arg(long)]
        subbase_only: bool,
    },
    /// Additive cover of least total multiplicity.
    Mincover { input: Option<PathBuf> },
    /// Smallest subfamily whose members reach 1 at every point.
    Subcover { input: Option<PathBuf> },
    /// Topology induced by the fuzzy open balls of a metric.
    Metric {
        input: Option<PathBuf>,
        /// Emit the balls instead of the generated opens.
        #[arg(long)]
        subbase_only: bool,
    },
    /// Continuity (and openness) of a map between spaces.
    Continuity { input: Option<PathBuf> },
    /// Run a seeded randomized verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u64,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = Context {
        settings: Settings {
            exec: if cli.sequential { Exec::Sequential } else { Exec::Parallel },
            ..Settings::default()
        },
        caps: Caps {
            max_opens: cli.max_opens,
            max_nodes: cli.max_nodes,
        },
    };
    let read = |p: &Option<PathBuf>| commands::read_input(p.as_deref());
    match &cli.command {
        Command::Gen { input } => commands::gen(&ctx, &read(input)?),
        Command::Check { kind, input, oracle } => commands::check(&ctx, *kind, *oracle, &read(input)?),
        Command::Product { inputs, subbase_only } => commands::product(&ctx, inputs, *subbase_only),
        Command::Mincover { input } => commands::mincover(&ctx, &read(input)?),
        Command::Subcover { input } => commands::subcover(&ctx, &read(input)?),
        Command::Metric { input, subbase_only } => commands::metric(&ctx, &read(input)?, *subbase_only),
        Command::Continuity { input } => {
            let base = input.as_deref().and_then(|p| p.parent());
            commands::continuity(&ctx, &read(input)?, base)
        }
        Command::Verify { suite, seed, cases } => commands::verify(&ctx, suite, *seed, *cases),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::input(format!("stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|out| emit(&cli, &out.text).map(|()| out.verdict)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("mvtop: {e}");
            e.exit_code()
        }
    }
}
