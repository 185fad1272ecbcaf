use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ladder_cli::problem::parse_problem;
use ladder_cli::{run, Command, Failure, Options};
use ladder_core::OracleLimits;

/// a-invariants of ladder determinantal rings via NE-turns of lattice paths.
#[derive(Parser)]
#[command(name = "ladder-ainv", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// a-invariant by the closed formula or the slalom scan.
    AInvariant(Common),
    /// Per-path NE-turn maxima with their relevant gates.
    MaxTurns(Common),
    /// Slalom scan of a single-path file, or of every path of a ladder file.
    Slalom(Common),
    /// Brute-force generating function of the path families.
    Oracle(Common),
    /// Hilbert series numerator, d and leading coefficients.
    Hilbert {
        #[command(flatten)]
        common: Common,
        /// Number of Hilbert function values to print.
        #[arg(long, default_value_t = 10)]
        coeffs: usize,
    },
    /// Report which hypotheses hold for the instance.
    Validate(Common),
    /// ASCII picture of the region with a witness family.
    Render(Common),
}

#[derive(Args)]
struct Common {
    /// Problem file (JSON).
    file: PathBuf,
    /// Cross-check against the brute-force oracle when within budget.
    #[arg(long)]
    verify: bool,
    /// Step budget of the brute-force oracle.
    #[arg(long, default_value_t = OracleLimits::default().step_budget)]
    budget: usize,
    /// Print a JSON document instead of text.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common, coeffs) = match cli.command {
        Sub::AInvariant(c) => (Command::AInvariant, c, 10),
        Sub::MaxTurns(c) => (Command::MaxTurns, c, 10),
        Sub::Slalom(c) => (Command::Slalom, c, 10),
        Sub::Oracle(c) => (Command::Oracle, c, 10),
        Sub::Hilbert { common, coeffs } => (Command::Hilbert, common, coeffs),
        Sub::Validate(c) => (Command::Validate, c, 10),
        Sub::Render(c) => (Command::Render, c, 10),
    };
    let opts = Options {
        verify: common.verify,
        json: common.json,
        coeffs,
        limits: OracleLimits {
            step_budget: common.budget,
            ..OracleLimits::default()
        },
    };
    match execute(command, &common.file, &opts) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}

fn execute(command: Command, file: &PathBuf, opts: &Options) -> Result<(), Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", file.display())))?;
    let problem = parse_problem(&text)?;
    let outcome = run(command, &problem, opts)?;
    print!("{}", outcome.stdout);
    match outcome.failure {
        Some(f) => Err(f),
        None => Ok(()),
    }
}
