mod gen;
mod molien;
mod output;
mod scan;
mod verify;
mod zeta;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::{Format, Outcome, Status};

#[derive(Parser)]
#[command(
    name = "fwe",
    version,
    about = "Formal weight enumerators, zeta polynomials and their checks"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Exit nonzero when a conjectured property fails.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generator, a graded basis, an extremal enumerator or basis coordinates.
    Gen(gen::Args),
    /// Zeta polynomial of an enumerator, optionally with the Riemann hypothesis check.
    Zeta(zeta::Args),
    /// Extremal construction, zeta polynomial and RH check over a range of degrees.
    Scan(scan::Args),
    /// Order and Molien series of a named group.
    Molien(molien::Args),
    /// Run one of the identity and theorem verifiers.
    Verify(verify::Args),
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let f = cli.format;
    match &cli.command {
        Command::Gen(a) => gen::run(a, f),
        Command::Zeta(a) => zeta::run(a, f),
        Command::Scan(a) => scan::run(a, f),
        Command::Molien(a) => molien::run(a, f),
        Command::Verify(a) => verify::run(a, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = output::emit(&outcome.body, cli.output.as_deref()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match outcome.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::InvariantFailed => ExitCode::from(1),
        Status::ConjectureFailed if cli.strict => ExitCode::from(3),
        Status::ConjectureFailed => {
            eprintln!("note: a conjectured property failed (use --strict to turn this into a nonzero exit)");
            ExitCode::SUCCESS
        }
    }
}
