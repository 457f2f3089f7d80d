//! `qwalk`: run the quantum-walk DJ/BV algorithms, verify the constructions
//! and report photonic resource counts.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qwalk", version, about = "Quantum-walk Deutsch-Jozsa and Bernstein-Vazirani with photonic lowering")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a two-bit function is constant or balanced.
    Dj(DjArgs),
    /// Recover a hidden string with one oracle query.
    Bv(BvArgs),
    /// Run the invariant suites.
    Verify(VerifyArgs),
    /// Optical component counts per function and scheme.
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    WithAux,
    NoAux,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DjArgs {
    /// Catalogue function, i to viii.
    #[arg(long, conflicts_with = "table", required_unless_present = "table")]
    function: Option<String>,
    /// JSON truth table: {"n": 2, "table": [0, 1, 1, 0]}.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "both")]
    scheme: SchemeArg,
    /// Include the walk state after every pipeline stage.
    #[arg(long)]
    dump_state: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct BvArgs {
    /// Hidden bit string, e.g. 01.
    #[arg(long)]
    string: String,
    #[arg(long, value_enum, default_value = "both")]
    scheme: SchemeArg,
    #[arg(long)]
    dump_state: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run only this suite; repeatable.
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// Fault injection, e.g. hwp=0.01 offsets every HWP angle.
    #[arg(long)]
    perturb: Option<String>,
    /// Print the suite names and exit.
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Comma-separated subset of dj,bv.
    #[arg(long, value_delimiter = ',', default_value = "dj,bv")]
    algorithms: Vec<String>,
    #[command(flatten)]
    common: Common,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { commands::EXIT_INPUT } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Dj(args) => commands::dj(&args),
        Command::Bv(args) => commands::bv(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Report(args) => commands::report(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
