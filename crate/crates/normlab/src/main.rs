use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use normlab::cli::{self, CommandKind, JobSpec};

/// Exact normalization toolkit for monomial and equigenerated homogeneous
/// ideals over the rationals.
#[derive(Parser)]
#[command(name = "normlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimal generators of the integral closure of I^n
    Closure(CommonArgs),
    /// Normality check with the smallest failing power and a witness
    Normal(CommonArgs),
    /// Normalization index s, generation index s0 and the bound suite
    Indices(CommonArgs),
    /// Hilbert data of the integral-closure filtration
    Hilbert(CommonArgs),
    /// Sally-module h-vector checks, generator bounds and the cross oracle
    Sally(CommonArgs),
    /// Clutter analysis: covers, symbolic powers, Q(A) integrality
    Clutter(CommonArgs),
    /// One-step colon description of the integral closure
    ColonVerify(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input JSON file describing an ideal or a clutter
    #[arg(short = 'i', long)]
    input: PathBuf,

    /// Power n (closure, clutter comparisons, colon-verify)
    #[arg(short = 'n', long)]
    power: Option<u32>,

    /// Length of the Hilbert length table
    #[arg(short = 'N', long = "table-length")]
    table_length: Option<usize>,

    /// Seed for the general-coefficient draws
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Emit the machine-readable JSON report
    #[arg(long)]
    json: bool,

    /// Run the brute-force oracles alongside the fast paths and diff them
    #[arg(long)]
    oracle: bool,

    /// Suppress the version banner
    #[arg(long)]
    no_banner: bool,
}

fn job_spec(kind: CommandKind, args: CommonArgs) -> JobSpec {
    JobSpec {
        command: kind,
        input: args.input,
        power: args.power,
        table_length: args.table_length,
        seed: args.seed,
        json: args.json,
        oracle: args.oracle,
        no_banner: args.no_banner,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = match cli.command {
        Cmd::Closure(a) => job_spec(CommandKind::Closure, a),
        Cmd::Normal(a) => job_spec(CommandKind::Normal, a),
        Cmd::Indices(a) => job_spec(CommandKind::Indices, a),
        Cmd::Hilbert(a) => job_spec(CommandKind::Hilbert, a),
        Cmd::Sally(a) => job_spec(CommandKind::Sally, a),
        Cmd::Clutter(a) => job_spec(CommandKind::Clutter, a),
        Cmd::ColonVerify(a) => job_spec(CommandKind::ColonVerify, a),
    };
    match cli::run(&job) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
