mod commands;
mod range;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use septic_index::Error;

use range::IntRange;

#[derive(Parser, Debug)]
#[command(name = "septic-index", version, about = "Field indices and prime splitting for x^7 + ax + b")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full index report for one trinomial.
    Index {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long)]
        json: bool,
        /// Attach a generator scan with this many samples per prime.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Newton polygons, residual polynomials and splitting of p.
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Reports over a box of (a, b); CSV by default, JSON lines with --json.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        a: IntRange,
        #[arg(long, allow_hyphen_values = true)]
        b: IntRange,
        /// Cross-check closed forms against the engine for every row.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Generator scan samples per prime (with --check).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certificate that x^7 + 2^u a x + 2^v b defines a monogenic field.
    MonogenicFamily {
        #[arg(long)]
        u: u32,
        #[arg(long)]
        v: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long)]
        json: bool,
    },
    /// Table disjointness sweeps and row-by-row agreement with the engine.
    VerifyTables {
        /// Samples per table row.
        #[arg(long, default_value_t = 20)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Reducible { .. } => 2,
        Error::HypothesisViolation { .. } | Error::FamilyHypothesis(_) => 3,
        Error::UnsupportedSecondOrder(_) | Error::Unsupported(_) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("SEPTIC_INDEX_LOG")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Index { a, b, json, budget, seed } => commands::index(a, b, json, budget.map(|n| (n, seed))),
        Command::Factor { a, b, p, json } => commands::factor(a, b, p, json),
        Command::Scan { a, b, check, json, jobs, budget, seed, out } => commands::scan(commands::ScanArgs {
            a,
            b,
            check,
            json,
            jobs,
            scan: budget.map(|n| (n, seed)),
            out,
        }),
        Command::MonogenicFamily { u, v, a, b, json } => commands::monogenic(u, v, a, b, json),
        Command::VerifyTables { budget, seed, json } => commands::verify_tables(budget, seed, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
