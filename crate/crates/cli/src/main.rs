//! `rghw`: relative generalized Hamming weights of evaluation codes from
//! the command line.

mod commands;
mod parse;
mod problem;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use rghw_core::{MonomialOrder, DEFAULT_BUDGET};

use commands::Settings;

#[derive(Parser, Debug)]
#[command(name = "rghw", version, about = "Relative generalized Hamming weights of evaluation codes")]
struct Cli {
    /// Monomial order (overrides the problem file).
    #[arg(long, global = true, value_name = "lex|grlex|grevlex")]
    order: Option<MonomialOrder>,
    /// Cross-check results with Gröbner degrees and subcode enumeration.
    #[arg(long, global = true)]
    validate: bool,
    /// Print JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Largest number of elements any enumeration may visit.
    #[arg(long, global = true, value_name = "B", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis and degree of the vanishing ideal of a point set.
    VanishingIdeal { file: PathBuf },
    /// M_r and the relative footprint bound RFP_r for the spaces in a problem file.
    Rghw { file: PathBuf },
    /// Length, dimension and first two weights of hypersimplex toric codes.
    ToricTable {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        s: usize,
    },
    /// Weight distribution of the code of `l1`.
    Weights { file: PathBuf },
}

const EXIT_INPUT: u8 = 1;
const EXIT_REFUSED: u8 = 2;

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce() -> String) -> anyhow::Result<()> {
    let text = if json {
        serde_json::to_string_pretty(value)? + "\n"
    } else {
        human()
    };
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        // A closed pipe (`rghw ... | head`) is not an error.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

/// Returns whether any part of the output was refused for budget reasons.
fn run(cli: &Cli) -> anyhow::Result<bool> {
    let settings = Settings {
        order: cli.order,
        validate: cli.validate,
        budget: cli.budget,
    };
    match &cli.command {
        Command::VanishingIdeal { file } => {
            let r = commands::vanishing_ideal(file, &settings)?;
            emit(cli.json, &r, || r.render())?;
            Ok(false)
        }
        Command::Rghw { file } => {
            let r = commands::rghw(file, &settings)?;
            emit(cli.json, &r, || r.render())?;
            Ok(r.refused())
        }
        Command::ToricTable { q, s } => {
            let t = commands::toric_table(*q, *s, &settings)?;
            emit(cli.json, &t, || t.render())?;
            Ok(t.rows.iter().any(|r| r.refused.is_some()))
        }
        Command::Weights { file } => {
            let w = commands::weights(file, &settings)?;
            emit(cli.json, &w, || w.render())?;
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(EXIT_INPUT);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("global pool is configured once");
    }
    match run(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(EXIT_REFUSED),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e
                .chain()
                .any(|c| matches!(c.downcast_ref(), Some(rghw_core::Error::BudgetExceeded { .. })));
            ExitCode::from(if budget { EXIT_REFUSED } else { EXIT_INPUT })
        }
    }
}
