use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod report;

use report::{Outcome, Report};

#[derive(Parser)]
#[command(name = "realruled", version, about = "Real structures on minimal ruled surfaces")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether (t,k,g,mu,eps) is an allowable topological type.
    #[command(allow_negative_numbers = true)]
    CheckType { t: i64, k: i64, g: i64, mu: i64, eps: i64 },
    /// List the deformation classes over a curve of type (g,mu,eps).
    Enumerate {
        g: i64,
        mu: i64,
        eps: i64,
        /// Print the table for rational ruled surfaces (g = 0).
        #[arg(long)]
        rational: bool,
    },
    /// Build a recipe with the given topological type.
    #[command(allow_negative_numbers = true)]
    Realize {
        t: i64,
        k: i64,
        g: i64,
        mu: i64,
        eps: i64,
        /// Spin flag of the quotient, required when mu = 0.
        #[arg(long)]
        spin: Option<bool>,
    },
    /// Decide whether two recipe files describe deformation-equivalent surfaces.
    Equiv { a: PathBuf, b: PathBuf },
    /// Conjugacy classes of real structures on P(L + L0) for a bundle file.
    ClassifyStructures {
        bundle: PathBuf,
        g: i64,
        mu: i64,
        eps: i64,
        /// Witness file settling c+ against c-.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Run the bundled identity and elliptic-curve checks.
    VerifyPaper {
        /// Run a single identity.
        #[arg(long)]
        identity: Option<String>,
        /// Run the negative control of the identity instead.
        #[arg(long, requires = "identity")]
        flip_sign: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::CheckType { t, k, g, mu, eps } => commands::check_type(*t, *k, *g, *mu, *eps),
        Command::Enumerate { g, mu, eps, rational } => commands::enumerate(*g, *mu, *eps, *rational),
        Command::Realize { t, k, g, mu, eps, spin } => commands::realize(*t, *k, *g, *mu, *eps, *spin),
        Command::Equiv { a, b } => commands::equiv(a, b),
        Command::ClassifyStructures { bundle, g, mu, eps, witness } => {
            commands::classify_structures(bundle, *g, *mu, *eps, witness.as_deref())
        }
        Command::VerifyPaper { identity, flip_sign } => commands::verify_paper(identity.as_deref(), *flip_sign),
    };
    match result {
        Ok(Outcome { report, ok }) => {
            emit(&report, cli.json);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(report: &Report, json: bool) {
    let text = if json {
        serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
    } else {
        report.human.clone()
    };
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}
