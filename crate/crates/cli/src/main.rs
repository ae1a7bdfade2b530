//! `quadscroll`: batch front end to the quadric intersection engine.

mod catalog;
mod commands;
mod expr;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quadscroll_core::chow::MiddlePairing;
use quadscroll_core::classify::TableScope;

use crate::commands::Outcome;
use crate::report::Format;

#[derive(Parser, Debug)]
#[command(name = "quadscroll", version, about = "Exact intersection theory on smooth quadrics")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Append the report on repaired formulas.
    #[arg(long, global = true)]
    errata: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PairingArg {
    Parity,
    Kronecker,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScopeArg {
    D10,
    Scrolls,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression in H*(Q^n), e.g. "c3(S'(1))^2 - c2(S'(1)) c4(S'(1))".
    Chow {
        expr: String,
        #[arg(short, long, default_value_t = 5)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PairingArg::Parity)]
        pairing: PairingArg,
    },
    /// Intersection numbers and Hilbert polynomials of a threefold in Q^5.
    #[command(allow_negative_numbers = true)]
    Invariants { d: i64, g: i64, chi_s: i64, chi_x: i64 },
    /// Scroll linear systems.
    #[command(subcommand)]
    Scroll(ScrollCommand),
    /// Genus and degree bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Hilbert-function exclusions.
    #[command(subcommand)]
    Exclude(ExcludeCommand),
    /// Catalog and presentation checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Classification table.
    Table {
        #[arg(value_enum)]
        scope: ScopeArg,
    },
    /// Printed formulas that disagree with independent computations.
    Errata,
    /// Liaison checks among catalog types.
    Liaison,
    /// Auxiliary data for the degree-twelve scroll over a K3 surface.
    TypeO,
    /// Write the built-in catalog as JSON.
    Catalog {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ScrollCommand {
    /// Solve the threefold-over-surface system at degree d.
    #[command(allow_negative_numbers = true)]
    Solve {
        d: i64,
        /// Family parameter at d = 8 (default: fixed by χ = 1).
        #[arg(long)]
        t: Option<i64>,
    },
    /// Determinant and symbolic solution of the system.
    System,
    /// Even degrees at which the fourfold-over-threefold system is solvable.
    FourfoldScan {
        #[arg(long, default_value_t = 100)]
        max: i64,
    },
    /// Degrees forced by cutting the degree-two relation with a fiber.
    FiberCuts,
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    /// Degree cascade and candidate pairs.
    Cascade,
    /// Genus bound for a curve of degree d in Q^3 on no surface of degree below 2k.
    Pi { d: i64, k: i64 },
}

#[derive(Subcommand, Debug)]
enum ExcludeCommand {
    /// Exclude the candidate (d, g) pairs above degree 12.
    Pairs,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Run every check on a catalog type (a label or `all`).
    Type {
        label: String,
        /// Catalog JSON to verify instead of the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Check a presentation `E -> F` of I_X(l).
    Presentation {
        spec: String,
        #[arg(short, long, default_value_t = 5)]
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

fn run(cli: &Cli) -> Result<Option<report::Report>, Failure> {
    let usage = |e: quadscroll_core::Error| Failure::Usage(e.to_string());
    let out: Outcome = match &cli.command {
        Command::Chow { expr, n, pairing } => {
            let p = match pairing {
                PairingArg::Parity => MiddlePairing::Parity,
                PairingArg::Kronecker => MiddlePairing::Kronecker,
            };
            commands::chow(expr, *n, p)
        }
        Command::Invariants { d, g, chi_s, chi_x } => commands::invariants(*d, *g, *chi_s, *chi_x, cli.errata),
        Command::Scroll(ScrollCommand::Solve { d, t }) => commands::scroll_solve(*d, *t),
        Command::Scroll(ScrollCommand::System) => commands::scroll_system(),
        Command::Scroll(ScrollCommand::FourfoldScan { max }) => commands::fourfold_scan(*max),
        Command::Scroll(ScrollCommand::FiberCuts) => commands::fiber_cuts(),
        Command::Bounds(BoundsCommand::Cascade) => commands::bounds_cascade(),
        Command::Bounds(BoundsCommand::Pi { d, k }) => commands::bounds_pi(*d, *k),
        Command::Exclude(ExcludeCommand::Pairs) => commands::exclude_pairs(),
        Command::Verify(VerifyCommand::Type { label, catalog }) => {
            let entries = match catalog {
                Some(path) => catalog::load(path).map_err(Failure::Io)?,
                None => quadscroll_core::classify::catalog(),
            };
            commands::verify_types(label, &entries)
        }
        Command::Verify(VerifyCommand::Presentation { spec, n }) => commands::verify_presentation(spec, *n),
        Command::Table { scope } => commands::table(match scope {
            ScopeArg::D10 => TableScope::UpToDegreeTen,
            ScopeArg::Scrolls => TableScope::Scrolls,
        }),
        Command::Errata => commands::errata_report(),
        Command::Liaison => commands::liaison(),
        Command::TypeO => commands::type_o(),
        Command::Catalog { output } => {
            let text = catalog::to_json(&catalog::builtin());
            match output {
                Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            return Ok(None);
        }
    };
    let mut rep = out.map_err(usage)?;
    if cli.errata && !matches!(cli.command, Command::Errata) {
        rep.append(commands::errata_report().map_err(usage)?);
    }
    Ok(Some(rep))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(rep)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(rep.render(cli.format).as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if rep.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
