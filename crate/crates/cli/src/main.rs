//! `ckit`: exact concordance invariants from the command line.
//!
//! Every subcommand prints one report document (JSON by default, plain text
//! with `--format text`) and exits 0 on success, 1 on any input or
//! consistency error, and 2 when exact arithmetic could not decide within
//! the precision cap.

mod commands;
mod report;
mod util;

use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use concordance_core::{Error, Result};
use serde_json::{json, Value};

use report::{InputDigest, ReportDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "ckit",
    about = "Exact knot and link concordance invariants",
    version,
    max_term_width = 100
)]
struct Cli {
    /// Output format for the report document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Include the wall-clock time in the report (off by default so that
    /// repeated runs are byte-identical).
    #[arg(long, global = true)]
    timestamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Signature function of a Seifert matrix: exact jumps, arcs, the value
    /// at -1, the circle integral, and root-of-unity sums.
    Sig(commands::sig::SigArgs),
    /// Alexander polynomials from a PD code, a group presentation, or the
    /// two-variable seed link.
    Alex(commands::alex::AlexArgs),
    /// Torsion module, pairing table, and cyclic metabolizer search.
    Blanchfield(commands::blanchfield::BlanchfieldArgs),
    /// Build an iterated-infection family, run the budget obstruction, and
    /// certify the resulting height bounds.
    Family(commands::family::FamilyArgs),
    /// Close a fact base and certify one relation query with proof traces.
    Certify(commands::certify::CertifyArgs),
    /// Signature defect of companion copies against an explicit budget.
    Obstruct(commands::obstruct::ObstructArgs),
}

/// Exit status for an error: 2 when exactness ran out of refinement budget,
/// 1 for everything else.
fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::PrecisionCap { .. } => 2,
        _ => 1,
    }
}

fn dispatch(
    command: &Command,
    inputs: &mut Vec<InputDigest>,
    warnings: &mut Vec<String>,
) -> Result<(Value, i32)> {
    match command {
        Command::Sig(args) => commands::sig::run(args, inputs, warnings),
        Command::Alex(args) => commands::alex::run(args, inputs, warnings),
        Command::Blanchfield(args) => commands::blanchfield::run(args, inputs, warnings),
        Command::Family(args) => commands::family::run(args, inputs, warnings),
        Command::Certify(args) => commands::certify::run(args, inputs, warnings),
        Command::Obstruct(args) => commands::obstruct::run(args, inputs, warnings),
    }
}

fn main() {
    // Usage errors exit 1, keeping 2 reserved for undecided/precision
    // outcomes; --help and --version print normally and exit 0.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let command_echo: String = std::env::args().skip(1).collect::<Vec<_>>().join(" ");

    let mut inputs = Vec::new();
    let mut warnings = Vec::new();

    let (results, exit_status) = match dispatch(&cli.command, &mut inputs, &mut warnings) {
        Ok((value, code)) => (value, code),
        Err(e) => {
            let code = exit_code_for(&e);
            warnings.push(e.to_string());
            (json!({ "error": e.to_string() }), code)
        }
    };

    let timestamp = cli.timestamp.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });

    let doc = ReportDocument {
        command: command_echo,
        inputs,
        results,
        warnings,
        exit_status,
        timestamp,
    };

    match cli.format {
        Format::Json => print!("{}", doc.to_json()),
        Format::Text => print!("{}", doc.render_text()),
    }

    std::process::exit(exit_status);
}
