use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jetclosure::{parse_session, run_command, CliError, CommandKind, Options};

/// Jet closures, arc-closedness certificates and Gorenstein reductions of
/// local algebras.
#[derive(Parser)]
#[command(name = "jetclosure", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hasse–Schmidt derivations D_0..D_l of a polynomial
    Derive(Flags),
    /// Generators D_i(g) of the jet ideal
    JetIdeal(Flags),
    /// Reduced basis of the jet ideal plus the closed-point variables
    FiberIdeal(Flags),
    /// Image of a polynomial under the universal jet
    Lambda(Flags),
    /// Jet closure of an ideal at one level
    Closure(Flags),
    /// Cumulative closures C_0, ..., C_L
    Chain(Flags),
    /// Search for a finite-level arc-closedness certificate
    Certify(Flags),
    /// Jet-support closure membership at one level
    JscMember(Flags),
    /// Socle and Gorenstein test of an Artinian quotient
    Socle(Flags),
    /// Embedding S/I into S/(x_1^N, ..., x_n^N)
    Matlis(Flags),
    /// Reduction to Gorenstein quotients with certificates
    Walkthrough(Flags),
    /// Integral closure of a monomial ideal
    Icl(Flags),
}

#[derive(Args)]
struct Flags {
    /// Session file declaring the field, variables and ideals
    #[arg(long)]
    session: Option<PathBuf>,
    #[arg(long)]
    ideal: Option<String>,
    /// Ideal presenting the local algebra (default: the zero ideal)
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long, visible_alias = "element", allow_hyphen_values = true)]
    poly: Option<String>,
    #[arg(long)]
    level: Option<usize>,
    #[arg(long)]
    max_level: Option<usize>,
    /// Exponent N for `matlis` (default: least N with every x_j^N in the modulus)
    #[arg(long)]
    power: Option<u32>,
    /// Print the report as JSON
    #[arg(long)]
    json: bool,
    /// Record elapsed milliseconds in the report
    #[arg(long)]
    timing: bool,
}

impl Command {
    fn split(self) -> (CommandKind, Flags) {
        match self {
            Command::Derive(f) => (CommandKind::Derive, f),
            Command::JetIdeal(f) => (CommandKind::JetIdeal, f),
            Command::FiberIdeal(f) => (CommandKind::FiberIdeal, f),
            Command::Lambda(f) => (CommandKind::Lambda, f),
            Command::Closure(f) => (CommandKind::Closure, f),
            Command::Chain(f) => (CommandKind::Chain, f),
            Command::Certify(f) => (CommandKind::Certify, f),
            Command::JscMember(f) => (CommandKind::JscMember, f),
            Command::Socle(f) => (CommandKind::Socle, f),
            Command::Matlis(f) => (CommandKind::Matlis, f),
            Command::Walkthrough(f) => (CommandKind::Walkthrough, f),
            Command::Icl(f) => (CommandKind::Icl, f),
        }
    }
}

fn run(kind: CommandKind, flags: Flags) -> Result<String, CliError> {
    let session = match &flags.session {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Some(parse_session(&text)?)
        }
        None => None,
    };
    let opts = Options {
        ideal: flags.ideal,
        modulus: flags.modulus,
        poly: flags.poly,
        level: flags.level,
        max_level: flags.max_level,
        power: flags.power,
        timing: flags.timing,
    };
    let report = run_command(session.as_ref(), kind, &opts)?;
    Ok(if flags.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    })
}

fn main() -> ExitCode {
    let (kind, flags) = Cli::parse().command.split();
    let session_path = flags.session.clone();
    match run(kind, flags) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            match (&e, session_path) {
                (CliError::Session(_), Some(path)) => {
                    eprintln!("error[{}]: {}:{e}", e.name(), path.display())
                }
                _ => eprintln!("error[{}]: {e}", e.name()),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
