//! `realrep`: structure queries and real decompositions from the command line.
//!
//! Exit status is 0 on success, 2 for malformed input or failed checks, and
//! 3 when eigenvalues leave `ℚ(i)`.

mod job;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use realrep::decomp::{decompose_in, verify_decomposition, DecomposeOptions, DecompositionReport, SeedOrder};
use realrep::liealg::RootData;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Engine(realrep::Error),
    ChecksFailed,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "{s}"),
            CliError::Parse(s) => write!(f, "parse error: {s}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::ChecksFailed => write!(f, "verification failed"),
        }
    }
}

impl From<realrep::Error> for CliError {
    fn from(e: realrep::Error) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(e) if matches!(e.root_cause(), realrep::Error::EigenvalueOutsideField(_)) => 3,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "realrep", version, about = "Real decompositions of representations of real semisimple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebra, Cartan and representation summary.
    Info(Common),
    /// Roots with sign and simplicity.
    Roots(Common),
    /// Highest weights and their Theta orbits.
    Weights(Common),
    /// The Weyl word and omega in the defining and adjoint realizations.
    Omega(Common),
    /// Decompose the representation into real irreducibles.
    Decompose(Common),
    /// Re-verify a saved JSON report.
    Check {
        #[command(flatten)]
        common: Common,
        /// Report produced by `decompose --out json`.
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(clap::Args, Debug)]
struct Common {
    /// so(p,q), so(n), sl(n) or su(2).
    #[arg(long)]
    algebra: Option<String>,
    /// Generator indices (`e1,e6`) or a JSON list of indices and coefficient vectors.
    #[arg(long)]
    cartan: Option<String>,
    /// defining, adjoint, end-left, tensor2 or poly:d.
    #[arg(long)]
    rep: Option<String>,
    /// JSON job file with `n`, `generators` and optionally `cartan`, `rep`, `anti`.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Out::Text)]
    out: Out,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    verify: Switch,
    #[arg(long, value_enum, default_value_t = Order::Default)]
    seed_order: Order,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Out {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    Default,
    Lex,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err((text, e)) => {
            print!("{text}");
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Returns the text to print, plus the error when the run failed after
/// producing output.
fn run(cmd: Command) -> Result<String, (String, CliError)> {
    let fail = |e: CliError| (String::new(), e);
    let (common, report_path) = match &cmd {
        Command::Check { common, report } => (common, Some(report)),
        Command::Info(c) | Command::Roots(c) | Command::Weights(c) | Command::Omega(c) | Command::Decompose(c) => {
            (c, None)
        }
    };
    let job = job::load(&job::Inputs {
        algebra: common.algebra.as_deref(),
        cartan: common.cartan.as_deref(),
        rep: common.rep.as_deref(),
        file: common.input.as_deref(),
    })
    .map_err(fail)?;
    let json = common.out == Out::Json;

    if let Command::Info(_) = &cmd {
        return Ok(output::info(&job, json));
    }
    let rd = RootData::new(&job.algebra, &job.cartan).map_err(|e| fail(e.into()))?;
    let need_rep = || {
        job.rep
            .as_ref()
            .ok_or_else(|| fail(CliError::Usage("this command needs a representation (--rep)".into())))
    };
    match &cmd {
        Command::Info(_) => unreachable!(),
        Command::Roots(_) => Ok(output::roots(&rd, json)),
        Command::Omega(_) => Ok(output::omega(&rd, json)),
        Command::Weights(_) => output::weights(need_rep()?, &rd, json).map_err(|e| fail(e.into())),
        Command::Decompose(_) => {
            let rep = need_rep()?;
            let opts = DecomposeOptions {
                verify: common.verify == Switch::On,
                seed_order: match common.seed_order {
                    Order::Default => SeedOrder::Default,
                    Order::Lex => SeedOrder::Lex,
                },
            };
            let report = decompose_in(rep, &job.algebra, &rd, &opts).map_err(|e| fail(e.into()))?;
            let text = output::report(&report, json);
            match &report.checks {
                Some(c) if !c.all_passed() => Err((text, CliError::ChecksFailed)),
                _ => Ok(text),
            }
        }
        Command::Check { .. } => {
            let rep = need_rep()?;
            let path = report_path.expect("check has a report");
            let raw = std::fs::read_to_string(path)
                .map_err(|e| fail(CliError::Usage(format!("{}: {e}", path.display()))))?;
            let report: DecompositionReport =
                serde_json::from_str(&raw).map_err(|e| fail(CliError::Parse(e.to_string())))?;
            if report.space_dim != rep.dim() {
                return Err(fail(CliError::Usage(format!(
                    "report is for dimension {}, representation has dimension {}",
                    report.space_dim,
                    rep.dim()
                ))));
            }
            let summary = verify_decomposition(&report, rep, &job.algebra, &rd);
            let text = output::checks(&summary, json);
            if summary.all_passed() {
                Ok(text)
            } else {
                Err((text, CliError::ChecksFailed))
            }
        }
    }
}
