//! Command-line front end: `paths`, `quiver`, `verify` and `homdim`.
//!
//! Exit codes: 0 success, 1 claim or construction failure, 2 usage, 3 budget.

mod cache;
mod homdim;
mod paths;
mod quiver;
mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

pub use verify::{verify, ClaimResult, ClaimStatus, VerificationReport, CLAIMS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "hauslander", version, about = "Higher Auslander algebras of type A")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate lattice paths in L_{d,n}.
    Paths(paths::PathsArgs),
    /// Print the quiver and relations of one of the algebras.
    Quiver(quiver::QuiverArgs),
    /// Run verification claims and write a report.
    Verify(verify::VerifyArgs),
    /// dim Hom between two objects of the cluster model.
    Homdim(homdim::HomdimArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum AlgebraKind {
    A,
    B,
    B0,
    Lambda,
    Pi,
    Tr,
}

/// Failure with its exit code; the message goes to stderr.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, msg: msg.into() }
    }

    pub fn fail(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_FAIL, msg: msg.into() }
    }
}

pub type CliResult = Result<i32, CliError>;

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let res = match &cli.command {
        Command::Paths(a) => paths::run(a, out),
        Command::Quiver(a) => quiver::run(a, out, err),
        Command::Verify(a) => verify::run(a, out, err),
        Command::Homdim(a) => homdim::run(a, out),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.msg);
            e.code
        }
    }
}

pub(crate) fn require_positive(d: usize, n: usize) -> Result<(), CliError> {
    if d == 0 || n == 0 {
        return Err(CliError::usage(format!("d and n must be positive, got d = {d}, n = {n}")));
    }
    Ok(())
}

pub(crate) fn io_err(e: std::io::Error) -> CliError {
    CliError::fail(format!("write failed: {e}"))
}
