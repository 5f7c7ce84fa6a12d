//! `jknot`: command-line access to the Chern-Simons computations of
//! [`jknot_cs`], including reproduction of the reference tables.
//!
//! Exit codes: `0` success, `1` numerical failure, `2` domain error (for
//! example a non-hyperbolic orbifold), `64` usage error.

pub mod args;
pub mod commands;
pub mod format;
pub mod record;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
pub use record::{Inputs, Meta, Outcome, OutputRecord, TableRow, TraceRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERICAL: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Why a command did not produce a record.
#[derive(Debug)]
pub enum Failure {
    Compute(jknot_cs::Error),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Compute(e) if e.is_domain() => EXIT_DOMAIN,
            _ => EXIT_NUMERICAL,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Compute(e) => e.fmt(f),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<jknot_cs::Error> for Failure {
    fn from(e: jknot_cs::Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Parses `argv` (program name first), runs the command and writes its record
/// to `out`. Diagnostics go to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let record = match commands::execute(&cli) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(err, "jknot: {f}");
            return f.exit_code();
        }
    };
    match format::render(&record, cli.format, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "jknot: cannot write output: {e}");
            EXIT_NUMERICAL
        }
    }
}
