//! Library side of the `steklov-ball` executable: argument parsing, the
//! subcommands and their CSV/JSON writers. [`run`] is the whole program.

pub mod args;
pub mod commands;
pub mod output;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::Parser;
use steklov_core::Error;

use args::{Cli, Command, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Failure = 1,
    Usage = 2,
    /// `k^2 = 0` was requested.
    ExcludedParameter = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ExitCode, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(ExitCode::Usage, message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidMode(_) | Error::Domain(_) => ExitCode::Usage,
            _ => ExitCode::Failure,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::new(ExitCode::Failure, format!("{e:#}"))
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Output goes to `--out` or `stdout`; diagnostics to `stderr`.
pub fn run(args: Vec<String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let args = match args::inject_config(args) {
        Ok(a) => a,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return ExitCode::Usage as i32;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{text}");
            return e.exit_code();
        }
    };
    let rendered = with_threads(cli.global.threads, || execute(&cli)).and_then(|(code, bytes)| {
        emit(&cli.global.out, &bytes, stdout)?;
        Ok(code)
    });
    match rendered {
        Ok(code) => code as i32,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code as i32
        }
    }
}

#[cfg(feature = "parallel")]
fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> Result<T, CliError> + Send) -> Result<T, CliError> {
    match threads {
        None | Some(0) => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::new(ExitCode::Failure, format!("cannot start {n} threads: {e}")))?
            .install(f),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<T: Send>(_threads: Option<usize>, f: impl FnOnce() -> Result<T, CliError> + Send) -> Result<T, CliError> {
    f()
}

fn emit(out: &Option<PathBuf>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    let result = match out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(bytes).and_then(|_| stdout.flush()).map_err(|e| format!("cannot write output: {e}")),
    };
    result.map_err(|m| CliError::new(ExitCode::Failure, m))
}

/// Runs the command and renders its output.
fn execute(cli: &Cli) -> Result<(ExitCode, Vec<u8>), CliError> {
    let format = cli.global.format;
    let table = match &cli.command {
        Command::Eigs(a) => commands::eigs(a)?,
        Command::Sweep(a) => commands::sweep(a)?,
        Command::Zeros(a) => commands::zeros(a)?,
        Command::Classical(a) => commands::classical(a)?,
        Command::Verify(a) => {
            if !(a.tol > 0.0 && a.tol.is_finite()) {
                return Err(CliError::usage(format!("--tol must be a positive factor, got {}", a.tol)));
            }
            let report = verify::run(a);
            let code = if report.passed { ExitCode::Success } else { ExitCode::Failure };
            let mut buf = Vec::new();
            verify::write_report(&report, format.unwrap_or(Format::Json), &mut buf)?;
            return Ok((code, buf));
        }
    };
    let mut buf = Vec::new();
    table.write(format.unwrap_or(Format::Csv), &mut buf)?;
    Ok((ExitCode::Success, buf))
}
