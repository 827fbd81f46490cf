//! `skeinlab` command line: each verification is a subcommand that prints a
//! single JSON document (or a plain-text rendering with `--pretty`).
//!
//! Exit codes: 0 for `pass`/`value`, 1 for `fail`, 2 for usage errors.

mod commands;
mod inputs;
pub mod suite;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use skeinlab::chebyshev::Family;

pub const MAX_DEGREE_ENV: &str = "SKEINLAB_MAX_DEGREE";

#[derive(Parser, Debug)]
#[command(name = "skeinlab", version, about = "Exact Chebyshev-basis computations for skein algebras")]
pub struct Cli {
    /// Plain-text rendering instead of one JSON document.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Report wall-clock time as `elapsed_ms`.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChebKind {
    #[value(name = "T")]
    T,
    #[value(name = "S")]
    S,
    #[value(name = "Tbar")]
    Tbar,
    #[value(name = "U")]
    U,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AnnulusOp {
    #[value(name = "Tn")]
    Tn,
    #[value(name = "SnSm")]
    SnSm,
    #[value(name = "Tbar")]
    Tbar,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiskOp {
    Closed,
    Rewrite,
    Right,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>()
        .map_err(|_| format!("unknown family `{s}` (expected one of Tbar, S, Sdiff, U, X)"))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One Chebyshev-type polynomial.
    Cheb {
        #[arg(long, value_enum)]
        kind: ChebKind,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Check every tabulated identity for all indices up to `--max`.
    Identities {
        #[arg(long)]
        max: usize,
    },
    /// Change-of-basis matrix between two named families.
    Basis {
        #[arg(long, value_parser = parse_family)]
        from: Family,
        #[arg(long, value_parser = parse_family)]
        to: Family,
        #[arg(long)]
        max: usize,
    },
    /// Whether family `a` dominates family `b` up to degree `--max`.
    Dominates {
        #[arg(long, value_parser = parse_family)]
        a: Family,
        #[arg(long, value_parser = parse_family)]
        b: Family,
        #[arg(long)]
        max: usize,
    },
    /// Structure constants of the T̄ basis for one arc.
    Products {
        #[arg(long)]
        max: usize,
        /// Also write the table as CSV (`-` for standard output).
        #[arg(long)]
        csv: Option<String>,
    },
    /// Products with β in the annulus model.
    Annulus {
        #[arg(long, value_enum)]
        op: AnnulusOp,
        #[arg(long)]
        n: usize,
    },
    /// Products with z in the punctured disk model.
    Disk {
        #[arg(long, value_enum)]
        op: DiskOp,
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of R_1(β) R_n(α) for R_1 = x + a, R_n = Σ c_k T̄_k.
    Audit {
        /// LaurentPoly as JSON, or a plain integer.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// JSON array of LaurentPoly (integers allowed).
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Commutators of T̄_N(α) with z and β' at a root of unity.
    Transparency {
        #[arg(long)]
        order: u64,
        /// Override the reduction modulus (default 4·order).
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Every check in one run.
    VerifyAll {
        #[arg(long)]
        max: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Value,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::Value => 0,
            Status::Fail => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// A rejected argument, named by its flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError {
    pub flag: String,
    pub message: String,
}

impl UsageError {
    pub(crate) fn new(flag: &str, message: impl Into<String>) -> Self {
        Self {
            flag: flag.to_string(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid value for '{}': {}", self.flag, self.message)
    }
}

/// What a command computed, before rendering.
pub(crate) struct Computed {
    pub status: Status,
    pub payload: Value,
    pub human: String,
    /// CSV text destined for standard output.
    pub csv_stdout: Option<String>,
}

/// Everything the binary needs to print and return.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
    pub result: Option<CommandResult>,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Cheb { .. } => "cheb",
        Command::Identities { .. } => "identities",
        Command::Basis { .. } => "basis",
        Command::Dominates { .. } => "dominates",
        Command::Products { .. } => "products",
        Command::Annulus { .. } => "annulus",
        Command::Disk { .. } => "disk",
        Command::Audit { .. } => "audit",
        Command::Transparency { .. } => "transparency",
        Command::VerifyAll { .. } => "verify-all",
    }
}

fn parse_cap(raw: Option<&str>) -> Result<Option<usize>, UsageError> {
    match raw {
        None => Ok(None),
        Some(s) => s
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| UsageError::new(MAX_DEGREE_ENV, format!("`{s}` is not a nonnegative integer"))),
    }
}

fn usage_outcome(err: UsageError) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {err}\n"),
        exit_code: 2,
        result: None,
    }
}

/// Executes a parsed command. `cap` is the global degree cap, if any.
pub fn execute(cli: &Cli, cap: Option<usize>) -> Result<(CommandResult, Option<String>, String), UsageError> {
    let start = Instant::now();
    let computed = commands::dispatch(&cli.command, cap)?;
    let elapsed = start.elapsed().as_millis() as u64;
    let result = CommandResult {
        command: command_name(&cli.command).to_string(),
        status: computed.status,
        payload: computed.payload,
        elapsed_ms: cli.timing.then_some(elapsed),
    };
    Ok((result, computed.csv_stdout, computed.human))
}

/// Runs with an explicit value for the degree-cap variable.
pub fn run_with_cap<I, T>(argv: I, cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                stdout: if code == 0 { rendered.clone() } else { String::new() },
                stderr: if code == 0 { String::new() } else { rendered },
                exit_code: code,
                result: None,
            };
        }
    };
    let cap = match parse_cap(cap) {
        Ok(c) => c,
        Err(e) => return usage_outcome(e),
    };
    let (result, csv, human) = match execute(&cli, cap) {
        Ok(r) => r,
        Err(e) => return usage_outcome(e),
    };
    let stdout = if let Some(csv) = csv {
        csv
    } else if cli.pretty {
        let mut s = format!("{}: {}\n", result.command, serde_json::to_value(result.status).unwrap_or_default().as_str().unwrap_or(""));
        s.push_str(&human);
        if !human.ends_with('\n') {
            s.push('\n');
        }
        if let Some(ms) = result.elapsed_ms {
            s.push_str(&format!("elapsed: {ms} ms\n"));
        }
        s
    } else {
        let mut s = serde_json::to_string(&result).expect("results serialize");
        s.push('\n');
        s
    };
    Outcome {
        stdout,
        stderr: String::new(),
        exit_code: result.status.exit_code(),
        result: Some(result),
    }
}

/// Runs with the degree cap taken from the environment.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cap = std::env::var(MAX_DEGREE_ENV).ok();
    run_with_cap(argv, cap.as_deref())
}
