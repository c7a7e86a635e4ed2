//! `localsurf`: cohomology, deformations and bundle splitting on `Z_k(tau)`.
//!
//! Every subcommand prints one JSON object on stdout. Exit status is 0 on
//! success, 1 when the mathematics says no (the object then has an `error`
//! field) and 2 for bad flags.

mod commands;
mod golden;
mod input;
mod output;

use std::fmt::Debug;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "localsurf", version, about = "Exact computations on the local surfaces Z_k(tau)")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on window enlargements while waiting for a result to stabilize.
    #[arg(long, global = true, env = "LOCALSURF_MAX_STEPS", default_value_t = 8)]
    max_steps: usize,
    #[command(subcommand)]
    command: commands::Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math { kind: String, message: String },
}

impl CliError {
    pub fn usage<E: ToString>(e: E) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn math<E: Debug + ToString>(e: E) -> Self {
        CliError::Math { kind: variant_name(&e), message: e.to_string() }
    }
}

/// Name of the innermost enum variant in the `Debug` form of an error, so
/// `Cohomology(NotTrivial("z^-1"))` becomes `NotTrivial`.
fn variant_name<E: Debug>(e: &E) -> String {
    let text = format!("{e:?}");
    let mut name = String::new();
    for seg in text.split('(') {
        let ident: String = seg.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
        if ident.is_empty() || !ident.starts_with(char::is_uppercase) {
            break;
        }
        name = ident.clone();
        if ident.len() != seg.len() {
            break;
        }
    }
    name
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli.command, cli.max_steps);
    let (value, code) = match result {
        Ok(v) => (v, 0),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Math { kind, message }) => {
            eprintln!("{message}");
            (json!({ "error": kind, "message": message }), 1)
        }
    };
    print(&value, cli.format);
    ExitCode::from(code)
}

fn print(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{v}"),
        Format::Table => print!("{}", output::table(v)),
    }
}
