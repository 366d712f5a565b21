use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use recfan::format::to_text;
use recfan::{run, Command, RunConfig, DEFAULT_MAX_DIM};

/// Exact checks and constructions on rational polyhedral complexes.
///
/// Exit status: 0 the property holds or the construction is valid, 1 it
/// fails, 2 the input is malformed or a precondition is violated.
#[derive(Parser, Debug)]
#[command(name = "recfan", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Input complex (same as --input).
    #[arg(value_name = "INPUT", conflicts_with = "input")]
    positional: Option<PathBuf>,
    /// Input complex file: {"dim": n, "cells": [...]}.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Report file (default: standard output). For `fixtures`, the
    /// directory to write the fixture files into.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include point witnesses (uncovered points, ray witnesses).
    #[arg(long)]
    witnesses: bool,
    /// Refuse inputs of higher ambient dimension.
    #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        command: cli.command,
        input: cli.positional.or(cli.input),
        output: cli.output,
        witnesses: cli.witnesses,
        max_dim: cli.max_dim,
    };
    let outcome = run(&cfg);
    eprintln!("{}", outcome.summary);
    let text = to_text(&outcome.report);
    match (&cfg.output, cfg.command) {
        (Some(path), c) if c != Command::Fixtures => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => print!("{text}"),
    }
    ExitCode::from(outcome.status as u8)
}
