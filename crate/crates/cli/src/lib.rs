//! Command-line front end for the architecture models: loads a scenario,
//! runs one estimator, and emits JSON reports and CSV tables that carry
//! their own provenance (scenario hash plus every applied default).
//!
//! Exposed as a library so integration tests can resolve scenarios exactly
//! the way the binary does.

pub mod cli;
pub mod commands;
pub mod error;
pub mod report;
pub mod scenario;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command, CommonArgs, FigureCommand};
use commands::CommandOutput;
use error::CliError;
use report::write_atomic;

/// Parse arguments, run the command, report errors on stderr. Exit codes:
/// 0 success, 1 model or scenario error, 2 usage error.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version to stdout (exit 0) and usage errors
            // to stderr (exit 2) on its own
            let code = u8::try_from(e.exit_code()).unwrap_or(2);
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(cause) = source {
                eprintln!("  caused by: {cause}");
                source = cause.source();
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    let scenario = scenario::load(cli.common.scenario.as_deref(), &cli.common.set)?;
    let output = match &cli.command {
        Command::Bound(args) => commands::bound::run(&scenario, args)?,
        Command::Transport => commands::transport::run(&scenario)?,
        Command::Code(args) => commands::code::run(&scenario, args)?,
        Command::Connectivity(args) => commands::connectivity::run(&scenario, args)?,
        Command::NisqGrid(args) => commands::grid::run(&scenario, args, "nisq-grid")?,
        Command::Figure(FigureCommand::Fig2(args)) => {
            commands::grid::run(&scenario, args, "figure fig2")?
        }
        Command::Figure(FigureCommand::Fig5(args)) => commands::figure::fig5(&scenario, args)?,
        Command::Figure(FigureCommand::Fig8(args)) => commands::figure::fig8(&scenario, args)?,
    };
    deliver(&cli.common, output)
}

/// Serialize everything first, then write; a report that cannot be built
/// never leaves a partial artifact behind.
fn deliver(common: &CommonArgs, output: CommandOutput) -> Result<(), CliError> {
    let json_bytes = match &common.json {
        Some(_) => Some(output.report.to_json_bytes()?),
        None => None,
    };
    let csv_bytes = match &common.csv {
        Some(_) => Some(output.table.to_bytes()?),
        None => None,
    };
    for (path, bytes) in &output.extra_files {
        write_atomic(path, bytes)?;
        println!("wrote {}", path.display());
    }
    if let (Some(path), Some(bytes)) = (&common.json, &json_bytes) {
        write_atomic(path, bytes)?;
        println!("wrote {}", path.display());
    }
    if let (Some(path), Some(bytes)) = (&common.csv, &csv_bytes) {
        write_atomic(path, bytes)?;
        println!("wrote {}", path.display());
    }
    if common.json.is_none() && common.csv.is_none() {
        if output.csv_to_stdout {
            let bytes = output.table.to_bytes()?;
            print!("{}", String::from_utf8_lossy(&bytes));
        } else {
            print!("{}", output.human);
            println!();
            print!("{}", report::human_footer(&output.report));
        }
    }
    Ok(())
}
