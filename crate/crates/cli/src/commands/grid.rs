//! `nisq-grid` (and `figure fig2`): the double-log classical simulation cost
//! over a grid of qubit counts and gate infidelities.

use atomarch::nisq::{cost_grid, GridSpec};
use serde_json::json;

use crate::cli::{parse_number_range, GridArgs};
use crate::error::CliError;
use crate::report::{CsvDoc, Report};
use crate::scenario::Scenario;

use super::CommandOutput;

pub fn run(
    scenario: &Scenario,
    args: &GridArgs,
    command: &str,
) -> Result<CommandOutput, CliError> {
    let qubit_range = parse_number_range("--n-range", &args.n_range)?;
    let infidelity_range = parse_number_range("--epsilon-range", &args.epsilon_range)?;
    if args.resolution < 2 {
        return Err(CliError::usage(format!(
            "--resolution must be at least 2, got {}",
            args.resolution
        )));
    }
    let spec = GridSpec::new(
        qubit_range,
        infidelity_range,
        args.resolution as usize,
        args.log_n,
    )?;
    let points = cost_grid(&spec)?;

    let data = json!({
        "qubit_range": [qubit_range.0, qubit_range.1],
        "infidelity_range": [infidelity_range.0, infidelity_range.1],
        "resolution": args.resolution,
        "log_qubit_axis": args.log_n,
        "points": points
            .iter()
            .map(|p| {
                json!({
                    "n": p.qubit_count,
                    "epsilon": p.gate_infidelity,
                    "loglog_cost": p.double_log_cost,
                })
            })
            .collect::<Vec<_>>(),
    });

    let mut report = Report::new(command, scenario, data);
    report.push_note(
        "circuit depth is taken as 1/epsilon, the deepest circuit a gate of that \
         infidelity usefully supports"
            .to_owned(),
    );

    let mut table = CsvDoc::with_provenance(["n", "epsilon", "loglog_cost"], &report);
    for p in &points {
        table.push_row([
            p.qubit_count.to_string(),
            p.gate_infidelity.to_string(),
            p.double_log_cost.to_string(),
        ]);
    }

    Ok(CommandOutput::grid(report, table))
}
