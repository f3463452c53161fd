//! `connectivity`: evaluate every logical two-qubit gate strategy on the
//! scenario's grid and rank them by array-averaged gate time.

use atomarch::connectivity::compare_strategies;
use serde_json::json;

use crate::cli::ConnectivityArgs;
use crate::error::CliError;
use crate::report::{format_time, CsvDoc, Report};
use crate::scenario::Scenario;

use super::CommandOutput;

pub fn run(scenario: &Scenario, args: &ConnectivityArgs) -> Result<CommandOutput, CliError> {
    let inputs = scenario.comparison_inputs(args.routing.to_routing());
    let evaluations = compare_strategies(&inputs);

    let strategies = serde_json::to_value(&evaluations)
        .map_err(|e| CliError::scenario(format!("cannot serialize strategies: {e}")))?;
    let data = json!({
        "routing": args.routing.as_str(),
        "code_distance": scenario.code_distance,
        "grid": {
            "width": scenario.grid.width(),
            "height": scenario.grid.height(),
            "zone": scenario.grid.zone().map(|(x, y)| json!([x, y])),
        },
        "strategies": strategies,
    });

    let mut report = Report::new("connectivity", scenario, data);
    report.push_note(format!(
        "array averages weight move phases by the mean cube-root patch separation \
         under {} routing",
        args.routing.as_str()
    ));

    let mut table = CsvDoc::with_provenance(
        atomarch::connectivity::StrategyReport::csv_header(),
        &report,
    );
    for evaluation in &evaluations {
        match &evaluation.outcome {
            Ok(strategy_report) => table.push_row(strategy_report.csv_record()),
            Err(error) => table.push_comment(format!(
                "skipped {}: {error}",
                evaluation.strategy.as_str()
            )),
        }
    }

    let mut human = String::new();
    human.push_str(&format!(
        "{:<26} {:>14} {:>16}\n",
        "strategy", "neighbor", "array average"
    ));
    for evaluation in &evaluations {
        match &evaluation.outcome {
            Ok(strategy_report) => {
                human.push_str(&format!(
                    "{:<26} {:>14} {:>16}\n",
                    evaluation.strategy.as_str(),
                    format_time(strategy_report.neighbor_time().magnitude()),
                    format_time(strategy_report.array_average_time().magnitude()),
                ));
            }
            Err(error) => {
                human.push_str(&format!(
                    "{:<26} failed: {error}\n",
                    evaluation.strategy.as_str()
                ));
            }
        }
    }
    human.push('\n');
    for evaluation in &evaluations {
        if let Ok(strategy_report) = &evaluation.outcome {
            human.push_str(&format!("{}:\n", evaluation.strategy.as_str()));
            for phase in strategy_report.breakdown() {
                human.push_str(&format!(
                    "  {:<42} {}{}\n",
                    phase.label,
                    format_time(phase.duration.magnitude()),
                    if phase.scales_with_distance {
                        "  (scales with patch separation)"
                    } else {
                        ""
                    }
                ));
            }
            for assumption in strategy_report.assumptions() {
                human.push_str(&format!("  note: {assumption}\n"));
            }
        }
    }

    Ok(CommandOutput::new(report, table, human))
}
