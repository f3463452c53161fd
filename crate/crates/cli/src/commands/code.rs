//! `code`: logical error rate of the scenario's surface code, physical-qubit
//! overheads for the logical grid, and optionally the smallest distance
//! reaching a requested inverse logical error rate.

use atomarch::surfacecode::{
    logical_error_rate, min_distance_for_target, physical_qubit_count, CodeInstance,
};
use serde_json::json;

use crate::cli::CodeArgs;
use crate::error::CliError;
use crate::report::{CsvDoc, Report};
use crate::scenario::Scenario;

use super::CommandOutput;

pub fn run(scenario: &Scenario, args: &CodeArgs) -> Result<CommandOutput, CliError> {
    let d = scenario.code_distance;
    let p = scenario.physical_error;
    let raw_pl = logical_error_rate(&scenario.code_model, p, d)?;
    let p_l = raw_pl.min(1.0);

    let per_logical = physical_qubit_count(&CodeInstance::new(d, 1)?);
    let logical_count = scenario.grid.site_count();
    let total = physical_qubit_count(&CodeInstance::new(d, logical_count)?);

    let target = match args.target {
        Some(target_inverse_pl) => {
            let min_d = min_distance_for_target(&scenario.code_model, p, target_inverse_pl)?;
            let achieved = 1.0 / logical_error_rate(&scenario.code_model, p, min_d)?;
            Some((target_inverse_pl, min_d, achieved))
        }
        None => None,
    };

    let data = json!({
        "distance": d,
        "physical_error": p,
        "logical_error_rate": p_l,
        "inverse_logical_error_rate": 1.0 / p_l,
        "qubits": {
            "per_logical": per_logical,
            "logical_count": logical_count,
            "total": total,
        },
        "target": target.map(|(requested, min_d, achieved)| {
            json!({
                "requested_inverse_pl": requested,
                "min_distance": min_d,
                "achieved_inverse_pl": achieved,
            })
        }),
    });

    let mut report = Report::new("code", scenario, data);
    if raw_pl > 1.0 {
        report.push_note(format!(
            "scaling fit returned p_L = {raw_pl:.3e} > 1, clamped to 1; the fit only \
             holds below threshold"
        ));
    }
    if let Some((requested, min_d, _)) = target {
        report.push_note(format!(
            "reaching 1/p_L = {requested} at p = {p} needs distance {min_d}"
        ));
    }

    let mut table = CsvDoc::with_provenance(
        [
            "distance",
            "physical_error",
            "logical_error_rate",
            "inverse_logical_error_rate",
            "qubits_per_logical",
            "logical_count",
            "total_physical_qubits",
        ],
        &report,
    );
    table.push_row([
        d.to_string(),
        p.to_string(),
        p_l.to_string(),
        (1.0 / p_l).to_string(),
        per_logical.to_string(),
        logical_count.to_string(),
        total.to_string(),
    ]);

    let mut human = String::new();
    human.push_str(&format!("code distance:            {d}\n"));
    human.push_str(&format!("physical error rate:      {p}\n"));
    human.push_str(&format!("logical error per round:  {p_l:.3e}\n"));
    human.push_str(&format!("rounds per logical error: {:.3e}\n", 1.0 / p_l));
    human.push_str(&format!(
        "qubits: {per_logical} per logical x {logical_count} logicals = {total} total\n"
    ));
    if let Some((requested, min_d, achieved)) = target {
        human.push_str(&format!(
            "target 1/p_L = {requested}: distance {min_d} suffices (reaches {achieved:.3e})\n"
        ));
    }

    Ok(CommandOutput::new(report, table, human))
}
