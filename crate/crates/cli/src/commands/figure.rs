//! `figure fig5` and `figure fig8`: CSV grids behind the two latency
//! figures. fig2 reuses the `nisq-grid` implementation.

use atomarch::connectivity::{longrange_transversal_time, GateTimings};
use atomarch::transport::{minimal_jerk_time, temperature_from_quanta};
use atomarch::units::{Dimension, UnitValue};
use serde_json::json;

use crate::cli::{parse_number_range, parse_quantity_range, Fig5Args, Fig8Args};
use crate::error::CliError;
use crate::report::{CsvDoc, Report};
use crate::scenario::Scenario;

use super::{axis, CommandOutput};

fn check_resolution(resolution: u32) -> Result<(), CliError> {
    if resolution < 2 {
        return Err(CliError::usage(format!(
            "--resolution must be at least 2, got {resolution}"
        )));
    }
    Ok(())
}

fn check_order(flag: &str, lo: f64, hi: f64) -> Result<(), CliError> {
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
        return Err(CliError::usage(format!(
            "{flag} must satisfy 0 < MIN < MAX, got {lo}:{hi}"
        )));
    }
    Ok(())
}

/// Long-range transversal logical gate time over (t_cz, t_beam).
pub fn fig5(scenario: &Scenario, args: &Fig5Args) -> Result<CommandOutput, CliError> {
    check_resolution(args.resolution)?;
    let (cz_lo, cz_hi) = parse_quantity_range("--tcz-range", &args.tcz_range, Dimension::Time)?;
    let (bm_lo, bm_hi) =
        parse_quantity_range("--tbeam-range", &args.tbeam_range, Dimension::Time)?;
    check_order("--tcz-range", cz_lo, cz_hi)?;
    check_order("--tbeam-range", bm_lo, bm_hi)?;
    let d = args.d.unwrap_or(scenario.code_distance);

    let cz_axis = axis(cz_lo, cz_hi, args.resolution, false);
    let beam_axis = axis(bm_lo, bm_hi, args.resolution, false);
    let t_meas = scenario.timings.t_meas();
    let mut rows: Vec<(f64, f64, f64)> =
        Vec::with_capacity(cz_axis.len() * beam_axis.len());
    for &t_cz in &cz_axis {
        for &t_beam in &beam_axis {
            let timings = GateTimings::new(
                UnitValue::seconds(t_cz),
                UnitValue::seconds(t_beam),
                t_meas,
            )?;
            let total =
                longrange_transversal_time(d, &timings, scenario.parallel_factor)?;
            rows.push((t_cz, t_beam, total.magnitude()));
        }
    }

    let data = json!({
        "code_distance": d,
        "parallel_factor": scenario.parallel_factor,
        "tcz_range_s": [cz_lo, cz_hi],
        "tbeam_range_s": [bm_lo, bm_hi],
        "resolution": args.resolution,
        "points": rows
            .iter()
            .map(|(t_cz, t_beam, total)| {
                json!({"t_cz_s": t_cz, "t_beam_s": t_beam, "logical_gate_s": total})
            })
            .collect::<Vec<_>>(),
    });

    let mut report = Report::new("figure fig5", scenario, data);
    report.push_note(format!(
        "logical gate = ceil(d^2 / parallel factor) rounds of (t_cz + t_beam) \
         at d = {d}"
    ));

    let mut table =
        CsvDoc::with_provenance(["t_cz_s", "t_beam_s", "logical_gate_s"], &report);
    for (t_cz, t_beam, total) in &rows {
        table.push_row([t_cz.to_string(), t_beam.to_string(), total.to_string()]);
    }

    Ok(CommandOutput::grid(report, table))
}

/// Transport round-trip time over (distance, heating budget), with an
/// optional temperature-per-quanta inset table.
pub fn fig8(scenario: &Scenario, args: &Fig8Args) -> Result<CommandOutput, CliError> {
    check_resolution(args.resolution)?;
    let (r_lo, r_hi) = parse_quantity_range("--R-range", &args.r_range, Dimension::Length)?;
    let (b_lo, b_hi) = parse_number_range("--budget-range", &args.budget_range)?;
    check_order("--R-range", r_lo, r_hi)?;
    check_order("--budget-range", b_lo, b_hi)?;

    let spec = scenario.kinematics();
    let r_axis = axis(r_lo, r_hi, args.resolution, false);
    let budget_axis = axis(b_lo, b_hi, args.resolution, true);
    let mut rows: Vec<(f64, f64, f64)> =
        Vec::with_capacity(r_axis.len() * budget_axis.len());
    for &r in &r_axis {
        for &budget in &budget_axis {
            let one_way =
                minimal_jerk_time(&spec, &UnitValue::meters(r), budget / 2.0)?;
            rows.push((r, budget, 2.0 * one_way.magnitude()));
        }
    }

    let data = json!({
        "species": scenario.species.name,
        "trap_omega0_rad_per_s": scenario.trap_frequency.magnitude(),
        "distance_range_m": [r_lo, r_hi],
        "budget_range_quanta": [b_lo, b_hi],
        "resolution": args.resolution,
        "points": rows
            .iter()
            .map(|(r, budget, t)| {
                json!({"distance_m": r, "round_trip_budget": budget, "round_trip_s": t})
            })
            .collect::<Vec<_>>(),
    });

    let mut report = Report::new("figure fig8", scenario, data);
    let d = args.d.unwrap_or(scenario.code_distance);
    report.push_note(format!(
        "each leg of the round trip spends half the budget; at d = {d} a patch \
         traverse covers {:.4} um",
        f64::from(d) * scenario.layout.array_pitch().magnitude() * 1e6
    ));

    let mut table = CsvDoc::with_provenance(
        ["distance_m", "round_trip_budget", "round_trip_s"],
        &report,
    );
    for (r, budget, t) in &rows {
        table.push_row([r.to_string(), budget.to_string(), t.to_string()]);
    }

    let mut output = CommandOutput::grid(report, table);
    if let Some(path) = &args.inset_csv {
        let mut inset = CsvDoc::new(["mean_quanta", "kelvin"]);
        inset.push_comment(format!(
            "temperature of a thermal state in the {} trap, omega0 = {} rad/s",
            scenario.species.name,
            scenario.trap_frequency.magnitude()
        ));
        for n in axis(0.01, 10.0, 50, true) {
            let t = temperature_from_quanta(n, &scenario.trap_frequency)?;
            inset.push_row([n.to_string(), t.magnitude().to_string()]);
        }
        output.extra_files.push((path.clone(), inset.to_bytes()?));
    }
    Ok(output)
}
