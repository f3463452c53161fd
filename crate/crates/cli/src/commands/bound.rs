//! `bound`: interaction strength at a pair separation, the lifetime-limited
//! error floor, what each gate protocol achieves on top of it, and an
//! optional check of a measured pulse against the integrated-population
//! bound.

use std::f64::consts::TAU;
use std::fs::File;

use atomarch::catalog::protocols;
use atomarch::rydberg::{
    entanglement_bound_check, interaction, min_gate_error, protocol_error, PopulationTrace,
};
use atomarch::units::{parse_quantity, Dimension, UnitValue};
use serde_json::json;

use crate::cli::BoundArgs;
use crate::error::CliError;
use crate::report::{format_time, CsvDoc, Report};
use crate::scenario::Scenario;

use super::CommandOutput;

pub fn run(scenario: &Scenario, args: &BoundArgs) -> Result<CommandOutput, CliError> {
    let mut notes = Vec::new();
    let distance = match &args.distance {
        Some(text) => {
            let value = parse_quantity(text)
                .map_err(|e| CliError::usage(format!("--distance: {e}")))?;
            value
                .expect(Dimension::Length)
                .map_err(|e| CliError::usage(format!("--distance: {e}")))?;
            value
        }
        None => {
            let spacing = scenario.layout.gate_pair_spacing();
            let value = spacing.scaled(f64::from(scenario.code_distance));
            notes.push(format!(
                "distance defaults to code distance x gate-pair spacing = {:.4} um, \
                 the widest pair a transversal gate between adjacent patches spans",
                value.magnitude() * 1e6
            ));
            value
        }
    };

    let v = interaction(&scenario.channel, &distance)?;
    let lifetime = scenario.channel.lifetime();
    let v_over_h_mhz = v.magnitude() / TAU / 1e6;
    let error_floor = min_gate_error(&v, &lifetime)?;

    let protocol_rows: Vec<(&str, f64, f64)> = protocols()
        .iter()
        .map(|p| (p.name, p.error_ratio, p.error_ratio * error_floor))
        .collect();
    let selected_error = protocol_error(scenario.protocol, &v, &lifetime)?;

    let trace_check = match &args.trace {
        Some(path) => {
            let file = File::open(path).map_err(|e| CliError::io("read trace", path, e))?;
            let trace = PopulationTrace::from_csv(file)?;
            let check = entanglement_bound_check(&trace, &v)?;
            notes.push(format!(
                "trace {}: integrated Rydberg population {:.4e} s against the bound \
                 2/|V| = {:.4e} s",
                path.display(),
                check.integrated.magnitude(),
                check.required.magnitude()
            ));
            Some(check)
        }
        None => None,
    };

    let data = json!({
        "channel": {
            "label": scenario.channel.label(),
            "c3_sqrt_d_over_h_mhz_um3": scenario.channel.c3_sqrt_d_over_h_mhz_um3(),
            "defect_over_h_mhz": scenario.channel.defect_over_h_mhz(),
            "lifetime_s": lifetime.magnitude(),
        },
        "distance_m": distance.magnitude(),
        "interaction": {
            "v_over_h_mhz": v_over_h_mhz,
            "v_abs_rad_per_s": v.magnitude().abs(),
        },
        "min_gate_error": error_floor,
        "protocols": protocol_rows
            .iter()
            .map(|(name, ratio, error)| {
                json!({"protocol": name, "error_ratio": ratio, "gate_error": error})
            })
            .collect::<Vec<_>>(),
        "selected": {
            "protocol": scenario.protocol.name,
            "error_ratio": scenario.protocol.error_ratio,
            "gate_error": selected_error,
        },
        "trace_check": trace_check.as_ref().map(|check| {
            json!({
                "integrated_population_s": check.integrated.magnitude(),
                "required_s": check.required.magnitude(),
                "margin": check.margin,
                "satisfied": check.satisfied,
            })
        }),
    });

    let mut report = Report::new("bound", scenario, data);
    for note in notes {
        report.push_note(note);
    }

    let mut table = CsvDoc::with_provenance(["protocol", "error_ratio", "gate_error"], &report);
    table.push_comment(format!(
        "interaction V/h = {v_over_h_mhz} MHz at {:.4} um",
        distance.magnitude() * 1e6
    ));
    for (name, ratio, error) in &protocol_rows {
        table.push_row([(*name).to_owned(), ratio.to_string(), error.to_string()]);
    }

    let human = render_human(
        scenario,
        &distance,
        v_over_h_mhz,
        error_floor,
        &protocol_rows,
        trace_check.as_ref(),
    );

    Ok(CommandOutput::new(report, table, human))
}

fn render_human(
    scenario: &Scenario,
    distance: &UnitValue,
    v_over_h_mhz: f64,
    error_floor: f64,
    protocol_rows: &[(&str, f64, f64)],
    trace_check: Option<&atomarch::rydberg::BoundCheck>,
) -> String {
    let mut text = String::new();
    text.push_str(&format!("channel:        {}\n", scenario.channel.label()));
    text.push_str(&format!(
        "pair distance:  {:.4} um\n",
        distance.magnitude() * 1e6
    ));
    text.push_str(&format!("V/h:            {v_over_h_mhz:.4} MHz\n"));
    text.push_str(&format!(
        "lifetime:       {}\n",
        format_time(scenario.channel.lifetime().magnitude())
    ));
    text.push_str(&format!("error floor:    {error_floor:.3e}  (2/(|V| tau))\n\n"));
    text.push_str(&format!(
        "{:<28} {:>6} {:>12}\n",
        "protocol", "ratio", "gate error"
    ));
    for (name, ratio, error) in protocol_rows {
        let marker = if *name == scenario.protocol.name {
            "*"
        } else {
            " "
        };
        text.push_str(&format!("{marker}{name:<27} {ratio:>6} {error:>12.3e}\n"));
    }
    if let Some(check) = trace_check {
        text.push_str(&format!(
            "\ntrace check: integrated population {:.4e} s, bound {:.4e} s, \
             margin {:.3} -> {}\n",
            check.integrated.magnitude(),
            check.required.magnitude(),
            check.margin,
            if check.satisfied {
                "satisfied"
            } else {
                "below the entangling bound"
            }
        ));
    }
    text
}
