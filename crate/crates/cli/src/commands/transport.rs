//! `transport`: minimal-jerk move times for the moves a logical gate needs,
//! plus the physical temperatures behind a range of heating budgets.

use atomarch::transport::{harmonic_length, minimal_jerk_time, temperature_from_quanta};
use atomarch::units::UnitValue;
use serde_json::json;

use crate::error::CliError;
use crate::report::{format_time, CsvDoc, Report};
use crate::scenario::Scenario;

use super::CommandOutput;

/// Mean motional occupations worth tabulating as temperatures.
const OCCUPATION_SAMPLES: [f64; 6] = [0.01, 0.05, 0.1, 0.5, 1.0, 2.0];

struct Move {
    label: &'static str,
    distance: UnitValue,
    allowance: f64,
    time: UnitValue,
}

pub fn run(scenario: &Scenario) -> Result<CommandOutput, CliError> {
    let spec = scenario.kinematics();
    let budget = scenario.round_trip_budget;
    let pitch = scenario.layout.array_pitch();
    let traverse = pitch.scaled(f64::from(scenario.code_distance));

    let one_way = |distance: &UnitValue| minimal_jerk_time(&spec, distance, budget / 2.0);
    let moves = vec![
        Move {
            label: "one lattice period, one way",
            distance: pitch,
            allowance: budget / 2.0,
            time: one_way(&pitch)?,
        },
        Move {
            label: "patch traverse (d periods), one way",
            distance: traverse,
            allowance: budget / 2.0,
            time: one_way(&traverse)?,
        },
        Move {
            label: "patch traverse, round trip",
            distance: traverse.scaled(2.0),
            allowance: budget,
            time: one_way(&traverse)?.scaled(2.0),
        },
    ];

    let temperatures: Vec<(f64, f64)> = OCCUPATION_SAMPLES
        .iter()
        .map(|&n| {
            temperature_from_quanta(n, &scenario.trap_frequency).map(|t| (n, t.magnitude()))
        })
        .collect::<Result<_, _>>()?;

    let x_ho = harmonic_length(&spec);
    let data = json!({
        "species": scenario.species.name,
        "trap_omega0_rad_per_s": scenario.trap_frequency.magnitude(),
        "harmonic_length_m": x_ho.magnitude(),
        "round_trip_budget_quanta": budget,
        "moves": moves
            .iter()
            .map(|m| {
                json!({
                    "label": m.label,
                    "distance_m": m.distance.magnitude(),
                    "heating_allowance_quanta": m.allowance,
                    "time_s": m.time.magnitude(),
                })
            })
            .collect::<Vec<_>>(),
        "temperatures": temperatures
            .iter()
            .map(|(n, t)| json!({"mean_quanta": n, "kelvin": t}))
            .collect::<Vec<_>>(),
    });

    let mut report = Report::new("transport", scenario, data);
    report.push_note(format!(
        "each one-way move spends half the round-trip heating budget of {budget} quanta"
    ));

    let mut table = CsvDoc::with_provenance(
        ["label", "distance_m", "heating_allowance_quanta", "time_s"],
        &report,
    );
    table.push_comment(
        "temperatures per mean occupation are in the JSON report".to_owned(),
    );
    for m in &moves {
        table.push_row([
            m.label.to_owned(),
            m.distance.magnitude().to_string(),
            m.allowance.to_string(),
            m.time.magnitude().to_string(),
        ]);
    }

    let mut human = String::new();
    human.push_str(&format!(
        "species: {}   trap omega0: 2pi x {:.4} kHz   harmonic length: {:.4} nm\n\n",
        scenario.species.name,
        scenario.trap_frequency.magnitude() / std::f64::consts::TAU / 1e3,
        x_ho.magnitude() * 1e9
    ));
    human.push_str(&format!(
        "{:<38} {:>12} {:>10} {:>14}\n",
        "move", "distance", "allowance", "time"
    ));
    for m in &moves {
        human.push_str(&format!(
            "{:<38} {:>9.4} um {:>10} {:>14}\n",
            m.label,
            m.distance.magnitude() * 1e6,
            m.allowance,
            format_time(m.time.magnitude())
        ));
    }
    human.push_str("\ntemperature of a thermal state per mean occupation:\n");
    for (n, t) in &temperatures {
        human.push_str(&format!("  <n> = {n:<5}  T = {:.4} uK\n", t * 1e6));
    }

    Ok(CommandOutput::new(report, table, human))
}
