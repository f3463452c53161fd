//! Scenario files: TOML ingestion, dotted-key overrides, defaulting, and the
//! reproducibility hash.
//!
//! A scenario describes one machine configuration across eight sections
//! (atom, trap, channel, gates, layout, code, grid, transport). Every field
//! is optional; anything missing falls back to the reference configuration
//! and the fallback is recorded so reports can print exactly what was
//! assumed. The resolved scenario is hashed over a canonical text form, so
//! two reports carry the same hash if and only if every resolved value
//! matches.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use atomarch::catalog::{protocol_lookup, species_lookup, ProtocolEntry, SpeciesParams};
use atomarch::connectivity::{
    min_pair_pitch, ComparisonInputs, GateTimings, LayoutParams, LogicalGrid, Routing,
};
use atomarch::rydberg::ForsterChannel;
use atomarch::surfacecode::{min_distance_for_target, SurfaceCodeModel};
use atomarch::transport::TransportSpec;
use atomarch::units::{parse_quantity, Dimension, UnitValue};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// The reference configuration, bundled into the binary; used whenever
/// `--scenario` is not given.
pub const BUILTIN_SCENARIO: &str = include_str!("../scenarios/paper-defaults.toml");

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    #[serde(default)]
    atom: RawAtom,
    #[serde(default)]
    trap: RawTrap,
    #[serde(default)]
    channel: RawChannel,
    #[serde(default)]
    gates: RawGates,
    #[serde(default)]
    layout: RawLayout,
    #[serde(default)]
    code: RawCode,
    #[serde(default)]
    grid: RawGrid,
    #[serde(default)]
    transport: RawTransport,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAtom {
    species: Option<String>,
    mass: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTrap {
    omega0: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChannel {
    c3_sqrt_d_over_h_mhz_um3: Option<f64>,
    defect_over_h_mhz: Option<f64>,
    lifetime: Option<String>,
    label: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGates {
    t_cz: Option<String>,
    t_beam: Option<String>,
    t_meas: Option<String>,
    protocol: Option<String>,
    parallel_factor: Option<u32>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLayout {
    gate_pair_spacing: Option<String>,
    array_pitch: Option<String>,
    blockade_ratio: Option<f64>,
    pulse_area: Option<f64>,
    eta_max: Option<f64>,
    max_interaction_range: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCode {
    distance: Option<u32>,
    target_inverse_pl: Option<f64>,
    physical_error: Option<f64>,
    prefactor: Option<f64>,
    slope: Option<f64>,
    offset: Option<f64>,
    threshold: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    width: Option<u32>,
    height: Option<u32>,
    zone: Option<[f64; 2]>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTransport {
    round_trip_budget: Option<f64>,
}

/// A fully validated machine configuration, ready to feed the models.
#[derive(Debug, Clone)]
pub struct Scenario {
    /// Where the scenario came from, for report headers.
    pub origin: String,
    pub species: SpeciesParams,
    /// Trap frequency, always stored as an angular frequency.
    pub trap_frequency: UnitValue,
    pub channel: ForsterChannel,
    pub timings: GateTimings,
    pub protocol: &'static ProtocolEntry,
    pub parallel_factor: u32,
    pub layout: LayoutParams,
    pub max_interaction_range: UnitValue,
    pub code_model: SurfaceCodeModel,
    pub code_distance: u32,
    pub physical_error: f64,
    pub grid: LogicalGrid,
    pub round_trip_budget: f64,
    /// Every field that fell back to a default, as `key = value` lines.
    pub applied_defaults: Vec<String>,
    /// SHA-256 over the canonical text of all resolved values.
    pub sha256: String,
}

impl Scenario {
    pub fn kinematics(&self) -> TransportSpec {
        TransportSpec::new(
            self.species.clone(),
            self.trap_frequency,
            self.round_trip_budget,
        )
        .expect("validated at load time")
    }

    pub fn comparison_inputs(&self, routing: Routing) -> ComparisonInputs {
        ComparisonInputs {
            code_distance: self.code_distance,
            timings: self.timings.clone(),
            layout: self.layout.clone(),
            kinematics: self.kinematics(),
            grid: self.grid,
            routing,
            parallel_factor: self.parallel_factor,
            max_interaction_range: self.max_interaction_range,
        }
    }
}

/// Load, override, validate. `path = None` uses the built-in reference
/// scenario; an empty file resolves to all defaults.
pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<Scenario, CliError> {
    let (text, origin) = match path {
        Some(p) => (
            fs::read_to_string(p).map_err(|e| CliError::io("read scenario", p, e))?,
            p.display().to_string(),
        ),
        None => (
            BUILTIN_SCENARIO.to_owned(),
            "built-in reference scenario".to_owned(),
        ),
    };
    let mut tree: toml::Table = text
        .parse()
        .map_err(|e| CliError::scenario(format!("{origin}: {e}")))?;
    apply_overrides(&mut tree, overrides)?;
    let raw: RawScenario = toml::Value::Table(tree)
        .try_into()
        .map_err(|e| CliError::scenario(format!("{origin}: {e}")))?;
    resolve(raw, origin)
}

/// Splice `--set section.key=value` overrides into the parsed tree before
/// validation, so overrides and file values go through identical checks.
fn apply_overrides(tree: &mut toml::Table, overrides: &[String]) -> Result<(), CliError> {
    for spec in overrides {
        let (key, raw_value) = spec.split_once('=').ok_or_else(|| {
            CliError::usage(format!("--set expects KEY=VALUE, got \"{spec}\""))
        })?;
        let key = key.trim();
        let mut segments: Vec<&str> = key.split('.').collect();
        if key.is_empty() || segments.iter().any(|s| s.is_empty()) {
            return Err(CliError::usage(format!(
                "--set key \"{key}\" is not a dotted path"
            )));
        }
        let leaf = segments.pop().expect("at least one segment");
        let mut node = &mut *tree;
        for segment in segments {
            node = node
                .entry(segment)
                .or_insert_with(|| toml::Value::Table(toml::Table::new()))
                .as_table_mut()
                .ok_or_else(|| {
                    CliError::usage(format!(
                        "--set key \"{key}\": \"{segment}\" is not a section"
                    ))
                })?;
        }
        node.insert(leaf.to_owned(), parse_override_value(raw_value.trim()));
    }
    Ok(())
}

/// Values are TOML scalars when they parse as one (numbers, booleans,
/// arrays, quoted strings); anything else is taken as a bare string so
/// `--set atom.species=Cs` works without shell-quoted quotes.
fn parse_override_value(raw: &str) -> toml::Value {
    if let Ok(table) = format!("v = {raw}").parse::<toml::Table>() {
        if let Some(value) = table.get("v") {
            return value.clone();
        }
    }
    toml::Value::String(raw.to_owned())
}

struct Resolver {
    applied_defaults: Vec<String>,
}

impl Resolver {
    fn record(&mut self, key: &str, value: impl std::fmt::Display) {
        self.applied_defaults.push(format!("{key} = {value}"));
    }

    fn quantity(
        &mut self,
        raw: &Option<String>,
        key: &str,
        dimension: Dimension,
        default: &str,
    ) -> Result<UnitValue, CliError> {
        let text = match raw {
            Some(text) => text.as_str(),
            None => {
                self.record(key, format!("\"{default}\""));
                default
            }
        };
        let value = parse_quantity(text)
            .map_err(|e| CliError::scenario(format!("{key}: {e}")))?;
        value
            .expect(dimension)
            .map_err(|e| CliError::scenario(format!("{key}: {e}")))?;
        Ok(value)
    }

    fn angular(
        &mut self,
        raw: &Option<String>,
        key: &str,
        default: &str,
    ) -> Result<UnitValue, CliError> {
        let text = match raw {
            Some(text) => text.as_str(),
            None => {
                self.record(key, format!("\"{default}\""));
                default
            }
        };
        let value = parse_quantity(text)
            .map_err(|e| CliError::scenario(format!("{key}: {e}")))?;
        let rad_per_s = value
            .angular_rad_per_s()
            .map_err(|e| CliError::scenario(format!("{key}: {e}")))?;
        Ok(UnitValue::rad_per_s(rad_per_s))
    }

    fn number(&mut self, raw: Option<f64>, key: &str, default: f64) -> f64 {
        match raw {
            Some(value) => value,
            None => {
                self.record(key, default);
                default
            }
        }
    }

    fn integer(&mut self, raw: Option<u32>, key: &str, default: u32) -> u32 {
        match raw {
            Some(value) => value,
            None => {
                self.record(key, default);
                default
            }
        }
    }
}

fn resolve(raw: RawScenario, origin: String) -> Result<Scenario, CliError> {
    let mut r = Resolver {
        applied_defaults: Vec::new(),
    };

    // atom: a named catalog species, or any name with an explicit mass
    let species = match (&raw.atom.species, &raw.atom.mass) {
        (name, Some(mass_text)) => {
            let mass = parse_quantity(mass_text)
                .map_err(|e| CliError::scenario(format!("atom.mass: {e}")))?;
            let name = name.clone().unwrap_or_else(|| "custom".to_owned());
            SpeciesParams::custom(name, mass)
                .map_err(|e| CliError::scenario(format!("atom.mass: {e}")))?
        }
        (Some(name), None) => species_lookup(name)
            .map_err(|e| CliError::scenario(format!("atom.species: {e}")))?,
        (None, None) => {
            r.record("atom.species", "\"Cs\"");
            species_lookup("Cs").expect("built-in species")
        }
    };

    let trap_frequency = r.angular(&raw.trap.omega0, "trap.omega0", "2pi x 100 kHz")?;

    let c3 = r.number(
        raw.channel.c3_sqrt_d_over_h_mhz_um3,
        "channel.c3_sqrt_d_over_h_mhz_um3",
        16464.0,
    );
    let defect = r.number(raw.channel.defect_over_h_mhz, "channel.defect_over_h_mhz", 0.0);
    let lifetime = r.quantity(&raw.channel.lifetime, "channel.lifetime", Dimension::Time, "198 us")?;
    let label = match &raw.channel.label {
        Some(label) => label.clone(),
        None => {
            let default = "resonant exchange channel, |V|/h = 6 MHz at 14 um";
            r.record("channel.label", format!("\"{default}\""));
            default.to_owned()
        }
    };
    let channel = ForsterChannel::new(c3, defect, lifetime, label)
        .map_err(|e| CliError::scenario(format!("channel: {e}")))?;

    let t_cz = r.quantity(&raw.gates.t_cz, "gates.t_cz", Dimension::Time, "0.46 us")?;
    let t_beam = r.quantity(&raw.gates.t_beam, "gates.t_beam", Dimension::Time, "0.5 us")?;
    let t_meas = r.quantity(&raw.gates.t_meas, "gates.t_meas", Dimension::Time, "1 ms")?;
    let timings = GateTimings::new(t_cz, t_beam, t_meas)
        .map_err(|e| CliError::scenario(format!("gates: {e}")))?;
    let protocol_name = match &raw.gates.protocol {
        Some(name) => name.clone(),
        None => {
            let default = "weak-blockade-with-recoil";
            r.record("gates.protocol", format!("\"{default}\""));
            default.to_owned()
        }
    };
    let protocol = protocol_lookup(&protocol_name)
        .map_err(|e| CliError::scenario(format!("gates.protocol: {e}")))?;
    let parallel_factor = r.integer(raw.gates.parallel_factor, "gates.parallel_factor", 1);
    if parallel_factor == 0 {
        return Err(CliError::scenario(
            "gates.parallel_factor: must be at least 1".to_owned(),
        ));
    }

    let gate_pair_spacing = r.quantity(
        &raw.layout.gate_pair_spacing,
        "layout.gate_pair_spacing",
        Dimension::Length,
        "1.4 um",
    )?;
    let blockade_ratio = r.number(raw.layout.blockade_ratio, "layout.blockade_ratio", 20.0);
    let pulse_area = r.number(raw.layout.pulse_area, "layout.pulse_area", 7.6);
    let eta_max = r.number(raw.layout.eta_max, "layout.eta_max", 0.01);
    let array_pitch = match &raw.layout.array_pitch {
        Some(text) => {
            let value = parse_quantity(text)
                .map_err(|e| CliError::scenario(format!("layout.array_pitch: {e}")))?;
            value
                .expect(Dimension::Length)
                .map_err(|e| CliError::scenario(format!("layout.array_pitch: {e}")))?;
            value
        }
        None => {
            // no pitch given: use the tightest pitch the crosstalk budget
            // allows, computed from the other layout fields
            let probe = LayoutParams::new(
                gate_pair_spacing,
                gate_pair_spacing,
                blockade_ratio,
                pulse_area,
                eta_max,
            )
            .map_err(|e| CliError::scenario(format!("layout: {e}")))?;
            let derived = min_pair_pitch(&probe);
            r.applied_defaults.push(format!(
                "layout.array_pitch = {:.4} um (derived as the minimum pitch \
                 satisfying the crosstalk budget)",
                derived.magnitude() * 1e6
            ));
            derived
        }
    };
    let layout = LayoutParams::new(
        gate_pair_spacing,
        array_pitch,
        blockade_ratio,
        pulse_area,
        eta_max,
    )
    .map_err(|e| CliError::scenario(format!("layout: {e}")))?;
    let max_interaction_range = r.quantity(
        &raw.layout.max_interaction_range,
        "layout.max_interaction_range",
        Dimension::Length,
        "14 um",
    )?;

    let physical_error = r.number(raw.code.physical_error, "code.physical_error", 0.0008);
    let code_model = SurfaceCodeModel::new(
        r.number(raw.code.prefactor, "code.prefactor", 0.08),
        r.number(raw.code.slope, "code.slope", 0.58),
        r.number(raw.code.offset, "code.offset", 0.27),
        r.number(raw.code.threshold, "code.threshold", 0.0053),
    )
    .map_err(|e| CliError::scenario(format!("code: {e}")))?;
    let code_distance = match (raw.code.distance, raw.code.target_inverse_pl) {
        (Some(_), Some(_)) => {
            return Err(CliError::scenario(
                "code.distance and code.target_inverse_pl are mutually exclusive".to_owned(),
            ));
        }
        (Some(d), None) => d,
        (None, Some(target)) => {
            let d = min_distance_for_target(&code_model, physical_error, target)
                .map_err(|e| CliError::scenario(format!("code.target_inverse_pl: {e}")))?;
            r.applied_defaults.push(format!(
                "code.distance = {d} (derived from code.target_inverse_pl = {target})"
            ));
            d
        }
        (None, None) => r.integer(None, "code.distance", 10),
    };

    let width = r.integer(raw.grid.width, "grid.width", 10);
    let height = r.integer(raw.grid.height, "grid.height", 10);
    let zone = match raw.grid.zone {
        Some([x, y]) => Some((x, y)),
        None => {
            r.record("grid.zone", "[4.5, -1.0]");
            Some((4.5, -1.0))
        }
    };
    let grid = LogicalGrid::new(width, height, zone)
        .map_err(|e| CliError::scenario(format!("grid: {e}")))?;

    let round_trip_budget = r.number(
        raw.transport.round_trip_budget,
        "transport.round_trip_budget",
        0.1,
    );

    // validate the kinematics bundle once so Scenario::kinematics can't fail
    TransportSpec::new(species.clone(), trap_frequency, round_trip_budget)
        .map_err(|e| CliError::scenario(format!("transport: {e}")))?;

    let mut scenario = Scenario {
        origin,
        species,
        trap_frequency,
        channel,
        timings,
        protocol,
        parallel_factor,
        layout,
        max_interaction_range,
        code_model,
        code_distance,
        physical_error,
        grid,
        round_trip_budget,
        applied_defaults: r.applied_defaults,
        sha256: String::new(),
    };
    scenario.sha256 = hash_hex(&canonical_text(&scenario));
    Ok(scenario)
}

/// Canonical one-line-per-field text of every resolved value. The hash is
/// over this, so it must not depend on input spelling (only on values).
fn canonical_text(s: &Scenario) -> String {
    let mut text = String::new();
    let kv = |text: &mut String, key: &str, value: &dyn std::fmt::Display| {
        let _ = writeln!(text, "{key}={value}");
    };
    kv(&mut text, "atom.species", &s.species.name);
    kv(&mut text, "atom.mass_kg", &s.species.mass.magnitude());
    kv(
        &mut text,
        "trap.omega0_rad_per_s",
        &s.trap_frequency.magnitude(),
    );
    kv(
        &mut text,
        "channel.c3_sqrt_d_over_h_mhz_um3",
        &s.channel.c3_sqrt_d_over_h_mhz_um3(),
    );
    kv(
        &mut text,
        "channel.defect_over_h_mhz",
        &s.channel.defect_over_h_mhz(),
    );
    kv(
        &mut text,
        "channel.lifetime_s",
        &s.channel.lifetime().magnitude(),
    );
    kv(&mut text, "channel.label", &s.channel.label());
    kv(&mut text, "gates.t_cz_s", &s.timings.t_cz().magnitude());
    kv(&mut text, "gates.t_beam_s", &s.timings.t_beam().magnitude());
    kv(&mut text, "gates.t_meas_s", &s.timings.t_meas().magnitude());
    kv(&mut text, "gates.protocol", &s.protocol.name);
    kv(&mut text, "gates.parallel_factor", &s.parallel_factor);
    kv(
        &mut text,
        "layout.gate_pair_spacing_m",
        &s.layout.gate_pair_spacing().magnitude(),
    );
    kv(
        &mut text,
        "layout.array_pitch_m",
        &s.layout.array_pitch().magnitude(),
    );
    kv(&mut text, "layout.blockade_ratio", &s.layout.blockade_ratio());
    kv(&mut text, "layout.pulse_area", &s.layout.pulse_area());
    kv(&mut text, "layout.eta_max", &s.layout.eta_max());
    kv(
        &mut text,
        "layout.max_interaction_range_m",
        &s.max_interaction_range.magnitude(),
    );
    kv(&mut text, "code.distance", &s.code_distance);
    kv(&mut text, "code.physical_error", &s.physical_error);
    kv(&mut text, "code.prefactor", &s.code_model.prefactor);
    kv(&mut text, "code.slope", &s.code_model.slope);
    kv(&mut text, "code.offset", &s.code_model.offset);
    kv(&mut text, "code.threshold", &s.code_model.threshold);
    kv(&mut text, "grid.width", &s.grid.width());
    kv(&mut text, "grid.height", &s.grid.height());
    match s.grid.zone() {
        Some((x, y)) => kv(&mut text, "grid.zone", &format_args!("{x},{y}")),
        None => kv(&mut text, "grid.zone", &"none"),
    }
    kv(
        &mut text,
        "transport.round_trip_budget",
        &s.round_trip_budget,
    );
    text
}

fn hash_hex(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for byte in digest {
        let _ = write!(hex, "{byte:02x}");
    }
    hex
}
