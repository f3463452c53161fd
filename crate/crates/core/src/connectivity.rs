//! Logical two-qubit gate latency under three connectivity strategies.
//!
//! A grid of surface-code patches can entangle two logical qubits by
//!
//! * **long-range** transversal CZ gates shot directly between matching data
//!   qubits of the two patches (d² pulses plus beam repointing),
//! * **transport**: pick up one patch, park it next to the other so matching
//!   data qubits form tight pairs, run one transversal pulse, move back, or
//! * **lattice surgery**: merge and split the patches with d rounds of
//!   stabilizer measurement each, either in place or by shuttling a thin
//!   ancilla strip into position.
//!
//! Each strategy yields a [`StrategyReport`]: a phase-by-phase breakdown whose
//! durations sum to the neighbor-pair gate time, plus the assumptions that
//! went into it. Array-level averages reweight the distance-dependent phases
//! by Manhattan-distance statistics of the logical grid (time scales as
//! D^(1/3) because minimal-jerk moves do).
//!
//! The module also owns the crosstalk bound that sets how tightly gate pairs
//! can be packed: parasitic phase accumulation η on a spectator pair a pitch r
//! away from a gate pair at spacing r_g stays below budget when
//! η = 4·(V/ħΩ)·(Ω·t_CZ)·(r_g/r)⁶ / 2π ≤ η_max.

use std::f64::consts::TAU;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::Error;
use crate::transport::{minimal_jerk_time, TransportSpec};
use crate::units::{Dimension, UnitValue};

/// The primitive operation times every strategy is built from.
#[derive(Debug, Clone, PartialEq)]
pub struct GateTimings {
    t_cz: UnitValue,
    t_beam: UnitValue,
    t_meas: UnitValue,
}

impl GateTimings {
    /// `t_cz`: one entangling pulse. `t_beam`: repointing the excitation beam
    /// to a new site. `t_meas`: one projective measurement. All must be
    /// non-negative times; zero is allowed to study limiting cases.
    pub fn new(t_cz: UnitValue, t_beam: UnitValue, t_meas: UnitValue) -> Result<Self, Error> {
        for (name, v) in [("t_cz", &t_cz), ("t_beam", &t_beam), ("t_meas", &t_meas)] {
            let seconds = v.expect(Dimension::Time)?;
            if !(seconds.is_finite() && seconds >= 0.0) {
                return Err(Error::domain(format!(
                    "{name} must be a non-negative time, got {seconds} s"
                )));
            }
        }
        Ok(GateTimings {
            t_cz,
            t_beam,
            t_meas,
        })
    }

    pub fn t_cz(&self) -> UnitValue {
        self.t_cz
    }

    pub fn t_beam(&self) -> UnitValue {
        self.t_beam
    }

    pub fn t_meas(&self) -> UnitValue {
        self.t_meas
    }
}

/// Geometry and crosstalk parameters of the physical qubit array.
#[derive(Debug, Clone, PartialEq)]
pub struct LayoutParams {
    gate_pair_spacing: UnitValue,
    array_pitch: UnitValue,
    blockade_ratio: f64,
    pulse_area: f64,
    eta_max: f64,
}

impl LayoutParams {
    /// `gate_pair_spacing` (r_g): distance of the two atoms of a gate pair.
    /// `array_pitch` (r): distance between neighboring pairs. The pitch can
    /// never be tighter than the pair spacing itself. `blockade_ratio` is
    /// (V/ħ)/Ω, `pulse_area` is Ω·t_CZ, and `eta_max` the tolerated parasitic
    /// phase per gate on a spectator pair.
    pub fn new(
        gate_pair_spacing: UnitValue,
        array_pitch: UnitValue,
        blockade_ratio: f64,
        pulse_area: f64,
        eta_max: f64,
    ) -> Result<Self, Error> {
        let r_g = gate_pair_spacing.expect(Dimension::Length)?;
        let r = array_pitch.expect(Dimension::Length)?;
        if !(r_g.is_finite() && r_g > 0.0) {
            return Err(Error::domain(format!(
                "gate pair spacing must be positive, got {r_g} m"
            )));
        }
        if !(r.is_finite() && r >= r_g) {
            return Err(Error::domain(format!(
                "array pitch ({r} m) cannot be tighter than the gate pair spacing ({r_g} m)"
            )));
        }
        if !(blockade_ratio.is_finite() && blockade_ratio > 0.0) {
            return Err(Error::domain(format!(
                "blockade ratio must be positive, got {blockade_ratio}"
            )));
        }
        if !(pulse_area.is_finite() && pulse_area > 0.0) {
            return Err(Error::domain(format!(
                "pulse area must be positive, got {pulse_area}"
            )));
        }
        if !(eta_max.is_finite() && eta_max > 0.0 && eta_max < 1.0) {
            return Err(Error::domain(format!(
                "crosstalk budget must lie in (0, 1), got {eta_max}"
            )));
        }
        Ok(LayoutParams {
            gate_pair_spacing,
            array_pitch,
            blockade_ratio,
            pulse_area,
            eta_max,
        })
    }

    pub fn gate_pair_spacing(&self) -> UnitValue {
        self.gate_pair_spacing
    }

    pub fn array_pitch(&self) -> UnitValue {
        self.array_pitch
    }

    pub fn blockade_ratio(&self) -> f64 {
        self.blockade_ratio
    }

    pub fn pulse_area(&self) -> f64 {
        self.pulse_area
    }

    pub fn eta_max(&self) -> f64 {
        self.eta_max
    }
}

/// Parasitic phase per gate accumulated by a spectator pair one array pitch
/// away: η = 4 · blockade_ratio · pulse_area · (r_g/r)⁶ / 2π.
pub fn crosstalk_eta(layout: &LayoutParams) -> f64 {
    let r_g = layout.gate_pair_spacing.magnitude();
    let r = layout.array_pitch.magnitude();
    4.0 * layout.blockade_ratio * layout.pulse_area * (r_g / r).powi(6) / TAU
}

/// Tightest array pitch that keeps the parasitic phase within budget:
/// r = r_g · (4 · blockade_ratio · pulse_area / (2π · η_max))^(1/6).
pub fn min_pair_pitch(layout: &LayoutParams) -> UnitValue {
    let r_g = layout.gate_pair_spacing.magnitude();
    let scale =
        (4.0 * layout.blockade_ratio * layout.pulse_area / (TAU * layout.eta_max)).powf(1.0 / 6.0);
    UnitValue::meters(r_g * scale)
}

/// The grid of logical qubits (surface-code patches), in units of the logical
/// pitch d·r, with an optional staging zone for zone-routed architectures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogicalGrid {
    width: u32,
    height: u32,
    zone: Option<(f64, f64)>,
}

impl LogicalGrid {
    /// The zone is a position in logical-pitch units and may sit outside the
    /// grid proper (a staging row below the array is `(x, -1)`).
    pub fn new(width: u32, height: u32, zone: Option<(f64, f64)>) -> Result<Self, Error> {
        if width == 0 || height == 0 {
            return Err(Error::domain(format!(
                "grid must have at least one site per axis, got {width} x {height}"
            )));
        }
        if let Some((x, y)) = zone {
            if !(x.is_finite() && y.is_finite()) {
                return Err(Error::domain("zone coordinates must be finite".to_owned()));
            }
        }
        Ok(LogicalGrid {
            width,
            height,
            zone,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn zone(&self) -> Option<(f64, f64)> {
        self.zone
    }

    pub fn site_count(&self) -> u64 {
        u64::from(self.width) * u64::from(self.height)
    }
}

/// Mean of D^exponent over all ordered pairs of distinct sites, where D is
/// the Manhattan distance in logical-pitch units.
///
/// Evaluated by exact enumeration of the (Δx, Δy) multiplicity table, which
/// is O(width·height) instead of O(sites²) but sums exactly the same terms.
pub fn manhattan_stats(grid: &LogicalGrid, exponent: f64) -> Result<f64, Error> {
    if grid.site_count() < 2 {
        return Err(Error::domain(
            "pair statistics need at least two grid sites".to_owned(),
        ));
    }
    if !exponent.is_finite() {
        return Err(Error::domain("exponent must be finite".to_owned()));
    }
    let w = u64::from(grid.width);
    let h = u64::from(grid.height);
    // ordered coordinate pairs at separation k along an axis of length n
    let axis_multiplicity = |n: u64, k: u64| if k == 0 { n } else { 2 * (n - k) };
    let mut sum = 0.0;
    for dx in 0..w {
        for dy in 0..h {
            if dx == 0 && dy == 0 {
                continue; // same site: not a pair
            }
            let multiplicity = axis_multiplicity(w, dx) * axis_multiplicity(h, dy);
            let distance = (dx + dy) as f64;
            sum += multiplicity as f64 * powf_exact(distance, exponent);
        }
    }
    let distinct_pairs = (w * h) * (w * h) - w * h;
    Ok(sum / distinct_pairs as f64)
}

/// Mean of D^exponent from every grid site to the staging zone.
pub fn zone_stats(grid: &LogicalGrid, exponent: f64) -> Result<f64, Error> {
    let (zx, zy) = grid.zone.ok_or_else(|| {
        Error::config("grid has no staging zone configured (set grid.zone)".to_owned())
    })?;
    if !exponent.is_finite() {
        return Err(Error::domain("exponent must be finite".to_owned()));
    }
    let mut sum = 0.0;
    for x in 0..grid.width {
        for y in 0..grid.height {
            let distance = (f64::from(x) - zx).abs() + (f64::from(y) - zy).abs();
            sum += powf_exact(distance, exponent);
        }
    }
    Ok(sum / grid.site_count() as f64)
}

/// powf, except exponent 1 short-circuits so integer-valued statistics stay
/// exact (the 10x10 pair mean is 20/3 to the last bit).
fn powf_exact(base: f64, exponent: f64) -> f64 {
    if exponent == 1.0 {
        base
    } else {
        base.powf(exponent)
    }
}

/// The connectivity strategies under comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LongRange,
    Transport,
    LatticeSurgeryInPlace,
    LatticeSurgeryTransport,
}

impl Strategy {
    pub fn as_str(&self) -> &'static str {
        match self {
            Strategy::LongRange => "long-range",
            Strategy::Transport => "transport",
            Strategy::LatticeSurgeryInPlace => "lattice-surgery-in-place",
            Strategy::LatticeSurgeryTransport => "lattice-surgery-transport",
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One labeled slice of a logical gate's duration.
#[derive(Debug, Clone, PartialEq)]
pub struct Phase {
    pub label: String,
    pub duration: UnitValue,
    /// Whether this phase stretches with the logical pair separation.
    pub scales_with_distance: bool,
}

impl Phase {
    fn fixed(label: impl Into<String>, duration: UnitValue) -> Self {
        Phase {
            label: label.into(),
            duration,
            scales_with_distance: false,
        }
    }

    fn scaling(label: impl Into<String>, duration: UnitValue) -> Self {
        Phase {
            label: label.into(),
            duration,
            scales_with_distance: true,
        }
    }
}

/// Latency report for one strategy: neighbor-pair gate time, its breakdown,
/// an array-level average, and the modeling assumptions in plain words.
///
/// Invariant: `neighbor_time` is the sum of the breakdown durations, built by
/// summing them, so the two can never drift apart.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyReport {
    strategy: Strategy,
    neighbor_time: UnitValue,
    array_average_time: UnitValue,
    breakdown: Vec<Phase>,
    assumptions: Vec<String>,
}

impl StrategyReport {
    fn from_phases(strategy: Strategy, breakdown: Vec<Phase>, assumptions: Vec<String>) -> Self {
        let total: f64 = breakdown.iter().map(|p| p.duration.magnitude()).sum();
        let neighbor_time = UnitValue::seconds(total);
        StrategyReport {
            strategy,
            neighbor_time,
            // until an average is computed, the neighbor time stands in
            array_average_time: neighbor_time,
            breakdown,
            assumptions,
        }
    }

    pub(crate) fn set_array_average(&mut self, time: UnitValue) {
        self.array_average_time = time;
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn neighbor_time(&self) -> UnitValue {
        self.neighbor_time
    }

    pub fn array_average_time(&self) -> UnitValue {
        self.array_average_time
    }

    pub fn breakdown(&self) -> &[Phase] {
        &self.breakdown
    }

    pub fn assumptions(&self) -> &[String] {
        &self.assumptions
    }

    /// Column names matching [`StrategyReport::csv_record`].
    pub fn csv_header() -> [&'static str; 5] {
        [
            "strategy",
            "neighbor_time_s",
            "array_average_time_s",
            "breakdown",
            "assumptions",
        ]
    }

    /// One CSV row per strategy; the breakdown is folded into a single
    /// `label=seconds` list so the row shape stays fixed.
    pub fn csv_record(&self) -> [String; 5] {
        let breakdown = self
            .breakdown
            .iter()
            .map(|p| format!("{}={}", p.label, p.duration.magnitude()))
            .collect::<Vec<_>>()
            .join("; ");
        [
            self.strategy.as_str().to_owned(),
            self.neighbor_time.magnitude().to_string(),
            self.array_average_time.magnitude().to_string(),
            breakdown,
            self.assumptions.join(" | "),
        ]
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("Phase", 3)?;
        state.serialize_field("phase", &self.label)?;
        state.serialize_field("duration_s", &self.duration.magnitude())?;
        state.serialize_field("scales_with_distance", &self.scales_with_distance)?;
        state.end()
    }
}

/// Stable JSON shape: strategy name, times in seconds, breakdown, assumptions.
impl Serialize for StrategyReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("StrategyReport", 5)?;
        state.serialize_field("strategy", self.strategy.as_str())?;
        state.serialize_field("neighbor_time_s", &self.neighbor_time.magnitude())?;
        state.serialize_field("array_average_time_s", &self.array_average_time.magnitude())?;
        state.serialize_field("breakdown", &self.breakdown)?;
        state.serialize_field("assumptions", &self.assumptions)?;
        state.end()
    }
}

/// Serial transversal gate between two patches at distance d: d² entangling
/// pulses plus beam repointing, divided by how many pulses run in parallel.
pub fn longrange_transversal_time(
    code_distance: u32,
    timings: &GateTimings,
    parallel_factor: u32,
) -> Result<UnitValue, Error> {
    if code_distance < 3 {
        return Err(Error::domain(format!(
            "code distance must be at least 3, got {code_distance}"
        )));
    }
    if parallel_factor == 0 {
        return Err(Error::domain(
            "parallel factor must be at least 1".to_owned(),
        ));
    }
    let rounds = transversal_rounds(code_distance, parallel_factor);
    let per_round = timings.t_cz.magnitude() + timings.t_beam.magnitude();
    Ok(UnitValue::seconds(rounds as f64 * per_round))
}

fn transversal_rounds(code_distance: u32, parallel_factor: u32) -> u64 {
    let pairs = u64::from(code_distance) * u64::from(code_distance);
    pairs.div_ceil(u64::from(parallel_factor))
}

fn format_um(value: &UnitValue) -> String {
    format!("{:.4} um", value.magnitude() * 1e6)
}

/// Transversal gate by transport: carry one patch over d lattice periods,
/// pulse once, carry it back. Burns half the round-trip heating budget per
/// move; beam pointing is set up during the move and costs no extra time.
pub fn transport_transversal_time(
    code_distance: u32,
    layout: &LayoutParams,
    kinematics: &TransportSpec,
    timings: &GateTimings,
) -> Result<StrategyReport, Error> {
    if code_distance < 3 {
        return Err(Error::domain(format!(
            "code distance must be at least 3, got {code_distance}"
        )));
    }
    let move_distance = layout.array_pitch().scaled(f64::from(code_distance));
    let per_move = kinematics.round_trip_budget() / 2.0;
    let t_move = minimal_jerk_time(kinematics, &move_distance, per_move)?;

    let mut assumptions = vec![
        format!(
            "round-trip heating budget {} split across 2 moves ({} quanta per move)",
            kinematics.round_trip_budget(),
            per_move
        ),
        format!(
            "patch hops {} lattice periods ({}) to form tight gate pairs",
            code_distance,
            format_um(&move_distance)
        ),
        "beam pointing is reconfigured during transport and adds no time".to_owned(),
    ];
    assumptions.push(pitch_note(layout));

    Ok(StrategyReport::from_phases(
        Strategy::Transport,
        vec![
            Phase::scaling("move out", t_move),
            Phase::fixed("entangling pulse", timings.t_cz),
            Phase::scaling("move back", t_move),
        ],
        assumptions,
    ))
}

fn pitch_note(layout: &LayoutParams) -> String {
    let eta = crosstalk_eta(layout);
    let min_pitch = min_pair_pitch(layout);
    if eta > layout.eta_max() {
        format!(
            "crosstalk eta = {:.5} exceeds the budget {} at pitch {} (minimum pitch {})",
            eta,
            layout.eta_max(),
            format_um(&layout.array_pitch()),
            format_um(&min_pitch)
        )
    } else {
        format!(
            "crosstalk eta = {:.5} within the budget {} at pitch {}",
            eta,
            layout.eta_max(),
            format_um(&layout.array_pitch())
        )
    }
}

/// How the merge/split patch of a lattice-surgery gate is provisioned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurgeryMode {
    /// The ancilla region is already in place between the patches.
    InPlace,
    /// A thin ancilla strip is shuttled in and out for merge and split.
    Transport,
}

/// Lattice-surgery gate time.
///
/// In place: merge and split each cost d rounds of (pulse + beam + measure),
/// 2d·(t_cz + t_beam + t_meas) total. Transport mode instead shuttles an
/// ancilla strip one lattice period in and out around each of merge and split
/// (`transport` supplies the kinematics and that lattice period; each of the
/// four moves gets a quarter of the round-trip heating budget), and only the
/// measurement rounds keep the factor d: 2·t_cz + 4·t_move + 2d·t_meas.
pub fn lattice_surgery_time(
    code_distance: u32,
    timings: &GateTimings,
    mode: SurgeryMode,
    transport: Option<(&TransportSpec, &UnitValue)>,
) -> Result<StrategyReport, Error> {
    if code_distance < 3 {
        return Err(Error::domain(format!(
            "code distance must be at least 3, got {code_distance}"
        )));
    }
    let d = f64::from(code_distance);
    let rounds = |label: &str, per_round: UnitValue| {
        Phase::fixed(
            format!("{label} ({code_distance} rounds)"),
            per_round.scaled(d),
        )
    };
    match mode {
        SurgeryMode::InPlace => {
            let per_gate_round = UnitValue::seconds(
                timings.t_cz.magnitude() + timings.t_beam.magnitude(),
            );
            Ok(StrategyReport::from_phases(
                Strategy::LatticeSurgeryInPlace,
                vec![
                    rounds("merge gates", per_gate_round),
                    rounds("merge measurements", timings.t_meas),
                    rounds("split gates", per_gate_round),
                    rounds("split measurements", timings.t_meas),
                ],
                vec![
                    "stabilizer rounds run serially; merge and split each take d rounds"
                        .to_owned(),
                    "ancilla region sits between the patches; no transport involved".to_owned(),
                    "logical pairs are lattice neighbors (surgery acts on a shared boundary)"
                        .to_owned(),
                ],
            ))
        }
        SurgeryMode::Transport => {
            let (kinematics, lattice_period) = transport.ok_or_else(|| {
                Error::config(
                    "lattice-surgery transport mode needs transport kinematics \
                     and a lattice period"
                        .to_owned(),
                )
            })?;
            let per_move = kinematics.round_trip_budget() / 4.0;
            let t_move = minimal_jerk_time(kinematics, lattice_period, per_move)?;
            Ok(StrategyReport::from_phases(
                Strategy::LatticeSurgeryTransport,
                vec![
                    Phase::fixed("merge strip move in", t_move),
                    Phase::fixed("merge entangling pulse", timings.t_cz),
                    Phase::fixed("merge strip move out", t_move),
                    rounds("merge measurements", timings.t_meas),
                    Phase::fixed("split strip move in", t_move),
                    Phase::fixed("split entangling pulse", timings.t_cz),
                    Phase::fixed("split strip move out", t_move),
                    rounds("split measurements", timings.t_meas),
                ],
                vec![
                    format!(
                        "round-trip heating budget {} split across 4 strip moves \
                         ({} quanta per move)",
                        kinematics.round_trip_budget(),
                        per_move
                    ),
                    format!(
                        "ancilla strip parks one lattice period away ({})",
                        format_um(lattice_period)
                    ),
                    "strip moves span one lattice period regardless of logical separation"
                        .to_owned(),
                ],
            ))
        }
    }
}

/// How a logical pair is routed when averaging over the array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Routing {
    /// Average over all ordered pairs of distinct patches.
    Pairwise,
    /// Every gate is staged through the grid's zone.
    Zone,
}

/// Array-averaged logical gate time for a strategy report.
///
/// Phases marked as distance-scaling were computed for a unit logical
/// separation and stretch as D^(1/3) (minimal-jerk moves grow with the cube
/// root of distance), so the average reweights them by the mean of D^(1/3)
/// over the chosen routing. Reports without distance-scaling phases pass
/// through unchanged; their assumptions already say why.
pub fn average_logical_gate_time(
    report: &StrategyReport,
    grid: &LogicalGrid,
    routing: Routing,
) -> Result<UnitValue, Error> {
    if !report.breakdown.iter().any(|p| p.scales_with_distance) {
        return Ok(report.neighbor_time);
    }
    let factor = match routing {
        Routing::Pairwise => manhattan_stats(grid, 1.0 / 3.0)?,
        Routing::Zone => zone_stats(grid, 1.0 / 3.0)?,
    };
    let total = report
        .breakdown
        .iter()
        .map(|p| {
            if p.scales_with_distance {
                factor * p.duration.magnitude()
            } else {
                p.duration.magnitude()
            }
        })
        .sum();
    Ok(UnitValue::seconds(total))
}

/// Everything needed to evaluate all strategies on one architecture.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonInputs {
    pub code_distance: u32,
    pub timings: GateTimings,
    pub layout: LayoutParams,
    pub kinematics: TransportSpec,
    pub grid: LogicalGrid,
    pub routing: Routing,
    pub parallel_factor: u32,
    /// Hard range limit for direct long-range gates; exceeding it is a
    /// warning in the report, not an error.
    pub max_interaction_range: UnitValue,
}

/// One strategy's slot in a comparison: either a report or the error that
/// prevented one, so a single failing sub-model never hides the others.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyEvaluation {
    pub strategy: Strategy,
    pub outcome: Result<StrategyReport, Error>,
}

impl Serialize for StrategyEvaluation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("StrategyEvaluation", 3)?;
        state.serialize_field("strategy", self.strategy.as_str())?;
        match &self.outcome {
            Ok(report) => {
                state.serialize_field("report", report)?;
                state.serialize_field("error", &None::<String>)?;
            }
            Err(error) => {
                state.serialize_field("report", &None::<StrategyReport>)?;
                state.serialize_field("error", &Some(error.to_string()))?;
            }
        }
        state.end()
    }
}

/// Evaluate every strategy and sort by array-averaged gate time, fastest
/// first; failed slots sort last in declaration order. Deterministic: same
/// inputs, same bytes out.
pub fn compare_strategies(inputs: &ComparisonInputs) -> Vec<StrategyEvaluation> {
    let mut evaluations = vec![
        StrategyEvaluation {
            strategy: Strategy::LongRange,
            outcome: longrange_report(inputs),
        },
        StrategyEvaluation {
            strategy: Strategy::Transport,
            outcome: transport_report(inputs),
        },
        StrategyEvaluation {
            strategy: Strategy::LatticeSurgeryInPlace,
            outcome: surgery_report(inputs, SurgeryMode::InPlace),
        },
        StrategyEvaluation {
            strategy: Strategy::LatticeSurgeryTransport,
            outcome: surgery_report(inputs, SurgeryMode::Transport),
        },
    ];
    evaluations.sort_by(|a, b| {
        let key = |e: &StrategyEvaluation| match &e.outcome {
            Ok(report) => report.array_average_time.magnitude(),
            Err(_) => f64::INFINITY,
        };
        key(a).total_cmp(&key(b))
    });
    evaluations
}

fn finish_report(
    mut report: StrategyReport,
    inputs: &ComparisonInputs,
) -> Result<StrategyReport, Error> {
    let average = average_logical_gate_time(&report, &inputs.grid, inputs.routing)?;
    report.set_array_average(average);
    Ok(report)
}

fn longrange_report(inputs: &ComparisonInputs) -> Result<StrategyReport, Error> {
    let rounds = transversal_rounds(inputs.code_distance, inputs.parallel_factor);
    // validate inputs through the headline operation first
    longrange_transversal_time(inputs.code_distance, &inputs.timings, inputs.parallel_factor)?;

    let reach = inputs
        .layout
        .gate_pair_spacing()
        .scaled(f64::from(inputs.code_distance));
    let max_range = inputs.max_interaction_range.expect(Dimension::Length)?;
    // 1e-9 headroom so a range configured as exactly d*r_g never warns on
    // float noise
    let range_note = if reach.magnitude() > max_range * (1.0 + 1e-9) {
        format!(
            "interaction distance {} exceeds the configured maximum range {}; \
             direct gates at this distance may be unavailable",
            format_um(&reach),
            format_um(&inputs.max_interaction_range)
        )
    } else {
        format!(
            "interaction distance {} within the configured maximum range {}",
            format_um(&reach),
            format_um(&inputs.max_interaction_range)
        )
    };

    let report = StrategyReport::from_phases(
        Strategy::LongRange,
        vec![
            Phase::fixed(
                format!("entangling pulses ({rounds} rounds)"),
                inputs.timings.t_cz().scaled(rounds as f64),
            ),
            Phase::fixed(
                format!("beam repointing ({rounds} rounds)"),
                inputs.timings.t_beam().scaled(rounds as f64),
            ),
        ],
        vec![
            range_note,
            format!(
                "{} entangling pulses run per parallel round",
                inputs.parallel_factor
            ),
            "gate time is independent of logical separation while pairs stay in range"
                .to_owned(),
        ],
    );
    finish_report(report, inputs)
}

fn transport_report(inputs: &ComparisonInputs) -> Result<StrategyReport, Error> {
    let report = transport_transversal_time(
        inputs.code_distance,
        &inputs.layout,
        &inputs.kinematics,
        &inputs.timings,
    )?;
    finish_report(report, inputs)
}

fn surgery_report(inputs: &ComparisonInputs, mode: SurgeryMode) -> Result<StrategyReport, Error> {
    let lattice_period = inputs.layout.array_pitch();
    let transport = match mode {
        SurgeryMode::InPlace => None,
        SurgeryMode::Transport => Some((&inputs.kinematics, &lattice_period)),
    };
    let report = lattice_surgery_time(inputs.code_distance, &inputs.timings, mode, transport)?;
    finish_report(report, inputs)
}
