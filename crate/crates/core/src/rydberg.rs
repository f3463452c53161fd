//! Rydberg pair interactions and two-qubit gate error floors.
//!
//! The interaction model is a two-channel picture: a pair state couples to one
//! energetically close pair state through a resonant dipole-dipole term
//! Ṽ3(R) = C3·√D / R³ while the two pair states are split by a Förster defect
//! δ. Diagonalizing
//!
//! ```text
//!     | 0    Ṽ3 |
//!     | Ṽ3   δ  |
//! ```
//!
//! and following the branch that connects to the unshifted pair state gives a
//! single interaction curve V(R) that is resonant (∝ 1/R³) when Ṽ3 ≫ |δ| and
//! van der Waals (∝ 1/R⁶, C6 = C3²·D/δ) when Ṽ3 ≪ |δ|.
//!
//! Gate errors are modeled as a lifetime-limited floor ε_min = 2/(|V|·τ)
//! scaled by a protocol-dependent overhead from [`crate::catalog`]. The floor
//! comes from a bound on the integrated Rydberg population accumulated by any
//! entangling pulse, which [`entanglement_bound_check`] evaluates directly on
//! a numerically integrated population trace.

use std::f64::consts::TAU;
use std::io::Read;

use crate::catalog::ProtocolEntry;
use crate::consts::DIPOLE_DIPOLE_HZ_M3;
use crate::error::Error;
use crate::units::{Dimension, UnitValue};

/// A dipole-coupled pair channel: the resonant coefficient, the Förster
/// defect, and the Rydberg-state lifetime that limits gate fidelity.
///
/// The coefficient is stored as the single product C3·√D/h in MHz·µm³ (the
/// form interaction-strength measurements are quoted in); the defect is δ/h in
/// MHz. Compound units are outside the quantity grammar, so both are plain
/// numbers with their units fixed by this type's contract.
#[derive(Debug, Clone, PartialEq)]
pub struct ForsterChannel {
    c3_sqrt_d_over_h_mhz_um3: f64,
    defect_over_h_mhz: f64,
    lifetime: UnitValue,
    label: String,
}

impl ForsterChannel {
    pub fn new(
        c3_sqrt_d_over_h_mhz_um3: f64,
        defect_over_h_mhz: f64,
        lifetime: UnitValue,
        label: impl Into<String>,
    ) -> Result<Self, Error> {
        if !(c3_sqrt_d_over_h_mhz_um3.is_finite() && c3_sqrt_d_over_h_mhz_um3 > 0.0) {
            return Err(Error::domain(format!(
                "channel coefficient C3*sqrt(D)/h must be positive and finite, \
                 got {c3_sqrt_d_over_h_mhz_um3} MHz um^3"
            )));
        }
        if !defect_over_h_mhz.is_finite() {
            return Err(Error::domain("channel defect must be finite".to_owned()));
        }
        let tau = lifetime.expect(Dimension::Time)?;
        if !(tau.is_finite() && tau > 0.0) {
            return Err(Error::domain(format!(
                "channel lifetime must be positive, got {tau} s"
            )));
        }
        Ok(ForsterChannel {
            c3_sqrt_d_over_h_mhz_um3,
            defect_over_h_mhz,
            lifetime,
            label: label.into(),
        })
    }

    pub fn c3_sqrt_d_over_h_mhz_um3(&self) -> f64 {
        self.c3_sqrt_d_over_h_mhz_um3
    }

    pub fn defect_over_h_mhz(&self) -> f64 {
        self.defect_over_h_mhz
    }

    pub fn lifetime(&self) -> UnitValue {
        self.lifetime
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Resonant coupling Ṽ3/h at a pair distance, in Hz.
    pub fn resonant_term_hz(&self, distance: &UnitValue) -> Result<f64, Error> {
        let r_m = distance.expect(Dimension::Length)?;
        if !(r_m.is_finite() && r_m > 0.0) {
            return Err(Error::domain(format!(
                "pair distance must be positive, got {r_m} m"
            )));
        }
        let r_um = r_m * 1e6;
        Ok(self.c3_sqrt_d_over_h_mhz_um3 * 1e6 / (r_um * r_um * r_um))
    }
}

/// Signed pair interaction V(R) as an angular frequency.
///
/// This is the eigenvalue branch of the two-channel Hamiltonian that connects
/// adiabatically to the unshifted pair state:
/// V = (δ − sign(δ)·√(δ² + 4Ṽ3²)) / 2, with V = −Ṽ3 exactly on resonance.
/// For δ > 0 the pair state is pushed down (V < 0); for δ < 0 it is pushed up.
pub fn interaction(channel: &ForsterChannel, distance: &UnitValue) -> Result<UnitValue, Error> {
    let v3_hz = channel.resonant_term_hz(distance)?;
    let delta_hz = channel.defect_over_h_mhz * 1e6;
    let v_hz = if delta_hz == 0.0 {
        -v3_hz
    } else {
        // rationalized form of (δ - sign(δ)·√(δ² + 4Ṽ3²))/2; the textbook
        // expression cancels catastrophically once |δ| >> Ṽ3 and loses the
        // van der Waals tail to rounding
        let root = (delta_hz * delta_hz + 4.0 * v3_hz * v3_hz).sqrt();
        -delta_hz.signum() * 2.0 * v3_hz * v3_hz / (delta_hz.abs() + root)
    };
    Ok(UnitValue::rad_per_s(TAU * v_hz))
}

/// Pair interaction when `bus_atoms` idle atoms sit on the line between the
/// pair, cutting the relevant distance to the nearest segment.
///
/// With one bus atom the pair couples over R/2, a 64× boost deep in the van
/// der Waals regime. The model only covers the single-bus case and only in
/// the vdW regime, enforced as |Ṽ3(R)| < |δ|/10 at the full distance.
pub fn mediated_interaction(
    channel: &ForsterChannel,
    distance: &UnitValue,
    bus_atoms: u32,
) -> Result<UnitValue, Error> {
    match bus_atoms {
        0 => interaction(channel, distance),
        1 => {
            let v3_hz = channel.resonant_term_hz(distance)?.abs();
            let delta_hz = (channel.defect_over_h_mhz * 1e6).abs();
            if delta_hz == 0.0 || v3_hz >= delta_hz / 10.0 {
                return Err(Error::domain(format!(
                    "bus-mediated interaction needs the van der Waals regime: \
                     |V3(R)|/h = {:.4} MHz must stay below |delta|/10h = {:.4} MHz",
                    v3_hz / 1e6,
                    delta_hz / 10.0 / 1e6
                )));
            }
            interaction(channel, &distance.scaled(0.5))
        }
        n => Err(Error::Unsupported(format!(
            "only a single bus atom is modeled, got {n}"
        ))),
    }
}

/// Lifetime-limited floor on the two-qubit gate error: ε_min = 2/(|V|·τ).
pub fn min_gate_error(interaction: &UnitValue, lifetime: &UnitValue) -> Result<f64, Error> {
    let v = interaction.expect(Dimension::AngularFrequency)?.abs();
    let tau = lifetime.expect(Dimension::Time)?;
    if !(tau.is_finite() && tau > 0.0) {
        return Err(Error::domain(format!(
            "lifetime must be positive, got {tau} s"
        )));
    }
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::domain(
            "gate error floor diverges at zero interaction strength".to_owned(),
        ));
    }
    Ok(2.0 / (v * tau))
}

/// Achievable gate error for a concrete protocol: its catalog overhead times
/// the lifetime-limited floor.
pub fn protocol_error(
    protocol: &ProtocolEntry,
    interaction: &UnitValue,
    lifetime: &UnitValue,
) -> Result<f64, Error> {
    Ok(protocol.error_ratio * min_gate_error(interaction, lifetime)?)
}

/// C3 coefficient of a dipole-dipole channel from its radial matrix elements
/// (in atomic units, e·a0²-normalized) and the angular momenta of the two
/// coupled Rydberg states. Returned in Hz·µm³.
///
/// C3 = (e²/4πε0) · ⟨r_a⟩⟨r_b⟩ / (√(2j_α+1)·√(2j_β+1))
pub fn forster_c3(
    radial_a: f64,
    radial_b: f64,
    j_alpha: f64,
    j_beta: f64,
) -> Result<f64, Error> {
    for (label, r) in [("first", radial_a), ("second", radial_b)] {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::domain(format!(
                "{label} radial matrix element must be positive, got {r}"
            )));
        }
    }
    for j in [j_alpha, j_beta] {
        let two_j = 2.0 * j;
        let rounded = two_j.round();
        if !(j > 0.0 && (two_j - rounded).abs() < 1e-9 && (rounded as i64) % 2 == 1) {
            return Err(Error::domain(format!(
                "angular momentum must be a half-odd integer (1/2, 3/2, ...), got {j}"
            )));
        }
    }
    let denominator = (2.0 * j_alpha + 1.0).sqrt() * (2.0 * j_beta + 1.0).sqrt();
    Ok(DIPOLE_DIPOLE_HZ_M3 * 1e18 * radial_a * radial_b / denominator)
}

/// One sample of a two-atom Rydberg population trace: time plus the
/// probabilities of exactly one atom (either of them) or both being excited.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSample {
    pub t_s: f64,
    pub p1: f64,
    pub p2: f64,
    pub p12: f64,
}

/// A validated time series of Rydberg populations during a gate pulse.
#[derive(Debug, Clone, PartialEq)]
pub struct PopulationTrace {
    samples: Vec<TraceSample>,
}

/// Headroom for float noise in supplied traces; populations are probabilities
/// but may arrive from integrators that overshoot by rounding.
const TRACE_TOLERANCE: f64 = 1e-9;

impl PopulationTrace {
    /// Validates that times are finite and strictly ascending and that each
    /// sample is a physical probability assignment: every population in
    /// [0, 1] and p1 + p2 + p12 ≤ 1 (the three excitation patterns are
    /// mutually exclusive events).
    pub fn from_samples(samples: Vec<TraceSample>) -> Result<Self, Error> {
        if samples.is_empty() {
            return Err(Error::Trace("trace has no samples".to_owned()));
        }
        for (i, s) in samples.iter().enumerate() {
            if !s.t_s.is_finite() {
                return Err(Error::Trace(format!("sample {i}: time is not finite")));
            }
            if i > 0 && s.t_s <= samples[i - 1].t_s {
                return Err(Error::Trace(format!(
                    "times must be strictly ascending, sample {i} has t = {} s after {} s",
                    s.t_s,
                    samples[i - 1].t_s
                )));
            }
            for (name, p) in [("p1", s.p1), ("p2", s.p2), ("p12", s.p12)] {
                if !(p.is_finite() && (-TRACE_TOLERANCE..=1.0 + TRACE_TOLERANCE).contains(&p)) {
                    return Err(Error::Trace(format!(
                        "sample {i}: {name} = {p} is not a probability"
                    )));
                }
            }
            if s.p1 + s.p2 + s.p12 > 1.0 + TRACE_TOLERANCE {
                return Err(Error::Trace(format!(
                    "sample {i}: p1 + p2 + p12 = {} exceeds 1",
                    s.p1 + s.p2 + s.p12
                )));
            }
        }
        Ok(PopulationTrace { samples })
    }

    /// Read a trace from CSV with the exact header `t_s,p1,p2,p12`.
    pub fn from_csv(reader: impl Read) -> Result<Self, Error> {
        let mut csv_reader = csv::Reader::from_reader(reader);
        let headers = csv_reader
            .headers()
            .map_err(|e| Error::Trace(format!("cannot read CSV header: {e}")))?;
        let expected = ["t_s", "p1", "p2", "p12"];
        let got: Vec<&str> = headers.iter().collect();
        if got != expected {
            return Err(Error::Trace(format!(
                "CSV header must be t_s,p1,p2,p12, got {}",
                got.join(",")
            )));
        }
        let mut samples = Vec::new();
        for (i, record) in csv_reader.records().enumerate() {
            let record = record.map_err(|e| Error::Trace(format!("CSV row {}: {e}", i + 1)))?;
            let mut fields = [0.0f64; 4];
            for (j, field) in record.iter().enumerate().take(4) {
                fields[j] = field.trim().parse().map_err(|_| {
                    Error::Trace(format!(
                        "CSV row {}: {:?} is not a number",
                        i + 1,
                        field
                    ))
                })?;
            }
            samples.push(TraceSample {
                t_s: fields[0],
                p1: fields[1],
                p2: fields[2],
                p12: fields[3],
            });
        }
        Self::from_samples(samples)
    }

    pub fn samples(&self) -> &[TraceSample] {
        &self.samples
    }

    pub fn duration(&self) -> UnitValue {
        let first = self.samples.first().map(|s| s.t_s).unwrap_or(0.0);
        let last = self.samples.last().map(|s| s.t_s).unwrap_or(0.0);
        UnitValue::seconds(last - first)
    }
}

/// Time-integrated Rydberg population P_R = ∫ (P1 + P2 + 2·P12) dt by the
/// trapezoid rule. The factor 2 counts both excited atoms of the double.
pub fn integrated_population(trace: &PopulationTrace) -> UnitValue {
    let samples = trace.samples();
    let mut integral = 0.0;
    for pair in samples.windows(2) {
        let f0 = pair[0].p1 + pair[0].p2 + 2.0 * pair[0].p12;
        let f1 = pair[1].p1 + pair[1].p2 + 2.0 * pair[1].p12;
        integral += 0.5 * (f0 + f1) * (pair[1].t_s - pair[0].t_s);
    }
    UnitValue::seconds(integral)
}

/// Result of checking a pulse trace against the entanglement bound
/// P_R ≥ 2/|V|.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    /// P_R integrated from the trace.
    pub integrated: UnitValue,
    /// The bound 2/|V|.
    pub required: UnitValue,
    /// integrated / required; at least 1 for any valid entangling pulse.
    pub margin: f64,
    pub satisfied: bool,
}

/// Check the integrated Rydberg population of a pulse against the minimum
/// 2/|V| that any maximally entangling gate must accumulate.
pub fn entanglement_bound_check(
    trace: &PopulationTrace,
    interaction: &UnitValue,
) -> Result<BoundCheck, Error> {
    let v = interaction.expect(Dimension::AngularFrequency)?.abs();
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::domain(
            "entanglement bound diverges at zero interaction strength".to_owned(),
        ));
    }
    let integrated = integrated_population(trace);
    let required = UnitValue::seconds(2.0 / v);
    let margin = integrated.magnitude() / required.magnitude();
    Ok(BoundCheck {
        integrated,
        required,
        margin,
        satisfied: margin >= 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::parse_quantity;

    fn channel(c3: f64, defect_mhz: f64) -> ForsterChannel {
        ForsterChannel::new(c3, defect_mhz, UnitValue::seconds(198e-6), "test").unwrap()
    }

    fn v_over_h_mhz(channel: &ForsterChannel, r: &str) -> f64 {
        interaction(channel, &parse_quantity(r).unwrap())
            .unwrap()
            .magnitude()
            / TAU
            / 1e6
    }

    #[test]
    fn resonant_interaction_at_20_um() {
        // 44000 MHz um^3 / (20 um)^3 = 5.5 MHz, pushed down on resonance
        let ch = channel(44000.0, 0.0);
        let v = v_over_h_mhz(&ch, "20 um");
        assert!((v + 5.5).abs() < 1e-12, "got {v} MHz");
    }

    #[test]
    fn resonant_interaction_scales_as_inverse_cube() {
        let ch = channel(44000.0, 0.0);
        let ratio = v_over_h_mhz(&ch, "10 um") / v_over_h_mhz(&ch, "20 um");
        assert!((ratio - 8.0).abs() < 1e-12);
    }

    #[test]
    fn detuned_interaction_matches_eigenvalue_oracle_value() {
        // (1000 - sqrt(1000^2 + 4*5.5^2))/2 MHz; the van der Waals asymptote
        // -V3^2/delta is -30.25 kHz, the exact branch sits 3e-5 below it.
        let ch = channel(44000.0, 1000.0);
        let v_khz = v_over_h_mhz(&ch, "20 um") * 1e3;
        assert!((v_khz - (-30.249084992857092)).abs() < 1e-9, "got {v_khz}");
        let asymptote = -5.5 * 5.5 / 1000.0 * 1e3;
        assert!((v_khz - asymptote).abs() / asymptote.abs() < 1e-4);
    }

    #[test]
    fn branch_sign_follows_the_defect() {
        let r = parse_quantity("30 um").unwrap();
        let pushed_down = interaction(&channel(44000.0, 1000.0), &r).unwrap();
        let pushed_up = interaction(&channel(44000.0, -1000.0), &r).unwrap();
        assert!(pushed_down.magnitude() < 0.0);
        assert!(pushed_up.magnitude() > 0.0);
        assert!(
            (pushed_down.magnitude() + pushed_up.magnitude()).abs()
                < 1e-12 * pushed_up.magnitude()
        );
    }

    #[test]
    fn log_log_slope_is_minus_three_on_resonance() {
        let ch = channel(44000.0, 0.0);
        let slope = (v_over_h_mhz(&ch, "100 um").abs().ln()
            - v_over_h_mhz(&ch, "10 um").abs().ln())
            / 10f64.ln();
        assert!((slope + 3.0).abs() < 0.05, "slope {slope}");
    }

    #[test]
    fn log_log_slope_is_minus_six_in_the_far_field() {
        // V3(35 um) ~ 1 MHz against a 1000 MHz defect: deep van der Waals
        let ch = channel(44000.0, 1000.0);
        let slope = (v_over_h_mhz(&ch, "350 um").abs().ln()
            - v_over_h_mhz(&ch, "35 um").abs().ln())
            / 10f64.ln();
        assert!((slope + 6.0).abs() < 0.05, "slope {slope}");
    }

    #[test]
    fn mediated_interaction_without_bus_is_plain_interaction() {
        let ch = channel(44000.0, 1000.0);
        let r = parse_quantity("40 um").unwrap();
        assert_eq!(
            mediated_interaction(&ch, &r, 0).unwrap(),
            interaction(&ch, &r).unwrap()
        );
    }

    #[test]
    fn single_bus_evaluates_the_half_distance() {
        let ch = channel(44000.0, 1000.0);
        let mediated = mediated_interaction(&ch, &parse_quantity("40 um").unwrap(), 1).unwrap();
        let direct = interaction(&ch, &parse_quantity("20 um").unwrap()).unwrap();
        assert_eq!(mediated, direct);
    }

    #[test]
    fn single_bus_boost_is_64x_near_the_regime_boundary() {
        // Channel chosen so the half-distance point sits exactly at the
        // guard boundary: V3(R) = delta/80, hence V3(R/2) = delta/10.
        let ch = channel(800_000.0, 1000.0);
        let r = parse_quantity("40 um").unwrap();
        let boosted = mediated_interaction(&ch, &r, 1).unwrap().magnitude().abs();
        let direct = interaction(&ch, &r).unwrap().magnitude().abs();
        let ratio = boosted / direct;
        assert!((ratio - 63.382389104044975).abs() < 1e-9, "ratio {ratio}");
        assert!((ratio / 64.0 - 1.0).abs() < 0.02);
    }

    #[test]
    fn single_bus_boost_approaches_64_deep_in_the_vdw_regime() {
        let ch = channel(64_000.0, 1000.0); // V3(40 um) = delta/1000
        let r = parse_quantity("40 um").unwrap();
        let ratio = mediated_interaction(&ch, &r, 1).unwrap().magnitude()
            / interaction(&ch, &r).unwrap().magnitude();
        assert!((ratio / 64.0 - 1.0).abs() < 1e-3, "ratio {ratio}");
    }

    #[test]
    fn bus_requires_the_vdw_regime() {
        // V3(7 um) = 44000/343 = 128 MHz > delta/10
        let ch = channel(44000.0, 1000.0);
        let err = mediated_interaction(&ch, &parse_quantity("7 um").unwrap(), 1).unwrap_err();
        assert!(matches!(err, Error::Domain(_)), "{err:?}");
        // a resonant channel is never in the vdW regime
        let resonant = channel(44000.0, 0.0);
        assert!(mediated_interaction(&resonant, &parse_quantity("40 um").unwrap(), 1).is_err());
    }

    #[test]
    fn more_than_one_bus_atom_is_unsupported() {
        let ch = channel(44000.0, 1000.0);
        let err = mediated_interaction(&ch, &parse_quantity("40 um").unwrap(), 2).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)), "{err:?}");
    }

    #[test]
    fn gate_error_floor_for_a_strong_pair() {
        let v = parse_quantity("2pi x 215 MHz").unwrap();
        let tau = parse_quantity("198 us").unwrap();
        let eps = min_gate_error(&v, &tau).unwrap();
        assert!((eps - 7.477328780450804e-6).abs() / eps < 1e-12);
    }

    #[test]
    fn gate_error_floor_for_the_long_range_pair() {
        let v = parse_quantity("2pi x 6 MHz").unwrap();
        let tau = parse_quantity("198 us").unwrap();
        let eps = min_gate_error(&v, &tau).unwrap();
        assert!((eps - 2.679376146328205e-4).abs() / eps < 1e-12);
    }

    #[test]
    fn gate_error_floor_rejects_bad_inputs() {
        let v = parse_quantity("2pi x 6 MHz").unwrap();
        let tau = parse_quantity("198 us").unwrap();
        assert!(min_gate_error(&UnitValue::rad_per_s(0.0), &tau).is_err());
        assert!(min_gate_error(&v, &UnitValue::seconds(0.0)).is_err());
        assert!(min_gate_error(&parse_quantity("6 MHz").unwrap(), &tau).is_err());
        assert!(min_gate_error(&v, &parse_quantity("6 MHz").unwrap()).is_err());
    }

    #[test]
    fn protocol_errors_scale_the_floor() {
        use crate::catalog::protocol_lookup;
        let v = parse_quantity("2pi x 6 MHz").unwrap();
        let tau = parse_quantity("198 us").unwrap();
        let floor = min_gate_error(&v, &tau).unwrap();
        let recoil = protocol_lookup("weak-blockade-with-recoil").unwrap();
        let eps = protocol_error(recoil, &v, &tau).unwrap();
        assert_eq!(eps, 3.0 * floor);
        assert!((eps - 8.038e-4).abs() / eps < 1e-3);
    }

    #[test]
    fn forster_c3_scale_for_unit_elements() {
        // j = 1/2 on both states: K / (sqrt(2) * sqrt(2)) ~ 487.5 Hz um^3
        let c3 = forster_c3(1.0, 1.0, 0.5, 0.5).unwrap();
        assert!((c3 - 487.5).abs() < 0.5, "got {c3}");
        let expected = DIPOLE_DIPOLE_HZ_M3 * 1e18 / 2.0;
        assert!((c3 - expected).abs() / expected < 1e-14);
    }

    #[test]
    fn forster_c3_rejects_unphysical_momenta() {
        assert!(forster_c3(1.0, 1.0, 1.0, 0.5).is_err()); // integer j
        assert!(forster_c3(1.0, 1.0, 0.5, 0.0).is_err());
        assert!(forster_c3(1.0, 1.0, -0.5, 0.5).is_err());
        assert!(forster_c3(1.0, 1.0, 0.7, 0.5).is_err());
        assert!(forster_c3(0.0, 1.0, 0.5, 0.5).is_err());
        assert!(forster_c3(1.0, -2.0, 0.5, 0.5).is_err());
        // larger momenta spread the coupling over more Zeeman levels
        let small = forster_c3(1.0, 1.0, 1.5, 1.5).unwrap();
        let quarter_scale = DIPOLE_DIPOLE_HZ_M3 * 1e18 / 4.0;
        assert!((small - quarter_scale).abs() / small < 1e-12);
    }

    fn sin2_trace(duration_s: f64, points: usize) -> PopulationTrace {
        // p12 = sin^2(pi t / T): a symmetric pulse that reaches full double
        // excitation at its midpoint. The exact integral of 2*p12 is T.
        let samples = (0..points)
            .map(|i| {
                let t = duration_s * i as f64 / (points - 1) as f64;
                let s = (std::f64::consts::PI * t / duration_s).sin();
                TraceSample {
                    t_s: t,
                    p1: 0.0,
                    p2: 0.0,
                    p12: s * s,
                }
            })
            .collect();
        PopulationTrace::from_samples(samples).unwrap()
    }

    #[test]
    fn trapezoid_integral_of_a_sin2_pulse_is_the_duration() {
        // the trapezoid rule is exact (up to rounding) for sin^2 over a full
        // period on a uniform grid, so even a coarse trace nails T
        let trace = sin2_trace(0.2e-6, 101);
        let integral = integrated_population(&trace).magnitude();
        assert!((integral - 0.2e-6).abs() / 0.2e-6 < 1e-12, "got {integral}");
    }

    #[test]
    fn trapezoid_error_shrinks_quadratically() {
        // quadratic integrand: p1 = (t/T)^2, exact integral T/3
        let make = |points: usize| {
            let t_end = 1e-6;
            let samples = (0..points)
                .map(|i| {
                    let t = t_end * i as f64 / (points - 1) as f64;
                    TraceSample {
                        t_s: t,
                        p1: (t / t_end) * (t / t_end),
                        p2: 0.0,
                        p12: 0.0,
                    }
                })
                .collect();
            PopulationTrace::from_samples(samples).unwrap()
        };
        let exact = 1e-6 / 3.0;
        let err_coarse = (integrated_population(&make(11)).magnitude() - exact).abs();
        let err_fine = (integrated_population(&make(21)).magnitude() - exact).abs();
        let ratio = err_coarse / err_fine;
        assert!((3.5..4.5).contains(&ratio), "refinement ratio {ratio}");
    }

    #[test]
    fn entanglement_bound_on_a_marginal_pulse() {
        // T = 0.2 us of integrated population against 2/|V| at V = 2pi x 215 MHz:
        // 2/V = 1.48 ns, so the pulse clears the bound by a wide margin.
        let trace = sin2_trace(0.2e-6, 201);
        let v = parse_quantity("2pi x 215 MHz").unwrap();
        let check = entanglement_bound_check(&trace, &v).unwrap();
        assert!(check.satisfied);
        let expected_required = 2.0 / (TAU * 215e6);
        assert!(
            (check.required.magnitude() - expected_required).abs() / expected_required < 1e-12
        );
        assert!((check.margin - check.integrated.magnitude() / expected_required).abs() < 1e-9);
    }

    #[test]
    fn entanglement_bound_detects_an_insufficient_pulse() {
        // a pulse shorter than 2/|V| cannot be maximally entangling
        let trace = sin2_trace(1e-9, 51);
        let v = parse_quantity("2pi x 6 MHz").unwrap(); // 2/V = 53 ns
        let check = entanglement_bound_check(&trace, &v).unwrap();
        assert!(!check.satisfied);
        assert!(check.margin < 1.0);
    }

    #[test]
    fn trace_validation_rejects_bad_series() {
        let good = |t, p12| TraceSample {
            t_s: t,
            p1: 0.0,
            p2: 0.0,
            p12,
        };
        assert!(PopulationTrace::from_samples(vec![]).is_err());
        // non-ascending times
        assert!(
            PopulationTrace::from_samples(vec![good(0.0, 0.1), good(0.0, 0.2)]).is_err()
        );
        // population out of range
        assert!(PopulationTrace::from_samples(vec![good(0.0, 1.5)]).is_err());
        assert!(PopulationTrace::from_samples(vec![good(0.0, -0.5)]).is_err());
        // mutually exclusive events cannot sum above 1
        assert!(PopulationTrace::from_samples(vec![TraceSample {
            t_s: 0.0,
            p1: 0.6,
            p2: 0.6,
            p12: 0.0,
        }])
        .is_err());
    }

    #[test]
    fn trace_csv_round_trip() {
        let csv = "t_s,p1,p2,p12\n0.0,0.0,0.0,0.0\n1e-7,0.1,0.2,0.05\n2e-7,0.0,0.0,0.0\n";
        let trace = PopulationTrace::from_csv(csv.as_bytes()).unwrap();
        assert_eq!(trace.samples().len(), 3);
        assert_eq!(trace.samples()[1].p2, 0.2);
        assert_eq!(trace.duration().magnitude(), 2e-7);
    }

    #[test]
    fn trace_csv_rejects_wrong_header_and_bad_numbers() {
        let bad_header = "time,p1,p2,p12\n0,0,0,0\n";
        let err = PopulationTrace::from_csv(bad_header.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("t_s,p1,p2,p12"), "{err}");

        let bad_number = "t_s,p1,p2,p12\n0.0,zero,0,0\n";
        assert!(PopulationTrace::from_csv(bad_number.as_bytes()).is_err());
    }
}
