//! Atom-transport kinematics in optical-tweezer traps.
//!
//! An atom moved along a minimal-jerk trajectory x(t) = R·(10s³ − 15s⁴ + 6s⁵)
//! with s = t/t_move picks up a mean motional excitation δn that falls steeply
//! with the move duration. Inverting that relation gives the shortest move
//! that stays inside a heating budget:
//!
//! ```text
//! t_move = 2^(1/2) · 15^(1/3) · R^(1/3) / (δn^(1/6) · x_ho^(1/3) · ω0)
//! ```
//!
//! where x_ho = √(ħ/2mω0) is the harmonic-oscillator length of the trap.
//! The sixth-root dependence is why halving a heating budget costs almost
//! nothing in time while distance enters with a cube root.

use crate::catalog::SpeciesParams;
use crate::consts::{BOLTZMANN_KB, HBAR};
use crate::error::Error;
use crate::units::{Dimension, UnitValue};

/// Everything the kinematics formulas need: who is being moved, how stiff the
/// trap is, and how much total heating a round trip may deposit.
#[derive(Debug, Clone, PartialEq)]
pub struct TransportSpec {
    species: SpeciesParams,
    trap_frequency: UnitValue,
    round_trip_budget: f64,
}

impl TransportSpec {
    /// `trap_frequency` must be an angular frequency; convert ordinary
    /// frequencies at the configuration boundary with
    /// [`UnitValue::angular_rad_per_s`]. `round_trip_budget` is the motional
    /// quanta allowed per round trip, split across the individual moves by
    /// whoever schedules them.
    pub fn new(
        species: SpeciesParams,
        trap_frequency: UnitValue,
        round_trip_budget: f64,
    ) -> Result<Self, Error> {
        let omega = trap_frequency.expect(Dimension::AngularFrequency)?;
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::domain(format!(
                "trap frequency must be positive, got {omega} rad/s"
            )));
        }
        if !(round_trip_budget.is_finite() && round_trip_budget > 0.0) {
            return Err(Error::domain(format!(
                "round-trip heating budget must be positive, got {round_trip_budget}"
            )));
        }
        Ok(TransportSpec {
            species,
            trap_frequency,
            round_trip_budget,
        })
    }

    pub fn species(&self) -> &SpeciesParams {
        &self.species
    }

    pub fn trap_frequency(&self) -> UnitValue {
        self.trap_frequency
    }

    pub fn round_trip_budget(&self) -> f64 {
        self.round_trip_budget
    }
}

/// Harmonic-oscillator length x_ho = √(ħ / 2mω0) of the trap ground state.
pub fn harmonic_length(spec: &TransportSpec) -> UnitValue {
    // dimensions were checked when the TransportSpec was built
    let m = spec.species.mass.magnitude();
    let omega = spec.trap_frequency.magnitude();
    UnitValue::meters((HBAR / (2.0 * m * omega)).sqrt())
}

/// 2^(1/2) · 15^(1/3), the shape factor of the minimal-jerk trajectory.
fn jerk_coefficient() -> f64 {
    2f64.sqrt() * 15f64.cbrt()
}

/// Shortest minimal-jerk move over `distance` that heats by at most
/// `delta_n` motional quanta.
pub fn minimal_jerk_time(
    spec: &TransportSpec,
    distance: &UnitValue,
    delta_n: f64,
) -> Result<UnitValue, Error> {
    let r = distance.expect(Dimension::Length)?;
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::domain(format!(
            "move distance must be positive, got {r} m"
        )));
    }
    if !(delta_n.is_finite() && delta_n > 0.0) {
        return Err(Error::domain(format!(
            "heating allowance must be positive, got {delta_n}"
        )));
    }
    let x_ho = harmonic_length(spec).magnitude();
    let omega = spec.trap_frequency.magnitude();
    let t = jerk_coefficient() * r.cbrt() / (delta_n.powf(1.0 / 6.0) * x_ho.cbrt() * omega);
    Ok(UnitValue::seconds(t))
}

/// Motional quanta deposited by a minimal-jerk move of the given duration;
/// the exact inverse of [`minimal_jerk_time`].
pub fn heating_for_time(
    spec: &TransportSpec,
    distance: &UnitValue,
    duration: &UnitValue,
) -> Result<f64, Error> {
    let r = distance.expect(Dimension::Length)?;
    let t = duration.expect(Dimension::Time)?;
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::domain(format!(
            "move distance must be positive, got {r} m"
        )));
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::domain(format!(
            "move duration must be positive, got {t} s"
        )));
    }
    let x_ho = harmonic_length(spec).magnitude();
    let omega = spec.trap_frequency.magnitude();
    let sixth_root = jerk_coefficient() * r.cbrt() / (x_ho.cbrt() * omega * t);
    Ok(sixth_root.powi(6))
}

/// Temperature of a thermal state with the given mean occupation in a trap of
/// the given (angular) frequency: k_B·T = ħω0 / ln(1 + 1/⟨n⟩).
pub fn temperature_from_quanta(
    mean_occupation: f64,
    trap_frequency: &UnitValue,
) -> Result<UnitValue, Error> {
    let omega = trap_frequency.expect(Dimension::AngularFrequency)?;
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::domain(format!(
            "trap frequency must be positive, got {omega} rad/s"
        )));
    }
    if !(mean_occupation.is_finite() && mean_occupation > 0.0) {
        return Err(Error::domain(format!(
            "mean occupation must be positive, got {mean_occupation}"
        )));
    }
    let t = HBAR * omega / (BOLTZMANN_KB * (1.0 + 1.0 / mean_occupation).ln());
    Ok(UnitValue::kelvin(t))
}
