//! Rotated surface-code error rates, qubit counts, and readout helpers.
//!
//! The logical error rate per round is an empirical fit to matching-decoder
//! simulations under depolarizing noise,
//!
//! ```text
//! p_L = prefactor · (p / p_th)^(slope·d − offset)
//! ```
//!
//! valid below threshold. A distance-d rotated surface code stores one
//! logical qubit in d² data qubits plus d²−1 measurement ancillas. The
//! readout helpers model amplifying a fragile qubit onto N auxiliary atoms of
//! a second species so its state can be measured fast without blinding the
//! neighbors; the encoding is a repetition mapping, not cloning, which the
//! two-branch structure of [`RepetitionState`] makes explicit.

use num_complex::Complex64;

use crate::error::Error;
use crate::units::{Dimension, UnitValue};

/// Below-threshold scaling fit for the logical error rate per round.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceCodeModel {
    pub prefactor: f64,
    /// Coefficient of d in the exponent.
    pub slope: f64,
    /// Constant subtracted from the exponent.
    pub offset: f64,
    /// Physical error threshold p_th.
    pub threshold: f64,
}

impl SurfaceCodeModel {
    pub fn new(prefactor: f64, slope: f64, offset: f64, threshold: f64) -> Result<Self, Error> {
        if !(prefactor.is_finite() && prefactor > 0.0) {
            return Err(Error::domain(format!(
                "model prefactor must be positive, got {prefactor}"
            )));
        }
        if !(slope.is_finite() && slope > 0.0) {
            return Err(Error::domain(format!(
                "model slope must be positive, got {slope}"
            )));
        }
        if !offset.is_finite() {
            return Err(Error::domain("model offset must be finite".to_owned()));
        }
        if !(threshold.is_finite() && threshold > 0.0 && threshold < 1.0) {
            return Err(Error::domain(format!(
                "threshold must lie in (0, 1), got {threshold}"
            )));
        }
        Ok(SurfaceCodeModel {
            prefactor,
            slope,
            offset,
            threshold,
        })
    }

    /// Provenance note for report footers.
    pub fn provenance(&self) -> &'static str {
        "matching-decoder fit under depolarizing noise, rotated surface code"
    }
}

/// Default fit: p_L = 0.08 · (p/0.0053)^(0.58d − 0.27).
impl Default for SurfaceCodeModel {
    fn default() -> Self {
        SurfaceCodeModel {
            prefactor: 0.08,
            slope: 0.58,
            offset: 0.27,
            threshold: 0.0053,
        }
    }
}

/// Logical error rate per round at physical error rate `p` and distance `d`.
///
/// Returns the raw fit value, which can exceed 1 near threshold at small
/// distances; report layers clamp for display, models never do.
pub fn logical_error_rate(model: &SurfaceCodeModel, p: f64, d: u32) -> Result<f64, Error> {
    if !(p.is_finite() && p > 0.0 && p < 1.0) {
        return Err(Error::domain(format!(
            "physical error rate must lie in (0, 1), got {p}"
        )));
    }
    if d < 3 {
        return Err(Error::domain(format!(
            "code distance must be at least 3, got {d}"
        )));
    }
    let exponent = model.slope * f64::from(d) - model.offset;
    Ok(model.prefactor * (p / model.threshold).powf(exponent))
}

/// Smallest distance whose inverse logical error rate reaches the target.
///
/// Requires p below threshold: at or above it, growing the code makes the
/// logical qubit worse and no distance can meet the target.
pub fn min_distance_for_target(
    model: &SurfaceCodeModel,
    p: f64,
    target_inverse_pl: f64,
) -> Result<u32, Error> {
    if !(target_inverse_pl.is_finite() && target_inverse_pl >= 1.0) {
        return Err(Error::domain(format!(
            "target inverse logical error rate must be at least 1, got {target_inverse_pl}"
        )));
    }
    if !(p.is_finite() && p > 0.0) || p >= model.threshold {
        return Err(Error::domain(format!(
            "physical error rate must sit below the threshold {} to scale, got {p}",
            model.threshold
        )));
    }
    const DISTANCE_CAP: u32 = 10_000;
    for d in 3..=DISTANCE_CAP {
        if 1.0 / logical_error_rate(model, p, d)? >= target_inverse_pl {
            return Ok(d);
        }
    }
    Err(Error::domain(format!(
        "no distance up to {DISTANCE_CAP} reaches 1/p_L = {target_inverse_pl} at p = {p}"
    )))
}

/// A concrete code deployment: one distance, many logical qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeInstance {
    distance: u32,
    logical_count: u64,
}

impl CodeInstance {
    pub fn new(distance: u32, logical_count: u64) -> Result<Self, Error> {
        if distance < 3 {
            return Err(Error::domain(format!(
                "code distance must be at least 3, got {distance}"
            )));
        }
        if logical_count == 0 {
            return Err(Error::domain(
                "a code instance needs at least one logical qubit".to_owned(),
            ));
        }
        Ok(CodeInstance {
            distance,
            logical_count,
        })
    }

    pub fn distance(&self) -> u32 {
        self.distance
    }

    pub fn logical_count(&self) -> u64 {
        self.logical_count
    }
}

/// Physical qubits for the instance: logical_count · (2d² − 1), counting d²
/// data qubits and d² − 1 measurement ancillas per logical qubit.
pub fn physical_qubit_count(instance: &CodeInstance) -> u64 {
    let d = u64::from(instance.distance);
    instance.logical_count * (2 * d * d - 1)
}

/// Readout through N auxiliary atoms of a second species, measured in
/// parallel while the data species stays dark.
#[derive(Debug, Clone, PartialEq)]
pub struct ReadoutModel {
    measure_time: UnitValue,
    encode_time: UnitValue,
    copies: u32,
}

impl ReadoutModel {
    pub fn new(
        measure_time: UnitValue,
        encode_time: UnitValue,
        copies: u32,
    ) -> Result<Self, Error> {
        let t_meas = measure_time.expect(Dimension::Time)?;
        if !(t_meas.is_finite() && t_meas > 0.0) {
            return Err(Error::domain(format!(
                "measurement time must be positive, got {t_meas} s"
            )));
        }
        let t_enc = encode_time.expect(Dimension::Time)?;
        if !(t_enc.is_finite() && t_enc >= 0.0) {
            return Err(Error::domain(format!(
                "encode time must be non-negative, got {t_enc} s"
            )));
        }
        if copies == 0 {
            return Err(Error::domain(
                "repetition readout needs at least one auxiliary copy".to_owned(),
            ));
        }
        Ok(ReadoutModel {
            measure_time,
            encode_time,
            copies,
        })
    }

    pub fn copies(&self) -> u32 {
        self.copies
    }
}

/// Effective readout time: the encoding circuit plus the photon-collection
/// time shared across N parallel auxiliary atoms, t_encode + t_meas / N.
pub fn repetition_readout_time(model: &ReadoutModel) -> UnitValue {
    let shared = model.measure_time.magnitude() / f64::from(model.copies);
    UnitValue::seconds(model.encode_time.magnitude() + shared)
}

/// One branch of an encoded repetition state: an amplitude and the bit value
/// carried by the source qubit and every auxiliary copy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateBranch {
    pub amplitude: Complex64,
    pub bit: bool,
}

/// The state after entangling a qubit with N auxiliary atoms:
/// c0·|0⟩|0…0⟩ + c1·|1⟩|1…1⟩.
///
/// Exactly two branches for every input, regardless of N. That is the
/// structural difference between repetition encoding and (impossible)
/// cloning: a cloned product state (c0|0⟩ + c1|1⟩)^⊗N would fan out into 2^N
/// branches.
#[derive(Debug, Clone, PartialEq)]
pub struct RepetitionState {
    branches: Vec<StateBranch>,
    copies: u32,
}

impl RepetitionState {
    pub fn branches(&self) -> &[StateBranch] {
        &self.branches
    }

    pub fn copies(&self) -> u32 {
        self.copies
    }

    pub fn norm_sq(&self) -> f64 {
        self.branches.iter().map(|b| b.amplitude.norm_sqr()).sum()
    }
}

/// Encode (c0, c1) onto N auxiliary copies. The input must be normalized to
/// within 1e-9; the map is unitary, so the output norm equals the input norm.
pub fn repetition_encode_state(
    c0: Complex64,
    c1: Complex64,
    copies: u32,
) -> Result<RepetitionState, Error> {
    if copies == 0 {
        return Err(Error::domain(
            "repetition encoding needs at least one auxiliary copy".to_owned(),
        ));
    }
    let norm_sq = c0.norm_sqr() + c1.norm_sqr();
    if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "input amplitudes must be normalized, got |c0|^2 + |c1|^2 = {norm_sq}"
        )));
    }
    Ok(RepetitionState {
        branches: vec![
            StateBranch {
                amplitude: c0,
                bit: false,
            },
            StateBranch {
                amplitude: c1,
                bit: true,
            },
        ],
        copies,
    })
}
