//! Classical simulation cost of noisy circuits without error correction.
//!
//! A noisy two-dimensional circuit on n qubits stays meaningfully quantum
//! only up to a depth of order 1/ε, where ε is the two-qubit gate
//! infidelity. Tensor-network contraction of such a circuit costs of order
//! 2^(√n · depth), so the honest figure of merit is doubly logarithmic:
//!
//! ```text
//! log10 log10 (cost) = log10( sqrt(n) · depth · log10(2) )
//! ```
//!
//! with depth = 1/ε unless an explicit circuit depth is given. The module
//! evaluates single points and rectangular (n, ε) grids for contour maps.

use crate::error::Error;

/// Survival probability of a circuit of the given volume (gate count per
/// qubit times depth, in units of gates) at gate infidelity ε: exp(-ε·V).
pub fn effective_fidelity(gate_infidelity: f64, circuit_volume: f64) -> Result<f64, Error> {
    if !(gate_infidelity.is_finite() && gate_infidelity > 0.0 && gate_infidelity < 1.0) {
        return Err(Error::domain(format!(
            "gate infidelity must lie in (0, 1), got {gate_infidelity}"
        )));
    }
    if !(circuit_volume.is_finite() && circuit_volume >= 0.0) {
        return Err(Error::domain(format!(
            "circuit volume must be non-negative, got {circuit_volume}"
        )));
    }
    Ok((-gate_infidelity * circuit_volume).exp())
}

/// One circuit family on the (qubit count, gate infidelity) plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostPoint {
    qubit_count: u32,
    gate_infidelity: f64,
    circuit_depth: Option<f64>,
}

impl CostPoint {
    /// `circuit_depth` overrides the coherence-limited depth 1/ε; `None`
    /// means the circuit is run as deep as the noise allows.
    pub fn new(
        qubit_count: u32,
        gate_infidelity: f64,
        circuit_depth: Option<f64>,
    ) -> Result<Self, Error> {
        if qubit_count == 0 {
            return Err(Error::domain("qubit count must be at least 1".to_owned()));
        }
        if !(gate_infidelity.is_finite() && gate_infidelity > 0.0 && gate_infidelity < 1.0) {
            return Err(Error::domain(format!(
                "gate infidelity must lie in (0, 1), got {gate_infidelity}"
            )));
        }
        if let Some(depth) = circuit_depth {
            if !(depth.is_finite() && depth > 0.0) {
                return Err(Error::domain(format!(
                    "circuit depth must be positive, got {depth}"
                )));
            }
        }
        Ok(CostPoint {
            qubit_count,
            gate_infidelity,
            circuit_depth,
        })
    }

    pub fn qubit_count(&self) -> u32 {
        self.qubit_count
    }

    pub fn gate_infidelity(&self) -> f64 {
        self.gate_infidelity
    }

    /// Depth the cost model uses: the explicit depth, else 1/ε.
    pub fn effective_depth(&self) -> f64 {
        self.circuit_depth
            .unwrap_or(1.0 / self.gate_infidelity)
    }

    /// Exponent of the contraction cost 2^(√n · depth).
    pub fn cost_exponent(&self) -> f64 {
        f64::from(self.qubit_count).sqrt() * self.effective_depth()
    }

    /// log10 log10 of the contraction cost.
    pub fn double_log_cost(&self) -> Result<f64, Error> {
        double_log_cost_at(f64::from(self.qubit_count), self.effective_depth())
    }

    /// Survival probability exp(-ε · n · depth) of one full run.
    pub fn run_fidelity(&self) -> Result<f64, Error> {
        let volume = f64::from(self.qubit_count) * self.effective_depth();
        effective_fidelity(self.gate_infidelity, volume)
    }
}

/// log10 log10 (2^(√n · depth)) for a fractional qubit count, as grid axes
/// produce. Requires the inner logarithm √n·depth·log10(2) to exceed 1;
/// anything below is trivially simulable and the double log loses meaning.
pub fn double_log_cost_at(qubit_count: f64, depth: f64) -> Result<f64, Error> {
    if !(qubit_count.is_finite() && qubit_count >= 1.0) {
        return Err(Error::domain(format!(
            "qubit count must be at least 1, got {qubit_count}"
        )));
    }
    if !(depth.is_finite() && depth > 0.0) {
        return Err(Error::domain(format!(
            "depth must be positive, got {depth}"
        )));
    }
    let log10_cost = qubit_count.sqrt() * depth * std::f64::consts::LOG10_2;
    if log10_cost <= 1.0 {
        return Err(Error::domain(format!(
            "classical cost is trivial here (log10 cost = {log10_cost:.3}); \
             the double-log scale needs log10 cost > 1"
        )));
    }
    Ok(log10_cost.log10())
}

/// Axes of a rectangular (qubit count, gate infidelity) cost map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    qubit_range: (f64, f64),
    infidelity_range: (f64, f64),
    resolution: usize,
    log_qubit_axis: bool,
}

impl GridSpec {
    /// `resolution` is the number of samples per axis (at least 2, ends
    /// included). The infidelity axis is always log-spaced; the qubit axis
    /// is linear unless `log_qubit_axis` is set.
    pub fn new(
        qubit_range: (f64, f64),
        infidelity_range: (f64, f64),
        resolution: usize,
        log_qubit_axis: bool,
    ) -> Result<Self, Error> {
        let (n_min, n_max) = qubit_range;
        if !(n_min.is_finite() && n_max.is_finite() && n_min >= 1.0 && n_max > n_min) {
            return Err(Error::domain(format!(
                "qubit range must satisfy 1 <= min < max, got {n_min}..{n_max}"
            )));
        }
        let (e_min, e_max) = infidelity_range;
        if !(e_min.is_finite() && e_max.is_finite() && e_min > 0.0 && e_max < 1.0 && e_max > e_min)
        {
            return Err(Error::domain(format!(
                "infidelity range must satisfy 0 < min < max < 1, got {e_min}..{e_max}"
            )));
        }
        if resolution < 2 {
            return Err(Error::domain(format!(
                "grid resolution must be at least 2, got {resolution}"
            )));
        }
        Ok(GridSpec {
            qubit_range,
            infidelity_range,
            resolution,
            log_qubit_axis,
        })
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }
}

/// One cell of a cost map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub qubit_count: f64,
    pub gate_infidelity: f64,
    pub double_log_cost: f64,
}

/// Sample `axis` points between `lo` and `hi`, ends exact, log or linear.
fn axis_samples(lo: f64, hi: f64, count: usize, logarithmic: bool) -> Vec<f64> {
    let steps = (count - 1) as f64;
    (0..count)
        .map(|k| {
            if k == 0 {
                lo
            } else if k == count - 1 {
                hi
            } else if logarithmic {
                (lo.ln() + (hi.ln() - lo.ln()) * k as f64 / steps).exp()
            } else {
                lo + (hi - lo) * k as f64 / steps
            }
        })
        .collect()
}

/// Evaluate the double-log cost on the grid, row-major: the qubit axis is
/// the outer loop, infidelity the inner one, both ascending.
pub fn cost_grid(spec: &GridSpec) -> Result<Vec<GridPoint>, Error> {
    let qubit_axis = axis_samples(
        spec.qubit_range.0,
        spec.qubit_range.1,
        spec.resolution,
        spec.log_qubit_axis,
    );
    let infidelity_axis = axis_samples(
        spec.infidelity_range.0,
        spec.infidelity_range.1,
        spec.resolution,
        true,
    );
    let mut points = Vec::with_capacity(spec.resolution * spec.resolution);
    for &n in &qubit_axis {
        for &eps in &infidelity_axis {
            points.push(GridPoint {
                qubit_count: n,
                gate_infidelity: eps,
                double_log_cost: double_log_cost_at(n, 1.0 / eps)?,
            });
        }
    }
    Ok(points)
}
