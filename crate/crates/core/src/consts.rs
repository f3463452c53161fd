//! Physical constants in base SI units.
//!
//! Values follow the 2018 CODATA adjustment; the ones the SI now fixes by
//! definition (h, k_B, e) are exact. Each constant also appears in
//! [`provenance_table`] so reports can cite where a number came from.

use std::f64::consts::{PI, TAU};

/// Planck constant h [J s]. Exact by SI definition.
pub const PLANCK_H: f64 = 6.62607015e-34;

/// Reduced Planck constant ħ = h/2π [J s].
pub const HBAR: f64 = PLANCK_H / TAU;

/// Boltzmann constant k_B [J/K]. Exact by SI definition.
pub const BOLTZMANN_KB: f64 = 1.380649e-23;

/// Elementary charge e [C]. Exact by SI definition.
pub const ELEMENTARY_CHARGE: f64 = 1.602176634e-19;

/// Bohr radius a0 [m].
pub const BOHR_RADIUS: f64 = 5.29177210903e-11;

/// Vacuum permittivity ε0 [F/m].
pub const VACUUM_PERMITTIVITY: f64 = 8.8541878128e-12;

/// Atomic mass unit u [kg].
pub const ATOMIC_MASS_KG: f64 = 1.66053906660e-27;

/// e²a0²/(4πε0·h), the natural scale of dipole-dipole interaction
/// coefficients when radial matrix elements are quoted in atomic units.
/// Units are Hz·m³; multiply by 1e18 for Hz·µm³ (≈ 975 Hz·µm³).
pub const DIPOLE_DIPOLE_HZ_M3: f64 = ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * BOHR_RADIUS
    * BOHR_RADIUS
    / (4.0 * PI * VACUUM_PERMITTIVITY * PLANCK_H);

/// Constant table with provenance notes, for report footers.
pub fn provenance_table() -> &'static [(&'static str, f64, &'static str)] {
    &[
        ("h [J s]", PLANCK_H, "CODATA 2018, exact by SI definition"),
        ("hbar [J s]", HBAR, "h / 2pi"),
        ("k_B [J/K]", BOLTZMANN_KB, "CODATA 2018, exact by SI definition"),
        (
            "e [C]",
            ELEMENTARY_CHARGE,
            "CODATA 2018, exact by SI definition",
        ),
        ("a0 [m]", BOHR_RADIUS, "CODATA 2018 recommended value"),
        (
            "eps0 [F/m]",
            VACUUM_PERMITTIVITY,
            "CODATA 2018 recommended value",
        ),
        ("u [kg]", ATOMIC_MASS_KG, "CODATA 2018 recommended value"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dipole_dipole_scale_is_975_hz_um3() {
        let hz_um3 = DIPOLE_DIPOLE_HZ_M3 * 1e18;
        assert!((hz_um3 - 975.0).abs() < 0.5, "got {hz_um3}");
    }

    #[test]
    fn every_constant_has_a_provenance_note() {
        for (name, value, note) in provenance_table() {
            assert!(value.is_finite(), "{name} is not finite");
            assert!(!note.is_empty(), "{name} has no provenance note");
        }
    }
}
