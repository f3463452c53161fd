//! Built-in species and gate-protocol tables.
//!
//! Both tables are small and closed on purpose: the estimator ships the atoms
//! and two-qubit protocols its models are calibrated for, and anything else
//! must be supplied explicitly through configuration (a custom species is just
//! a name plus a mass). Every entry carries a provenance note that reports can
//! print verbatim.

use crate::consts::ATOMIC_MASS_KG;
use crate::error::Error;
use crate::units::{Dimension, UnitValue};

/// An atomic species: a name plus the single parameter the kinematics need.
#[derive(Debug, Clone, PartialEq)]
pub struct SpeciesParams {
    pub name: String,
    /// Atomic mass (dimension: mass).
    pub mass: UnitValue,
    /// Where the mass value comes from, for report footers.
    pub provenance: String,
}

impl SpeciesParams {
    /// A species outside the built-in table, e.g. from a scenario file that
    /// gives an explicit mass.
    pub fn custom(name: impl Into<String>, mass: UnitValue) -> Result<Self, Error> {
        let kg = mass.expect(Dimension::Mass)?;
        if !(kg.is_finite() && kg > 0.0) {
            return Err(Error::domain(format!(
                "species mass must be positive and finite, got {kg} kg"
            )));
        }
        Ok(SpeciesParams {
            name: name.into(),
            mass,
            provenance: "user-supplied mass".to_owned(),
        })
    }
}

/// Built-in species masses in atomic mass units (standard atomic weights).
const SPECIES: &[(&str, f64)] = &[
    ("Rb", 86.909),
    ("Cs", 132.905),
    ("Sr", 87.906),
    ("Yb", 170.936),
];

const SPECIES_NAMES: &str = "Rb, Cs, Sr, Yb";

/// Look up a built-in species by its case-sensitive symbol.
pub fn species_lookup(name: &str) -> Result<SpeciesParams, Error> {
    let (symbol, mass_u) = SPECIES
        .iter()
        .find(|(symbol, _)| *symbol == name)
        .ok_or_else(|| Error::UnknownSpecies {
            name: name.to_owned(),
            known: SPECIES_NAMES,
        })?;
    Ok(SpeciesParams {
        name: (*symbol).to_owned(),
        mass: UnitValue::kilograms(mass_u * ATOMIC_MASS_KG),
        provenance: format!("standard atomic weight, {mass_u} u"),
    })
}

/// A two-qubit gate protocol characterized by how far its error sits above
/// the lifetime-limited floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolEntry {
    pub name: &'static str,
    /// Achievable error divided by the minimum error 2/(|V| τ).
    pub error_ratio: f64,
    /// Where the ratio comes from, for report footers.
    pub provenance: &'static str,
}

/// Protocol overheads relative to the lifetime-limited error floor.
const PROTOCOLS: &[ProtocolEntry] = &[
    ProtocolEntry {
        name: "dark-state",
        error_ratio: 19.0,
        provenance: "adiabatic dark-state protocol, strong blockade",
    },
    ProtocolEntry {
        name: "time-optimal",
        error_ratio: 15.0,
        provenance: "time-optimal pulse, strong-blockade limit",
    },
    ProtocolEntry {
        name: "weak-blockade",
        error_ratio: 2.1,
        provenance: "optimized pulse at finite blockade strength",
    },
    ProtocolEntry {
        name: "weak-blockade-with-recoil",
        error_ratio: 3.0,
        provenance: "finite blockade including photon-recoil error",
    },
];

const PROTOCOL_NAMES: &str = "dark-state, time-optimal, weak-blockade, weak-blockade-with-recoil";

/// All known protocols, in catalog order.
pub fn protocols() -> &'static [ProtocolEntry] {
    PROTOCOLS
}

/// Look up a gate protocol by its case-sensitive name.
pub fn protocol_lookup(name: &str) -> Result<&'static ProtocolEntry, Error> {
    PROTOCOLS
        .iter()
        .find(|entry| entry.name == name)
        .ok_or_else(|| Error::UnknownProtocol {
            name: name.to_owned(),
            known: PROTOCOL_NAMES,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cesium_mass_in_kilograms() {
        let cs = species_lookup("Cs").unwrap();
        assert_eq!(cs.name, "Cs");
        let kg = cs.mass.expect(Dimension::Mass).unwrap();
        assert!((kg - 2.2069e-25).abs() / 2.2069e-25 < 1e-4, "got {kg}");
    }

    #[test]
    fn all_four_builtin_species_resolve() {
        for name in ["Rb", "Cs", "Sr", "Yb"] {
            let sp = species_lookup(name).unwrap();
            assert!(sp.mass.magnitude() > 0.0);
            assert!(!sp.provenance.is_empty());
        }
    }

    #[test]
    fn unknown_species_lists_the_table() {
        let err = species_lookup("Xe").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownSpecies {
                name: "Xe".into(),
                known: "Rb, Cs, Sr, Yb",
            }
        );
        assert!(err.to_string().contains("Rb, Cs, Sr, Yb"));
    }

    #[test]
    fn species_symbols_are_case_sensitive() {
        assert!(species_lookup("cs").is_err());
    }

    #[test]
    fn protocol_ratios() {
        assert_eq!(protocol_lookup("dark-state").unwrap().error_ratio, 19.0);
        assert_eq!(protocol_lookup("time-optimal").unwrap().error_ratio, 15.0);
        assert_eq!(protocol_lookup("weak-blockade").unwrap().error_ratio, 2.1);
        assert_eq!(
            protocol_lookup("weak-blockade-with-recoil")
                .unwrap()
                .error_ratio,
            3.0
        );
    }

    #[test]
    fn unknown_protocol_lists_the_table() {
        let err = protocol_lookup("adiabatic").unwrap_err();
        assert!(err.to_string().contains("weak-blockade-with-recoil"));
    }

    #[test]
    fn every_protocol_has_a_provenance_note() {
        for entry in protocols() {
            assert!(!entry.provenance.is_empty(), "{} lacks a note", entry.name);
            assert!(entry.error_ratio >= 1.0);
        }
    }

    #[test]
    fn custom_species_validates_its_mass() {
        let ok = SpeciesParams::custom("Rb87", UnitValue::kilograms(1.443e-25)).unwrap();
        assert_eq!(ok.name, "Rb87");
        assert!(SpeciesParams::custom("bad", UnitValue::kilograms(-1.0)).is_err());
        assert!(SpeciesParams::custom("bad", UnitValue::seconds(1.0)).is_err());
    }
}
