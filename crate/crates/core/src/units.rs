//! Runtime-checked physical quantities.
//!
//! Every physical input to the models is a [`UnitValue`]: an f64 magnitude in
//! base SI units tagged with a [`Dimension`]. This is deliberately not a full
//! dimensional-analysis system. The closed set of dimensions below is exactly
//! what the models need, and anything outside it is rejected when the value is
//! built instead of deep inside a formula.
//!
//! Quantities are written in a tiny, case-sensitive grammar:
//!
//! ```text
//! quantity := ["2pi" "x"] NUMBER UNIT
//! UNIT     := s | ms | us | ns       (time)
//!           | m | mm | um | nm       (length)
//!           | kg | u                 (mass)
//!           | Hz | kHz | MHz | GHz   (frequency)
//!           | K | uK                 (temperature)
//!           | J                      (energy)
//! ```
//!
//! The `2pi x` prefix is legal only in front of a frequency unit and produces
//! an *angular* frequency in rad/s; a bare frequency stays an ordinary
//! frequency in Hz. The two are distinct dimensions and never coerce silently:
//! conversion happens once, at a configuration boundary, via
//! [`UnitValue::angular_rad_per_s`].
//!
//! ```
//! use atomarch::units::{parse_quantity, Dimension};
//!
//! let omega = parse_quantity("2pi x 215 MHz").unwrap();
//! assert_eq!(omega.dimension(), Dimension::AngularFrequency);
//! assert!((omega.magnitude() - 1.3508848e9).abs() < 1e2);
//! ```

use std::f64::consts::TAU;
use std::fmt;

use crate::consts::ATOMIC_MASS_KG;
use crate::error::{Error, ParseReason};

/// The closed set of physical dimensions the models work in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    Time,
    Length,
    Mass,
    /// Angular frequency in rad/s. Distinct from [`Dimension::Frequency`].
    AngularFrequency,
    /// Ordinary (cycle) frequency in Hz.
    Frequency,
    Temperature,
    Energy,
    Dimensionless,
}

impl Dimension {
    /// Canonical base-SI unit symbol, used for display.
    pub fn base_unit(self) -> &'static str {
        match self {
            Dimension::Time => "s",
            Dimension::Length => "m",
            Dimension::Mass => "kg",
            Dimension::AngularFrequency => "rad/s",
            Dimension::Frequency => "Hz",
            Dimension::Temperature => "K",
            Dimension::Energy => "J",
            Dimension::Dimensionless => "",
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Dimension::Time => "time [s]",
            Dimension::Length => "length [m]",
            Dimension::Mass => "mass [kg]",
            Dimension::AngularFrequency => "angular frequency [rad/s]",
            Dimension::Frequency => "frequency [Hz]",
            Dimension::Temperature => "temperature [K]",
            Dimension::Energy => "energy [J]",
            Dimension::Dimensionless => "dimensionless",
        };
        f.write_str(name)
    }
}

/// A magnitude in base SI units tagged with its [`Dimension`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitValue {
    magnitude: f64,
    dimension: Dimension,
}

impl UnitValue {
    pub fn new(magnitude: f64, dimension: Dimension) -> Self {
        UnitValue {
            magnitude,
            dimension,
        }
    }

    pub fn seconds(v: f64) -> Self {
        Self::new(v, Dimension::Time)
    }

    pub fn meters(v: f64) -> Self {
        Self::new(v, Dimension::Length)
    }

    pub fn kilograms(v: f64) -> Self {
        Self::new(v, Dimension::Mass)
    }

    pub fn rad_per_s(v: f64) -> Self {
        Self::new(v, Dimension::AngularFrequency)
    }

    pub fn hertz(v: f64) -> Self {
        Self::new(v, Dimension::Frequency)
    }

    pub fn kelvin(v: f64) -> Self {
        Self::new(v, Dimension::Temperature)
    }

    pub fn dimensionless(v: f64) -> Self {
        Self::new(v, Dimension::Dimensionless)
    }

    /// Magnitude in base SI units.
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    /// Magnitude in base SI units, checked against an expected dimension.
    ///
    /// Every model operation calls this on its inputs before computing
    /// anything, so a mis-dimensioned value fails loudly at the boundary.
    pub fn expect(&self, expected: Dimension) -> Result<f64, Error> {
        if self.dimension == expected {
            Ok(self.magnitude)
        } else {
            Err(Error::DimensionMismatch {
                expected,
                actual: self.dimension,
            })
        }
    }

    /// Angular frequency in rad/s.
    ///
    /// Accepts an angular frequency as-is and converts an ordinary frequency
    /// by 2π. This is the one sanctioned crossing between the two frequency
    /// dimensions; use it at configuration boundaries, not inside models.
    pub fn angular_rad_per_s(&self) -> Result<f64, Error> {
        match self.dimension {
            Dimension::AngularFrequency => Ok(self.magnitude),
            Dimension::Frequency => Ok(self.magnitude * TAU),
            actual => Err(Error::DimensionMismatch {
                expected: Dimension::AngularFrequency,
                actual,
            }),
        }
    }

    /// Sum of two values of the same dimension.
    pub fn try_add(&self, other: &UnitValue) -> Result<UnitValue, Error> {
        let rhs = other.expect(self.dimension)?;
        Ok(UnitValue::new(self.magnitude + rhs, self.dimension))
    }

    /// Difference of two values of the same dimension.
    pub fn try_sub(&self, other: &UnitValue) -> Result<UnitValue, Error> {
        let rhs = other.expect(self.dimension)?;
        Ok(UnitValue::new(self.magnitude - rhs, self.dimension))
    }

    /// Scale by a dimensionless factor.
    pub fn scaled(&self, factor: f64) -> UnitValue {
        UnitValue::new(self.magnitude * factor, self.dimension)
    }

    /// Dimensionless ratio of two values of the same dimension.
    pub fn ratio(&self, other: &UnitValue) -> Result<f64, Error> {
        let rhs = other.expect(self.dimension)?;
        Ok(self.magnitude / rhs)
    }
}

/// Canonical display: base-SI magnitude plus the base unit. Angular
/// frequencies print in the same `2pi x ... Hz` form the parser accepts, so
/// formatting and parsing round-trip for every parseable dimension.
impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dimension {
            Dimension::Dimensionless => write!(f, "{}", self.magnitude),
            Dimension::AngularFrequency => write!(f, "2pi x {} Hz", self.magnitude / TAU),
            d => write!(f, "{} {}", self.magnitude, d.base_unit()),
        }
    }
}

/// Unit token table: symbol, factor to base SI, dimension.
const UNITS: &[(&str, f64, Dimension)] = &[
    ("s", 1.0, Dimension::Time),
    ("ms", 1e-3, Dimension::Time),
    ("us", 1e-6, Dimension::Time),
    ("ns", 1e-9, Dimension::Time),
    ("m", 1.0, Dimension::Length),
    ("mm", 1e-3, Dimension::Length),
    ("um", 1e-6, Dimension::Length),
    ("nm", 1e-9, Dimension::Length),
    ("kg", 1.0, Dimension::Mass),
    ("u", ATOMIC_MASS_KG, Dimension::Mass),
    ("Hz", 1.0, Dimension::Frequency),
    ("kHz", 1e3, Dimension::Frequency),
    ("MHz", 1e6, Dimension::Frequency),
    ("GHz", 1e9, Dimension::Frequency),
    ("K", 1.0, Dimension::Temperature),
    ("uK", 1e-6, Dimension::Temperature),
    ("J", 1.0, Dimension::Energy),
];

/// Parse a quantity string (see the module docs for the grammar).
///
/// Whitespace between tokens is optional, so `"10um"` and `"10 um"` are the
/// same length. Unit symbols are case-sensitive: `"5 mhz"` is rejected.
pub fn parse_quantity(input: &str) -> Result<UnitValue, Error> {
    let fail = |reason: ParseReason| Error::QuantityParse {
        input: input.to_owned(),
        reason,
    };

    let mut rest = input.trim();
    if rest.is_empty() {
        return Err(fail(ParseReason::Empty));
    }

    let mut angular = false;
    if let Some(after) = rest.strip_prefix("2pi") {
        angular = true;
        rest = after.trim_start();
        rest = rest
            .strip_prefix('x')
            .ok_or_else(|| fail(ParseReason::MissingAngularSeparator))?
            .trim_start();
    }

    let num_len = number_prefix_len(rest);
    if num_len == 0 {
        return Err(fail(ParseReason::InvalidNumber {
            token: first_token(rest),
        }));
    }
    let number: f64 = rest[..num_len].parse().map_err(|_| {
        fail(ParseReason::InvalidNumber {
            token: rest[..num_len].to_owned(),
        })
    })?;

    let unit_token = rest[num_len..].trim();
    if unit_token.is_empty() {
        return Err(fail(ParseReason::MissingUnit));
    }

    let (_, factor, dimension) = UNITS
        .iter()
        .find(|(symbol, _, _)| *symbol == unit_token)
        .ok_or_else(|| {
            fail(ParseReason::UnknownUnit {
                token: unit_token.to_owned(),
            })
        })?;

    if angular && *dimension != Dimension::Frequency {
        return Err(fail(ParseReason::AngularPrefixOnNonFrequency {
            unit: unit_token.to_owned(),
        }));
    }

    let si = number * factor;
    if angular {
        Ok(UnitValue::rad_per_s(si * TAU))
    } else {
        Ok(UnitValue::new(si, *dimension))
    }
}

/// Length in bytes of the leading float literal of `s`, 0 if there is none.
/// Accepts `[+-]? digits [. digits] [eE [+-] digits]`; an `e` not followed by
/// digits is left for the unit token (`"1em"` parses as number `1`, unit
/// `"em"`).
fn number_prefix_len(s: &str) -> usize {
    let b = s.as_bytes();
    let mut i = 0;
    if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
        i += 1;
    }
    let mut saw_digit = false;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
        saw_digit = true;
    }
    if i < b.len() && b[i] == b'.' {
        i += 1;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
            saw_digit = true;
        }
    }
    if !saw_digit {
        return 0;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        let mut j = i + 1;
        if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
            j += 1;
        }
        let mut saw_exp_digit = false;
        while j < b.len() && b[j].is_ascii_digit() {
            j += 1;
            saw_exp_digit = true;
        }
        if saw_exp_digit {
            i = j;
        }
    }
    i
}

fn first_token(s: &str) -> String {
    s.split_whitespace().next().unwrap_or(s).to_owned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(s: &str) -> UnitValue {
        parse_quantity(s).unwrap_or_else(|e| panic!("{s:?} should parse: {e}"))
    }

    fn reason(s: &str) -> ParseReason {
        match parse_quantity(s) {
            Err(Error::QuantityParse { reason, .. }) => reason,
            other => panic!("{s:?} should fail to parse, got {other:?}"),
        }
    }

    #[test]
    fn parses_plain_time() {
        let v = parsed("198 us");
        assert_eq!(v.dimension(), Dimension::Time);
        assert!((v.magnitude() - 1.98e-4).abs() < 1e-19);
    }

    #[test]
    fn parses_angular_frequency() {
        let v = parsed("2pi x 215 MHz");
        assert_eq!(v.dimension(), Dimension::AngularFrequency);
        let expected = TAU * 215e6;
        assert!((v.magnitude() - expected).abs() / expected < 1e-15);
        // the worked value: 1.3509e9 rad/s
        assert!((v.magnitude() - 1.3509e9).abs() / 1.3509e9 < 1e-4);
    }

    #[test]
    fn plain_frequency_stays_ordinary() {
        let v = parsed("100 kHz");
        assert_eq!(v.dimension(), Dimension::Frequency);
        assert_eq!(v.magnitude(), 1e5);
    }

    #[test]
    fn parses_mass_in_atomic_units() {
        let v = parsed("132.905 u");
        assert_eq!(v.dimension(), Dimension::Mass);
        assert!((v.magnitude() - 2.2069e-25).abs() / 2.2069e-25 < 1e-4);
    }

    #[test]
    fn whitespace_between_number_and_unit_is_optional() {
        assert_eq!(parsed("10um"), parsed("10 um"));
        // the magnitude is always number times unit scale, bit for bit
        assert_eq!(parsed("10um").magnitude(), 10.0 * 1e-6);
    }

    #[test]
    fn parses_lengths_and_temperatures() {
        assert_eq!(parsed("6.44 um").dimension(), Dimension::Length);
        assert!((parsed("6.44 um").magnitude() - 6.44e-6).abs() < 1e-21);
        assert_eq!(parsed("1 uK").magnitude(), 1e-6);
        assert_eq!(parsed("3 nm").magnitude(), 3.0 * 1e-9);
        assert_eq!(parsed("2 GHz").magnitude(), 2.0 * 1e9);
    }

    #[test]
    fn scientific_notation_numbers() {
        assert_eq!(parsed("2.2069e-25 kg").magnitude(), 2.2069e-25);
        assert_eq!(parsed("1E3 Hz").magnitude(), 1e3);
    }

    #[test]
    fn missing_unit_is_rejected() {
        assert_eq!(reason("215"), ParseReason::MissingUnit);
    }

    #[test]
    fn unknown_unit_names_the_token() {
        assert_eq!(
            reason("215 parsec"),
            ParseReason::UnknownUnit {
                token: "parsec".into()
            }
        );
    }

    #[test]
    fn units_are_case_sensitive() {
        assert_eq!(
            reason("5 mhz"),
            ParseReason::UnknownUnit {
                token: "mhz".into()
            }
        );
    }

    #[test]
    fn angular_prefix_requires_frequency_unit() {
        assert_eq!(
            reason("2pi x 5 m"),
            ParseReason::AngularPrefixOnNonFrequency { unit: "m".into() }
        );
    }

    #[test]
    fn angular_prefix_requires_separator() {
        assert_eq!(reason("2pi 5 MHz"), ParseReason::MissingAngularSeparator);
    }

    #[test]
    fn garbage_number_is_rejected() {
        assert_eq!(
            reason("abc MHz"),
            ParseReason::InvalidNumber {
                token: "abc".into()
            }
        );
        assert_eq!(reason(""), ParseReason::Empty);
        assert_eq!(reason("   "), ParseReason::Empty);
    }

    #[test]
    fn exponent_without_digits_belongs_to_the_unit() {
        // "1e" is not a float; the unit token becomes "em" and is unknown.
        assert_eq!(
            reason("1em"),
            ParseReason::UnknownUnit { token: "em".into() }
        );
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        for s in [
            "198 us",
            "2pi x 215 MHz",
            "100 kHz",
            "6.44 um",
            "132.905 u",
            "1.4 um",
            "0.46 us",
            "5 uK",
            "1 J",
            "2.5e-7 s",
        ] {
            let v = parsed(s);
            let reparsed = parsed(&v.to_string());
            assert_eq!(reparsed.dimension(), v.dimension(), "dimension of {s:?}");
            let rel = (reparsed.magnitude() - v.magnitude()).abs() / v.magnitude().abs();
            assert!(rel < 1e-12, "round-trip of {s:?} drifted by {rel}");
        }
    }

    #[test]
    fn expect_checks_the_dimension() {
        let v = parsed("198 us");
        assert_eq!(v.expect(Dimension::Time).unwrap(), 1.98e-4);
        assert_eq!(
            v.expect(Dimension::Length),
            Err(Error::DimensionMismatch {
                expected: Dimension::Length,
                actual: Dimension::Time,
            })
        );
    }

    #[test]
    fn angular_helper_converts_ordinary_frequency_once() {
        let ordinary = parsed("100 kHz");
        let angular = parsed("2pi x 100 kHz");
        assert_eq!(ordinary.angular_rad_per_s().unwrap(), angular.magnitude());
        assert_eq!(angular.angular_rad_per_s().unwrap(), angular.magnitude());
        assert!(parsed("1 m").angular_rad_per_s().is_err());
    }

    #[test]
    fn arithmetic_rejects_mixed_dimensions() {
        let t = parsed("1 ms");
        let l = parsed("1 mm");
        assert!(t.try_add(&l).is_err());
        assert!(t.try_sub(&l).is_err());
        assert!(t.ratio(&l).is_err());
        let sum = t.try_add(&parsed("500 us")).unwrap();
        assert!((sum.magnitude() - 1.5e-3).abs() < 1e-18);
        assert_eq!(t.ratio(&parsed("500 us")).unwrap(), 2.0);
        assert_eq!(t.scaled(3.0).magnitude(), 3e-3);
    }
}
