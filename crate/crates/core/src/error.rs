use crate::units::Dimension;

/// Everything that can go wrong inside the estimation models.
///
/// Variants are coarse on purpose: callers branch on the *kind* of failure
/// (bad input text, wrong dimension, model precondition violated), not on
/// individual formulas.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A quantity string did not match the `["2pi" "x"] NUMBER UNIT` grammar.
    #[error("cannot parse quantity {input:?}: {reason}")]
    QuantityParse { input: String, reason: ParseReason },

    /// A value of the wrong physical dimension reached an operation.
    #[error("expected a quantity of dimension {expected}, got {actual}")]
    DimensionMismatch {
        expected: Dimension,
        actual: Dimension,
    },

    /// Species name missing from the built-in table.
    #[error("unknown species {name:?}; built-in species are {known}")]
    UnknownSpecies { name: String, known: &'static str },

    /// Gate-protocol name missing from the built-in table.
    #[error("unknown gate protocol {name:?}; known protocols are {known}")]
    UnknownProtocol { name: String, known: &'static str },

    /// Numerically valid input that violates a model precondition.
    #[error("{0}")]
    Domain(String),

    /// A required piece of configuration is absent or inconsistent.
    #[error("{0}")]
    Config(String),

    /// A structurally valid request the models deliberately do not cover.
    #[error("{0}")]
    Unsupported(String),

    /// Malformed population-trace data (CSV shape or sample values).
    #[error("invalid population trace: {0}")]
    Trace(String),
}

/// Detail for [`Error::QuantityParse`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseReason {
    #[error("input is empty")]
    Empty,
    #[error("{token:?} is not a number")]
    InvalidNumber { token: String },
    #[error("no unit given (write e.g. \"215 MHz\")")]
    MissingUnit,
    #[error("unknown unit {token:?} (units are case-sensitive)")]
    UnknownUnit { token: String },
    #[error("expected \"x\" after \"2pi\"")]
    MissingAngularSeparator,
    #[error("the \"2pi x\" prefix only applies to frequency units, not {unit:?}")]
    AngularPrefixOnNonFrequency { unit: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
