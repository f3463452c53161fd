//! Resource estimation for neutral-atom quantum computer architectures.
//!
//! The crate models the chain from atomic physics to machine-level figures
//! of merit:
//!
//! * [`rydberg`]: pair interactions of Rydberg atoms (resonant dipole-dipole
//!   exchange through the van der Waals regime), the entangling-gate error
//!   floor set by interaction strength and state lifetime, and the
//!   time-integrated Rydberg population bound behind it.
//! * [`transport`]: minimal-jerk atom moves in optical tweezers under a
//!   motional heating budget, and the thermometry to go with them.
//! * [`surfacecode`]: logical error rates of the rotated surface code,
//!   code-distance and qubit-count sizing, and repetition-coded readout.
//! * [`connectivity`]: logical two-qubit gate latency under long-range
//!   gates, patch transport, or lattice surgery, with array-level averages
//!   over grid geometry.
//! * [`nisq`]: classical simulation cost of noisy circuits, the yardstick
//!   any of the above has to beat.
//!
//! Physical inputs are [`units::UnitValue`] quantities parsed from strings
//! like `"6.44 um"` or `"2pi x 100 kHz"`, so callers never pass a bare
//! number where a dimension matters. Catalog data (atomic species, gate
//! protocols) lives in [`catalog`], physical constants in [`consts`].

pub mod catalog;
pub mod connectivity;
pub mod consts;
pub mod error;
pub mod nisq;
pub mod rydberg;
pub mod surfacecode;
pub mod transport;
pub mod units;

pub use error::Error;
pub use units::{parse_quantity, Dimension, UnitValue};
