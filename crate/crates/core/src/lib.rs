//! Interval-valued fuzzy soft β-covering approximation spaces over finite universes.
//!
//! All interval endpoints are exact rationals, so every comparison in the crate is
//! decided without rounding.

pub mod approximations;
pub mod audit;
pub mod crisp;
pub mod error;
pub mod interval;
pub mod io;
pub mod ivfs;
pub mod literal;
pub mod neighborhoods;
pub mod soft_space;

pub use approximations::{approximate, is_definable, ApproximationPair, Kind, Mode};
pub use crisp::CrispSubset;
pub use error::{Error, Result};
pub use interval::{IntervalValue, Rational, Relation};
pub use ivfs::{IVFuzzySet, Universe};
pub use neighborhoods::NeighborhoodSystem;
pub use soft_space::{
    build_space, validate_beta_covering, CoveringPolicy, CoveringReport, SoftMapping, SoftSpace,
};
