//! Guaranteed enclosures of ferromagnetic-resonance fields.
//!
//! For a fixed microwave frequency and a given orientation of the external
//! field, [`solver::solve_orientation`] returns intervals that provably
//! contain every resonance field below `H_max`. The search is an interval
//! branch-and-bound over the magnetization angles and the field magnitude.
//! [`oracle`] is a classical grid-and-refine reference used for checking.

pub mod energy;
pub mod interval;
pub mod oracle;
pub mod resonance;
mod round;
pub mod solver;

pub use energy::{EnergyDerivatives, EnergyError, EnergyModel, FieldDirection, MaterialParams};
pub use interval::{Enclosure, Interval, IntervalError};
pub use resonance::{ResonanceCondition, TestId, TestOutcome, Verdict};
pub use solver::{solve_orientation, Box3, ResonanceResult, SolverConfig, SolverError, Status};
