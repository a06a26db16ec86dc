//! Orientation sweeps for the interval FMR solver.
//!
//! A [`SweepSpec`] lists the external-field polar angles to visit. [`run_sweep`]
//! solves every orientation (in parallel, results kept in order), and the
//! report can be written as CSV or drawn as an SVG scatter of resonance field
//! against angle.

pub mod cli;
mod output;
mod plot;
pub mod presets;
mod sweep;

pub use output::{
    emit_csv, emit_oracle_csv, parse_csv, read_csv, write_csv, write_oracle_csv, CsvRow, OracleRow,
    RowStatus,
};
pub use plot::{emit_svg, render_svg};
pub use presets::{preset, presets, Preset};
pub use sweep::{run_sweep, OrientationReport, SweepError, SweepReport, SweepSpec};
