//! Configuration parsing, experiment drivers, and CSV emission behind the
//! `qlg` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use commands::{
    build_operators, cmd_calibrate, cmd_encode_test, cmd_error_growth, cmd_simulate,
    CalibrateSummary, EncodeSummary, ErrorGrowthSummary, SimulateSummary, SlopeOutcome,
};
pub use config::{ErrorModelSpec, FileConfig, ProfileSpec, Shape};
pub use error::{CliError, Result};

/// Default slope-fit window: step 1 carries no log leverage and late steps
/// saturate, so fits run over steps 2 through 50 unless overridden.
pub const DEFAULT_WINDOW: (usize, usize) = (2, 50);
