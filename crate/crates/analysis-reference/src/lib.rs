//! Classical analysis companion to the lattice-gas simulator: a fine-grid
//! Burgers reference solver, RMS deviation metrics, log-log power-law slope
//! fitting, and empirical calibration of the lattice transport coefficients.

pub mod deviation;
pub mod error;
pub mod fitting;
pub mod reference;
pub mod slope;
pub mod transport;

pub use deviation::{deviation, DeviationSeries};
pub use error::{Error, Result};
pub use fitting::{fit_line, LinearFit};
pub use reference::{burgers_reference, ReferenceConfig};
pub use slope::{fit_loglog_slope, SlopeFit};
pub use transport::{
    estimate_advection, estimate_viscosity, AdvectionOptions, Runner, SinusoidRun,
    TransportEstimate, ViscosityOptions,
};
