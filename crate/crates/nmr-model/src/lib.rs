//! Pulse-level model of the lattice collision operator on a two-spin
//! (proton-carbon) system: the seven-factor pulse decomposition, exact
//! propagators with the scalar-coupling-during-pulse systematic error,
//! stepped phase modulation of that error, and the small-flip-angle
//! k-space encoding of lattice profiles.

pub mod encoding;
pub mod error;
mod expm;
pub mod modulation;
pub mod propagator;
pub mod pulse;

pub use encoding::{encode_profile, EncodedProfile};
pub use error::{Error, Result};
pub use modulation::{
    collective_z_rotation, errorful_collision_set, phase_modulated_operators, Modulation,
};
pub use propagator::{pulse_propagator, sequence_propagator, ErrorModel, SequenceUnitaries};
pub use pulse::{decompose_collision, Axis, Pulse, PulseSequence, Target};

/// Scalar coupling of the chloroform proton-carbon pair, Hz.
pub const CHLOROFORM_J_HZ: f64 = 214.0;

/// Default duration assigned to nominally instantaneous rf pulses when the
/// coupling-during-pulses error is simulated, seconds.
pub const DEFAULT_PULSE_DURATION: f64 = 20e-6;
