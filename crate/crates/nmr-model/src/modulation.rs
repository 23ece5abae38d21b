//! Stepped phase modulation of the collision operator.
//!
//! The ideal collision operator conserves total occupation, so it commutes
//! with collective z rotations. Conjugating the errorful operator by a
//! rotation that advances 90 degrees per step leaves the intended action
//! untouched while stepping the phases of the error terms, which breaks
//! their coherent accumulation across time steps.

use num_complex::Complex64;
use qlg_core::{CMat4, CollisionOperator, OperatorLabel};

use crate::error::{Error, Result};
use crate::propagator::ErrorModel;
use crate::pulse::decompose_collision;

/// How the per-step collision operator is varied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Modulation {
    /// One fixed operator reused every step.
    #[default]
    None,
    /// Four operators conjugated by collective z rotations of 0, 90, 180
    /// and 270 degrees, cycled with the step index.
    Z4,
}

/// Collective z rotation by `k` quarter turns:
/// exp(-i (k pi/2)/2 (Z(x)1 + 1(x)Z)) = diag(e^{-i k pi/2}, 1, 1, e^{+i k pi/2}).
pub fn collective_z_rotation(k: usize) -> CMat4 {
    let beta = k as f64 * std::f64::consts::FRAC_PI_2;
    let mut m = CMat4::identity();
    m[(0, 0)] = Complex64::from_polar(1.0, -beta);
    m[(3, 3)] = Complex64::from_polar(1.0, beta);
    m
}

/// The set R_k U R_k' for k = 0..count-1. For a block-diagonal U every
/// element equals U; for an errorful U the number-conserving part is
/// invariant and only the off-block error phases differ.
pub fn phase_modulated_operators(
    op: &CollisionOperator,
    count: usize,
) -> Result<Vec<CollisionOperator>> {
    if count == 0 {
        return Err(Error::EmptyModulation);
    }
    (0..count)
        .map(|k| {
            let r = collective_z_rotation(k);
            let m = r * op.matrix() * r.adjoint();
            Ok(CollisionOperator::new(m, OperatorLabel::Modulated(k))?)
        })
        .collect()
}

/// Build the per-step operator set for a run: decompose the collision into
/// pulses, propagate under the error model, then optionally phase-modulate.
/// The lattice dynamics cycles through the returned operators with the
/// step index.
pub fn errorful_collision_set(
    phi: f64,
    j_hz: f64,
    model: &ErrorModel,
    modulation: Modulation,
) -> Result<Vec<CollisionOperator>> {
    let seq = decompose_collision(phi, j_hz)?;
    let unitaries = crate::propagator::sequence_propagator(&seq, model)?;
    match modulation {
        Modulation::None => Ok(vec![unitaries.actual]),
        Modulation::Z4 => phase_modulated_operators(&unitaries.actual, 4),
    }
}
