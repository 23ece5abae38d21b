//! Exact propagators for pulses and sequences, with the scalar-coupling
//! systematic error switched on or off.

use num_complex::Complex64;
use qlg_core::{CMat4, CollisionOperator, OperatorLabel};

use crate::error::{Error, Result};
use crate::expm::expm;
use crate::pulse::{Axis, Pulse, PulseSequence, Target};

/// Controls the systematic error of the simulated spectrometer. With
/// `coupling_during_pulses = false` and `pulse_duration = 0` every rf pulse
/// is an exact instantaneous rotation and the sequence reproduces its ideal
/// product bit for bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorModel {
    /// Keep the sigma_z sigma_z coupling term in the Hamiltonian while rf
    /// pulses are applied.
    pub coupling_during_pulses: bool,
    /// Duration assigned to nominally instantaneous rf pulses, seconds.
    pub pulse_duration: f64,
}

impl ErrorModel {
    pub fn ideal() -> Self {
        Self {
            coupling_during_pulses: false,
            pulse_duration: 0.0,
        }
    }

    /// Coupling stays active during rf pulses of the given duration.
    pub fn coupled(pulse_duration: f64) -> Result<Self> {
        if pulse_duration < 0.0 {
            return Err(Error::NegativeModelDuration(pulse_duration));
        }
        Ok(Self {
            coupling_during_pulses: true,
            pulse_duration,
        })
    }

    pub fn is_ideal(&self) -> bool {
        !self.coupling_during_pulses
    }
}

const I2: [[Complex64; 2]; 2] = {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    [[o, z], [z, o]]
};

fn pauli(axis: Axis) -> [[Complex64; 2]; 2] {
    let z = Complex64::new(0.0, 0.0);
    match axis {
        Axis::X => [[z, Complex64::new(1.0, 0.0)], [Complex64::new(1.0, 0.0), z]],
        Axis::Y => [
            [z, Complex64::new(0.0, -1.0)],
            [Complex64::new(0.0, 1.0), z],
        ],
        Axis::Z => [
            [Complex64::new(1.0, 0.0), z],
            [z, Complex64::new(-1.0, 0.0)],
        ],
    }
}

/// Kronecker product with the proton (qubit 1) as the first slot, matching
/// the basis order (|11>, |10>, |01>, |00>).
fn kron(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> CMat4 {
    let mut m = CMat4::from_element(Complex64::new(0.0, 0.0));
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[(2 * i + k, 2 * j + l)] = a[i][j] * b[k][l];
                }
            }
        }
    }
    m
}

fn coupling_generator() -> CMat4 {
    kron(pauli(Axis::Z), pauli(Axis::Z))
}

/// Pauli generator for an rf pulse on the given target.
fn rf_generator(target: Target, axis: Axis) -> CMat4 {
    let p = pauli(axis);
    match target {
        Target::SpinH => kron(p, I2),
        Target::SpinC => kron(I2, p),
        Target::Both => kron(p, I2) + kron(I2, p),
        Target::Opposed => kron(p, I2) - kron(I2, p),
    }
}

/// Exact propagator of one pulse under the given error model.
///
/// Delays always evolve under H = (pi J / 2) sigma_z sigma_z, so a delay of
/// 1/(2J) accrues exactly the pi/4 two-spin phase. Rf pulses are pure
/// rotations exp(-i flip/2 G) unless the model keeps the coupling active,
/// in which case the propagator is the exponential of the full Hamiltonian
/// over the pulse's effective duration (its own if positive, otherwise the
/// model's `pulse_duration`).
pub fn pulse_propagator(pulse: &Pulse, j_hz: f64, model: &ErrorModel) -> Result<CollisionOperator> {
    if j_hz <= 0.0 || !j_hz.is_finite() {
        return Err(Error::NonPositiveCoupling(j_hz));
    }
    let omega_zz = std::f64::consts::PI * j_hz / 2.0;
    let (matrix, label) = match *pulse {
        Pulse::Delay { duration } => {
            if duration <= 0.0 {
                return Err(Error::NonPositiveDelay(duration));
            }
            let h = coupling_generator().map(|x| x * Complex64::new(0.0, -omega_zz * duration));
            (expm(&h), OperatorLabel::Ideal)
        }
        Pulse::Rf {
            target,
            axis,
            flip_angle,
            duration,
        } => {
            if duration < 0.0 {
                return Err(Error::NegativeDuration(duration));
            }
            let effective = if duration > 0.0 {
                duration
            } else {
                model.pulse_duration
            };
            let g = rf_generator(target, axis);
            if !model.coupling_during_pulses || effective == 0.0 {
                if model.coupling_during_pulses {
                    return Err(Error::FiniteDurationRequired);
                }
                let h = g.map(|x| x * Complex64::new(0.0, -flip_angle / 2.0));
                (expm(&h), OperatorLabel::Ideal)
            } else {
                let drive = flip_angle / (2.0 * effective);
                let h = (coupling_generator().map(|x| x * Complex64::new(omega_zz, 0.0))
                    + g.map(|x| x * Complex64::new(drive, 0.0)))
                .map(|x| x * Complex64::new(0.0, -effective));
                (expm(&h), OperatorLabel::Errorful)
            }
        }
    };
    Ok(CollisionOperator::new(matrix, label)?)
}

/// The three unitaries of a simulated sequence: what the spectrometer
/// applies, what it was meant to apply, and the left-over error factor
/// satisfying `actual = desired * error`.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceUnitaries {
    pub actual: CollisionOperator,
    pub desired: CollisionOperator,
    pub error: CollisionOperator,
}

/// Propagate the whole sequence under `model` and under the ideal model,
/// and factor the result as actual = desired * error.
pub fn sequence_propagator(seq: &PulseSequence, model: &ErrorModel) -> Result<SequenceUnitaries> {
    let product = |m: &ErrorModel| -> Result<CMat4> {
        let mut u = CMat4::identity();
        for pulse in seq.pulses() {
            u = pulse_propagator(pulse, seq.j_hz(), m)?.matrix() * u;
        }
        Ok(u)
    };
    let actual = product(model)?;
    let desired = product(&ErrorModel::ideal())?;
    let error = desired.adjoint() * actual;
    let label = if model.is_ideal() {
        OperatorLabel::Ideal
    } else {
        OperatorLabel::Errorful
    };
    Ok(SequenceUnitaries {
        actual: CollisionOperator::new(actual, label)?,
        desired: CollisionOperator::new(desired, OperatorLabel::Ideal)?,
        error: CollisionOperator::new(error, label)?,
    })
}
