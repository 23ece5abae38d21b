//! Small-flip-angle lattice encoding.
//!
//! A magnetization profile is written across the lattice with a shaped rf
//! pulse played out under a constant gradient. In the small-flip-angle
//! limit the excited transverse magnetization is the Fourier synthesis of
//! the pulse samples, so the waveform is the inverse discrete Fourier
//! transform of the desired profile. This module simulates the actual
//! hard-pulse train on the Bloch sphere, exposing the first-order nature
//! of that approximation: the error vanishes quadratically as the overall
//! flip-angle scale is reduced.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Result of simulating one encoding: the requested profile, the
/// magnetization actually excited, and whether any single hard pulse left
/// the rotation regime entirely (flip beyond pi).
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedProfile {
    pub desired: Vec<f64>,
    pub actual: Vec<f64>,
    pub flip_scale: f64,
    pub nonlinear: bool,
}

impl EncodedProfile {
    /// Max-norm distance between the unit-normalized actual and desired
    /// profiles. Zero profiles compare equal to zero.
    pub fn normalized_max_error(&self) -> f64 {
        let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let (nd, na) = (norm(&self.desired), norm(&self.actual));
        if nd == 0.0 && na == 0.0 {
            return 0.0;
        }
        if nd == 0.0 || na == 0.0 {
            return f64::INFINITY;
        }
        self.desired
            .iter()
            .zip(&self.actual)
            .map(|(d, a)| (d / nd - a / na).abs())
            .fold(0.0, f64::max)
    }
}

/// Waveform sample k: (1/N) sum_n desired[n] e^{+2 pi i k n / N}.
fn waveform(desired: &[f64]) -> Vec<Complex64> {
    let n = desired.len();
    (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (m, &d) in desired.iter().enumerate() {
                let theta = 2.0 * std::f64::consts::PI * (k * m) as f64 / n as f64;
                acc += Complex64::from_polar(d, theta);
            }
            acc / n as f64
        })
        .collect()
}

fn rotation_z(theta: f64) -> Matrix3<f64> {
    let (s, c) = theta.sin_cos();
    Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
}

/// Rotation about the transverse axis at azimuth `psi` by angle `alpha`,
/// oriented so a positive real rf sample tips +z toward +y.
fn rf_kick(psi: f64, alpha: f64) -> Matrix3<f64> {
    let (sa, ca) = alpha.sin_cos();
    let tip = Matrix3::new(1.0, 0.0, 0.0, 0.0, ca, sa, 0.0, -sa, ca);
    rotation_z(psi) * tip * rotation_z(-psi)
}

/// Simulate the hard-pulse encoding of `desired` (values in [-1, 1]) at the
/// given flip-angle scale.
///
/// Per site n the isochromat starts along +z and alternates rf kicks of
/// complex amplitude `flip_scale * w_k` with gradient z rotations of
/// 2 pi n / N; the recorded magnetization is the final M_y component, the
/// quadrature of the rf drive axis. As `flip_scale` goes to zero the
/// normalized result converges to the normalized desired profile.
pub fn encode_profile(desired: &[f64], flip_scale: f64) -> Result<EncodedProfile> {
    if desired.is_empty() {
        return Err(Error::EmptyProfile);
    }
    if flip_scale <= 0.0 || !flip_scale.is_finite() {
        return Err(Error::NonPositiveFlipScale(flip_scale));
    }
    for &d in desired {
        if !(-1.0..=1.0).contains(&d) || !d.is_finite() {
            return Err(Error::MagnetizationOutOfRange(d));
        }
    }
    let n = desired.len();
    let w = waveform(desired);
    let kicks: Vec<(f64, f64)> = w
        .iter()
        .map(|b| {
            let scaled = flip_scale * b.norm();
            (b.arg(), scaled)
        })
        .collect();
    let nonlinear = kicks.iter().any(|&(_, alpha)| alpha > std::f64::consts::PI);

    let mut actual = Vec::with_capacity(n);
    for site in 0..n {
        let delta = 2.0 * std::f64::consts::PI * site as f64 / n as f64;
        let blip = rotation_z(delta);
        let mut m = Vector3::new(0.0, 0.0, 1.0);
        for &(psi, alpha) in &kicks {
            if alpha > 0.0 {
                m = rf_kick(psi, alpha) * m;
            }
            m = blip * m;
        }
        actual.push(m.y);
    }

    Ok(EncodedProfile {
        desired: desired.to_vec(),
        actual,
        flip_scale,
        nonlinear,
    })
}
