//! Small helpers for 4x4 complex matrices.

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

pub type CMat4 = Matrix4<Complex64>;
pub type CVec4 = Vector4<Complex64>;

/// Max-absolute-entry deviation of `U†U` from the identity.
pub fn unitarity_defect(u: &CMat4) -> f64 {
    let gram = u.adjoint() * u;
    let mut defect = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let expected = if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            defect = defect.max((gram[(i, j)] - expected).norm());
        }
    }
    defect
}

/// Frobenius distance between `a` and `b` after aligning global phase.
///
/// The phase is taken from the entry where `b` has the largest modulus:
/// lambda = a_ij / b_ij normalised to unit modulus, then ||a - lambda b||_F.
pub fn phase_aligned_distance(a: &CMat4, b: &CMat4) -> f64 {
    let mut best = (0usize, 0usize);
    let mut mag = -1.0f64;
    for i in 0..4 {
        for j in 0..4 {
            if b[(i, j)].norm() > mag {
                mag = b[(i, j)].norm();
                best = (i, j);
            }
        }
    }
    let lambda = if mag > 0.0 && a[best].norm() > 0.0 {
        let raw = a[best] / b[best];
        raw / raw.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    (a - b.map(|x| lambda * x)).norm()
}

/// Projection onto the particle-number-conserving entries: the two corner
/// diagonal entries (double and zero occupation) and the middle 2x2 block
/// (single occupation). Everything that changes total occupation is zeroed.
pub fn number_conserving_projection(u: &CMat4) -> CMat4 {
    let z = Complex64::new(0.0, 0.0);
    let mut p = CMat4::from_element(z);
    p[(0, 0)] = u[(0, 0)];
    p[(3, 3)] = u[(3, 3)];
    for i in 1..3 {
        for j in 1..3 {
            p[(i, j)] = u[(i, j)];
        }
    }
    p
}
