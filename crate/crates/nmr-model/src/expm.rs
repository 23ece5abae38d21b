//! Matrix exponential for 4x4 complex matrices by scaling and squaring.

use num_complex::Complex64;
use qlg_core::CMat4;

/// exp(A) via Taylor series after scaling A down to norm <= 1/4.
///
/// For the anti-Hermitian generators used here the result is unitary to
/// machine precision; the truncation error at norm 1/4 with 20 terms is
/// far below 1e-16.
pub fn expm(a: &CMat4) -> CMat4 {
    let norm = a.iter().map(|x| x.norm()).fold(0.0f64, f64::max) * 4.0;
    let squarings = if norm > 0.25 {
        (norm / 0.25).log2().ceil() as u32
    } else {
        0
    };
    let scale = Complex64::new((0.5f64).powi(squarings as i32), 0.0);
    let scaled = a.map(|x| x * scale);

    let mut term = CMat4::identity();
    let mut sum = CMat4::identity();
    for k in 1..=20 {
        term = (term * scaled).map(|x| x / Complex64::new(k as f64, 0.0));
        sum += term;
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}
