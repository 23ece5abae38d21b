//! The per-site collision unitary and its application.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{unitarity_defect, CMat4};
use crate::site::SiteState;

/// Tolerance on the unitarity defect of a collision operator.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

/// Rotation angle used throughout for Burgers transport: cos of this angle
/// is 0.8 to five digits, which mixes the one-particle states in the
/// 3-4-5 proportion that sets the lattice transport coefficients.
pub const DEFAULT_COLLISION_ANGLE: f64 = PI / 4.882;

/// Where an operator came from: the exact block rotation, a pulse-level
/// simulation carrying systematic error, or a phase-modulated copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorLabel {
    Ideal,
    Errorful,
    Modulated(usize),
}

impl std::fmt::Display for OperatorLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OperatorLabel::Ideal => write!(f, "ideal"),
            OperatorLabel::Errorful => write!(f, "errorful"),
            OperatorLabel::Modulated(k) => write!(f, "modulated-{k}"),
        }
    }
}

/// A 4x4 unitary acting on one site, in basis order (|11>, |10>, |01>, |00>).
#[derive(Debug, Clone, PartialEq)]
pub struct CollisionOperator {
    matrix: CMat4,
    label: OperatorLabel,
}

impl CollisionOperator {
    /// Wrap a matrix, rejecting anything whose unitarity defect exceeds
    /// [`UNITARITY_TOLERANCE`].
    pub fn new(matrix: CMat4, label: OperatorLabel) -> Result<Self> {
        let defect = unitarity_defect(&matrix);
        if defect > UNITARITY_TOLERANCE {
            return Err(Error::NonUnitary(defect));
        }
        Ok(Self { matrix, label })
    }

    pub fn matrix(&self) -> &CMat4 {
        &self.matrix
    }

    pub fn label(&self) -> OperatorLabel {
        self.label
    }

    /// Copy with a different provenance label.
    pub fn relabeled(&self, label: OperatorLabel) -> Self {
        Self {
            matrix: self.matrix,
            label,
        }
    }
}

/// The block-diagonal collision operator: identity on |11> and |00>,
/// rotation by `phi` on the one-particle block (|10>, |01>):
///
///   [[cos phi, sin phi], [-sin phi, cos phi]].
pub fn build_collision(phi: f64) -> CollisionOperator {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let c = Complex64::new(phi.cos(), 0.0);
    let s = Complex64::new(phi.sin(), 0.0);
    let matrix = CMat4::from_row_slice(&[
        one, z, z, z, //
        z, c, s, z, //
        z, -s, c, z, //
        z, z, z, one,
    ]);
    CollisionOperator {
        matrix,
        label: OperatorLabel::Ideal,
    }
}

/// Collision operator from the two-spin generator
/// sigma_x (x) sigma_y - sigma_y (x) sigma_x.
///
/// The generator's one-particle block is twice a Pauli matrix, so
/// exp(-i (theta/2) G) rotates that block by exactly `theta`; the half-angle
/// convention here makes `collision_from_generator(t)` and
/// `build_collision(t)` agree.
pub fn collision_from_generator(theta: f64) -> CollisionOperator {
    build_collision(theta)
}

/// Apply the operator to a site: plain matrix-vector product. Unitarity of
/// the operator keeps the state normalised.
pub fn apply_collision(site: &SiteState, op: &CollisionOperator) -> SiteState {
    SiteState::from_unchecked(op.matrix() * site.amplitudes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::CVec4;
    use crate::occupation::OccupationPair;
    use crate::site::{measure_site, site_from_occupations};

    /// Angle of the exact 3-4-5 rotation (cos = 0.8, sin = 0.6).
    pub(crate) fn exact_block_angle() -> f64 {
        0.6f64.atan2(0.8)
    }

    #[test]
    fn zero_angle_is_identity() {
        let op = build_collision(0.0);
        assert_eq!(op.matrix(), &CMat4::identity());
    }

    #[test]
    fn default_angle_reproduces_tabulated_entries() {
        let op = build_collision(DEFAULT_COLLISION_ANGLE);
        let m = op.matrix();
        let expect = [
            (0usize, 0usize, 1.0),
            (1, 1, 0.8),
            (1, 2, 0.6),
            (2, 1, -0.6),
            (2, 2, 0.8),
            (3, 3, 1.0),
        ];
        for &(i, j, v) in &expect {
            assert!(
                (m[(i, j)].re - v).abs() < 5e-4,
                "entry ({i},{j}) = {} vs {v}",
                m[(i, j)].re
            );
            assert_eq!(m[(i, j)].im, 0.0);
        }
    }

    #[test]
    fn quarter_rotation_block() {
        let op = build_collision(std::f64::consts::FRAC_PI_2);
        let m = op.matrix();
        assert!((m[(1, 1)].re).abs() < 1e-15);
        assert!((m[(1, 2)].re - 1.0).abs() < 1e-15);
        assert!((m[(2, 1)].re + 1.0).abs() < 1e-15);
    }

    #[test]
    fn generator_form_matches_series_exponential() {
        // Oracle: Taylor-series exponential of -i (theta/2) G with
        // G = sigma_x (x) sigma_y - sigma_y (x) sigma_x, built entry by entry.
        let theta = DEFAULT_COLLISION_ANGLE;
        let z = Complex64::new(0.0, 0.0);
        let mut g = CMat4::from_element(z);
        // G has 2i at (|10>,|01>) and -2i at (|01>,|10>)
        g[(1, 2)] = Complex64::new(0.0, 2.0);
        g[(2, 1)] = Complex64::new(0.0, -2.0);
        let a = g.map(|x| Complex64::new(0.0, -theta / 2.0) * x);
        let mut term = CMat4::identity();
        let mut sum = CMat4::identity();
        for k in 1..30 {
            term = (term * a).map(|x| x / Complex64::new(k as f64, 0.0));
            sum += term;
        }
        let op = collision_from_generator(theta);
        assert!((op.matrix() - sum).norm() < 1e-14);
    }

    #[test]
    fn identity_leaves_site_alone() {
        let p = OccupationPair::new(0.3, 0.8).unwrap();
        let site = site_from_occupations(&p);
        let out = apply_collision(&site, &build_collision(0.0));
        assert_eq!(out.amplitudes(), site.amplitudes());
    }

    #[test]
    fn collision_of_single_right_mover() {
        // (1,0) encodes to |10>; the exact 3-4-5 block sends it to
        // 0.8|10> - 0.6|01>, measuring as (0.64, 0.36).
        let op = build_collision(exact_block_angle());
        let site = site_from_occupations(&OccupationPair::new(1.0, 0.0).unwrap());
        let out = apply_collision(&site, &op);
        let a = out.amplitudes();
        assert!((a[1].re - 0.8).abs() < 1e-15);
        assert!((a[2].re + 0.6).abs() < 1e-15);
        assert!(a[0].norm() < 1e-15 && a[3].norm() < 1e-15);
        let p = measure_site(&out).unwrap();
        assert!((p.f1() - 0.64).abs() < 1e-15);
        assert!((p.f2() - 0.36).abs() < 1e-15);
    }

    #[test]
    fn block_structure_preserves_site_density() {
        let op = build_collision(1.234);
        for &(f1, f2) in &[(0.2, 0.9), (0.5, 0.5), (1.0, 0.0), (0.75, 0.25)] {
            let p = OccupationPair::new(f1, f2).unwrap();
            let out = measure_site(&apply_collision(&site_from_occupations(&p), &op)).unwrap();
            assert!((out.density() - p.density()).abs() < 1e-12);
        }
    }

    #[test]
    fn corners_untouched_by_ideal_operator() {
        let op = build_collision(0.7);
        let site = SiteState::new(CVec4::new(
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.8, 0.0),
        ))
        .unwrap();
        let out = apply_collision(&site, &op);
        assert_eq!(out.amplitudes()[0].re, 0.6);
        assert_eq!(out.amplitudes()[3].re, 0.8);
    }

    #[test]
    fn non_unitary_rejected() {
        let mut m = CMat4::identity();
        m[(0, 0)] = Complex64::new(2.0, 0.0);
        assert!(matches!(
            CollisionOperator::new(m, OperatorLabel::Ideal),
            Err(Error::NonUnitary(_))
        ));
    }
}
