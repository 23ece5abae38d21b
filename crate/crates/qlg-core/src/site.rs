//! Per-site quantum state in the two-qubit basis (|11>, |10>, |01>, |00>).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::CVec4;
use crate::occupation::OccupationPair;

/// Tolerance on the squared norm of a site state.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Complex amplitude 4-vector of one lattice site, ordered
/// (|11>, |10>, |01>, |00>). Qubit 1 is the first ket label.
#[derive(Debug, Clone, PartialEq)]
pub struct SiteState {
    amplitudes: CVec4,
}

impl SiteState {
    /// Build a state, rejecting non-unit norms.
    pub fn new(amplitudes: CVec4) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NonUnitNorm(norm_sq));
        }
        Ok(Self { amplitudes })
    }

    pub(crate) fn from_unchecked(amplitudes: CVec4) -> Self {
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &CVec4 {
        &self.amplitudes
    }
}

/// Encode occupation probabilities as the product state
///
///   sqrt(f1 f2)|11> + sqrt(f1 (1-f2))|10> + sqrt((1-f1) f2)|01>
///   + sqrt((1-f1)(1-f2))|00>.
pub fn site_from_occupations(pair: &OccupationPair) -> SiteState {
    let (f1, f2) = (pair.f1(), pair.f2());
    let (g1, g2) = (1.0 - f1, 1.0 - f2);
    let re = |x: f64| Complex64::new(x.sqrt(), 0.0);
    SiteState::from_unchecked(CVec4::new(
        re(f1 * f2),
        re(f1 * g2),
        re(g1 * f2),
        re(g1 * g2),
    ))
}

/// Projective readout of both qubit occupations:
/// f1 = |a11|^2 + |a10|^2 and f2 = |a11|^2 + |a01|^2.
///
/// This is the decohering measurement step: any superposition or
/// entanglement created by the collision is discarded, only the two
/// occupation numbers survive.
pub fn measure_site(site: &SiteState) -> Result<OccupationPair> {
    let p: Vec<f64> = site.amplitudes.iter().map(|a| a.norm_sqr()).collect();
    OccupationPair::new(p[0] + p[1], p[0] + p[2])
}
