//! Mesoscopic state: per-site occupation probabilities and the lattice field.

use crate::error::{Error, Result};

/// Roundoff guard for occupation probabilities: values inside
/// [-GUARD, 1 + GUARD] are clamped to [0, 1], anything further out is an error.
pub const OCCUPATION_GUARD: f64 = 1e-9;

/// Occupation probabilities of one site: `f1` rides with the right-mover
/// (speed +1), `f2` with the left-mover (speed -1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OccupationPair {
    f1: f64,
    f2: f64,
}

impl OccupationPair {
    /// Build a pair, clamping roundoff-sized excursions and rejecting the rest.
    pub fn new(f1: f64, f2: f64) -> Result<Self> {
        Ok(Self {
            f1: clamp_occupation(f1)?,
            f2: clamp_occupation(f2)?,
        })
    }

    pub fn f1(&self) -> f64 {
        self.f1
    }

    pub fn f2(&self) -> f64 {
        self.f2
    }

    /// Number density of the site.
    pub fn density(&self) -> f64 {
        self.f1 + self.f2
    }
}

fn clamp_occupation(f: f64) -> Result<f64> {
    if !f.is_finite() || !(-OCCUPATION_GUARD..=1.0 + OCCUPATION_GUARD).contains(&f) {
        return Err(Error::OccupationOutOfRange(f));
    }
    Ok(f.clamp(0.0, 1.0))
}

/// Equilibrium occupations for number density `rho` in [0, 2]:
///
///   f_a = rho/2 + e_a * (5/8) * (1 - sqrt(1 - (32 rho / 25)(1 - rho/2)))
///
/// with e_1 = +1 and e_2 = -1. The square-root argument equals
/// (16 rho^2 - 32 rho + 25)/25 and is positive for every real rho.
pub fn equilibrium_occupations(rho: f64) -> Result<OccupationPair> {
    if !(0.0..=2.0).contains(&rho) || !rho.is_finite() {
        return Err(Error::DensityOutOfRange(rho));
    }
    let arg = 1.0 - (32.0 * rho / 25.0) * (1.0 - rho / 2.0);
    let bracket = 1.0 - arg.sqrt();
    let shift = 0.625 * bracket;
    OccupationPair::new(rho / 2.0 + shift, rho / 2.0 - shift)
}

/// The lattice of occupation pairs plus its spacing.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupationField {
    sites: Vec<OccupationPair>,
    dx: f64,
    dt: f64,
}

impl OccupationField {
    pub fn new(sites: Vec<OccupationPair>, dx: f64, dt: f64) -> Result<Self> {
        if sites.len() < 2 {
            return Err(Error::LatticeTooSmall {
                min: 2,
                got: sites.len(),
            });
        }
        if dx <= 0.0 {
            return Err(Error::NonPositive {
                name: "dx",
                value: dx,
            });
        }
        if dt <= 0.0 {
            return Err(Error::NonPositive {
                name: "dt",
                value: dt,
            });
        }
        Ok(Self { sites, dx, dt })
    }

    /// Field with unit lattice spacing and unit time step.
    pub fn with_unit_spacing(sites: Vec<OccupationPair>) -> Result<Self> {
        Self::new(sites, 1.0, 1.0)
    }

    pub fn sites(&self) -> &[OccupationPair] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Total of each species over the lattice, `(sum f1, sum f2)`.
    pub fn species_totals(&self) -> (f64, f64) {
        self.sites
            .iter()
            .fold((0.0, 0.0), |(a, b), p| (a + p.f1(), b + p.f2()))
    }
}

/// Shift right-movers one site right and left-movers one site left, with
/// periodic wrap-around. Per-species totals are conserved bit-exactly since
/// this is a pure permutation.
pub fn stream(field: &OccupationField) -> OccupationField {
    let n = field.len();
    let mut shifted = field.sites.clone();
    for (i, site) in field.sites.iter().enumerate() {
        shifted[(i + 1) % n].f1 = site.f1;
        shifted[(i + n - 1) % n].f2 = site.f2;
    }
    OccupationField {
        sites: shifted,
        dx: field.dx,
        dt: field.dt,
    }
}

/// Number density profile rho(n) = f1(n) + f2(n).
pub fn density(field: &OccupationField) -> Vec<f64> {
    field.sites.iter().map(|p| p.density()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(f1: f64, f2: f64) -> OccupationPair {
        OccupationPair::new(f1, f2).unwrap()
    }

    #[test]
    fn equilibrium_endpoints() {
        let p = equilibrium_occupations(0.0).unwrap();
        assert_eq!((p.f1(), p.f2()), (0.0, 0.0));
        let p = equilibrium_occupations(2.0).unwrap();
        assert!((p.f1() - 1.0).abs() < 1e-15 && (p.f2() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn equilibrium_at_unit_density() {
        // sqrt(1 - 0.64) = 0.6, bracket = 0.4, 0.5 +- 0.25
        let p = equilibrium_occupations(1.0).unwrap();
        assert!((p.f1() - 0.75).abs() < 1e-15);
        assert!((p.f2() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn equilibrium_rejects_out_of_range() {
        assert!(matches!(
            equilibrium_occupations(-0.1),
            Err(Error::DensityOutOfRange(_))
        ));
        assert!(matches!(
            equilibrium_occupations(2.2),
            Err(Error::DensityOutOfRange(_))
        ));
    }

    #[test]
    fn occupation_guard_clamps_but_rejects_violations() {
        assert_eq!(pair(1.0 + 1e-10, -1e-10), pair(1.0, 0.0));
        assert!(OccupationPair::new(1.1, 0.0).is_err());
        assert!(OccupationPair::new(0.0, -1e-6).is_err());
    }

    #[test]
    fn stream_moves_species_oppositely() {
        let zeros = pair(0.0, 0.0);
        let mut sites = vec![zeros; 4];
        sites[0] = pair(1.0, 1.0);
        let field = OccupationField::with_unit_spacing(sites).unwrap();
        let out = stream(&field);
        let f1: Vec<f64> = out.sites().iter().map(|p| p.f1()).collect();
        let f2: Vec<f64> = out.sites().iter().map(|p| p.f2()).collect();
        assert_eq!(f1, vec![0.0, 1.0, 0.0, 0.0]);
        assert_eq!(f2, vec![0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn stream_fixes_uniform_field() {
        let sites = vec![pair(0.3, 0.6); 5];
        let field = OccupationField::with_unit_spacing(sites).unwrap();
        assert_eq!(stream(&field), field);
    }

    #[test]
    fn density_sums_components() {
        let field =
            OccupationField::with_unit_spacing(vec![pair(0.0, 0.0), pair(1.0, 1.0)]).unwrap();
        assert_eq!(density(&field), vec![0.0, 2.0]);
    }

    #[test]
    fn field_validates_shape() {
        assert!(OccupationField::with_unit_spacing(vec![pair(0.1, 0.1)]).is_err());
        assert!(OccupationField::new(vec![pair(0.1, 0.1); 2], 0.0, 1.0).is_err());
    }
}
