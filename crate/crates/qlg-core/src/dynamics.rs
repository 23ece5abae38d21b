//! The full time-stepping loop: encode, collide, measure, stream.

use crate::collision::{apply_collision, CollisionOperator};
use crate::error::{Error, Result};
use crate::occupation::{
    density, equilibrium_occupations, stream, OccupationField, OccupationPair,
};
use crate::site::{measure_site, site_from_occupations};

/// Initial number-density profile over the lattice.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialProfile {
    /// rho(n) = mean + amplitude * sin(2 pi n / N)
    Sinusoid { mean: f64, amplitude: f64 },
    /// rho(n) = mean + amplitude * exp(-(n - N/2)^2 / (2 (N/8)^2))
    Gaussian { mean: f64, amplitude: f64 },
    /// Explicit densities, one per site.
    Custom(Vec<f64>),
}

impl InitialProfile {
    /// Densities over `n` sites. Every value must land in [0, 2] so the
    /// equilibrium encoding is defined.
    pub fn densities(&self, n: usize) -> Result<Vec<f64>> {
        let profile = match self {
            InitialProfile::Sinusoid { mean, amplitude } => (0..n)
                .map(|i| {
                    mean + amplitude * (2.0 * std::f64::consts::PI * i as f64 / n as f64).sin()
                })
                .collect(),
            InitialProfile::Gaussian { mean, amplitude } => {
                let center = n as f64 / 2.0;
                let sigma = n as f64 / 8.0;
                (0..n)
                    .map(|i| {
                        let d = i as f64 - center;
                        mean + amplitude * (-d * d / (2.0 * sigma * sigma)).exp()
                    })
                    .collect()
            }
            InitialProfile::Custom(values) => {
                if values.len() != n {
                    return Err(Error::ProfileLengthMismatch {
                        expected: n,
                        got: values.len(),
                    });
                }
                values.clone()
            }
        };
        for &rho in &profile {
            if !(0.0..=2.0).contains(&rho) || !rho.is_finite() {
                return Err(Error::DensityOutOfRange(rho));
            }
        }
        Ok(profile)
    }
}

/// Everything a run needs. The seed is echoed into the record but unused:
/// the dynamics is deterministic, the field is reserved for stochastic
/// error models.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub lattice_size: usize,
    pub steps: usize,
    pub initial: InitialProfile,
    pub ops: Vec<CollisionOperator>,
    pub seed: u64,
    pub dx: f64,
    pub dt: f64,
}

impl RunConfig {
    pub fn new(
        lattice_size: usize,
        steps: usize,
        initial: InitialProfile,
        ops: Vec<CollisionOperator>,
    ) -> Self {
        Self {
            lattice_size,
            steps,
            initial,
            ops,
            seed: 0,
            dx: 1.0,
            dt: 1.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.lattice_size < 2 {
            return Err(Error::LatticeTooSmall {
                min: 2,
                got: self.lattice_size,
            });
        }
        if self.ops.is_empty() {
            return Err(Error::EmptyOperatorSet);
        }
        if self.dx <= 0.0 {
            return Err(Error::NonPositive {
                name: "dx",
                value: self.dx,
            });
        }
        if self.dt <= 0.0 {
            return Err(Error::NonPositive {
                name: "dt",
                value: self.dt,
            });
        }
        Ok(())
    }
}

/// Time history of a run: `steps + 1` density profiles and occupation
/// fields, index 0 holding the initial condition.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub config: RunConfig,
    pub profiles: Vec<Vec<f64>>,
    pub fields: Vec<OccupationField>,
}

/// One update of the whole lattice. Each site is encoded, hit with
/// `ops[step_index mod ops.len()]` and measured; the measured occupations
/// are then streamed to the neighbours. Sites are independent until the
/// streaming barrier. The occupations are re-encoded as they come out of
/// the measurement; the equilibrium map is applied only to initial data.
pub fn step(
    field: &OccupationField,
    ops: &[CollisionOperator],
    step_index: usize,
) -> Result<OccupationField> {
    if ops.is_empty() {
        return Err(Error::EmptyOperatorSet);
    }
    let op = &ops[step_index % ops.len()];
    let collided: Result<Vec<OccupationPair>> = field
        .sites()
        .iter()
        .map(|pair| measure_site(&apply_collision(&site_from_occupations(pair), op)))
        .collect();
    let field = OccupationField::new(collided?, field.dx(), field.dt())?;
    Ok(stream(&field))
}

/// Drive a full run: equilibrium-encode the initial profile, iterate
/// [`step`], record the density profile and occupation field at every step.
pub fn run(config: &RunConfig) -> Result<RunRecord> {
    config.validate()?;
    let rho0 = config.initial.densities(config.lattice_size)?;
    let pairs: Result<Vec<OccupationPair>> = rho0
        .iter()
        .map(|&rho| equilibrium_occupations(rho))
        .collect();
    let mut field = OccupationField::new(pairs?, config.dx, config.dt)?;

    let mut profiles = Vec::with_capacity(config.steps + 1);
    let mut fields = Vec::with_capacity(config.steps + 1);
    profiles.push(density(&field));
    fields.push(field.clone());

    for m in 0..config.steps {
        field = step(&field, &config.ops, m)?;
        profiles.push(density(&field));
        fields.push(field.clone());
    }

    Ok(RunRecord {
        config: config.clone(),
        profiles,
        fields,
    })
}
