use thiserror::Error;

/// Errors produced by lattice-gas construction and stepping.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("number density {0} outside [0, 2]")]
    DensityOutOfRange(f64),

    #[error("occupation probability {0} outside [0, 1] beyond the roundoff guard")]
    OccupationOutOfRange(f64),

    #[error("site amplitudes have squared norm {0}, expected 1 within 1e-12")]
    NonUnitNorm(f64),

    #[error("operator is not unitary: max |U\u{2020}U - I| = {0:.3e}")]
    NonUnitary(f64),

    #[error("lattice needs at least {min} sites, got {got}")]
    LatticeTooSmall { min: usize, got: usize },

    #[error("custom profile has {got} entries, lattice has {expected} sites")]
    ProfileLengthMismatch { expected: usize, got: usize },

    #[error("collision operator set is empty")]
    EmptyOperatorSet,

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
