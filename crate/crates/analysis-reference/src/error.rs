use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("viscosity must be positive, got {0}")]
    NonPositiveViscosity(f64),

    #[error("refinement must be at least 4, got {0}")]
    RefinementTooCoarse(usize),

    #[error("Courant number must lie in (0, 0.5], got {0}")]
    CflOutOfRange(f64),

    #[error("profile runs have mismatched shapes: {0} vs {1} snapshots of {2} vs {3} sites")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("deviation at step {step} is {value}, log slope undefined")]
    NonPositiveDeviation { step: usize, value: f64 },

    #[error("slope fit needs at least 3 points in the window, found {0}")]
    TooFewPoints(usize),

    #[error("fit window [{0}, {1}] is empty or starts before step 1")]
    BadWindow(usize, usize),

    #[error("lattice too small for calibration: need at least {min} sites, got {got}")]
    LatticeTooSmall { min: usize, got: usize },

    #[error("decay fit residual {residual:.3e} exceeds {threshold:.3e}: decay is not exponential")]
    NonExponentialDecay { residual: f64, threshold: f64 },

    #[error("advection fit degenerate: {0}")]
    DegenerateAdvectionFit(String),

    #[error("runner returned {got} snapshots, expected {expected}")]
    RunnerShape { expected: usize, got: usize },

    #[error("initial profile needs at least 2 sites, got {0}")]
    ProfileTooShort(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
