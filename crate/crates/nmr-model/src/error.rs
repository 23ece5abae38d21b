use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("scalar coupling J must be positive, got {0} Hz")]
    NonPositiveCoupling(f64),

    #[error("pulse sequence is empty")]
    EmptySequence,

    #[error("delay must have positive duration, got {0} s")]
    NonPositiveDelay(f64),

    #[error("rf pulse duration must be non-negative, got {0} s")]
    NegativeDuration(f64),

    #[error("pulse duration for the error model must be non-negative, got {0} s")]
    NegativeModelDuration(f64),

    #[error("coupling during pulses requires a finite pulse duration")]
    FiniteDurationRequired,

    #[error("modulation count must be at least 1")]
    EmptyModulation,

    #[error("magnetization value {0} outside [-1, 1]")]
    MagnetizationOutOfRange(f64),

    #[error("flip-angle scale must be positive, got {0}")]
    NonPositiveFlipScale(f64),

    #[error("profile must have at least one sample")]
    EmptyProfile,

    #[error(transparent)]
    Core(#[from] qlg_core::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
