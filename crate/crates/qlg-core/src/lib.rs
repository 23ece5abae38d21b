//! Quantum lattice-gas dynamics for the 1-D Burgers equation.
//!
//! Each lattice site holds two qubits whose excitation probabilities are the
//! occupation numbers of a right-mover and a left-mover. A time step encodes
//! the occupations into a product state, applies a small unitary collision,
//! measures both occupation numbers, and streams them to the neighbouring
//! sites. The number density f1 + f2 then obeys a Burgers-type equation in
//! the continuum limit.
//!
//! Basis order everywhere is (|11>, |10>, |01>, |00>), qubit 1 first.

pub mod collision;
pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod occupation;
pub mod site;

pub use collision::{
    apply_collision, build_collision, collision_from_generator, CollisionOperator, OperatorLabel,
    DEFAULT_COLLISION_ANGLE, UNITARITY_TOLERANCE,
};
pub use dynamics::{run, step, InitialProfile, RunConfig, RunRecord};
pub use error::{Error, Result};
pub use linalg::{
    number_conserving_projection, phase_aligned_distance, unitarity_defect, CMat4, CVec4,
};
pub use occupation::{
    density, equilibrium_occupations, stream, OccupationField, OccupationPair, OCCUPATION_GUARD,
};
pub use site::{measure_site, site_from_occupations, SiteState, NORM_TOLERANCE};
