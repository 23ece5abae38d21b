//! Calibration of the analysis layer against the real lattice dynamics.

use analysis_reference::{
    burgers_reference, estimate_advection, estimate_viscosity, AdvectionOptions, ReferenceConfig,
    SinusoidRun, ViscosityOptions,
};
use qlg_core::{build_collision, run, InitialProfile, RunConfig, DEFAULT_COLLISION_ANGLE};

fn lattice_runner(req: &SinusoidRun) -> Vec<Vec<f64>> {
    let config = RunConfig::new(
        req.lattice_size,
        req.steps,
        InitialProfile::Sinusoid {
            mean: req.mean,
            amplitude: req.amplitude,
        },
        vec![build_collision(DEFAULT_COLLISION_ANGLE)],
    );
    run(&config).expect("ideal run").profiles
}

fn viscosity_at(n: usize, steps: usize, amplitude: f64) -> f64 {
    let opts = ViscosityOptions {
        lattice_size: n,
        steps,
        amplitude,
        ..Default::default()
    };
    estimate_viscosity(&lattice_runner, &opts).unwrap().value
}

#[test]
fn lattice_viscosity_matches_linearized_prediction() {
    // Linearizing the collision about the unit-density equilibrium gives a
    // one-particle relaxation factor lambda = cos 2phi - sin 2phi * d_eq
    // = -0.2, hence nu = (1 + lambda) / (2 (1 - lambda)) = 1/3.
    let nu = viscosity_at(64, 400, 0.01);
    assert!((nu - 1.0 / 3.0).abs() < 0.01, "nu = {nu}");
}

#[test]
fn viscosity_is_amplitude_independent_in_the_linear_regime() {
    let a = viscosity_at(64, 400, 0.005);
    let b = viscosity_at(64, 400, 0.02);
    assert!((a - b).abs() / a < 0.05, "{a} vs {b}");
}

#[test]
fn viscosity_is_lattice_size_independent() {
    let reference = viscosity_at(64, 400, 0.01);
    for (n, steps) in [(32usize, 100usize), (128, 1200)] {
        let nu = viscosity_at(n, steps, 0.01);
        assert!(
            (nu - reference).abs() / reference < 0.1,
            "N = {n}: {nu} vs {reference}"
        );
    }
}

#[test]
fn advection_sign_matches_the_steepening_direction() {
    // over-dense bumps drift backwards here, so c must come out negative
    let est = estimate_advection(&lattice_runner, &AdvectionOptions::default()).unwrap();
    assert!(est.value < -0.5, "c = {}", est.value);
    assert!(est.value > -2.0, "c = {}", est.value);
}

#[test]
fn advection_is_stable_across_lattice_sizes() {
    let c64 = estimate_advection(&lattice_runner, &AdvectionOptions::default())
        .unwrap()
        .value;
    let opts32 = AdvectionOptions {
        lattice_size: 32,
        ..Default::default()
    };
    let c32 = estimate_advection(&lattice_runner, &opts32).unwrap().value;
    assert!(
        (c32 - c64).abs() / c64.abs() < 0.15,
        "c(64) = {c64}, c(32) = {c32}"
    );
}

#[test]
fn zero_amplitude_perturbation_does_not_drift() {
    // with a vanishing perturbation the peak velocity is indistinguishable
    // from zero: c * A stays below the interpolation noise floor
    let opts = AdvectionOptions {
        amplitudes: vec![1e-7],
        ..Default::default()
    };
    let est = estimate_advection(&lattice_runner, &opts).unwrap();
    assert!(
        (est.value * 1e-7).abs() < 1e-6,
        "drift per step {} at amplitude 1e-7",
        est.value * 1e-7
    );
}

#[test]
fn calibrated_reference_reproduces_the_ideal_run() {
    // 16 sites, 8 steps, the default shock-forming sinusoid
    let nu = viscosity_at(64, 400, 0.01);
    let c = estimate_advection(&lattice_runner, &AdvectionOptions::default())
        .unwrap()
        .value;

    let config = RunConfig::new(
        16,
        8,
        InitialProfile::Sinusoid {
            mean: 1.0,
            amplitude: 0.4,
        },
        vec![build_collision(DEFAULT_COLLISION_ANGLE)],
    );
    let lattice = run(&config).unwrap().profiles;
    let reference = burgers_reference(&lattice[0], &ReferenceConfig::new(nu, c), 8).unwrap();

    let max_rho = lattice
        .iter()
        .flat_map(|p| p.iter().map(|x| x.abs()))
        .fold(0.0, f64::max);
    for (t, (a, b)) in lattice.iter().zip(&reference).enumerate() {
        let linf = a
            .iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(
            linf <= 0.05 * max_rho,
            "step {t}: Linf = {linf:.4} vs {:.4}",
            0.05 * max_rho
        );
    }
}
