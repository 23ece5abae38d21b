//! The four experiment drivers behind the CLI subcommands.

use std::path::{Path, PathBuf};

use analysis_reference::{
    deviation, estimate_advection, estimate_viscosity, fit_loglog_slope, AdvectionOptions,
    DeviationSeries, SinusoidRun, SlopeFit, TransportEstimate, ViscosityOptions,
};
use nmr_model::{errorful_collision_set, phase_modulated_operators, ErrorModel, Modulation};
use qlg_core::{build_collision, run, CollisionOperator, RunConfig, RunRecord};

use crate::config::{ErrorModelSpec, FileConfig};
use crate::error::{CliError, Result};
use crate::output::{format_f64, simulation_csv, slopes_path, write_file};

/// Collision-operator set implied by the configuration.
pub fn build_operators(cfg: &FileConfig) -> Result<Vec<CollisionOperator>> {
    match cfg.error_model {
        ErrorModelSpec::Ideal => match cfg.modulation {
            Modulation::None => Ok(vec![build_collision(cfg.phi)]),
            Modulation::Z4 => Ok(phase_modulated_operators(&build_collision(cfg.phi), 4)?),
        },
        ErrorModelSpec::Coupled => {
            let model = ErrorModel::coupled(cfg.pulse_duration_seconds())?;
            Ok(errorful_collision_set(
                cfg.phi,
                cfg.j_hz,
                &model,
                cfg.modulation,
            )?)
        }
    }
}

fn lattice_run(cfg: &FileConfig, ops: Vec<CollisionOperator>) -> Result<RunRecord> {
    let mut config = RunConfig::new(
        cfg.lattice_size,
        cfg.steps,
        cfg.initial.to_initial_profile(cfg.lattice_size)?,
        ops,
    );
    config.seed = cfg.seed;
    Ok(run(&config)?)
}

pub struct SimulateSummary {
    pub data_rows: usize,
    pub out: PathBuf,
}

/// Run the configured experiment and emit `step,site,f1,f2,rho` rows for
/// steps 0..=steps.
pub fn cmd_simulate(cfg: &FileConfig, out: &Path) -> Result<SimulateSummary> {
    let record = lattice_run(cfg, build_operators(cfg)?)?;
    let csv = simulation_csv(&record.profiles, &record.fields);
    write_file(out, &csv)?;
    Ok(SimulateSummary {
        data_rows: (cfg.steps + 1) * cfg.lattice_size,
        out: out.to_path_buf(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SlopeOutcome {
    /// Deviations were at floating-point floor; a log-log fit is refused.
    NoError,
    Fit(SlopeFit),
}

impl SlopeOutcome {
    pub fn fit(&self) -> Option<SlopeFit> {
        match self {
            SlopeOutcome::Fit(f) => Some(*f),
            SlopeOutcome::NoError => None,
        }
    }
}

pub struct ErrorGrowthSummary {
    pub unmodulated: SlopeOutcome,
    pub z4: SlopeOutcome,
    pub deviations_out: PathBuf,
    pub slopes_out: PathBuf,
}

const NO_ERROR_FLOOR: f64 = 1e-12;

fn slope_outcome(series: &DeviationSeries, window: (usize, usize)) -> Result<SlopeOutcome> {
    if series.max() <= NO_ERROR_FLOOR {
        return Ok(SlopeOutcome::NoError);
    }
    Ok(SlopeOutcome::Fit(fit_loglog_slope(series, window)?))
}

/// Paired ideal/errorful runs with both modulation settings; emits the
/// per-step deviations and a slope summary.
pub fn cmd_error_growth(
    cfg: &FileConfig,
    out: &Path,
    window: (usize, usize),
) -> Result<ErrorGrowthSummary> {
    let ideal_cfg = FileConfig {
        error_model: ErrorModelSpec::Ideal,
        modulation: Modulation::None,
        ..cfg.clone()
    };
    let ideal = lattice_run(&ideal_cfg, vec![build_collision(cfg.phi)])?;

    let errorful = |modulation: Modulation| -> Result<RunRecord> {
        let run_cfg = FileConfig {
            modulation,
            ..cfg.clone()
        };
        lattice_run(&run_cfg, build_operators(&run_cfg)?)
    };
    let unmodulated = errorful(Modulation::None)?;
    let modulated = errorful(Modulation::Z4)?;

    let dev_none = deviation(&unmodulated.profiles, &ideal.profiles)?;
    let dev_z4 = deviation(&modulated.profiles, &ideal.profiles)?;

    let mut csv = String::from("step,deviation_unmodulated,deviation_z4\n");
    for (&(step, a), &(_, b)) in dev_none.per_step().iter().zip(dev_z4.per_step()) {
        csv.push_str(&format!("{step},{},{}\n", format_f64(a), format_f64(b)));
    }
    write_file(out, &csv)?;

    let outcome_none = slope_outcome(&dev_none, window)?;
    let outcome_z4 = slope_outcome(&dev_z4, window)?;

    let slopes_file = slopes_path(out);
    let mut slopes_csv =
        String::from("modulation,status,slope,std_error,points,window_lo,window_hi\n");
    for (name, outcome) in [("none", &outcome_none), ("z4", &outcome_z4)] {
        match outcome {
            SlopeOutcome::NoError => {
                slopes_csv.push_str(&format!("{name},no-error,,,,{},{}\n", window.0, window.1));
            }
            SlopeOutcome::Fit(fit) => {
                slopes_csv.push_str(&format!(
                    "{name},ok,{},{},{},{},{}\n",
                    format_f64(fit.slope),
                    format_f64(fit.std_error),
                    fit.points,
                    window.0,
                    window.1
                ));
            }
        }
    }
    write_file(&slopes_file, &slopes_csv)?;

    Ok(ErrorGrowthSummary {
        unmodulated: outcome_none,
        z4: outcome_z4,
        deviations_out: out.to_path_buf(),
        slopes_out: slopes_file,
    })
}

pub struct CalibrateSummary {
    pub nu: TransportEstimate,
    pub c: TransportEstimate,
    pub out: PathBuf,
}

/// Measure the effective viscosity and advection coefficient of the ideal
/// lattice dynamics at the configured collision angle.
pub fn cmd_calibrate(cfg: &FileConfig, out: &Path) -> Result<CalibrateSummary> {
    let phi = cfg.phi;
    let runner = move |req: &SinusoidRun| -> Vec<Vec<f64>> {
        let config = RunConfig::new(
            req.lattice_size,
            req.steps,
            qlg_core::InitialProfile::Sinusoid {
                mean: req.mean,
                amplitude: req.amplitude,
            },
            vec![build_collision(phi)],
        );
        run(&config).expect("calibration probe run").profiles
    };

    let nu = estimate_viscosity(
        &runner,
        &ViscosityOptions {
            lattice_size: cfg.lattice_size,
            mean: cfg.initial.mean,
            ..Default::default()
        },
    )?;
    let c = estimate_advection(
        &runner,
        &AdvectionOptions {
            lattice_size: cfg.lattice_size,
            mean: cfg.initial.mean,
            ..Default::default()
        },
    )?;

    let mut csv = String::from("coefficient,value,std_error,fit_residual\n");
    for (name, est) in [("nu_eff", &nu), ("c_eff", &c)] {
        csv.push_str(&format!(
            "{name},{},{},{}\n",
            format_f64(est.value),
            format_f64(est.std_error),
            format_f64(est.fit_residual)
        ));
    }
    write_file(out, &csv)?;

    Ok(CalibrateSummary {
        nu,
        c,
        out: out.to_path_buf(),
    })
}

pub struct EncodeRow {
    pub flip_scale: f64,
    pub max_error: f64,
    pub nonlinear: bool,
}

pub struct EncodeSummary {
    pub rows: Vec<EncodeRow>,
    pub out: PathBuf,
}

/// Sweep the flip-angle scale over the configured magnetization profile and
/// emit the normalized encoding error per scale.
pub fn cmd_encode_test(cfg: &FileConfig, out: &Path) -> Result<EncodeSummary> {
    let desired = cfg.initial.sample(cfg.lattice_size)?;
    let mut rows = Vec::with_capacity(cfg.encode_scales.len());
    for &scale in &cfg.encode_scales {
        let encoded = nmr_model::encode_profile(&desired, scale)
            .map_err(|e| CliError::config("initial", e.to_string()))?;
        rows.push(EncodeRow {
            flip_scale: scale,
            max_error: encoded.normalized_max_error(),
            nonlinear: encoded.nonlinear,
        });
    }
    let mut csv = String::from("flip_scale,max_error,nonlinear\n");
    for row in &rows {
        csv.push_str(&format!(
            "{},{},{}\n",
            format_f64(row.flip_scale),
            format_f64(row.max_error),
            u8::from(row.nonlinear)
        ));
    }
    write_file(out, &csv)?;
    Ok(EncodeSummary {
        rows,
        out: out.to_path_buf(),
    })
}
