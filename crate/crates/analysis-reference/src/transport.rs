//! Empirical transport coefficients of the lattice gas.
//!
//! Both estimators drive externally supplied runs (a runner closure maps a
//! sinusoid specification to a density history), so they can be fed the
//! real dynamics or synthetic histories in tests.

use crate::error::{Error, Result};
use crate::fitting::fit_line;

/// A sinusoid-initialized run request handed to the runner:
/// rho(n) = mean + amplitude sin(2 pi n / N) evolved for `steps` steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinusoidRun {
    pub lattice_size: usize,
    pub steps: usize,
    pub mean: f64,
    pub amplitude: f64,
}

/// Produces `steps + 1` density profiles for the requested run.
pub type Runner<'a> = &'a dyn Fn(&SinusoidRun) -> Vec<Vec<f64>>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransportEstimate {
    pub value: f64,
    pub std_error: f64,
    /// RMS residual of the underlying fit, for diagnostics.
    pub fit_residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViscosityOptions {
    pub lattice_size: usize,
    pub steps: usize,
    pub mean: f64,
    pub amplitude: f64,
    /// Reject the fit when the RMS residual of log-amplitude vs time
    /// exceeds this (decay not exponential).
    pub residual_threshold: f64,
}

impl Default for ViscosityOptions {
    fn default() -> Self {
        Self {
            lattice_size: 64,
            steps: 400,
            mean: 1.0,
            amplitude: 0.01,
            residual_threshold: 0.05,
        }
    }
}

/// Complex amplitude of the fundamental mode, 1/N sum rho_n e^{-2 pi i n/N}.
fn fundamental_mode(profile: &[f64]) -> (f64, f64) {
    let n = profile.len() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (i, &x) in profile.iter().enumerate() {
        let theta = 2.0 * std::f64::consts::PI * i as f64 / n;
        re += x * theta.cos();
        im -= x * theta.sin();
    }
    (re / n, im / n)
}

fn mode_magnitude(profile: &[f64]) -> f64 {
    let (re, im) = fundamental_mode(profile);
    (re * re + im * im).sqrt()
}

/// Fit the exponential decay of the fundamental mode of a small-amplitude
/// sinusoid and convert the rate to a viscosity, nu = rate / k^2.
pub fn estimate_viscosity(runner: Runner, opts: &ViscosityOptions) -> Result<TransportEstimate> {
    if opts.lattice_size < 16 {
        return Err(Error::LatticeTooSmall {
            min: 16,
            got: opts.lattice_size,
        });
    }
    let request = SinusoidRun {
        lattice_size: opts.lattice_size,
        steps: opts.steps,
        mean: opts.mean,
        amplitude: opts.amplitude,
    };
    let profiles = runner(&request);
    if profiles.len() != opts.steps + 1 {
        return Err(Error::RunnerShape {
            expected: opts.steps + 1,
            got: profiles.len(),
        });
    }
    let times: Vec<f64> = (0..profiles.len()).map(|t| t as f64).collect();
    let logs: Vec<f64> = profiles
        .iter()
        .enumerate()
        .map(|(t, p)| {
            let a = mode_magnitude(p);
            if a <= 0.0 {
                return Err(Error::NonPositiveDeviation { step: t, value: a });
            }
            Ok(a.ln())
        })
        .collect::<Result<_>>()?;
    let fit = fit_line(&times, &logs);
    if fit.rms_residual > opts.residual_threshold {
        return Err(Error::NonExponentialDecay {
            residual: fit.rms_residual,
            threshold: opts.residual_threshold,
        });
    }
    let k = 2.0 * std::f64::consts::PI / opts.lattice_size as f64;
    Ok(TransportEstimate {
        value: -fit.slope / (k * k),
        std_error: fit.slope_stderr / (k * k),
        fit_residual: fit.rms_residual,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdvectionOptions {
    pub lattice_size: usize,
    pub mean: f64,
    /// Perturbation amplitudes of the probe runs.
    pub amplitudes: Vec<f64>,
    /// Cap on the probe length; each run is additionally shortened to half
    /// its shock-formation estimate so the peak stays well defined.
    pub max_steps: usize,
}

impl Default for AdvectionOptions {
    fn default() -> Self {
        Self {
            lattice_size: 64,
            mean: 1.0,
            amplitudes: vec![0.05, 0.1, 0.2],
            max_steps: 20,
        }
    }
}

/// Sub-site peak position by quadratic interpolation around the maximum.
fn peak_position(profile: &[f64]) -> f64 {
    let n = profile.len();
    let (i, _) =
        profile.iter().enumerate().fold(
            (0, f64::MIN),
            |acc, (j, &x)| {
                if x > acc.1 {
                    (j, x)
                } else {
                    acc
                }
            },
        );
    let ym = profile[(i + n - 1) % n];
    let y0 = profile[i];
    let yp = profile[(i + 1) % n];
    let denom = ym - 2.0 * y0 + yp;
    let frac = if denom.abs() < 1e-300 {
        0.0
    } else {
        0.5 * (ym - yp) / denom
    };
    (i as f64 + frac).rem_euclid(n as f64)
}

fn unwrap_positions(positions: &mut [f64], n: f64) {
    for i in 1..positions.len() {
        while positions[i] - positions[i - 1] > n / 2.0 {
            positions[i] -= n;
        }
        while positions[i] - positions[i - 1] < -n / 2.0 {
            positions[i] += n;
        }
    }
}

/// Estimate the advection coefficient from the drift of the density peak:
/// for each probe amplitude the peak velocity is fitted over a pre-shock
/// window, then v is regressed through the origin against the peak's
/// density excess, v = c (rho_peak - mean).
pub fn estimate_advection(runner: Runner, opts: &AdvectionOptions) -> Result<TransportEstimate> {
    if opts.lattice_size < 16 {
        return Err(Error::LatticeTooSmall {
            min: 16,
            got: opts.lattice_size,
        });
    }
    if opts.amplitudes.is_empty() {
        return Err(Error::DegenerateAdvectionFit("no probe amplitudes".into()));
    }
    let n = opts.lattice_size;
    let k = 2.0 * std::f64::consts::PI / n as f64;
    let mut weighted_num = 0.0;
    let mut weighted_den = 0.0;
    let mut residual_sq = 0.0;
    for &amplitude in &opts.amplitudes {
        // rough shock time 1 / (|c| A k) with |c| of order one
        let shock_steps = (1.0 / (1.3 * amplitude.max(1e-12) * k)).floor();
        let steps = (opts.max_steps.min(shock_steps as usize / 2)).max(6);
        let profiles = runner(&SinusoidRun {
            lattice_size: n,
            steps,
            mean: opts.mean,
            amplitude,
        });
        if profiles.len() != steps + 1 {
            return Err(Error::RunnerShape {
                expected: steps + 1,
                got: profiles.len(),
            });
        }
        let mut positions: Vec<f64> = profiles.iter().map(|p| peak_position(p)).collect();
        unwrap_positions(&mut positions, n as f64);
        let times: Vec<f64> = (0..positions.len()).map(|t| t as f64).collect();
        let drift = fit_line(&times, &positions);
        let mean_peak = profiles
            .iter()
            .map(|p| p.iter().cloned().fold(f64::MIN, f64::max))
            .sum::<f64>()
            / profiles.len() as f64;
        let excess = mean_peak - opts.mean;
        if excess.abs() < 1e-12 {
            return Err(Error::DegenerateAdvectionFit(format!(
                "peak excess {excess} too small at amplitude {amplitude}"
            )));
        }
        weighted_num += drift.slope * excess;
        weighted_den += excess * excess;
        residual_sq += drift.rms_residual * drift.rms_residual;
    }
    let count = opts.amplitudes.len() as f64;
    let rms_residual = (residual_sq / count).sqrt();
    Ok(TransportEstimate {
        value: weighted_num / weighted_den,
        std_error: rms_residual / weighted_den.sqrt(),
        fit_residual: rms_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diffusing_sinusoid(nu: f64) -> impl Fn(&SinusoidRun) -> Vec<Vec<f64>> {
        move |req: &SinusoidRun| {
            let n = req.lattice_size;
            let k = 2.0 * std::f64::consts::PI / n as f64;
            (0..=req.steps)
                .map(|t| {
                    let decay = (-nu * k * k * t as f64).exp();
                    (0..n)
                        .map(|i| req.mean + req.amplitude * decay * (k * i as f64).sin())
                        .collect()
                })
                .collect()
        }
    }

    fn drifting_sinusoid(c: f64) -> impl Fn(&SinusoidRun) -> Vec<Vec<f64>> {
        move |req: &SinusoidRun| {
            let n = req.lattice_size;
            let k = 2.0 * std::f64::consts::PI / n as f64;
            (0..=req.steps)
                .map(|t| {
                    let shift = c * req.amplitude * t as f64;
                    (0..n)
                        .map(|i| req.mean + req.amplitude * (k * (i as f64 - shift)).sin())
                        .collect()
                })
                .collect()
        }
    }

    #[test]
    fn recovers_exact_exponential_decay() {
        let runner = diffusing_sinusoid(0.3);
        let est = estimate_viscosity(&runner, &ViscosityOptions::default()).unwrap();
        assert!((est.value - 0.3).abs() < 1e-9, "value {}", est.value);
        assert!(est.fit_residual < 1e-9);
    }

    #[test]
    fn rejects_non_exponential_decay() {
        let runner = |req: &SinusoidRun| {
            let n = req.lattice_size;
            let k = 2.0 * std::f64::consts::PI / n as f64;
            (0..=req.steps)
                .map(|t| {
                    // amplitude alternating between two levels: not exponential
                    let a = if t % 2 == 0 { 1.0 } else { 0.05 } * req.amplitude;
                    (0..n)
                        .map(|i| req.mean + a * (k * i as f64).sin())
                        .collect()
                })
                .collect()
        };
        assert!(matches!(
            estimate_viscosity(&runner, &ViscosityOptions::default()),
            Err(Error::NonExponentialDecay { .. })
        ));
    }

    #[test]
    fn small_lattice_refused() {
        let runner = diffusing_sinusoid(0.3);
        let opts = ViscosityOptions {
            lattice_size: 8,
            ..Default::default()
        };
        assert!(matches!(
            estimate_viscosity(&runner, &opts),
            Err(Error::LatticeTooSmall { min: 16, got: 8 })
        ));
    }

    #[test]
    fn recovers_peak_drift_coefficient() {
        // peak of mean + A sin moves at c*A per step for this synthetic runner
        let runner = drifting_sinusoid(-1.25);
        let est = estimate_advection(&runner, &AdvectionOptions::default()).unwrap();
        assert!((est.value + 1.25).abs() < 0.01, "value {}", est.value);
    }

    #[test]
    fn advection_requires_probes() {
        let runner = drifting_sinusoid(-1.0);
        let opts = AdvectionOptions {
            amplitudes: vec![],
            ..Default::default()
        };
        assert!(matches!(
            estimate_advection(&runner, &opts),
            Err(Error::DegenerateAdvectionFit(_))
        ));
    }
}
