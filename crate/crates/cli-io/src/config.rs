//! Flat `key = value` run configuration with `#` comments and dotted keys.

use std::collections::HashSet;
use std::path::PathBuf;

use nmr_model::Modulation;
use qlg_core::InitialProfile;

use crate::error::{CliError, Result};

pub const DEFAULT_PHI: f64 = qlg_core::DEFAULT_COLLISION_ANGLE;
pub const DEFAULT_SCALES: [f64; 5] = [1.0, 0.5, 0.25, 0.125, 0.0625];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Sinusoid,
    Gaussian,
    Custom,
}

impl Shape {
    fn as_str(&self) -> &'static str {
        match self {
            Shape::Sinusoid => "sinusoid",
            Shape::Gaussian => "gaussian",
            Shape::Custom => "custom",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileSpec {
    pub shape: Shape,
    pub mean: f64,
    pub amplitude: f64,
    pub values: Option<Vec<f64>>,
}

impl ProfileSpec {
    pub fn to_initial_profile(&self, lattice_size: usize) -> Result<InitialProfile> {
        match self.shape {
            Shape::Sinusoid => Ok(InitialProfile::Sinusoid {
                mean: self.mean,
                amplitude: self.amplitude,
            }),
            Shape::Gaussian => Ok(InitialProfile::Gaussian {
                mean: self.mean,
                amplitude: self.amplitude,
            }),
            Shape::Custom => {
                let values = self.values.clone().ok_or_else(|| {
                    CliError::config("initial.values", "required when initial.shape = custom")
                })?;
                if values.len() != lattice_size {
                    return Err(CliError::config(
                        "initial.values",
                        format!(
                            "has {} entries but lattice_size = {lattice_size}",
                            values.len()
                        ),
                    ));
                }
                Ok(InitialProfile::Custom(values))
            }
        }
    }

    /// The raw per-site values of this profile, used by the encoding test
    /// where the profile is a magnetization rather than a density.
    pub fn sample(&self, lattice_size: usize) -> Result<Vec<f64>> {
        Ok(match self.shape {
            Shape::Sinusoid => (0..lattice_size)
                .map(|i| {
                    self.mean
                        + self.amplitude
                            * (2.0 * std::f64::consts::PI * i as f64 / lattice_size as f64).sin()
                })
                .collect(),
            Shape::Gaussian => {
                let center = lattice_size as f64 / 2.0;
                let sigma = lattice_size as f64 / 8.0;
                (0..lattice_size)
                    .map(|i| {
                        let d = i as f64 - center;
                        self.mean + self.amplitude * (-d * d / (2.0 * sigma * sigma)).exp()
                    })
                    .collect()
            }
            Shape::Custom => {
                let values = self.values.clone().ok_or_else(|| {
                    CliError::config("initial.values", "required when initial.shape = custom")
                })?;
                if values.len() != lattice_size {
                    return Err(CliError::config(
                        "initial.values",
                        format!(
                            "has {} entries but lattice_size = {lattice_size}",
                            values.len()
                        ),
                    ));
                }
                values
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorModelSpec {
    Ideal,
    Coupled,
}

/// Parsed run configuration. Unset keys take the documented defaults; the
/// seed is carried along for the output record even though the current
/// models are deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct FileConfig {
    pub lattice_size: usize,
    pub steps: usize,
    pub phi: f64,
    pub seed: u64,
    pub initial: ProfileSpec,
    pub error_model: ErrorModelSpec,
    pub j_hz: f64,
    pub pulse_duration_us: f64,
    pub modulation: Modulation,
    pub output: Option<PathBuf>,
    pub encode_scales: Vec<f64>,
}

impl Default for FileConfig {
    fn default() -> Self {
        Self {
            lattice_size: 16,
            steps: 8,
            phi: DEFAULT_PHI,
            seed: 0,
            initial: ProfileSpec {
                shape: Shape::Sinusoid,
                mean: 1.0,
                amplitude: 0.4,
                values: None,
            },
            error_model: ErrorModelSpec::Ideal,
            j_hz: nmr_model::CHLOROFORM_J_HZ,
            pulse_duration_us: 20.0,
            modulation: Modulation::None,
            output: None,
            encode_scales: DEFAULT_SCALES.to_vec(),
        }
    }
}

impl FileConfig {
    /// Defaults sized for transport calibration rather than the small
    /// shock demonstration.
    pub fn default_calibrate() -> Self {
        Self {
            lattice_size: 64,
            ..Self::default()
        }
    }

    /// Defaults for the error-growth experiment: coupled model, a lattice
    /// long enough for a clean slope fit.
    pub fn default_error_growth() -> Self {
        Self {
            lattice_size: 64,
            steps: 60,
            error_model: ErrorModelSpec::Coupled,
            ..Self::default()
        }
    }

    /// Defaults for the encoding test: the profile is a magnetization in
    /// [-1, 1], so the mean sits at zero.
    pub fn default_encode() -> Self {
        let mut cfg = Self::default();
        cfg.initial.mean = 0.0;
        cfg.initial.amplitude = 1.0;
        cfg
    }

    pub fn parse(text: &str, mut base: FileConfig) -> Result<FileConfig> {
        let mut seen = HashSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::config(
                    format!("line {}", lineno + 1),
                    format!("expected `key = value`, got `{line}`"),
                )
            })?;
            let key = key.trim();
            let value = value.trim();
            if !seen.insert(key.to_string()) {
                return Err(CliError::config(key, "duplicate key"));
            }
            apply(&mut base, key, value)?;
        }
        validate(&base)?;
        Ok(base)
    }

    /// Canonical text form; `parse(serialize(c))` reproduces `c`.
    pub fn serialize(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let f = crate::output::format_f64;
        writeln!(s, "lattice_size = {}", self.lattice_size).unwrap();
        writeln!(s, "steps = {}", self.steps).unwrap();
        writeln!(s, "phi = {}", f(self.phi)).unwrap();
        writeln!(s, "seed = {}", self.seed).unwrap();
        writeln!(s, "initial.shape = {}", self.initial.shape.as_str()).unwrap();
        writeln!(s, "initial.mean = {}", f(self.initial.mean)).unwrap();
        writeln!(s, "initial.amplitude = {}", f(self.initial.amplitude)).unwrap();
        if let Some(values) = &self.initial.values {
            let list: Vec<String> = values.iter().map(|&v| f(v)).collect();
            writeln!(s, "initial.values = {}", list.join(",")).unwrap();
        }
        let model = match self.error_model {
            ErrorModelSpec::Ideal => "ideal",
            ErrorModelSpec::Coupled => "coupled",
        };
        writeln!(s, "error.model = {model}").unwrap();
        writeln!(s, "error.j_hz = {}", f(self.j_hz)).unwrap();
        writeln!(s, "error.pulse_duration_us = {}", f(self.pulse_duration_us)).unwrap();
        let modulation = match self.modulation {
            Modulation::None => "none",
            Modulation::Z4 => "z4",
        };
        writeln!(s, "modulation = {modulation}").unwrap();
        if let Some(path) = &self.output {
            writeln!(s, "output = {}", path.display()).unwrap();
        }
        let scales: Vec<String> = self.encode_scales.iter().map(|&v| f(v)).collect();
        writeln!(s, "encode.scales = {}", scales.join(",")).unwrap();
        s
    }

    pub fn pulse_duration_seconds(&self) -> f64 {
        self.pulse_duration_us * 1e-6
    }
}

fn apply(cfg: &mut FileConfig, key: &str, value: &str) -> Result<()> {
    let bad = |reason: String| CliError::config(key, reason);
    match key {
        "lattice_size" => {
            cfg.lattice_size = value
                .parse()
                .map_err(|_| bad(format!("expected integer, got `{value}`")))?;
        }
        "steps" => {
            cfg.steps = value
                .parse()
                .map_err(|_| bad(format!("expected integer, got `{value}`")))?;
        }
        "phi" => cfg.phi = parse_f64(key, value)?,
        "seed" => {
            cfg.seed = value
                .parse()
                .map_err(|_| bad(format!("expected integer, got `{value}`")))?;
        }
        "initial.shape" => {
            cfg.initial.shape = match value {
                "sinusoid" => Shape::Sinusoid,
                "gaussian" => Shape::Gaussian,
                "custom" => Shape::Custom,
                other => {
                    return Err(bad(format!(
                        "expected sinusoid | gaussian | custom, got `{other}`"
                    )))
                }
            };
        }
        "initial.mean" => cfg.initial.mean = parse_f64(key, value)?,
        "initial.amplitude" => cfg.initial.amplitude = parse_f64(key, value)?,
        "initial.values" => cfg.initial.values = Some(parse_list(key, value)?),
        "error.model" => {
            cfg.error_model = match value {
                "ideal" => ErrorModelSpec::Ideal,
                "coupled" => ErrorModelSpec::Coupled,
                other => return Err(bad(format!("expected ideal | coupled, got `{other}`"))),
            };
        }
        "error.j_hz" => cfg.j_hz = parse_f64(key, value)?,
        "error.pulse_duration_us" => cfg.pulse_duration_us = parse_f64(key, value)?,
        "modulation" => {
            cfg.modulation = match value {
                "none" => Modulation::None,
                "z4" => Modulation::Z4,
                other => return Err(bad(format!("expected none | z4, got `{other}`"))),
            };
        }
        "output" => cfg.output = Some(PathBuf::from(value)),
        "encode.scales" => cfg.encode_scales = parse_list(key, value)?,
        other => return Err(CliError::config(other, "unknown key")),
    }
    Ok(())
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| CliError::config(key, format!("expected number, got `{value}`")))
}

fn parse_list(key: &str, value: &str) -> Result<Vec<f64>> {
    value
        .split(',')
        .map(|item| parse_f64(key, item.trim()))
        .collect()
}

fn validate(cfg: &FileConfig) -> Result<()> {
    if cfg.lattice_size < 2 {
        return Err(CliError::config(
            "lattice_size",
            format!("must be at least 2, got {}", cfg.lattice_size),
        ));
    }
    if cfg.j_hz <= 0.0 {
        return Err(CliError::config(
            "error.j_hz",
            format!("must be positive, got {}", cfg.j_hz),
        ));
    }
    if cfg.pulse_duration_us < 0.0 {
        return Err(CliError::config(
            "error.pulse_duration_us",
            format!("must be non-negative, got {}", cfg.pulse_duration_us),
        ));
    }
    if cfg.encode_scales.is_empty() {
        return Err(CliError::config("encode.scales", "must not be empty"));
    }
    if cfg.encode_scales.iter().any(|&s| s <= 0.0) {
        return Err(CliError::config(
            "encode.scales",
            "every scale must be positive",
        ));
    }
    if matches!(cfg.initial.shape, Shape::Custom) && cfg.initial.values.is_none() {
        return Err(CliError::config(
            "initial.values",
            "required when initial.shape = custom",
        ));
    }
    Ok(())
}
