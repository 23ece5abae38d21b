//! Deterministic CSV emission.

use std::fs;
use std::path::Path;

use crate::error::{CliError, Result};

/// Locale-independent 17-significant-digit scientific form, enough to
/// round-trip any f64 bit pattern.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() && !parent.exists() {
            fs::create_dir_all(parent)
                .map_err(|e| CliError::io(parent.display().to_string(), e))?;
        }
    }
    fs::write(path, contents).map_err(|e| CliError::io(path.display().to_string(), e))
}

/// `a/b.csv` -> `a/b-slopes.csv`
pub fn slopes_path(out: &Path) -> std::path::PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_string());
    let ext = out
        .extension()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "csv".to_string());
    out.with_file_name(format!("{stem}-slopes.{ext}"))
}

/// CSV of a full run: one row per (step, site).
pub fn simulation_csv(profiles: &[Vec<f64>], fields: &[qlg_core::OccupationField]) -> String {
    let mut s = String::from("step,site,f1,f2,rho\n");
    for (step, (profile, field)) in profiles.iter().zip(fields).enumerate() {
        for (site, (&rho, pair)) in profile.iter().zip(field.sites()).enumerate() {
            s.push_str(&format!(
                "{step},{site},{},{},{}\n",
                format_f64(pair.f1()),
                format_f64(pair.f2()),
                format_f64(rho)
            ));
        }
    }
    s
}
