use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cli_io::{
    cmd_calibrate, cmd_encode_test, cmd_error_growth, cmd_simulate, CliError, FileConfig, Result,
    SlopeOutcome, DEFAULT_WINDOW,
};

#[derive(Parser)]
#[command(
    name = "qlg",
    about = "Quantum lattice-gas simulator for the 1-D Burgers equation",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a lattice-gas simulation and write per-site occupations
    Simulate {
        /// Run configuration file (key = value)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output CSV path (overrides the config's `output`)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the configured number of steps
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Paired ideal/errorful runs; writes deviations and fitted slopes
    ErrorGrowth {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        steps: Option<usize>,
        /// Slope fit window, inclusive, as LO:HI
        #[arg(long)]
        window: Option<String>,
    },
    /// Measure the effective viscosity and advection coefficient
    Calibrate {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the encoding flip-angle scale and write the error per scale
    EncodeTest {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_config(path: &Option<PathBuf>, base: FileConfig) -> Result<FileConfig> {
    match path {
        None => Ok(base),
        Some(p) => {
            let text =
                std::fs::read_to_string(p).map_err(|e| CliError::io(p.display().to_string(), e))?;
            FileConfig::parse(&text, base)
        }
    }
}

fn resolve_out(flag: &Option<PathBuf>, cfg: &FileConfig, default_name: &str) -> PathBuf {
    flag.clone()
        .or_else(|| cfg.output.clone())
        .unwrap_or_else(|| PathBuf::from(default_name))
}

fn parse_window(s: &str) -> Result<(usize, usize)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| CliError::config("--window", format!("expected LO:HI, got `{s}`")))?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|_| CliError::config("--window", format!("bad lower bound `{lo}`")))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|_| CliError::config("--window", format!("bad upper bound `{hi}`")))?;
    if lo < 1 || hi < lo {
        return Err(CliError::config(
            "--window",
            format!("window {lo}:{hi} is empty or starts before step 1"),
        ));
    }
    Ok((lo, hi))
}

fn print_slope(name: &str, outcome: &SlopeOutcome) {
    match outcome {
        SlopeOutcome::NoError => {
            println!("{name}: no-error (deviations at floating-point floor, slope fit refused)")
        }
        SlopeOutcome::Fit(fit) => println!(
            "{name}: slope {:.4} +- {:.4} over {} points",
            fit.slope, fit.std_error, fit.points
        ),
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Simulate { config, out, steps } => {
            let mut cfg = load_config(&config, FileConfig::default())?;
            if let Some(steps) = steps {
                cfg.steps = steps;
            }
            let out = resolve_out(&out, &cfg, "simulate.csv");
            let summary = cmd_simulate(&cfg, &out)?;
            println!(
                "wrote {} data rows ({} steps x {} sites) to {}",
                summary.data_rows,
                cfg.steps + 1,
                cfg.lattice_size,
                summary.out.display()
            );
            Ok(())
        }
        Command::ErrorGrowth {
            config,
            out,
            steps,
            window,
        } => {
            let mut cfg = load_config(&config, FileConfig::default_error_growth())?;
            if let Some(steps) = steps {
                cfg.steps = steps;
            }
            let window = match window {
                Some(w) => parse_window(&w)?,
                None => DEFAULT_WINDOW,
            };
            let out = resolve_out(&out, &cfg, "error-growth.csv");
            let summary = cmd_error_growth(&cfg, &out, window)?;
            print_slope("unmodulated", &summary.unmodulated);
            print_slope("z4-modulated", &summary.z4);
            println!(
                "wrote deviations to {} and slopes to {}",
                summary.deviations_out.display(),
                summary.slopes_out.display()
            );
            Ok(())
        }
        Command::Calibrate { config, out } => {
            let cfg = load_config(&config, FileConfig::default_calibrate())?;
            let out = resolve_out(&out, &cfg, "calibrate.csv");
            let summary = cmd_calibrate(&cfg, &out)?;
            println!(
                "nu_eff = {:.6} +- {:.6} (fit residual {:.2e}) dx^2/dt",
                summary.nu.value, summary.nu.std_error, summary.nu.fit_residual
            );
            println!(
                "c_eff = {:.6} +- {:.6} (fit residual {:.2e})",
                summary.c.value, summary.c.std_error, summary.c.fit_residual
            );
            println!("wrote coefficients to {}", summary.out.display());
            Ok(())
        }
        Command::EncodeTest { config, out } => {
            let cfg = load_config(&config, FileConfig::default_encode())?;
            let out = resolve_out(&out, &cfg, "encode-test.csv");
            let summary = cmd_encode_test(&cfg, &out)?;
            for row in &summary.rows {
                println!(
                    "flip_scale {:.6}: max error {:.3e}{}",
                    row.flip_scale,
                    row.max_error,
                    if row.nonlinear { " (nonlinear)" } else { "" }
                );
            }
            println!(
                "wrote {} rows to {}",
                summary.rows.len(),
                summary.out.display()
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    #[test]
    fn window_parsing() {
        assert_eq!(parse_window("2:50").unwrap(), (2, 50));
        assert_eq!(parse_window(" 4 : 100 ").unwrap(), (4, 100));
        assert!(parse_window("0:5").is_err());
        assert!(parse_window("9:3").is_err());
        assert!(parse_window("abc").is_err());
    }

    #[test]
    fn out_path_resolution() {
        let cfg = FileConfig::default();
        assert_eq!(
            resolve_out(&None, &cfg, "fallback.csv"),
            Path::new("fallback.csv")
        );
        let mut with_output = cfg.clone();
        with_output.output = Some(PathBuf::from("configured.csv"));
        assert_eq!(
            resolve_out(&None, &with_output, "fallback.csv"),
            Path::new("configured.csv")
        );
        assert_eq!(
            resolve_out(&Some(PathBuf::from("flag.csv")), &with_output, "x"),
            Path::new("flag.csv")
        );
    }
}
