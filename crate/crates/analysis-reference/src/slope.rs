//! Log-log power-law slope of an error-growth series.

use crate::deviation::DeviationSeries;
use crate::error::{Error, Result};
use crate::fitting::fit_line;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub std_error: f64,
    pub points: usize,
}

/// Least-squares slope of log(deviation) versus log(step) over the
/// inclusive step window. Steps below 1 are rejected (log 0), nonpositive
/// deviations inside the window are an error rather than silently skipped.
pub fn fit_loglog_slope(series: &DeviationSeries, window: (usize, usize)) -> Result<SlopeFit> {
    let (lo, hi) = window;
    if lo < 1 || hi < lo {
        return Err(Error::BadWindow(lo, hi));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &(step, dev) in series.per_step() {
        if step < lo || step > hi {
            continue;
        }
        if dev <= 0.0 {
            return Err(Error::NonPositiveDeviation { step, value: dev });
        }
        xs.push((step as f64).ln());
        ys.push(dev.ln());
    }
    if xs.len() < 3 {
        return Err(Error::TooFewPoints(xs.len()));
    }
    let fit = fit_line(&xs, &ys);
    Ok(SlopeFit {
        slope: fit.slope,
        std_error: fit.slope_stderr,
        points: xs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power_series(p: f64, n: usize) -> DeviationSeries {
        DeviationSeries::new((0..=n).map(|k| (k, (k as f64).powf(p))).collect())
    }

    #[test]
    fn exact_power_laws_recovered() {
        for p in [0.5, 0.75, 1.0] {
            let fit = fit_loglog_slope(&power_series(p, 60), (2, 50)).unwrap();
            assert!(
                (fit.slope - p).abs() < 1e-12,
                "p = {p}, slope = {}",
                fit.slope
            );
            assert!(fit.std_error < 1e-12);
        }
    }

    #[test]
    fn nonpositive_deviation_rejected() {
        let s = DeviationSeries::new(vec![(1, 1.0), (2, 0.0), (3, 2.0), (4, 3.0)]);
        assert!(matches!(
            fit_loglog_slope(&s, (1, 4)),
            Err(Error::NonPositiveDeviation { step: 2, .. })
        ));
    }

    #[test]
    fn window_must_contain_three_points() {
        let s = power_series(1.0, 10);
        assert!(matches!(
            fit_loglog_slope(&s, (4, 5)),
            Err(Error::TooFewPoints(2))
        ));
        assert!(matches!(
            fit_loglog_slope(&s, (0, 5)),
            Err(Error::BadWindow(0, 5))
        ));
    }
}
