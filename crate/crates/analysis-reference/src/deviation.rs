//! RMS deviation between two recorded runs.

use crate::error::{Error, Result};

/// Per-step RMS deviation between two density histories.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationSeries {
    per_step: Vec<(usize, f64)>,
}

impl DeviationSeries {
    pub fn new(per_step: Vec<(usize, f64)>) -> Self {
        debug_assert!(per_step.windows(2).all(|w| w[0].0 < w[1].0));
        Self { per_step }
    }

    pub fn per_step(&self) -> &[(usize, f64)] {
        &self.per_step
    }

    pub fn get(&self, step: usize) -> Option<f64> {
        self.per_step
            .iter()
            .find(|(s, _)| *s == step)
            .map(|(_, d)| *d)
    }

    pub fn max(&self) -> f64 {
        self.per_step.iter().map(|(_, d)| *d).fold(0.0, f64::max)
    }
}

/// RMS (L2 / sqrt(N)) distance between the density profiles of two runs,
/// step by step. Runs must have identical shape.
pub fn deviation(a: &[Vec<f64>], b: &[Vec<f64>]) -> Result<DeviationSeries> {
    let (na, nb) = (a.len(), b.len());
    let (wa, wb) = (
        a.first().map(|p| p.len()).unwrap_or(0),
        b.first().map(|p| p.len()).unwrap_or(0),
    );
    if na != nb || wa != wb || a.iter().any(|p| p.len() != wa) || b.iter().any(|p| p.len() != wb) {
        return Err(Error::ShapeMismatch(na, nb, wa, wb));
    }
    let series = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(step, (pa, pb))| {
            let ss: f64 = pa
                .iter()
                .zip(pb)
                .map(|(x, y)| {
                    let d = x - y;
                    d * d
                })
                .sum();
            (step, (ss / wa as f64).sqrt())
        })
        .collect();
    Ok(DeviationSeries::new(series))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_runs_have_zero_deviation() {
        let a = vec![vec![1.0, 2.0], vec![3.0, 4.0]];
        let s = deviation(&a, &a).unwrap();
        assert!(s.per_step().iter().all(|(_, d)| *d == 0.0));
    }

    #[test]
    fn constant_offset_gives_that_offset() {
        let a = vec![vec![1.0; 8]; 3];
        let b = vec![vec![1.1; 8]; 3];
        let s = deviation(&a, &b).unwrap();
        for (_, d) in s.per_step() {
            assert!((d - 0.1).abs() < 1e-12);
        }
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = vec![vec![1.0, 2.0]];
        let b = vec![vec![1.0, 2.0, 3.0]];
        assert!(matches!(deviation(&a, &b), Err(Error::ShapeMismatch(..))));
        let c = vec![vec![1.0, 2.0], vec![1.0, 2.0]];
        assert!(matches!(deviation(&a, &c), Err(Error::ShapeMismatch(..))));
    }
}
