use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::Sense;

/// Summary of repeated runs in the reported convention. For minimization
/// `best ≤ mean ≤ worst`; for maximization the order is reversed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatSummary {
    pub runs: usize,
    pub sense: Sense,
    pub mean: f64,
    /// Sample standard deviation (divisor `R − 1`; zero for one run).
    pub std: f64,
    pub best: f64,
    pub worst: f64,
    pub mean_nfe: f64,
    #[serde(skip)]
    pub mean_wall_time_secs: f64,
}

impl StatSummary {
    pub fn from_values(values: &[f64], nfe: &[usize], sense: Sense) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("no values to summarize".into()));
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::InvalidParameter("cannot summarize NaN values".into()));
        }
        let n = values.len() as f64;
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        // The rounded mean of identical values can land one ulp outside them.
        let mean = (values.iter().sum::<f64>() / n).clamp(lo, hi);
        let std = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        let (best, worst) = match sense {
            Sense::Minimize => (lo, hi),
            Sense::Maximize => (hi, lo),
        };
        let mean_nfe = if nfe.is_empty() {
            0.0
        } else {
            nfe.iter().sum::<usize>() as f64 / nfe.len() as f64
        };
        Ok(Self { runs: values.len(), sense, mean, std, best, worst, mean_nfe, mean_wall_time_secs: 0.0 })
    }
}
