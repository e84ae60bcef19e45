//! Logistic learning efficiency and the perturbation amplitude it drives.

use crate::error::{Error, Result};

/// `ρ(t) = 1 / (1 + exp((2γ/T)(T/2 − t)))`, strictly increasing in `t`.
pub fn learning_efficiency(t: usize, horizon: usize, gamma: f64) -> Result<f64> {
    if horizon == 0 {
        return Err(Error::InvalidParameter("iteration horizon must be at least 1".into()));
    }
    if !(gamma > 0.0) {
        return Err(Error::InvalidParameter(format!("gamma must be positive, got {gamma}")));
    }
    let horizon = horizon as f64;
    let exponent = (2.0 * gamma / horizon) * (horizon / 2.0 - t as f64);
    Ok(1.0 / (1.0 + exponent.exp()))
}

/// `L_A = L_A⁰ − (L_A⁰ − L_A^T)·ρ`, evaluated as the equivalent convex
/// combination so tiny final amplitudes survive at `ρ = 1`.
pub fn perturbation_amplitude(rho: f64, initial: f64, last: f64) -> f64 {
    (1.0 - rho) * initial + rho * last
}

/// Both schedules for one run.
#[derive(Debug, Clone, Copy)]
pub struct Schedule {
    pub horizon: usize,
    pub gamma: f64,
    pub initial_amplitude: f64,
    pub final_amplitude: f64,
}

impl Schedule {
    /// `(ρ(t), L_A(t))`.
    pub fn at(&self, t: usize) -> Result<(f64, f64)> {
        let rho = learning_efficiency(t, self.horizon, self.gamma)?;
        Ok((
            rho,
            perturbation_amplitude(rho, self.initial_amplitude, self.final_amplitude),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_is_one_half() {
        assert_eq!(learning_efficiency(500, 1000, 6.0).unwrap(), 0.5);
        assert_eq!(learning_efficiency(8, 16, 3.0).unwrap(), 0.5);
    }

    #[test]
    fn zero_horizon_is_an_error() {
        assert!(learning_efficiency(1, 0, 6.0).is_err());
    }

    #[test]
    fn logistic_symmetry() {
        for k in 0..500 {
            let a = learning_efficiency(500 + k, 1000, 6.0).unwrap();
            let b = learning_efficiency(500 - k, 1000, 6.0).unwrap();
            assert!((a + b - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn strictly_increasing() {
        let vals: Vec<f64> = (1..=200).map(|t| learning_efficiency(t, 200, 10.0).unwrap()).collect();
        assert!(vals.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn amplitude_endpoints() {
        assert_eq!(perturbation_amplitude(0.0, 300.0, 1e-40), 300.0);
        assert_eq!(perturbation_amplitude(1.0, 300.0, 1e-40), 1e-40);
        assert_eq!(perturbation_amplitude(0.5, 300.0, 100.0), 200.0);
    }
}
