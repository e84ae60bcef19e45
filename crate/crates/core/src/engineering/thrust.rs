//! Hydrostatic thrust bearing: minimize pumping plus friction power loss.

use std::f64::consts::PI;

use super::{ConstraintValue, Design, RawEvaluation};
use crate::space::SearchSpace;

const GAMMA: f64 = 0.0307;
const C: f64 = 0.5;
const N_EXP: f64 = -3.55;
const C1: f64 = 10.04;
const W_S: f64 = 101_000.0;
const P_MAX: f64 = 1000.0;
const DT_MAX: f64 = 50.0;
const H_MIN: f64 = 0.001;
const G: f64 = 386.4;
const SPEED: f64 = 750.0;

/// Derived quantities of a thrust bearing design.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThrustState {
    pub temperature_rise: f64,
    pub friction_loss: f64,
    pub film: f64,
    pub inlet_pressure: f64,
    pub load: f64,
}

/// `x = (R, R₀, μ, Q)`.
#[derive(Debug, Clone)]
pub struct ThrustBearing {
    space: SearchSpace,
}

impl ThrustBearing {
    pub fn new() -> Self {
        let space = SearchSpace::from_bounds(&[(1.0, 16.0), (1.0, 16.0), (1e-6, 16e-6), (1.0, 16.0)])
            .expect("thrust space");
        Self { space }
    }

    pub fn state(x: &[f64]) -> ThrustState {
        let (r, r0, mu, q) = (x[0], x[1], x[2], x[3]);
        let p = ((8.122e6 * mu + 0.8).log10().log10() - C1) / N_EXP;
        let temperature_rise = 2.0 * (10f64.powf(p) - 560.0);
        let friction_loss = 9336.0 * q * GAMMA * C * temperature_rise;
        let omega = 2.0 * PI * SPEED / 60.0;
        let film = omega * omega * (2.0 * PI * mu / friction_loss) * (r.powi(4) / 4.0 - r0.powi(4) / 4.0);
        let log_ratio = (r / r0).ln();
        let inlet_pressure = 6.0 * mu * q / (PI * film.powi(3)) * log_ratio;
        let load = PI * inlet_pressure / 2.0 * (r * r - r0 * r0) / log_ratio;
        ThrustState { temperature_rise, friction_loss, film, inlet_pressure, load }
    }
}

impl Default for ThrustBearing {
    fn default() -> Self {
        Self::new()
    }
}

impl Design for ThrustBearing {
    fn id(&self) -> &'static str {
        "B04"
    }

    fn title(&self) -> &'static str {
        "hydrostatic thrust bearing"
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate_raw(&self, x: &[f64]) -> RawEvaluation {
        let (r, r0, q) = (x[0], x[1], x[3]);
        let s = Self::state(x);
        let flow = q / (2.0 * PI * r * s.film);
        RawEvaluation {
            // in·lb/s to ft·lb/s
            objective: (q * s.inlet_pressure / 0.7 + s.friction_loss) / 12.0,
            constraints: vec![
                ConstraintValue::ge("g1", s.load - W_S),
                ConstraintValue::ge("g2", P_MAX - s.inlet_pressure),
                ConstraintValue::ge("g3", DT_MAX - s.temperature_rise),
                ConstraintValue::ge("g4", s.film - H_MIN),
                ConstraintValue::ge("g5", r - r0),
                ConstraintValue::ge("g6", 0.001 - GAMMA / (G * s.inlet_pressure) * flow * flow),
                ConstraintValue::ge("g7", 5000.0 - s.load / (PI * (r * r - r0 * r0))),
            ],
        }
    }

    fn best_known(&self) -> Option<f64> {
        Some(1625.443)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_design() {
        let raw = ThrustBearing::new().evaluate_raw(&[5.955, 5.389, 5.359e-6, 2.270]);
        let rel = (raw.objective - 1625.443).abs() / 1625.443;
        assert!(rel < 1e-2, "{}", raw.objective);
        assert!((raw.constraint("g5").unwrap() - 0.566).abs() < 1e-9);
        assert!((raw.constraint("g4").unwrap() - 3.244e-4).abs() < 2e-5);
        assert!((raw.constraint("g6").unwrap() - 8.334e-4).abs() < 2e-5);
    }

    #[test]
    fn equal_radii_degenerate() {
        let raw = ThrustBearing::new().evaluate_raw(&[5.0, 5.0, 5e-6, 2.0]);
        assert!(raw.constraint("g5").unwrap() == 0.0);
        assert!(!raw.is_feasible(0.0));
    }
}
