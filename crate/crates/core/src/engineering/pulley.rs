//! Four-step cone pulley: minimize the pulley weight while transmitting at
//! least 0.75 hp on every step with equal belt lengths.

use std::f64::consts::PI;

use super::{ConstraintValue, Design, RawEvaluation};
use crate::space::SearchSpace;

const N: f64 = 350.0;
const STEP_SPEEDS: [f64; 4] = [750.0, 450.0, 250.0, 150.0];
const CENTER_DISTANCE: f64 = 3000.0; // mm
const DENSITY: f64 = 7.2e-6; // kg/mm³
const MU: f64 = 0.35;
const STRESS: f64 = 1.75; // MPa
const THICKNESS: f64 = 8.0; // mm
const MIN_RATIO: f64 = 2.0;
const MIN_POWER: f64 = 0.75 * 745.6998; // W

/// `x = (d₁, d₂, d₃, d₄, w)` in mm.
#[derive(Debug, Clone)]
pub struct StepConePulley {
    space: SearchSpace,
}

impl StepConePulley {
    pub fn new() -> Self {
        Self { space: SearchSpace::uniform(5, 1.0, 100.0).expect("pulley space") }
    }

    fn belt_length(d: f64, speed: f64) -> f64 {
        let r = speed / N;
        PI * d / 2.0 * (1.0 + r) + (r - 1.0).powi(2) * d * d / (4.0 * CENTER_DISTANCE) + 2.0 * CENTER_DISTANCE
    }

    fn wrap_angle(d: f64, speed: f64) -> f64 {
        PI - 2.0 * ((speed / N - 1.0) * d / (2.0 * CENTER_DISTANCE)).asin()
    }
}

impl Default for StepConePulley {
    fn default() -> Self {
        Self::new()
    }
}

impl Design for StepConePulley {
    fn id(&self) -> &'static str {
        "B06"
    }

    fn title(&self) -> &'static str {
        "step-cone pulley"
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate_raw(&self, x: &[f64]) -> RawEvaluation {
        let w = x[4];
        let d = &x[..4];
        let weight: f64 = d
            .iter()
            .zip(STEP_SPEEDS)
            .map(|(di, ni)| di * di * (1.0 + (ni / N).powi(2)))
            .sum::<f64>()
            * DENSITY
            * w;
        let mut constraints = Vec::with_capacity(11);
        for (i, (&di, ni)) in d.iter().zip(STEP_SPEEDS).enumerate() {
            let theta = Self::wrap_angle(di, ni);
            constraints.push(ConstraintValue::ge(&format!("g{}", i + 1), (MU * theta).exp() - MIN_RATIO));
        }
        for (i, (&di, ni)) in d.iter().zip(STEP_SPEEDS).enumerate() {
            let theta = Self::wrap_angle(di, ni);
            let power = STRESS * THICKNESS * w * (1.0 - (-MU * theta).exp()) * PI * di * ni / 60.0 / 1000.0;
            constraints.push(ConstraintValue::ge(&format!("g{}", i + 5), power - MIN_POWER));
        }
        let c1 = Self::belt_length(d[0], STEP_SPEEDS[0]);
        for j in 1..4 {
            let cj = Self::belt_length(d[j], STEP_SPEEDS[j]);
            constraints.push(ConstraintValue::eq(&format!("h{j}"), c1 - cj));
        }
        RawEvaluation { objective: weight, constraints }
    }

    fn best_known(&self) -> Option<f64> {
        Some(18.4484)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE: [f64; 5] = [34.585, 47.586, 63.444, 76.075, 99.990];

    #[test]
    fn reference_design() {
        let raw = StepConePulley::new().evaluate_raw(&REFERENCE);
        let rel = (raw.objective - 18.4484).abs() / 18.4484;
        assert!(rel < 1e-2, "{}", raw.objective);
        assert!((raw.constraint("g1").unwrap() - 0.989).abs() < 1e-3);
        assert!((raw.constraint("g5").unwrap() - 705.658).abs() < 1.0);
        for h in ["h1", "h2", "h3"] {
            assert!(raw.constraint(h).unwrap().abs() < 0.05, "{h}");
        }
    }
}
