//! Speed reducer: minimize gearbox weight under bending, surface stress,
//! shaft deflection and shaft stress limits.

use super::{ConstraintValue, Design, RawEvaluation};
use crate::space::{Dimension, SearchSpace};

/// `x = (b, m, z, l₁, l₂, d₁, d₂)`, tooth count `z` integer.
#[derive(Debug, Clone)]
pub struct SpeedReducer {
    space: SearchSpace,
}

impl SpeedReducer {
    pub fn new() -> Self {
        let c = |lo, hi| Dimension::continuous(lo, hi).expect("bounds");
        let dims = vec![
            c(2.6, 3.6),
            c(0.7, 0.8),
            Dimension::stepped(17.0, 28.0, 1.0).expect("grid"),
            c(7.3, 8.3),
            c(7.3, 8.3),
            c(2.9, 3.9),
            c(5.0, 5.5),
        ];
        Self { space: SearchSpace::new(dims).expect("reducer space") }
    }

    #[allow(clippy::approx_constant)] // 0.7854 is the published coefficient, not π/4
    pub fn weight(x: &[f64]) -> f64 {
        let (x1, x2, x3, x4, x5, x6, x7) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
        0.7854 * x1 * x2 * x2 * (3.3333 * x3 * x3 + 14.9334 * x3 - 43.0934)
            - 1.508 * x1 * (x6 * x6 + x7 * x7)
            + 7.4777 * (x6.powi(3) + x7.powi(3))
            + 0.7854 * (x4 * x6 * x6 + x5 * x7 * x7)
    }
}

impl Default for SpeedReducer {
    fn default() -> Self {
        Self::new()
    }
}

impl Design for SpeedReducer {
    fn id(&self) -> &'static str {
        "B07"
    }

    fn title(&self) -> &'static str {
        "speed reducer"
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate_raw(&self, x: &[f64]) -> RawEvaluation {
        let (x1, x2, x3, x4, x5, x6, x7) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
        let g = |name: &str, v: f64| ConstraintValue::le(name, v);
        RawEvaluation {
            objective: Self::weight(x),
            constraints: vec![
                g("g1", 27.0 / (x1 * x2 * x2 * x3) - 1.0),
                g("g2", 397.5 / (x1 * x2 * x2 * x3 * x3) - 1.0),
                g("g3", 1.93 * x4.powi(3) / (x2 * x3 * x6.powi(4)) - 1.0),
                g("g4", 1.93 * x5.powi(3) / (x2 * x3 * x7.powi(4)) - 1.0),
                g("g5", ((745.0 * x4 / (x2 * x3)).powi(2) + 16.9e6).sqrt() / (110.0 * x6.powi(3)) - 1.0),
                g("g6", ((745.0 * x5 / (x2 * x3)).powi(2) + 157.5e6).sqrt() / (85.0 * x7.powi(3)) - 1.0),
                g("g7", x2 * x3 / 40.0 - 1.0),
                g("g8", 5.0 * x2 / x1 - 1.0),
                g("g9", x1 / (12.0 * x2) - 1.0),
                g("g10", (1.5 * x6 + 1.9) / x4 - 1.0),
                g("g11", (1.1 * x7 + 1.9) / x5 - 1.0),
            ],
        }
    }

    fn best_known(&self) -> Option<f64> {
        Some(2994.4711)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_design() {
        let x = [3.5, 0.7, 17.0, 7.3, 7.715, 3.350, 5.287];
        let raw = SpeedReducer::new().evaluate_raw(&x);
        let rel = (raw.objective - 2994.4711).abs() / 2994.4711;
        assert!(rel < 1e-3, "{}", raw.objective);
        assert!((raw.constraint("g1").unwrap() + 0.074).abs() < 1e-3);
        assert!((raw.constraint("g7").unwrap() + 0.703).abs() < 1e-3);
        assert!(SpeedReducer::new().space().contains(&x));
    }
}
