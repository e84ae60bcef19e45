//! Belleville spring: minimize the spring volume under load and stress
//! limits.

use std::f64::consts::PI;

use super::{ConstraintValue, Design, RawEvaluation};
use crate::space::SearchSpace;

const P_MAX: f64 = 5400.0;
const DELTA_MAX: f64 = 0.2;
const S: f64 = 200_000.0;
const E: f64 = 30e6;
const MU: f64 = 0.3;
const H: f64 = 2.0;
const D_MAX: f64 = 12.01;

const F_TABLE: [f64; 15] = [
    1.0, 0.85, 0.77, 0.71, 0.66, 0.63, 0.60, 0.58, 0.56, 0.55, 0.53, 0.52, 0.51, 0.51, 0.50,
];

/// Deflection factor `f(a)` for `a = h/t`, read from the nearest tabulated
/// row `1.4, 1.5, …, 2.8`; values outside the table take the end rows.
pub fn belleville_f_of_a(a: f64) -> f64 {
    if a.is_nan() {
        return f64::NAN;
    }
    // The slack keeps decimal midpoints such as 1.45 (stored just below the
    // midpoint) on the upper row.
    let row = ((a - 1.4) * 10.0 + 0.5 + 1e-9).floor();
    F_TABLE[row.clamp(0.0, (F_TABLE.len() - 1) as f64) as usize]
}

/// `x = (t, h, D_i, D_e)`.
#[derive(Debug, Clone)]
pub struct BellevilleSpring {
    space: SearchSpace,
}

impl BellevilleSpring {
    pub fn new() -> Self {
        let space = SearchSpace::from_bounds(&[(0.01, 6.0), (0.05, 0.5), (5.0, 15.0), (5.0, 15.0)])
            .expect("belleville space");
        Self { space }
    }
}

impl Default for BellevilleSpring {
    fn default() -> Self {
        Self::new()
    }
}

impl Design for BellevilleSpring {
    fn id(&self) -> &'static str {
        "B05"
    }

    fn title(&self) -> &'static str {
        "Belleville spring"
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate_raw(&self, x: &[f64]) -> RawEvaluation {
        let (t, h, di, de) = (x[0], x[1], x[2], x[3]);
        let k = de / di;
        let lnk = k.ln();
        let alpha = 6.0 / (PI * lnk) * ((k - 1.0) / k).powi(2);
        let beta = 6.0 / (PI * lnk) * ((k - 1.0) / lnk - 1.0);
        let gamma = 6.0 / (PI * lnk) * (k - 1.0) / 2.0;
        let stiffness = 4.0 * E * DELTA_MAX / ((1.0 - MU * MU) * alpha * de * de);
        let deflection = belleville_f_of_a(h / t) * h;
        RawEvaluation {
            objective: 0.07075 * PI * (de * de - di * di) * t,
            constraints: vec![
                ConstraintValue::ge("g1", S - stiffness * (beta * (h - DELTA_MAX / 2.0) + gamma * t)),
                ConstraintValue::ge(
                    "g2",
                    stiffness * ((h - DELTA_MAX / 2.0) * (h - DELTA_MAX) * t + t.powi(3)) - P_MAX,
                ),
                ConstraintValue::ge("g3", deflection - DELTA_MAX),
                ConstraintValue::ge("g4", H - h - t),
                ConstraintValue::ge("g5", D_MAX - de),
                ConstraintValue::ge("g6", de - di),
                ConstraintValue::ge("g7", 0.3 - h / (de - di)),
            ],
        }
    }

    fn best_known(&self) -> Option<f64> {
        Some(1.9806)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_of_a_rows() {
        assert_eq!(belleville_f_of_a(0.2), 1.0);
        assert_eq!(belleville_f_of_a(1.44), 1.0);
        assert_eq!(belleville_f_of_a(1.45), 0.85);
        assert_eq!(belleville_f_of_a(1.5), 0.85);
        assert_eq!(belleville_f_of_a(2.0), 0.60);
        assert_eq!(belleville_f_of_a(2.74), 0.51);
        assert_eq!(belleville_f_of_a(2.8), 0.50);
        assert_eq!(belleville_f_of_a(40.0), 0.50);
    }

    #[test]
    fn reference_design() {
        let raw = BellevilleSpring::new().evaluate_raw(&[0.204, 0.200, 10.014, 11.997]);
        let rel = (raw.objective - 1.9806).abs() / 1.9806;
        assert!(rel < 1e-2, "{}", raw.objective);
        for (name, want) in [("g3", 0.0), ("g4", 1.596), ("g5", 0.013), ("g6", 1.983), ("g7", 0.199)] {
            let got = raw.constraint(name).unwrap();
            assert!((got - want).abs() < 1e-3, "{name}: {got}");
        }
    }
}
