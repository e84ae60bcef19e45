//! Rolling element bearing: maximize the dynamic load rating.

use std::f64::consts::PI;

use super::{ConstraintValue, Design, RawEvaluation};
use crate::problem::Sense;
use crate::space::{Dimension, SearchSpace};

const D: f64 = 160.0;
const D_BORE: f64 = 90.0;
const B_W: f64 = 30.0;

/// `x = (D_m, D_b, Z, f_i, f_o, K_Dmin, K_Dmax, ε, e, ζ)`, ball count `Z`
/// integer.
#[derive(Debug, Clone)]
pub struct RollingBearing {
    space: SearchSpace,
}

impl RollingBearing {
    pub fn new() -> Self {
        let c = |lo, hi| Dimension::continuous(lo, hi).expect("bounds");
        let dims = vec![
            c(0.5 * (D + D_BORE), 0.6 * (D + D_BORE)),
            c(0.15 * (D - D_BORE), 0.45 * (D - D_BORE)),
            Dimension::stepped(4.0, 50.0, 1.0).expect("grid"),
            c(0.515, 0.6),
            c(0.515, 0.6),
            c(0.4, 0.5),
            c(0.6, 0.7),
            c(0.3, 0.4),
            c(0.02, 0.1),
            c(0.6, 0.85),
        ];
        Self { space: SearchSpace::new(dims).expect("bearing space") }
    }

    /// Dynamic load rating `C_d`.
    pub fn load_rating(x: &[f64]) -> f64 {
        let (dm, db, z, fi, fo) = (x[0], x[1], x[2], x[3], x[4]);
        let gamma = db / dm;
        let ratio = (1.0 - gamma) / (1.0 + gamma);
        let conformity = fi * (2.0 * fo - 1.0) / (fo * (2.0 * fi - 1.0));
        let inner = 1.0 + (1.04 * ratio.powf(1.72) * conformity.powf(0.41)).powf(10.0 / 3.0);
        let fc = 37.91
            * inner.powf(-0.3)
            * (gamma.powf(0.3) * (1.0 - gamma).powf(1.39) / (1.0 + gamma).powf(1.0 / 3.0))
            * (2.0 * fi / (2.0 * fi - 1.0)).powf(0.41);
        if db <= 25.4 {
            fc * z.powf(2.0 / 3.0) * db.powf(1.8)
        } else {
            3.647 * fc * z.powf(2.0 / 3.0) * db.powf(1.4)
        }
    }

    /// Assembly angle `φ₀`.
    pub fn assembly_angle(db: f64) -> f64 {
        let t = D - D_BORE - 2.0 * db;
        let p = (D - D_BORE) / 2.0 - 3.0 * (t / 4.0);
        let q = D / 2.0 - t / 4.0 - db;
        let r = D_BORE / 2.0 + t / 4.0;
        2.0 * PI - 2.0 * ((p * p + q * q - r * r) / (2.0 * p * q)).acos()
    }
}

impl Default for RollingBearing {
    fn default() -> Self {
        Self::new()
    }
}

impl Design for RollingBearing {
    fn id(&self) -> &'static str {
        "B03"
    }

    fn title(&self) -> &'static str {
        "rolling element bearing"
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn sense(&self) -> Sense {
        Sense::Maximize
    }

    fn evaluate_raw(&self, x: &[f64]) -> RawEvaluation {
        let (dm, db, z, fi, fo, kmin, kmax, eps, e, zeta) =
            (x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7], x[8], x[9]);
        let phi0 = Self::assembly_angle(db);
        RawEvaluation {
            objective: Self::load_rating(x),
            constraints: vec![
                ConstraintValue::ge("g1", phi0 / (2.0 * (db / dm).asin()) - z + 1.0),
                ConstraintValue::ge("g2", 2.0 * db - kmin * (D - D_BORE)),
                ConstraintValue::ge("g3", kmax * (D - D_BORE) - 2.0 * db),
                ConstraintValue::le("g4", zeta * B_W - db),
                ConstraintValue::ge("g5", dm - 0.5 * (D + D_BORE)),
                ConstraintValue::ge("g6", (0.5 + e) * (D + D_BORE) - dm),
                ConstraintValue::ge("g7", 0.5 * (D - dm - db) - eps * db),
                ConstraintValue::ge("g8", fi - 0.515),
                ConstraintValue::ge("g9", fo - 0.515),
            ],
        }
    }

    fn best_known(&self) -> Option<f64> {
        Some(81859.7407)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE: [f64; 10] =
        [125.719, 21.426, 11.023, 0.515, 0.515, 0.486, 0.680, 0.300, 0.099, 0.708];

    #[test]
    fn reference_design() {
        let raw = RollingBearing::new().evaluate_raw(&REFERENCE);
        let rel = (raw.objective - 81859.7407).abs() / 81859.7407;
        assert!(rel < 1e-2, "{}", raw.objective);
        assert!((raw.constraint("g3").unwrap() - 4.750).abs() < 5e-3);
        assert!((raw.constraint("g5").unwrap() - 0.719).abs() < 1e-3);
        assert!(raw.constraint("g4").unwrap() < 0.0);
    }

    #[test]
    fn larger_balls_switch_formula() {
        let mut x = REFERENCE;
        x[1] = 25.4;
        let below = RollingBearing::load_rating(&x);
        x[1] = 25.4 + 1e-9;
        let above = RollingBearing::load_rating(&x);
        assert!(below.is_finite() && above.is_finite() && above != below);
    }
}
