//! Robot gripper: minimize the spread of the gripping force over the
//! actuator stroke `z ∈ [0, Z_max]`.

use serde::{Deserialize, Serialize};

use super::{ConstraintValue, Design, RawEvaluation};
use crate::space::SearchSpace;

const Y_MIN: f64 = 50.0;
const Y_MAX: f64 = 100.0;
const Y_G: f64 = 150.0;
const Z_MAX: f64 = 100.0;
const P: f64 = 100.0;

const SAMPLES: usize = 101;
const REFINE_TOL: f64 = 1e-6;

/// Denominator used for the gripping force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GripperForce {
    /// `F_k = P b sin(α + β) / (2 c cos α)`.
    #[default]
    Standard,
    /// `F_k = P b sin(α + β) / (z c cos α)`; undefined at `z = 0`, where the
    /// sample is skipped.
    StrokeScaled,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Linkage {
    a: f64,
    b: f64,
    c: f64,
    e: f64,
    f: f64,
    l: f64,
    delta: f64,
}

impl Linkage {
    fn from(x: &[f64]) -> Self {
        Self { a: x[0], b: x[1], c: x[2], e: x[3], f: x[4], l: x[5], delta: x[6] }
    }

    fn reach(&self, z: f64) -> f64 {
        ((self.l - z).powi(2) + self.e * self.e).sqrt()
    }

    /// `(α, β)` at stroke `z`.
    fn angles(&self, z: f64) -> (f64, f64) {
        let g = self.reach(z);
        let phi = (self.e / (self.l - z)).atan();
        let (a2, b2, g2) = (self.a * self.a, self.b * self.b, g * g);
        let alpha = ((a2 + g2 - b2) / (2.0 * self.a * g)).acos() + phi;
        let beta = ((b2 + g2 - a2) / (2.0 * self.b * g)).acos() - phi;
        (alpha, beta)
    }

    fn force(&self, z: f64, form: GripperForce) -> f64 {
        let (alpha, beta) = self.angles(z);
        let lever = match form {
            GripperForce::Standard => 2.0,
            GripperForce::StrokeScaled => z,
        };
        P * self.b * (alpha + beta).sin() / (lever * self.c * alpha.cos())
    }

    fn opening(&self, z: f64) -> f64 {
        let (_, beta) = self.angles(z);
        2.0 * (self.e + self.f + self.c * (beta + self.delta).sin())
    }
}

/// `(max, min)` of the gripping force over the stroke. Non-finite samples are
/// ignored; both are NaN when no sample is finite.
pub fn gripper_force_extrema(x: &[f64], form: GripperForce) -> (f64, f64) {
    let link = Linkage::from(x);
    let force = |z: f64| link.force(z, form);
    let zs: Vec<f64> = (0..SAMPLES).map(|k| Z_MAX * k as f64 / (SAMPLES - 1) as f64).collect();
    let fs: Vec<f64> = zs.iter().map(|&z| force(z)).collect();
    let pick = |better: fn(f64, f64) -> bool| {
        (0..SAMPLES)
            .filter(|&k| fs[k].is_finite())
            .fold(None, |best: Option<usize>, k| match best {
                Some(j) if !better(fs[k], fs[j]) => Some(j),
                _ => Some(k),
            })
    };
    let (Some(kmax), Some(kmin)) = (pick(|a, b| a > b), pick(|a, b| a < b)) else {
        return (f64::NAN, f64::NAN);
    };
    let bracket = |k: usize| (zs[k.saturating_sub(1)], zs[(k + 1).min(SAMPLES - 1)]);
    let (lo, hi) = bracket(kmax);
    let fmax = golden_max(force, lo, hi).max(fs[kmax]);
    let (lo, hi) = bracket(kmin);
    let fmin = (-golden_max(|z| -force(z), lo, hi)).min(fs[kmin]);
    (fmax, fmin)
}

/// Golden-section search for a maximum on `[lo, hi]`; NaN counts as −∞.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let g = |z: f64| {
        let v = f(z);
        if v.is_nan() {
            f64::NEG_INFINITY
        } else {
            v
        }
    };
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (g(x1), g(x2));
    while hi - lo > REFINE_TOL {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = g(x1);
        }
    }
    f1.max(f2)
}

/// `x = (a, b, c, e, f, l, δ)`.
#[derive(Debug, Clone)]
pub struct RobotGripper {
    space: SearchSpace,
    form: GripperForce,
}

impl RobotGripper {
    pub fn new(form: GripperForce) -> Self {
        let space = SearchSpace::from_bounds(&[
            (10.0, 150.0),
            (10.0, 150.0),
            (100.0, 200.0),
            (0.0, 50.0),
            (10.0, 150.0),
            (100.0, 300.0),
            #[allow(clippy::approx_constant)]
            (1.0, 3.14),
        ])
        .expect("gripper space");
        Self { space, form }
    }

    pub fn form(&self) -> GripperForce {
        self.form
    }
}

impl Design for RobotGripper {
    fn id(&self) -> &'static str {
        "B02"
    }

    fn title(&self) -> &'static str {
        "robot gripper"
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate_raw(&self, x: &[f64]) -> RawEvaluation {
        let k = Linkage::from(x);
        let (fmax, fmin) = gripper_force_extrema(x, self.form);
        let y_closed = k.opening(Z_MAX);
        let y_open = k.opening(0.0);
        RawEvaluation {
            objective: fmax - fmin,
            constraints: vec![
                ConstraintValue::ge("g1", Y_MIN - y_closed),
                ConstraintValue::ge("g2", y_closed),
                ConstraintValue::ge("g3", y_open - Y_MAX),
                ConstraintValue::ge("g4", Y_G - y_open),
                ConstraintValue::ge("g5", (k.a + k.b).powi(2) - k.l * k.l - k.e * k.e),
                ConstraintValue::ge("g6", (k.l - Z_MAX).powi(2) + (k.a - k.e).powi(2) - k.b * k.b),
                ConstraintValue::ge("g7", k.l - Z_MAX),
                ConstraintValue::ge("g8", k.reach(Z_MAX) + k.b - k.a),
                ConstraintValue::ge("g9", k.reach(0.0) + k.b - k.a),
                ConstraintValue::ge("g10", k.b + k.a - k.reach(0.0)),
            ],
        }
    }

    fn best_known(&self) -> Option<f64> {
        match self.form {
            GripperForce::Standard => Some(4.97437160),
            GripperForce::StrokeScaled => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE: [f64; 7] = [150.0, 131.323, 186.550, 17.481, 103.224, 145.000, 2.383];

    #[test]
    fn reference_design() {
        let raw = RobotGripper::new(GripperForce::Standard).evaluate_raw(&REFERENCE);
        assert!((raw.objective - 4.97437160).abs() < 5e-3, "{}", raw.objective);
        for (name, want, tol) in [
            ("g5", 57812.122, 0.5),
            ("g6", 2340.496, 0.5),
            ("g7", 45.0, 1e-9),
            ("g8", 29.599, 1e-3),
            ("g9", 127.373, 1e-3),
            ("g10", 135.273, 1e-3),
        ] {
            let got = raw.constraint(name).unwrap();
            assert!((got - want).abs() < tol, "{name}: {got}");
        }
    }

    #[test]
    fn refinement_never_loses_to_the_grid() {
        let (fmax, fmin) = gripper_force_extrema(&REFERENCE, GripperForce::Standard);
        let link = Linkage::from(&REFERENCE);
        for k in 0..SAMPLES {
            let v = link.force(Z_MAX * k as f64 / 100.0, GripperForce::Standard);
            assert!(v <= fmax && v >= fmin);
        }
    }

    #[test]
    fn degenerate_geometry_is_not_finite() {
        let x = [50.0, 50.0, 150.0, 0.0, 50.0, 300.0, 2.0];
        let raw = RobotGripper::new(GripperForce::Standard).evaluate_raw(&x);
        assert!(!raw.objective.is_finite());
    }

    #[test]
    fn stroke_scaled_form_skips_zero() {
        let (fmax, fmin) = gripper_force_extrema(&REFERENCE, GripperForce::StrokeScaled);
        assert!(fmax.is_finite() && fmin.is_finite());
    }
}
