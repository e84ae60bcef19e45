//! Multiple-disk clutch brake: minimize the disk stack mass over a fully
//! discrete grid.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{ConstraintValue, Design, RawEvaluation};
use crate::space::{Dimension, SearchSpace};

const DENSITY: f64 = 7.8e-6; // kg/mm³
const DELTA: f64 = 0.5; // mm
const P_MAX: f64 = 1.0; // MPa
const V_SR_MAX: f64 = 10.0; // m/s
const SPEED: f64 = 250.0; // rpm
const MU: f64 = 0.5;
const SAFETY: f64 = 1.5;
const STATIC_MOMENT: f64 = 40.0; // N·m
const FRICTION_MOMENT: f64 = 3.0; // N·m
const INERTIA: f64 = 55.0; // kg·m²
const T_MAX: f64 = 15.0; // s
const L_MAX: f64 = 30.0; // mm
const DR_MIN: f64 = 20.0; // mm

/// `x = (r_i, r_o, t, F, Z)`.
#[derive(Debug, Clone)]
pub struct ClutchBrake {
    space: SearchSpace,
}

impl ClutchBrake {
    pub fn new() -> Self {
        let space = SearchSpace::new(vec![
            Dimension::stepped(60.0, 80.0, 1.0).expect("grid"),
            Dimension::stepped(90.0, 110.0, 1.0).expect("grid"),
            Dimension::stepped(1.0, 3.0, 0.5).expect("grid"),
            Dimension::stepped(600.0, 1000.0, 10.0).expect("grid"),
            Dimension::stepped(2.0, 9.0, 1.0).expect("grid"),
        ])
        .expect("clutch space");
        Self { space }
    }

    pub fn mass(x: &[f64]) -> f64 {
        let (ri, ro, t, z) = (x[0], x[1], x[2], x[4]);
        PI * (ro * ro - ri * ri) * t * (z + 1.0) * DENSITY
    }
}

impl Default for ClutchBrake {
    fn default() -> Self {
        Self::new()
    }
}

impl Design for ClutchBrake {
    fn id(&self) -> &'static str {
        "B01"
    }

    fn title(&self) -> &'static str {
        "multiple-disk clutch brake"
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate_raw(&self, x: &[f64]) -> RawEvaluation {
        let (ri, ro, t, f, z) = (x[0], x[1], x[2], x[3], x[4]);
        let area = ro * ro - ri * ri;
        let cubes = ro.powi(3) - ri.powi(3);
        let p_rz = f / (PI * area);
        let v_sr = 2.0 * PI * SPEED * cubes / (90.0 * area) / 1000.0;
        let m_h = (2.0 / 3.0) * MU * f * z * cubes / area / 1000.0;
        let stop_time = INERTIA * PI * SPEED / (30.0 * (m_h + FRICTION_MOMENT));
        RawEvaluation {
            objective: Self::mass(x),
            constraints: vec![
                ConstraintValue::ge("g1", ro - ri - DR_MIN),
                ConstraintValue::ge("g2", L_MAX - (z + 1.0) * (t + DELTA)),
                ConstraintValue::ge("g3", P_MAX - p_rz),
                ConstraintValue::ge("g4", P_MAX * V_SR_MAX - p_rz * v_sr),
                ConstraintValue::ge("g5", V_SR_MAX - v_sr),
                ConstraintValue::ge("g6", T_MAX - stop_time),
                ConstraintValue::ge("g7", m_h - SAFETY * STATIC_MOMENT),
                ConstraintValue::ge("g8", stop_time),
            ],
        }
    }

    fn best_known(&self) -> Option<f64> {
        Some(Self::mass(&[70.0, 90.0, 1.0, 0.0, 3.0]))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClutchOptimum {
    pub value: f64,
    /// Every grid point attaining `value`.
    pub minimizers: Vec<Vec<f64>>,
    pub feasible_points: usize,
    pub grid_points: usize,
}

/// Exhaustive search of the clutch grid.
pub fn brute_force_clutch() -> ClutchOptimum {
    let clutch = ClutchBrake::new();
    let grids: Vec<&[f64]> = clutch
        .space
        .dimensions()
        .iter()
        .map(|d| d.grid().expect("clutch is fully discrete"))
        .collect();
    let mut best = f64::INFINITY;
    let mut minimizers = Vec::new();
    let mut feasible = 0;
    let mut total = 0;
    let mut x = vec![0.0; 5];
    for &ri in grids[0] {
        for &ro in grids[1] {
            for &t in grids[2] {
                for &f in grids[3] {
                    for &z in grids[4] {
                        x.copy_from_slice(&[ri, ro, t, f, z]);
                        total += 1;
                        let raw = clutch.evaluate_raw(&x);
                        if !raw.is_feasible(0.0) {
                            continue;
                        }
                        feasible += 1;
                        if raw.objective < best {
                            best = raw.objective;
                            minimizers.clear();
                        }
                        if raw.objective == best {
                            minimizers.push(x.clone());
                        }
                    }
                }
            }
        }
    }
    ClutchOptimum { value: best, minimizers, feasible_points: feasible, grid_points: total }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_design() {
        let raw = ClutchBrake::new().evaluate_raw(&[70.0, 90.0, 1.0, 820.0, 3.0]);
        assert!((raw.objective - 0.313657).abs() < 1e-6);
        assert!(raw.constraint("g1").unwrap().abs() < 1e-12);
        assert!((raw.constraint("g2").unwrap() - 24.0).abs() < 1e-12);
        assert!((raw.constraint("g3").unwrap() - 0.919).abs() < 1e-3);
        assert!((raw.constraint("g4").unwrap() - 9.828).abs() < 1e-3);
        assert!((raw.constraint("g5").unwrap() - 7.895).abs() < 1e-3);
        assert!((raw.constraint("g7").unwrap() - 38.913).abs() < 1e-3);
        assert!(raw.is_feasible(0.0));
    }

    #[test]
    fn exhaustive_optimum() {
        let opt = brute_force_clutch();
        assert_eq!(opt.grid_points, 21 * 21 * 5 * 41 * 8);
        assert!((opt.value - 0.313657).abs() < 1e-6);
        assert_eq!(opt.value, ClutchBrake::new().best_known().unwrap());
        for m in &opt.minimizers {
            assert_eq!(&[m[0], m[1], m[2], m[4]], &[70.0, 90.0, 1.0, 3.0]);
        }
    }
}
