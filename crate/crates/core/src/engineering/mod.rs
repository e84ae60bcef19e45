//! Constrained engineering design problems `B01`–`B07` with penalty-based
//! constraint handling.

mod bearing;
mod belleville;
mod clutch;
mod gripper;
mod pulley;
mod reducer;
mod thrust;

use std::fmt;

use rand::RngCore;
use serde::{Deserialize, Serialize};

pub use bearing::RollingBearing;
pub use belleville::{belleville_f_of_a, BellevilleSpring};
pub use clutch::{brute_force_clutch, ClutchBrake, ClutchOptimum};
pub use gripper::{gripper_force_extrema, GripperForce, RobotGripper};
pub use pulley::StepConePulley;
pub use reducer::SpeedReducer;
pub use thrust::ThrustBearing;

use crate::error::{Error, Result};
use crate::problem::{Problem, Sense};
use crate::space::SearchSpace;

/// Feasible side of a constraint value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    /// `g(x) ≥ 0`.
    AtLeastZero,
    /// `g(x) ≤ 0`.
    AtMostZero,
    /// `h(x) = 0` up to the policy tolerance.
    Equal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintValue {
    pub name: String,
    pub value: f64,
    pub kind: ConstraintKind,
}

impl ConstraintValue {
    pub fn ge(name: &str, value: f64) -> Self {
        Self { name: name.into(), value, kind: ConstraintKind::AtLeastZero }
    }

    pub fn le(name: &str, value: f64) -> Self {
        Self { name: name.into(), value, kind: ConstraintKind::AtMostZero }
    }

    pub fn eq(name: &str, value: f64) -> Self {
        Self { name: name.into(), value, kind: ConstraintKind::Equal }
    }

    /// Amount by which the constraint is broken; `None` when the value is
    /// not a finite number.
    pub fn violation(&self, eq_tol: f64) -> Option<f64> {
        if !self.value.is_finite() {
            return None;
        }
        Some(match self.kind {
            ConstraintKind::AtLeastZero => (-self.value).max(0.0),
            ConstraintKind::AtMostZero => self.value.max(0.0),
            ConstraintKind::Equal => (self.value.abs() - eq_tol).max(0.0),
        })
    }
}

/// Objective and constraint values in the problem's own convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawEvaluation {
    pub objective: f64,
    pub constraints: Vec<ConstraintValue>,
}

impl RawEvaluation {
    pub fn constraint(&self, name: &str) -> Option<f64> {
        self.constraints.iter().find(|c| c.name == name).map(|c| c.value)
    }

    pub fn is_feasible(&self, eq_tol: f64) -> bool {
        self.constraints.iter().all(|c| c.violation(eq_tol) == Some(0.0))
    }
}

/// Violation charged for a constraint that evaluates to NaN or ±∞.
pub const NON_FINITE_VIOLATION: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PenaltyPolicy {
    /// Multiplier `K` of the summed violations.
    pub coefficient: f64,
    /// Equalities count as satisfied while `|h| ≤ eq_tol`.
    pub eq_tol: f64,
}

impl Default for PenaltyPolicy {
    fn default() -> Self {
        Self { coefficient: 1e9, eq_tol: 1e-4 }
    }
}

impl PenaltyPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.coefficient > 0.0) || !(self.eq_tol >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "penalty needs K > 0 and eq_tol >= 0, got {self:?}"
            )));
        }
        Ok(())
    }
}

/// Minimized penalized value: the objective (negated for maximization) plus
/// `K` times the summed violations. Never NaN.
pub fn penalized(raw: &RawEvaluation, sense: Sense, policy: &PenaltyPolicy) -> f64 {
    let base = match sense {
        Sense::Minimize => raw.objective,
        Sense::Maximize => -raw.objective,
    };
    if !base.is_finite() {
        return f64::INFINITY;
    }
    let excess: f64 = raw
        .constraints
        .iter()
        .map(|c| c.violation(policy.eq_tol).unwrap_or(NON_FINITE_VIOLATION))
        .sum();
    if excess == 0.0 {
        base
    } else {
        base + policy.coefficient * excess
    }
}

/// A design problem given by explicit objective and constraint formulas.
pub trait Design: Send + Sync + fmt::Debug {
    fn id(&self) -> &'static str;

    fn title(&self) -> &'static str;

    fn space(&self) -> &SearchSpace;

    fn sense(&self) -> Sense {
        Sense::Minimize
    }

    fn evaluate_raw(&self, x: &[f64]) -> RawEvaluation;

    /// Best value known for the problem, in its own convention.
    fn best_known(&self) -> Option<f64> {
        None
    }
}

/// Ids `B01` … `B07`.
pub fn engineering_ids() -> Vec<&'static str> {
    vec!["B01", "B02", "B03", "B04", "B05", "B06", "B07"]
}

pub fn design(id: &str) -> Result<Box<dyn Design>> {
    Ok(match id.trim().to_ascii_uppercase().as_str() {
        "B01" => Box::new(ClutchBrake::new()),
        "B02" => Box::new(RobotGripper::new(GripperForce::default())),
        "B03" => Box::new(RollingBearing::new()),
        "B04" => Box::new(ThrustBearing::new()),
        "B05" => Box::new(BellevilleSpring::new()),
        "B06" => Box::new(StepConePulley::new()),
        "B07" => Box::new(SpeedReducer::new()),
        _ => return Err(Error::UnknownProblem(id.to_string())),
    })
}

/// A [`Design`] turned into an unconstrained minimization by penalty.
#[derive(Debug)]
pub struct ConstrainedProblem {
    design: Box<dyn Design>,
    policy: PenaltyPolicy,
}

impl ConstrainedProblem {
    pub fn new(design: Box<dyn Design>, policy: PenaltyPolicy) -> Result<Self> {
        policy.validate()?;
        Ok(Self { design, policy })
    }

    pub fn by_id(id: &str, policy: PenaltyPolicy) -> Result<Self> {
        Self::new(design(id)?, policy)
    }

    pub fn design(&self) -> &dyn Design {
        self.design.as_ref()
    }

    pub fn policy(&self) -> &PenaltyPolicy {
        &self.policy
    }

    pub fn evaluate_raw(&self, x: &[f64]) -> Result<RawEvaluation> {
        self.design.space().check_dim(x.len())?;
        Ok(self.design.evaluate_raw(x))
    }

    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.design.evaluate_raw(x).is_feasible(self.policy.eq_tol)
    }
}

impl Problem for ConstrainedProblem {
    fn name(&self) -> &str {
        self.design.id()
    }

    fn space(&self) -> &SearchSpace {
        self.design.space()
    }

    fn evaluate(&self, x: &[f64], _noise: &mut dyn RngCore) -> f64 {
        penalized(&self.design.evaluate_raw(x), self.design.sense(), &self.policy)
    }

    fn known_optimum(&self) -> Option<f64> {
        let v = self.design.best_known()?;
        Some(match self.design.sense() {
            Sense::Minimize => v,
            Sense::Maximize => -v,
        })
    }

    fn sense(&self) -> Sense {
        self.design.sense()
    }
}
