//! The objective interface the optimizer consumes.

use std::fmt;

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::space::SearchSpace;

/// Whether the reported objective is minimized or maximized. The optimizer
/// always minimizes the value returned by [`Problem::evaluate`]; maximization
/// problems negate internally and undo it in [`Problem::report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    #[default]
    Minimize,
    Maximize,
}

/// A bounded objective.
///
/// `evaluate` must be pure apart from the explicit `noise` source, which is
/// only consumed by stochastic objectives such as the quartic-with-noise
/// benchmark.
pub trait Problem: Send + Sync {
    fn name(&self) -> &str;

    fn space(&self) -> &SearchSpace;

    fn evaluate(&self, x: &[f64], noise: &mut dyn RngCore) -> f64;

    /// Known optimal value, in the minimized (internal) convention.
    fn known_optimum(&self) -> Option<f64> {
        None
    }

    fn sense(&self) -> Sense {
        Sense::Minimize
    }

    /// Map an internal (minimized) value to the value a user expects to see.
    fn report(&self, value: f64) -> f64 {
        match self.sense() {
            Sense::Minimize => value,
            Sense::Maximize => -value,
        }
    }
}

impl<P: Problem + ?Sized> Problem for &P {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn space(&self) -> &SearchSpace {
        (**self).space()
    }
    fn evaluate(&self, x: &[f64], noise: &mut dyn RngCore) -> f64 {
        (**self).evaluate(x, noise)
    }
    fn known_optimum(&self) -> Option<f64> {
        (**self).known_optimum()
    }
    fn sense(&self) -> Sense {
        (**self).sense()
    }
    fn report(&self, value: f64) -> f64 {
        (**self).report(value)
    }
}

impl<P: Problem + ?Sized> Problem for Box<P> {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn space(&self) -> &SearchSpace {
        (**self).space()
    }
    fn evaluate(&self, x: &[f64], noise: &mut dyn RngCore) -> f64 {
        (**self).evaluate(x, noise)
    }
    fn known_optimum(&self) -> Option<f64> {
        (**self).known_optimum()
    }
    fn sense(&self) -> Sense {
        (**self).sense()
    }
    fn report(&self, value: f64) -> f64 {
        (**self).report(value)
    }
}

/// Deterministic objective built from a closure.
pub struct FnProblem<F> {
    name: String,
    space: SearchSpace,
    f: F,
    optimum: Option<f64>,
}

impl<F> FnProblem<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    pub fn new(name: impl Into<String>, space: SearchSpace, f: F) -> Self {
        Self {
            name: name.into(),
            space,
            f,
            optimum: None,
        }
    }

    pub fn with_optimum(mut self, value: f64) -> Self {
        self.optimum = Some(value);
        self
    }
}

impl<F> fmt::Debug for FnProblem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnProblem")
            .field("name", &self.name)
            .field("dim", &self.space.dim())
            .finish()
    }
}

impl<F> Problem for FnProblem<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }
    fn space(&self) -> &SearchSpace {
        &self.space
    }
    fn evaluate(&self, x: &[f64], _noise: &mut dyn RngCore) -> f64 {
        (self.f)(x)
    }
    fn known_optimum(&self) -> Option<f64> {
        self.optimum
    }
}
