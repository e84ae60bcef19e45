// `!(a < b)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod benchmarks;
pub mod engine;
pub mod engineering;
pub mod harness;
pub mod error;
pub mod problem;
pub mod rotation;
pub mod space;

pub use engine::{run, RealParams, RunRecord};
pub use error::{Error, Result};
pub use problem::{FnProblem, Problem, Sense};
pub use space::{Dimension, SearchSpace, VariableKind};
