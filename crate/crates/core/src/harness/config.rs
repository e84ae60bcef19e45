use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::engine::RealParams;
use crate::engineering::{GripperForce, PenaltyPolicy};
use crate::error::{Error, Result};

/// One-parameter sensitivity sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// Any [`RealParams`] field or alias, or `r_at` / `l_a_t` for the final
    /// amplitude as a ratio / absolute value.
    pub parameter: String,
    pub values: Vec<f64>,
}

/// Everything needed to reproduce an experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    /// `F1`…`F29`, `CF1`…`CF6`, `LEVY-SR-<D>` or `B01`…`B07`.
    pub problem: String,
    /// Overrides the default dimension of scalable benchmarks.
    pub dimension: Option<usize>,
    pub repetitions: usize,
    /// Run `i` uses seed `seed_base + i` for both the optimizer and any
    /// randomly generated problem instance.
    pub seed_base: u64,
    /// When set, the horizon becomes `round(budget / (2.5 n_X))`.
    pub nfe_budget: Option<usize>,
    pub params: RealParams,
    pub penalty: PenaltyPolicy,
    pub gripper_force: GripperForce,
    pub sweep: Option<SweepSpec>,
    pub output_dir: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problem: "F1".into(),
            dimension: None,
            repetitions: 30,
            seed_base: 0,
            nfe_budget: None,
            params: RealParams::default(),
            penalty: PenaltyPolicy::default(),
            gripper_force: GripperForce::default(),
            sweep: None,
            output_dir: None,
        }
    }
}

const PARAM_ALIASES: [(&str, &str); 7] = [
    ("n_x", "population"),
    ("t", "iterations"),
    ("n_rot", "rotation_pool"),
    ("n_vs", "visible_spots"),
    ("r_a0", "initial_amplitude_ratio"),
    ("r_p", "perturbation_rate"),
    ("r_ex", "excursion_rate"),
];

impl ExperimentConfig {
    pub fn for_problem(problem: &str) -> Self {
        Self { problem: problem.into(), ..Self::default() }
    }

    /// Sensitivity-study setup: benchmark parameters with `T = 500`.
    pub fn sensitivity(problem: &str) -> Self {
        Self { params: RealParams::sensitivity_baseline(), ..Self::for_problem(problem) }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::Config("repetitions must be at least 1".into()));
        }
        if let Some(s) = &self.sweep {
            if s.values.is_empty() {
                return Err(Error::Config("sweep needs at least one value".into()));
            }
            let mut probe = self.clone();
            probe.sweep = None;
            probe.set_param(&s.parameter, s.values[0])?;
        }
        self.penalty.validate()
    }

    /// Parameters of run `index`.
    pub fn run_params(&self, index: usize) -> RealParams {
        let mut p = self.params.clone();
        p.seed = self.seed_base + index as u64;
        if let Some(budget) = self.nfe_budget {
            p.iterations = RealParams::iterations_for_budget(p.population, budget);
        }
        p
    }

    /// Apply `key=value`. Bare keys name a top-level field or a parameter
    /// (aliases accepted); dotted keys address nested fields. The value is
    /// read as JSON, falling back to a plain string.
    pub fn apply_override(&mut self, assignment: &str) -> Result<()> {
        let (key, raw) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("expected key=value, got {assignment:?}")))?;
        let value = serde_json::from_str(raw.trim()).unwrap_or_else(|_| Value::String(raw.trim().into()));
        self.set_value(key.trim(), value)
    }

    /// Set one swept parameter to a numeric value.
    pub fn set_param(&mut self, name: &str, value: f64) -> Result<()> {
        let json = if value.fract() == 0.0 && value.abs() < 9e15 {
            Value::from(value as i64)
        } else {
            Value::from(value)
        };
        match name.to_ascii_lowercase().as_str() {
            "r_at" | "l_a_t" | "final_amplitude_ratio" | "final_amplitude_absolute" => self.set_value(name, json),
            _ => self.set_value(&format!("params.{name}"), json),
        }
    }

    fn is_top_level(&self, key: &str) -> bool {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_object().map(|o| o.contains_key(key)))
            .unwrap_or(false)
    }

    fn set_value(&mut self, key: &str, value: Value) -> Result<()> {
        let lower = key.to_ascii_lowercase();
        let (path, value): (Vec<String>, Value) = match lower.as_str() {
            "r_at" | "final_amplitude_ratio" | "params.r_at" => {
                (vec!["params".into(), "final_amplitude".into()], serde_json::json!({ "ratio": value }))
            }
            "l_a_t" | "final_amplitude_absolute" | "params.l_a_t" => (
                vec!["params".into(), "final_amplitude".into()],
                serde_json::json!({ "absolute": value }),
            ),
            _ if key.contains('.') => (key.split('.').map(canonical_param).collect(), value),
            _ if self.is_top_level(key) => (vec![key.to_string()], value),
            _ => (vec!["params".into(), canonical_param(key)], value),
        };
        let mut doc = serde_json::to_value(&*self)?;
        let mut slot = &mut doc;
        for (depth, part) in path.iter().enumerate() {
            let obj = slot
                .as_object_mut()
                .ok_or_else(|| Error::Config(format!("{key}: {} is not an object", path[..depth].join("."))))?;
            slot = obj
                .get_mut(part)
                .ok_or_else(|| Error::Config(format!("unknown setting {key:?}")))?;
        }
        *slot = value;
        let updated: Self = serde_json::from_value(doc)
            .map_err(|e| Error::Config(format!("bad value for {key}: {e}")))?;
        *self = updated;
        Ok(())
    }
}

fn canonical_param(name: &str) -> String {
    let lower = name.to_ascii_lowercase();
    PARAM_ALIASES
        .iter()
        .find(|(alias, _)| *alias == lower)
        .map(|(_, canon)| canon.to_string())
        .unwrap_or_else(|| name.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::FinalAmplitude;

    #[test]
    fn round_trip() {
        let mut c = ExperimentConfig::for_problem("B07");
        c.nfe_budget = Some(32000);
        c.sweep = Some(SweepSpec { parameter: "n_x".into(), values: vec![10.0, 20.0] });
        assert_eq!(ExperimentConfig::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn overrides() {
        let mut c = ExperimentConfig::default();
        c.apply_override("n_x=20").unwrap();
        c.apply_override("gamma=4.5").unwrap();
        c.apply_override("repetitions=3").unwrap();
        c.apply_override("problem=LEVY-SR-10").unwrap();
        c.apply_override("params.term_tol=null").unwrap();
        c.apply_override("penalty.coefficient=1e6").unwrap();
        c.apply_override("r_at=0.001").unwrap();
        assert_eq!(c.params.population, 20);
        assert_eq!(c.params.gamma, 4.5);
        assert_eq!(c.repetitions, 3);
        assert_eq!(c.problem, "LEVY-SR-10");
        assert_eq!(c.params.term_tol, None);
        assert_eq!(c.penalty.coefficient, 1e6);
        assert_eq!(c.params.final_amplitude, FinalAmplitude::Ratio(0.001));
    }

    #[test]
    fn bad_overrides_are_rejected() {
        let mut c = ExperimentConfig::default();
        assert!(c.apply_override("nonsense=1").is_err());
        assert!(c.apply_override("n_x=many").is_err());
        assert!(c.apply_override("gamma").is_err());
        assert_eq!(c, ExperimentConfig::default());
    }

    #[test]
    fn budget_sets_horizon() {
        let c = ExperimentConfig { nfe_budget: Some(1200), ..ExperimentConfig::for_problem("B01") };
        let p = c.run_params(4);
        assert_eq!(p.iterations, 16);
        assert_eq!(p.seed, 4);
    }

    #[test]
    fn invalid_configs() {
        assert!(ExperimentConfig::from_json(r#"{"repetitions": 0}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"unknown": 1}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"sweep": {"parameter": "n_x", "values": []}}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"sweep": {"parameter": "zeta", "values": [1]}}"#).is_err());
    }
}
