use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::config::ExperimentConfig;
use super::stats::StatSummary;
use crate::benchmarks::benchmark;
use crate::engine::{run, RunRecord};
use crate::engineering::{ConstrainedProblem, RobotGripper};
use crate::error::{Error, Result};
use crate::problem::Problem;

/// Environment variable holding the number of parallel runs.
pub const WORKERS_ENV: &str = "REAL_WORKERS";

pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

/// Problem instance for one run; randomly generated benchmarks draw their
/// instance from `seed`.
pub fn build_problem(config: &ExperimentConfig, seed: u64) -> Result<Box<dyn Problem>> {
    let id = config.problem.trim().to_ascii_uppercase();
    if id.starts_with('B') {
        if config.dimension.is_some() {
            return Err(Error::Config(format!("{id} has a fixed dimension")));
        }
        let problem = if id == "B02" {
            ConstrainedProblem::new(Box::new(RobotGripper::new(config.gripper_force)), config.penalty)?
        } else {
            ConstrainedProblem::by_id(&id, config.penalty)?
        };
        return Ok(Box::new(problem));
    }
    Ok(Box::new(benchmark(&id, config.dimension, seed)?))
}

/// One finished run. `best_value` is in the reported convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunOutcome {
    pub index: usize,
    pub best_value: f64,
    pub record: RunRecord,
}

#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    pub problem: String,
    pub known_optimum: Option<f64>,
    pub summary: StatSummary,
    pub runs: Vec<RunOutcome>,
}

impl ExperimentResult {
    /// Summary document: config echo, statistics and per-run results. Wall
    /// times are left out so that reruns are byte-identical.
    pub fn summary_json(&self) -> Value {
        let runs: Vec<Value> = self
            .runs
            .iter()
            .map(|r| {
                json!({
                    "index": r.index,
                    "seed": r.record.seed,
                    "best_value": r.best_value,
                    "best_x": r.record.best_x,
                    "nfe": r.record.nfe,
                    "iterations": r.record.iterations,
                    "stopped_early": r.record.stopped_early,
                })
            })
            .collect();
        json!({
            "config": self.config,
            "problem": self.problem,
            "known_optimum": self.known_optimum,
            "summary": self.summary,
            "runs": runs,
        })
    }

    pub fn summary_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.summary_json()).expect("summary serializes")
    }
}

fn run_one(config: &ExperimentConfig, index: usize) -> Result<(RunOutcome, String, Option<f64>)> {
    let params = config.run_params(index);
    let problem = build_problem(config, params.seed)?;
    let record = run(problem.as_ref(), &params)?;
    let best_value = problem.report(record.best_value);
    let optimum = problem.known_optimum().map(|v| problem.report(v));
    Ok((RunOutcome { index, best_value, record }, problem.name().to_string(), optimum))
}

/// Run `config.repetitions` seeded repetitions, in parallel when
/// [`WORKERS_ENV`] asks for more than one worker. Results do not depend on
/// the worker count.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    let workers = worker_count();
    let indices: Vec<usize> = (0..config.repetitions).collect();
    let results: Vec<_> = if workers == 1 {
        indices.iter().map(|&i| run_one(config, i)).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))?;
        pool.install(|| indices.par_iter().map(|&i| run_one(config, i)).collect::<Result<_>>())?
    };
    let problem = results[0].1.clone();
    let known_optimum = results[0].2;
    let runs: Vec<RunOutcome> = results.into_iter().map(|r| r.0).collect();
    let sense = build_problem(config, config.seed_base)?.sense();
    let values: Vec<f64> = runs.iter().map(|r| r.best_value).collect();
    let nfe: Vec<usize> = runs.iter().map(|r| r.record.nfe).collect();
    let mut summary = StatSummary::from_values(&values, &nfe, sense)?;
    summary.mean_wall_time_secs =
        runs.iter().map(|r| r.record.wall_time_secs).sum::<f64>() / runs.len() as f64;
    Ok(ExperimentResult { config: config.clone(), problem, known_optimum, summary, runs })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub value: f64,
    pub summary: StatSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub parameter: String,
    pub rows: Vec<SweepRow>,
}

/// Run the experiment once per swept value, changing only that parameter.
pub fn sweep(config: &ExperimentConfig) -> Result<SweepResult> {
    config.validate()?;
    let spec = config
        .sweep
        .as_ref()
        .ok_or_else(|| Error::Config("sweep mode needs a sweep spec".into()))?;
    let mut rows = Vec::with_capacity(spec.values.len());
    for &value in &spec.values {
        let mut c = config.clone();
        c.sweep = None;
        c.set_param(&spec.parameter, value)?;
        rows.push(SweepRow { value, summary: run_experiment(&c)?.summary });
    }
    Ok(SweepResult { parameter: spec.parameter.clone(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::config::SweepSpec;

    fn small(problem: &str) -> ExperimentConfig {
        let mut c = ExperimentConfig::for_problem(problem);
        c.repetitions = 3;
        c.params.population = 6;
        c.params.iterations = 20;
        c
    }

    #[test]
    fn seeds_follow_the_base() {
        let mut c = small("F1");
        c.dimension = Some(3);
        c.seed_base = 40;
        let r = run_experiment(&c).unwrap();
        let seeds: Vec<u64> = r.runs.iter().map(|o| o.record.seed).collect();
        assert_eq!(seeds, vec![40, 41, 42]);
        assert!(r.summary.best <= r.summary.mean && r.summary.mean <= r.summary.worst);
    }

    #[test]
    fn maximization_reports_positive_values() {
        let r = run_experiment(&small("B03")).unwrap();
        assert!(r.runs.iter().all(|o| o.best_value == -o.record.best_value));
        assert!(r.summary.best >= r.summary.worst);
    }

    #[test]
    fn unknown_problem_is_an_error() {
        assert!(run_experiment(&small("F99")).is_err());
        let mut c = small("B01");
        c.dimension = Some(3);
        assert!(run_experiment(&c).is_err());
    }

    #[test]
    fn single_value_sweep_matches_plain_run() {
        let mut c = small("F9");
        c.dimension = Some(4);
        let plain = run_experiment(&c).unwrap().summary;
        c.sweep = Some(SweepSpec { parameter: "n_x".into(), values: vec![6.0] });
        let s = sweep(&c).unwrap();
        assert_eq!(s.rows.len(), 1);
        assert_eq!(s.rows[0].summary.mean, plain.mean);
        assert_eq!(s.rows[0].summary.std, plain.std);
    }
}
