use serde::{Deserialize, Serialize};

use super::stats::StatSummary;
use crate::engine::{stream_rng, streams};
use crate::error::{Error, Result};
use crate::problem::Problem;

/// Best-so-far trace of uniform random sampling, minimized convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomSearchRun {
    pub seed: u64,
    pub best_x: Vec<f64>,
    pub best_value: f64,
    pub best_so_far: Vec<f64>,
}

/// Sample `budget` points uniformly (discrete dimensions on their grid).
pub fn random_search<P: Problem + ?Sized>(problem: &P, budget: usize, seed: u64) -> Result<RandomSearchRun> {
    if budget == 0 {
        return Err(Error::InvalidParameter("random search needs a budget of at least 1".into()));
    }
    let space = problem.space();
    let mut rng = stream_rng(seed, streams::SEARCH);
    let mut noise = stream_rng(seed, streams::OBJECTIVE_NOISE);
    let mut best_x = Vec::new();
    let mut best_value = f64::INFINITY;
    let mut best_so_far = Vec::with_capacity(budget);
    for _ in 0..budget {
        let x = space.sample(&mut rng);
        let v = problem.evaluate(&x, &mut noise);
        let v = if v.is_finite() { v } else { f64::INFINITY };
        if best_x.is_empty() || v < best_value {
            best_value = v;
            best_x = x;
        }
        best_so_far.push(best_value);
    }
    Ok(RandomSearchRun { seed, best_x, best_value, best_so_far })
}

/// Random-search statistics over seeds `seed_base .. seed_base + repetitions`,
/// reported convention.
pub fn random_search_baseline<P: Problem + ?Sized>(
    problem: &P,
    budget: usize,
    seed_base: u64,
    repetitions: usize,
) -> Result<StatSummary> {
    let values = (0..repetitions as u64)
        .map(|i| random_search(problem, budget, seed_base + i).map(|r| problem.report(r.best_value)))
        .collect::<Result<Vec<_>>>()?;
    StatSummary::from_values(&values, &vec![budget; repetitions], problem.sense())
}
