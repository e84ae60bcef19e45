use serde::{Deserialize, Serialize};

/// One recorded solution of the traced agent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPoint {
    pub iteration: usize,
    pub x: Vec<f64>,
    pub value: f64,
}

/// Outcome of a single optimizer run. All objective values are in the
/// minimized convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: u64,
    /// Best visible-spot value after each iteration.
    pub best_per_iter: Vec<f64>,
    pub worst_per_iter: Vec<f64>,
    pub trajectory: Vec<TrajectoryPoint>,
    pub nfe: usize,
    pub iterations: usize,
    pub stopped_early: bool,
    pub best_x: Vec<f64>,
    pub best_value: f64,
    /// Excluded from serialization so that summaries are reproducible.
    #[serde(skip)]
    pub wall_time_secs: f64,
}

impl RunRecord {
    pub fn nfe_per_agent_iteration(&self, population: usize) -> f64 {
        self.nfe as f64 / (self.iterations * population) as f64
    }
}
