//! Seeded repeated trials, statistics, Friedman ranks, sensitivity sweeps
//! and trace export.

mod baseline;
mod config;
mod experiment;
pub mod export;
mod rank;
mod stats;

pub use baseline::{random_search, random_search_baseline, RandomSearchRun};
pub use config::{ExperimentConfig, SweepSpec};
pub use experiment::{
    build_problem, run_experiment, sweep, worker_count, ExperimentResult, RunOutcome, SweepResult,
    SweepRow, WORKERS_ENV,
};
pub use rank::{average_ranks, friedman_rank, RankTable};
pub use stats::StatSummary;

/// Evaluation budgets used for the engineering comparisons, by problem id.
pub fn engineering_budget(id: &str) -> Option<usize> {
    Some(match id.trim().to_ascii_uppercase().as_str() {
        "B01" => 1200,
        "B02" => 30000,
        "B03" => 16000,
        "B04" => 48000,
        "B05" => 24000,
        "B06" => 72000,
        "B07" => 32000,
        _ => return None,
    })
}
