//! Compare the optimizer with uniform random sampling at equal budget.
use real_opt::benchmarks::benchmark;
use real_opt::harness::{random_search_baseline, run_experiment, ExperimentConfig};

fn main() -> real_opt::Result<()> {
    let id = "F10";
    let budget = 7500;
    let mut config = ExperimentConfig::for_problem(id);
    config.repetitions = 5;
    config.nfe_budget = Some(budget);
    let real = run_experiment(&config)?.summary;
    let random = random_search_baseline(&benchmark(id, None, 0)?, budget, 0, 5)?;
    println!("{id} at {budget} evaluations");
    println!("  optimizer mean {:.4e}", real.mean);
    println!("  random    mean {:.4e}", random.mean);
    Ok(())
}
