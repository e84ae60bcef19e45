//! Seeded repetitions with summary statistics.
use real_opt::harness::{run_experiment, ExperimentConfig};

fn main() -> real_opt::Result<()> {
    let mut config = ExperimentConfig::for_problem("F17");
    config.repetitions = 10;
    config.apply_override("params.iterations=200")?;
    let result = run_experiment(&config)?;
    let s = &result.summary;
    println!("{} over {} runs", result.problem, s.runs);
    println!("mean {:.8}  std {:.2e}  best {:.8}  worst {:.8}", s.mean, s.std, s.best, s.worst);
    println!("known optimum {:?}, mean nfe {:.0}", result.known_optimum, s.mean_nfe);
    Ok(())
}
