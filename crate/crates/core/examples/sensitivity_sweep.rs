//! One-parameter sweep of the excursion rate.
use real_opt::harness::{sweep, ExperimentConfig, SweepSpec};

fn main() -> real_opt::Result<()> {
    let mut config = ExperimentConfig::sensitivity("LEVY-SR-5");
    config.repetitions = 5;
    config.params.iterations = 150;
    config.sweep = Some(SweepSpec { parameter: "r_ex".into(), values: vec![0.1, 0.5, 0.9] });
    let result = sweep(&config)?;
    for row in &result.rows {
        println!("{} = {:<4} mean {:.4}  best {:.4}", result.parameter, row.value, row.summary.mean, row.summary.best);
    }
    Ok(())
}
