//! Run the optimizer on a few catalog functions.
use real_opt::benchmarks::benchmark;
use real_opt::{run, Problem, RealParams};

fn main() -> real_opt::Result<()> {
    for id in ["F9", "F10", "F16", "F19"] {
        let problem = benchmark(id, None, 0)?;
        let record = run(&problem, &RealParams { iterations: 400, ..Default::default() })?;
        println!(
            "{id:<4} dim {:>2}  best {:>14.8}  known {:>14.8}  nfe {}",
            problem.space().dim(),
            record.best_value,
            problem.known_optimum().unwrap_or(f64::NAN),
            record.nfe
        );
    }
    Ok(())
}
