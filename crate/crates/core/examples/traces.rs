//! Write convergence and trajectory CSVs for one run.
use real_opt::benchmarks::benchmark;
use real_opt::harness::export::write_traces;
use real_opt::{run, RealParams};

fn main() -> real_opt::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "target/traces".into());
    let problem = benchmark("F18", None, 0)?;
    let params = RealParams { iterations: 100, record_trajectory: true, ..Default::default() };
    let record = run(&problem, &params)?;
    write_traces(&record, &problem, dir.as_ref())?;
    println!("{} iterations, {} trajectory points written to {dir}", record.iterations, record.trajectory.len());
    Ok(())
}
