//! Minimize a closure over a box.
use real_opt::{run, FnProblem, RealParams, SearchSpace};

fn main() -> real_opt::Result<()> {
    let space = SearchSpace::uniform(5, -10.0, 10.0)?;
    let problem = FnProblem::new("shifted-sphere", space, |x: &[f64]| {
        x.iter().map(|v| (v - 3.0).powi(2)).sum()
    })
    .with_optimum(0.0);

    let params = RealParams { iterations: 300, seed: 7, ..Default::default() };
    let record = run(&problem, &params)?;
    println!("best f = {:.3e} after {} evaluations", record.best_value, record.nfe);
    println!("best x = {:?}", record.best_x);
    Ok(())
}
