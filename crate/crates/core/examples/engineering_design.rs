//! Raw objective and constraints of a design, then a penalized solve.
use real_opt::engineering::{ConstrainedProblem, PenaltyPolicy};
use real_opt::harness::engineering_budget;
use real_opt::{run, Problem, RealParams};

fn main() -> real_opt::Result<()> {
    let problem = ConstrainedProblem::by_id("B07", PenaltyPolicy::default())?;
    let x = [3.5, 0.7, 17.0, 7.3, 7.8, 3.35, 5.29];
    let raw = problem.evaluate_raw(&x)?;
    println!("{}: weight {:.4}", problem.design().title(), raw.objective);
    for c in &raw.constraints {
        println!("  {:<4} {:>12.5}  violation {:?}", c.name, c.value, c.violation(1e-4));
    }

    let budget = engineering_budget("B07").expect("known id");
    let iterations = RealParams::iterations_for_budget(30, budget);
    let record = run(&problem, &RealParams { iterations, seed: 1, ..Default::default() })?;
    println!(
        "solved: {:.4} (reference {:.4}), feasible {}",
        problem.report(record.best_value),
        problem.design().best_known().unwrap_or(f64::NAN),
        problem.is_feasible(&record.best_x)
    );
    Ok(())
}
