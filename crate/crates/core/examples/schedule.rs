//! The logistic learning efficiency and the amplitude it drives.
use real_opt::engine::{RealParams, Schedule};
use real_opt::SearchSpace;

fn main() -> real_opt::Result<()> {
    let space = SearchSpace::uniform(10, -100.0, 100.0)?;
    let params = RealParams::default();
    let schedule = Schedule {
        horizon: params.iterations,
        gamma: params.gamma,
        initial_amplitude: params.initial_amplitude(&space),
        final_amplitude: params.final_amplitude_value(&space),
    };
    println!("box diagonal = {}", space.diagonal_norm());
    println!("{:>6} {:>10} {:>12}", "t", "rho", "L_A");
    for t in [0, 100, 250, 500, 750, 900, 1000] {
        let (rho, amp) = schedule.at(t)?;
        println!("{t:>6} {rho:>10.6} {amp:>12.4e}");
    }
    Ok(())
}
