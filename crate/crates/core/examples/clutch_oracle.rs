//! Exhaustive reference solution of the discrete clutch brake.
use real_opt::engineering::brute_force_clutch;

fn main() {
    let opt = brute_force_clutch();
    println!("grid points: {}, feasible: {}", opt.grid_points, opt.feasible_points);
    println!("minimum mass: {:.6}", opt.value);
    for x in &opt.minimizers {
        println!("  {x:?}");
    }
}
