//! A seeded shifted-rotated Levy instance and its lower bound.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use real_opt::benchmarks::{benchmark, LEVY_OFFSET};
use real_opt::Problem;

fn main() -> real_opt::Result<()> {
    let problem = benchmark("LEVY-SR-10", None, 42)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let lowest = (0..10_000)
        .map(|_| {
            let x = problem.space().sample(&mut rng);
            problem.value(&x, &mut rng)
        })
        .collect::<real_opt::Result<Vec<f64>>>()?
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    println!("lowest of 10000 samples: {lowest:.4} (floor {LEVY_OFFSET})");
    let argmin = problem.argmin().expect("closed form");
    println!("value at the known minimizer: {}", problem.value(argmin, &mut rng)?);
    Ok(())
}
