//! Build a composition function from explicit parts.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use real_opt::benchmarks::{build_composition, CompositionSpec};

fn main() -> real_opt::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let spec = CompositionSpec::standard(4, 5, &mut rng)?;
    let optimum = spec.shifts[0].clone();
    let f = build_composition(spec)?;
    println!("f(o_1) = {:.3e}", f.eval(&optimum));
    println!("f(0)   = {:.3}", f.eval(&[0.0; 5]));
    println!("f(4.9) = {:.3}", f.eval(&[4.9; 5]));
    Ok(())
}
