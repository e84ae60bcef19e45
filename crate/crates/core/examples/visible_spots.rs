//! The bounded archive of best solutions and its two selection rules.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use real_opt::engine::{SpotSelection, VisibleSpotList};

fn main() -> real_opt::Result<()> {
    let mut spots = VisibleSpotList::new(3)?;
    for (x, f) in [(0.0, 5.0), (1.0, 3.0), (2.0, 4.0), (3.0, 4.0), (4.0, 1.0), (5.0, 3.0)] {
        let kept = spots.offer(&[x], f);
        println!("offer f = {f}: {}", if kept { "kept" } else { "rejected" });
    }
    let values: Vec<f64> = spots.sorted().iter().map(|s| s.value).collect();
    println!("archive, best first: {values:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for rule in [SpotSelection::Uniform, SpotSelection::Roulette] {
        let picks: Vec<f64> = (0..8).map(|_| spots.select(rule, &mut rng).map(|s| s.value)).collect::<Result<_, _>>()?;
        println!("{rule:?} picks: {picks:?}");
    }
    Ok(())
}
