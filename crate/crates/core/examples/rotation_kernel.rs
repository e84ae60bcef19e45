//! Random orthogonal matrices and the box-aware rotation step.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use real_opt::rotation::{generate_orthogonal_matrix, radius, rotate, RotationMatrix};
use real_opt::SearchSpace;

fn main() -> real_opt::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [2, 10, 30] {
        let m = generate_orthogonal_matrix(n, &mut rng)?;
        println!("n = {n:>2}: max |MᵀM − I| = {:.2e}", m.orthogonality_error());
    }

    let space = SearchSpace::from_bounds(&[(0.0, 10.0), (-1.0, 1.0)])?;
    let center = vec![2.0, 0.0];
    let x = vec![4.0, 0.5];
    println!("radius about {center:?}: {:?}", radius(&center, &space)?);

    let quarter = RotationMatrix::from_rows(2, vec![0.0, -1.0, 1.0, 0.0])?;
    println!("quarter turn of {x:?}: {:?}", rotate(&x, &quarter, &center, &space)?);
    println!("identity keeps it: {:?}", rotate(&x, &RotationMatrix::identity(2), &center, &space)?);
    Ok(())
}
