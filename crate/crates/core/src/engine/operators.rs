//! Excursion, perturbation and rotation-center choice.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::engine::params::SpotSelection;
use crate::engine::spots::VisibleSpotList;
use crate::space::SearchSpace;

/// Scale applied to the standard-normal draw of a continuous perturbation.
pub const PERTURBATION_SCALE: f64 = 0.3;

/// `x + r_Ex·(target − x)`.
pub fn excursion(x: &[f64], target: &[f64], rate: f64) -> Vec<f64> {
    x.iter()
        .zip(target)
        .map(|(&xi, &ti)| if rate == 1.0 { ti } else { xi + rate * (ti - xi) })
        .collect()
}

/// Gaussian move on each continuous element with probability `rate`; discrete
/// elements step to a random grid neighbour instead. A step off the end of
/// the grid is dropped.
pub fn perturb<R: Rng + ?Sized>(
    x: &[f64],
    rate: f64,
    amplitude: f64,
    space: &SearchSpace,
    rng: &mut R,
) -> Vec<f64> {
    let mut out = x.to_vec();
    perturb_in_place(&mut out, rate, amplitude, space, rng);
    out
}

pub fn perturb_in_place<R: Rng + ?Sized>(
    x: &mut [f64],
    rate: f64,
    amplitude: f64,
    space: &SearchSpace,
    rng: &mut R,
) {
    for (d, xi) in space.dimensions().iter().zip(x.iter_mut()) {
        if !(rng.random::<f64>() < rate) {
            continue;
        }
        match d.grid() {
            None => {
                let step: f64 = rng.sample(StandardNormal);
                *xi = d.clamp(*xi + PERTURBATION_SCALE * step * amplitude);
            }
            Some(grid) => {
                let up = rng.random::<bool>();
                let j = grid.partition_point(|&g| g < *xi).min(grid.len() - 1);
                if up {
                    if j + 1 < grid.len() {
                        *xi = grid[j + 1];
                    }
                } else if j > 0 {
                    *xi = grid[j - 1];
                }
            }
        }
    }
}

/// Box center with probability `1 − ρ` (or when the list is empty), otherwise
/// a selected visible spot.
pub fn choose_rotation_center<R: Rng + ?Sized>(
    spots: &VisibleSpotList,
    space: &SearchSpace,
    rho: f64,
    selection: SpotSelection,
    rng: &mut R,
) -> Vec<f64> {
    let ran = rng.random::<f64>();
    if ran >= rho || spots.is_empty() {
        return space.center();
    }
    spots
        .select(selection, rng)
        .map(|s| s.x.clone())
        .unwrap_or_else(|_| space.center())
}
