//! The optimizer loop: rotation about a scheduled center, excursion toward
//! remembered good solutions, and shrinking perturbation.

mod operators;
mod params;
mod record;
mod schedule;
mod spots;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use operators::{
    choose_rotation_center, excursion, perturb, perturb_in_place, PERTURBATION_SCALE,
};
pub use params::{FinalAmplitude, RealParams, SpotSelection};
pub use record::{RunRecord, TrajectoryPoint};
pub use schedule::{learning_efficiency, perturbation_amplitude, Schedule};
pub use spots::{Spot, VisibleSpotList};

use crate::error::Result;
use crate::problem::Problem;
use crate::rotation::{rotate, RotationPool};

/// Stream labels of the independent generators derived from one seed.
pub mod streams {
    pub const ROTATION_POOL: u64 = 1;
    pub const INITIAL_POPULATION: u64 = 2;
    pub const SEARCH: u64 = 3;
    pub const OBJECTIVE_NOISE: u64 = 4;
    /// Used by problem generators (composition shifts, Levy rotation).
    pub const INSTANCE: u64 = 5;
}

/// Generator for one stream of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Offers every evaluation to the archive and keeps the count.
struct Evaluator<'a, P: ?Sized> {
    problem: &'a P,
    noise: ChaCha8Rng,
    nfe: usize,
}

impl<P: Problem + ?Sized> Evaluator<'_, P> {
    fn eval(&mut self, x: &[f64], spots: &mut VisibleSpotList) -> f64 {
        let v = self.problem.evaluate(x, &mut self.noise);
        let v = if v.is_finite() { v } else { f64::INFINITY };
        self.nfe += 1;
        spots.offer(x, v);
        v
    }
}

/// Run the optimizer on `problem`. Deterministic in `params.seed`.
pub fn run<P: Problem + ?Sized>(problem: &P, params: &RealParams) -> Result<RunRecord> {
    let started = Instant::now();
    let space = problem.space();
    params.validate(space)?;
    let n = space.dim();

    let pool = RotationPool::generate(
        n,
        params.rotation_pool,
        &mut stream_rng(params.seed, streams::ROTATION_POOL),
    )?;
    let mut init = stream_rng(params.seed, streams::INITIAL_POPULATION);
    let mut agents: Vec<Vec<f64>> = (0..params.population).map(|_| space.sample(&mut init)).collect();
    let mut rng = stream_rng(params.seed, streams::SEARCH);
    let mut eval = Evaluator {
        problem,
        noise: stream_rng(params.seed, streams::OBJECTIVE_NOISE),
        nfe: 0,
    };

    let schedule = Schedule {
        horizon: params.iterations,
        gamma: params.gamma,
        initial_amplitude: params.initial_amplitude(space),
        final_amplitude: params.final_amplitude_value(space),
    };
    let mut spots = VisibleSpotList::new(params.visible_spots)?;
    let mut best_per_iter = Vec::with_capacity(params.iterations);
    let mut worst_per_iter = Vec::with_capacity(params.iterations);
    let mut trajectory = Vec::new();
    let mut stopped_early = false;

    for t in 1..=params.iterations {
        let (rho, amplitude) = schedule.at(t)?;
        for (i, agent) in agents.iter_mut().enumerate() {
            let matrix = pool.choose(&mut rng);
            let center =
                choose_rotation_center(&spots, space, rho, params.spot_selection, &mut rng);
            let mut x = rotate(agent, matrix, &center, space)?;
            space.snap_in_place(&mut x);
            let v = eval.eval(&x, &mut spots);
            if i == 0 && params.record_trajectory {
                trajectory.push(TrajectoryPoint { iteration: t, x: x.clone(), value: v });
            }

            if rng.random::<f64>() < rho && !spots.is_empty() {
                let target = spots.select(params.spot_selection, &mut rng)?;
                x = excursion(&x, &target.x, params.excursion_rate);
                space.project_in_place(&mut x);
                space.snap_in_place(&mut x);
                let v = eval.eval(&x, &mut spots);
                if i == 0 && params.record_trajectory {
                    trajectory.push(TrajectoryPoint { iteration: t, x: x.clone(), value: v });
                }
            }

            perturb_in_place(&mut x, params.perturbation_rate, amplitude, space, &mut rng);
            eval.eval(&x, &mut spots);
            *agent = x;
        }

        let best = spots.best().map_or(f64::INFINITY, |s| s.value);
        let worst = spots.worst().map_or(f64::INFINITY, |s| s.value);
        best_per_iter.push(best);
        worst_per_iter.push(worst);

        if let Some(tol) = params.term_tol {
            if spots.is_full() && spots.len() >= 2 && (best - worst).abs() <= tol {
                stopped_early = t < params.iterations;
                break;
            }
        }
    }

    let best = spots.best().expect("at least one evaluation per run");
    Ok(RunRecord {
        seed: params.seed,
        iterations: best_per_iter.len(),
        best_per_iter,
        worst_per_iter,
        trajectory,
        nfe: eval.nfe,
        stopped_early,
        best_x: best.x.clone(),
        best_value: best.value,
        wall_time_secs: started.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::FnProblem;
    use crate::space::{Dimension, SearchSpace};

    fn sphere(n: usize) -> impl Problem {
        FnProblem::new("sphere", SearchSpace::uniform(n, -100.0, 100.0).unwrap(), |x: &[f64]| {
            x.iter().map(|v| v * v).sum()
        })
    }

    #[test]
    fn best_is_monotone_and_bounded_by_worst() {
        let p = sphere(2);
        let params = RealParams { population: 5, iterations: 50, ..Default::default() };
        let r = run(&p, &params).unwrap();
        assert!(r.best_per_iter.windows(2).all(|w| w[1] <= w[0]));
        assert!(r.best_per_iter.iter().zip(&r.worst_per_iter).all(|(b, w)| b <= w));
        assert!(r.best_value <= r.best_per_iter[0]);
    }

    #[test]
    fn same_seed_same_record() {
        let p = sphere(4);
        let params = RealParams {
            population: 6,
            iterations: 40,
            record_trajectory: true,
            seed: 11,
            ..Default::default()
        };
        let mut a = run(&p, &params).unwrap();
        let mut b = run(&p, &params).unwrap();
        a.wall_time_secs = 0.0;
        b.wall_time_secs = 0.0;
        assert_eq!(a, b);
        let c = run(&p, &params.clone().with_seed(12)).unwrap();
        assert_ne!(a.best_x, c.best_x);
    }

    #[test]
    fn nfe_bounds_on_full_run() {
        let p = sphere(3);
        let params = RealParams { population: 7, iterations: 30, term_tol: None, ..Default::default() };
        let r = run(&p, &params).unwrap();
        assert_eq!(r.iterations, 30);
        assert!(r.nfe >= 2 * 30 * 7 && r.nfe <= 3 * 30 * 7, "{}", r.nfe);
    }

    #[test]
    fn trajectory_counts() {
        let p = sphere(3);
        let params = RealParams {
            population: 4,
            iterations: 60,
            term_tol: None,
            record_trajectory: true,
            ..Default::default()
        };
        let r = run(&p, &params).unwrap();
        assert!(r.trajectory.len() >= 60 && r.trajectory.len() <= 120);
    }

    #[test]
    fn evaluated_points_stay_on_grid() {
        use std::sync::Mutex;
        let space = SearchSpace::new(vec![
            Dimension::continuous(-5.0, 5.0).unwrap(),
            Dimension::stepped(2.0, 9.0, 1.0).unwrap(),
            Dimension::discrete(vec![4.1, 7.7]).unwrap(),
        ])
        .unwrap();
        let check = space.clone();
        let bad = Mutex::new(0usize);
        let p = FnProblem::new("mixed", space, |x: &[f64]| {
            if !check.is_feasible(x) {
                *bad.lock().unwrap() += 1;
            }
            x[0].powi(2) + (x[1] - 6.0).powi(2) + x[2]
        });
        let r = run(&p, &RealParams { population: 8, iterations: 40, ..Default::default() }).unwrap();
        assert_eq!(*bad.lock().unwrap(), 0);
        assert_eq!(r.best_x[1], 6.0);
        assert_eq!(r.best_x[2], 4.1);
    }

    #[test]
    fn zero_iterations_is_rejected() {
        let p = sphere(2);
        assert!(run(&p, &RealParams { iterations: 0, ..Default::default() }).is_err());
    }

    #[test]
    fn non_finite_objective_never_outranks_finite() {
        let p = FnProblem::new("holey", SearchSpace::uniform(2, -1.0, 1.0).unwrap(), |x: &[f64]| {
            if x[0] > 0.0 { f64::NAN } else { x[0] * x[0] + x[1] * x[1] }
        });
        let r = run(&p, &RealParams { population: 5, iterations: 30, ..Default::default() }).unwrap();
        assert!(r.best_value.is_finite());
        assert!(r.best_x[0] <= 0.0);
    }
}
