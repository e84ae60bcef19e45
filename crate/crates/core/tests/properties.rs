use std::sync::atomic::{AtomicUsize, Ordering};

use proptest::prelude::*;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use real_opt::engine::{excursion, learning_efficiency, perturb, VisibleSpotList};
use real_opt::engineering::{engineering_ids, penalized, ConstrainedProblem, PenaltyPolicy};
use real_opt::harness::{average_ranks, friedman_rank, run_experiment, ExperimentConfig, StatSummary};
use real_opt::rotation::{denormalize, generate_orthogonal_matrix, normalize, radius, rotate, RotationMatrix};
use real_opt::space::snap_to_grid;
use real_opt::{run, Dimension, Problem, RealParams, SearchSpace, Sense};

fn mixed_space() -> SearchSpace {
    SearchSpace::new(vec![
        Dimension::continuous(-5.0, 5.0).unwrap(),
        Dimension::stepped(1.0, 9.0, 1.0).unwrap(),
        Dimension::continuous(0.0, 1e-3).unwrap(),
        Dimension::discrete(vec![0.5, 1.5, 4.0]).unwrap(),
    ])
    .unwrap()
}

fn point_in(space: &SearchSpace, seed: u64) -> Vec<f64> {
    space.sample(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Counts evaluations outside the space.
struct Audited {
    space: SearchSpace,
    infeasible: AtomicUsize,
}

impl Problem for Audited {
    fn name(&self) -> &str {
        "audited"
    }
    fn space(&self) -> &SearchSpace {
        &self.space
    }
    fn evaluate(&self, x: &[f64], _: &mut dyn RngCore) -> f64 {
        if !self.space.is_feasible(x) {
            self.infeasible.fetch_add(1, Ordering::Relaxed);
        }
        x.iter().enumerate().map(|(i, v)| (v - i as f64 * 0.3).powi(2)).sum()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_matrices_are_orthogonal(n in 1usize..=24, seed: u64) {
        let m = generate_orthogonal_matrix(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(m.orthogonality_error() < 1e-10);
        let z: Vec<f64> = (0..n).map(|i| (i as f64 * 0.37).sin()).collect();
        let back = m.apply_transpose(&m.apply(&z));
        for (a, b) in z.iter().zip(&back) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn rotation_stays_in_the_box(seed: u64, n in 1usize..=12) {
        let space = SearchSpace::uniform(n, -2.0, 3.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = generate_orthogonal_matrix(n, &mut rng).unwrap();
        let x = space.sample(&mut rng);
        let c = space.sample(&mut rng);
        let y = rotate(&x, &m, &c, &space).unwrap();
        prop_assert!(space.contains(&y));
        prop_assert_eq!(rotate(&x, &RotationMatrix::identity(n), &c, &space).unwrap(), x);
    }

    #[test]
    fn normalization_round_trips(seed: u64) {
        let space = mixed_space();
        let c = point_in(&space, seed);
        let x = point_in(&space, seed ^ 0xabcdef);
        let r = radius(&c, &space).unwrap();
        prop_assert!(r.iter().all(|&ri| ri > 0.0));
        let z = normalize(&x, &c, &r);
        prop_assert!(z.iter().all(|v| v.abs() <= 1.0 + 1e-12));
        for (a, b) in denormalize(&z, &c, &r).iter().zip(&x) {
            prop_assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
        }
    }

    #[test]
    fn logistic_is_monotone_and_symmetric(horizon in 2usize..2000, gamma in 0.1f64..60.0) {
        let mut prev = 0.0;
        for t in 0..=horizon {
            let r = learning_efficiency(t, horizon, gamma).unwrap();
            prop_assert!(r >= prev);
            prop_assert!(r > 0.0 && r <= 1.0);
            let mirrored = learning_efficiency(horizon - t, horizon, gamma).unwrap();
            prop_assert!((r + mirrored - 1.0).abs() < 1e-12);
            prev = r;
        }
    }

    #[test]
    fn visible_spots_keep_the_smallest(capacity in 1usize..=10, values in prop::collection::vec(0u8..12, 0..200)) {
        let mut list = VisibleSpotList::new(capacity).unwrap();
        for (i, &v) in values.iter().enumerate() {
            list.offer(&[i as f64], v as f64);
        }
        let mut expected: Vec<(u8, usize)> = values.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        expected.sort();
        expected.truncate(capacity);
        let mut want: Vec<usize> = expected.iter().map(|e| e.1).collect();
        want.sort();
        let mut got: Vec<usize> = list.entries().iter().map(|s| s.x[0] as usize).collect();
        got.sort();
        prop_assert_eq!(got, want);
        if let (Some(b), Some(w)) = (list.best(), list.worst()) {
            prop_assert!(b.value <= w.value);
        }
    }

    #[test]
    fn operators_preserve_feasibility(seed: u64, rate in 0.0f64..=1.0, amp in 0.0f64..100.0, ex in 0.0f64..=1.0) {
        let space = mixed_space();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = space.sample(&mut rng);
        let y = perturb(&x, rate, amp, &space, &mut rng);
        prop_assert!(space.is_feasible(&y));
        let target = space.sample(&mut rng);
        let e = space.snap_discrete(&excursion(&x, &target, ex));
        prop_assert!(space.is_feasible(&e));
        prop_assert_eq!(perturb(&x, 0.0, amp, &space, &mut rng), x);
    }

    #[test]
    fn snapping_picks_a_nearest_grid_value(v in -5.0f64..15.0) {
        let grid = [0.5, 1.5, 4.0, 4.1, 7.7, 10.0];
        let s = snap_to_grid(&grid, v);
        prop_assert!(grid.contains(&s));
        let best = grid.iter().map(|g| (g - v).abs()).fold(f64::INFINITY, f64::min);
        prop_assert!(((s - v).abs() - best).abs() < 1e-12);
    }

    #[test]
    fn friedman_ranks_average_to_the_middle(rows in prop::collection::vec(prop::collection::vec(-3i8..3, 5), 1..12)) {
        let values: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect();
        for row in &values {
            let r = average_ranks(row).unwrap();
            prop_assert!((r.iter().sum::<f64>() - 15.0).abs() < 1e-12);
        }
        let mean = friedman_rank(&values).unwrap();
        prop_assert!((mean.iter().sum::<f64>() / 5.0 - 3.0).abs() < 1e-12);
        let flipped: Vec<Vec<f64>> = values.iter().map(|r| r.iter().rev().cloned().collect()).collect();
        let mut back = friedman_rank(&flipped).unwrap();
        back.reverse();
        prop_assert_eq!(back, mean);
    }

    #[test]
    fn summary_mean_lies_between_extremes(values in prop::collection::vec(-1e6f64..1e6, 1..40), maximize: bool) {
        let sense = if maximize { Sense::Maximize } else { Sense::Minimize };
        let s = StatSummary::from_values(&values, &vec![1; values.len()], sense).unwrap();
        let (lo, hi) = if maximize { (s.worst, s.best) } else { (s.best, s.worst) };
        prop_assert!(lo <= s.mean && s.mean <= hi);
        prop_assert!(s.std >= 0.0);
    }

    #[test]
    fn feasible_designs_pay_no_penalty(seed: u64, which in 0usize..7) {
        let id = engineering_ids()[which];
        let p = ConstrainedProblem::by_id(id, PenaltyPolicy::default()).unwrap();
        let x = point_in(p.space(), seed);
        let raw = p.evaluate_raw(&x).unwrap();
        let pen = penalized(&raw, p.sense(), p.policy());
        prop_assert!(!pen.is_nan());
        let base = if p.sense() == Sense::Maximize { -raw.objective } else { raw.objective };
        if !raw.objective.is_finite() {
            prop_assert_eq!(pen, f64::INFINITY);
        } else if raw.is_feasible(p.policy().eq_tol) {
            prop_assert_eq!(pen, base);
        } else {
            prop_assert!(pen > base);
        }
    }

    #[test]
    fn config_round_trips(reps in 1usize..50, seed: u64, pop in 1usize..80, iters in 1usize..5000, ratio in 0.0f64..1.0) {
        let mut c = ExperimentConfig::for_problem("LEVY-SR-7");
        c.repetitions = reps;
        c.seed_base = seed;
        c.params.population = pop;
        c.params.iterations = iters;
        c.params.initial_amplitude_ratio = ratio;
        prop_assert_eq!(ExperimentConfig::from_json(&c.to_json()).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn runs_are_deterministic_and_feasible(seed: u64, pop in 1usize..8, iters in 1usize..40) {
        let p = Audited { space: mixed_space(), infeasible: AtomicUsize::new(0) };
        let params = RealParams { population: pop, iterations: iters, rotation_pool: 3, seed, ..Default::default() };
        let a = run(&p, &params).unwrap();
        let b = run(&p, &params).unwrap();
        prop_assert_eq!(p.infeasible.load(Ordering::Relaxed), 0);
        prop_assert_eq!(&a.best_per_iter, &b.best_per_iter);
        prop_assert_eq!(&a.best_x, &b.best_x);
        prop_assert_eq!(a.nfe, b.nfe);
        prop_assert!(a.best_per_iter.windows(2).all(|w| w[1] <= w[0]));
        prop_assert!(a.nfe >= 2 * pop * a.iterations && a.nfe <= 3 * pop * a.iterations);
        prop_assert!(p.space().is_feasible(&a.best_x));
    }

    #[test]
    fn repetitions_are_seed_isolated(base in 0u64..1000) {
        let mut c = ExperimentConfig::for_problem("CF2");
        c.dimension = Some(3);
        c.seed_base = base;
        c.params.iterations = 15;
        c.params.population = 6;
        c.repetitions = 2;
        let short = run_experiment(&c).unwrap();
        c.repetitions = 4;
        let long = run_experiment(&c).unwrap();
        for (a, b) in short.runs.iter().zip(&long.runs) {
            prop_assert_eq!(&a.record.best_per_iter, &b.record.best_per_iter);
            prop_assert_eq!(&a.record.best_x, &b.record.best_x);
            prop_assert_eq!(a.record.nfe, b.record.nfe);
        }
        prop_assert_ne!(&long.runs[0].record.best_x, &long.runs[1].record.best_x);
    }
}
