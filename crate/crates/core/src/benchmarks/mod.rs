//! Benchmark catalog: `F1`–`F23` classical functions, `F24`–`F29`
//! compositions (`CF1`–`CF6`) and the shifted-rotated Levy family
//! `LEVY-SR-<D>`.

pub mod classic;
pub mod composition;
pub mod levy;

use std::fmt;

use rand::RngCore;

pub use composition::{build_composition, BaseFunction, Composition, CompositionSpec};
pub use levy::{build_levy_sr, levy, ShiftedRotatedLevy, LEVY_OFFSET};

use crate::engine::{stream_rng, streams};
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::space::SearchSpace;

enum Objective {
    Plain(fn(&[f64]) -> f64),
    Noisy(fn(&[f64], &mut dyn RngCore) -> f64),
    Shekel(usize),
    Composition(Box<Composition>),
    Levy(ShiftedRotatedLevy),
}

/// A catalog problem. Implements [`Problem`].
pub struct Benchmark {
    id: String,
    space: SearchSpace,
    objective: Objective,
    optimum: f64,
    argmin: Option<Vec<f64>>,
}

impl fmt::Debug for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Benchmark")
            .field("id", &self.id)
            .field("dim", &self.space.dim())
            .field("optimum", &self.optimum)
            .finish()
    }
}

/// All catalog ids in order `F1` … `F29`.
pub fn benchmark_ids() -> Vec<String> {
    (1..=29).map(|k| format!("F{k}")).collect()
}

/// Dimension used when none is requested.
pub fn default_dimension(id: &str) -> Option<usize> {
    match canonical(id)? {
        Canon::F(k) => Some(match k {
            1..=13 => 30,
            14 | 16 | 17 | 18 => 2,
            15 | 21 | 22 | 23 => 4,
            19 => 3,
            20 => 6,
            _ => 10,
        }),
        Canon::Levy(d) => Some(d),
    }
}

enum Canon {
    F(usize),
    Levy(usize),
}

fn canonical(id: &str) -> Option<Canon> {
    let id = id.trim().to_ascii_uppercase();
    if let Some(rest) = id.strip_prefix("LEVY-SR") {
        let rest = rest.trim_start_matches('-');
        return if rest.is_empty() {
            Some(Canon::Levy(10))
        } else {
            rest.parse().ok().filter(|&d| d > 0).map(Canon::Levy)
        };
    }
    if let Some(k) = id.strip_prefix("CF") {
        return k.parse::<usize>().ok().filter(|k| (1..=6).contains(k)).map(|k| Canon::F(k + 23));
    }
    let k: usize = id.strip_prefix('F')?.parse().ok()?;
    (1..=29).contains(&k).then_some(Canon::F(k))
}

/// Build a catalog problem. `dim` overrides the default for the scalable
/// functions `F1`–`F13`, the compositions and Levy; fixed-dimension functions
/// reject other values. `seed` only affects generated instances
/// (compositions, Levy).
pub fn benchmark(id: &str, dim: Option<usize>, seed: u64) -> Result<Benchmark> {
    let canon = canonical(id).ok_or_else(|| Error::UnknownProblem(id.to_string()))?;
    let default = default_dimension(id).expect("canonical id");
    let n = dim.unwrap_or(default);
    if n == 0 {
        return Err(Error::InvalidDimension(format!("{id}: dimension must be >= 1")));
    }
    let scalable = match canon {
        Canon::F(k) => k <= 13 || k >= 24,
        Canon::Levy(_) => true,
    };
    if !scalable && n != default {
        return Err(Error::InvalidDimension(format!("{id} is fixed at dimension {default}, got {n}")));
    }
    match canon {
        Canon::F(k) => classic_or_composite(k, n, seed),
        Canon::Levy(d) => {
            let d = dim.unwrap_or(d);
            let f = build_levy_sr(d, seed)?;
            let shift = 100.0 / 5.12;
            let ones_back = f.rotation().apply_transpose(&vec![1.0; d]);
            let argmin = ones_back.iter().map(|v| 0.5 + shift * v).collect();
            Ok(Benchmark {
                id: format!("LEVY-SR-{d}"),
                space: SearchSpace::uniform(d, -levy::LEVY_BOUND, levy::LEVY_BOUND)?,
                objective: Objective::Levy(f),
                optimum: LEVY_OFFSET,
                argmin: Some(argmin),
            })
        }
    }
}

fn classic_or_composite(k: usize, n: usize, seed: u64) -> Result<Benchmark> {
    use classic::*;
    let fill = |v: f64| Some(vec![v; n]);
    let (objective, bound, optimum, argmin): (Objective, (f64, f64), f64, Option<Vec<f64>>) = match k {
        1 => (Objective::Plain(sphere), (-100.0, 100.0), 0.0, fill(0.0)),
        2 => (Objective::Plain(schwefel_2_22), (-10.0, 10.0), 0.0, fill(0.0)),
        3 => (Objective::Plain(schwefel_1_2), (-100.0, 100.0), 0.0, fill(0.0)),
        4 => (Objective::Plain(schwefel_2_21), (-100.0, 100.0), 0.0, fill(0.0)),
        5 => (Objective::Plain(rosenbrock), (-30.0, 30.0), 0.0, fill(1.0)),
        6 => (Objective::Plain(step), (-100.0, 100.0), 0.0, fill(-0.5)),
        7 => (Objective::Noisy(quartic_noise), (-1.28, 1.28), 0.0, fill(0.0)),
        8 => (
            Objective::Plain(schwefel_2_26),
            (-500.0, 500.0),
            SCHWEFEL_MIN_PER_DIM * n as f64,
            fill(SCHWEFEL_ARGMIN),
        ),
        9 => (Objective::Plain(rastrigin), (-5.12, 5.12), 0.0, fill(0.0)),
        10 => (Objective::Plain(ackley), (-32.0, 32.0), 0.0, fill(0.0)),
        11 => (Objective::Plain(griewank), (-512.0, 512.0), 0.0, fill(0.0)),
        12 => (Objective::Plain(penalized_1), (-50.0, 50.0), 0.0, fill(-1.0)),
        13 => (Objective::Plain(penalized_2), (-50.0, 50.0), 0.0, fill(1.0)),
        14 => (
            Objective::Plain(foxholes),
            (-65.536, 65.536),
            0.998_003_837_794_449_3,
            Some(vec![-31.978_328_372_442_4; 2]),
        ),
        15 => (
            Objective::Plain(kowalik),
            (-5.0, 5.0),
            3.074_859_878_056e-4,
            Some(vec![0.192_833_452_4, 0.190_836_146_6, 0.123_117_260_1, 0.135_765_860_3]),
        ),
        16 => (
            Objective::Plain(six_hump_camel),
            (-5.0, 5.0),
            -1.031_628_453_489_877,
            Some(vec![0.089_842_008_7, -0.712_656_403_0]),
        ),
        17 => (
            Objective::Plain(branin),
            (-5.0, 5.0),
            0.397_887_357_729_738_2,
            Some(vec![std::f64::consts::PI, 2.275]),
        ),
        18 => (Objective::Plain(goldstein_price), (-2.0, 2.0), 3.0, Some(vec![0.0, -1.0])),
        19 => (
            Objective::Plain(hartmann3),
            (0.0, 1.0),
            -3.862_782_147_820_756,
            Some(vec![0.114_614_339, 0.555_648_840, 0.852_546_653]),
        ),
        20 => (
            Objective::Plain(hartmann6),
            (0.0, 1.0),
            -3.322_368_011_415_511,
            Some(vec![0.201_689_511, 0.150_010_716, 0.476_873_986, 0.275_332_440, 0.311_651_620, 0.657_300_534]),
        ),
        21 => (
            Objective::Shekel(5),
            (0.0, 10.0),
            -10.153_199_679_058_23,
            Some(vec![4.000_037_150_92, 4.000_133_277_92, 4.000_037_150_92, 4.000_133_277_92]),
        ),
        22 => (
            Objective::Shekel(7),
            (0.0, 10.0),
            -10.402_940_566_818_66,
            Some(vec![4.000_572_916_3, 4.000_689_356_1, 3.999_489_714_2, 3.999_606_154_1]),
        ),
        23 => (
            Objective::Shekel(10),
            (0.0, 10.0),
            -10.536_409_816_692_05,
            Some(vec![4.000_746_711_5, 4.000_592_934_5, 3.999_663_386_5, 3.999_509_609_6]),
        ),
        24..=29 => {
            let mut rng = stream_rng(seed, streams::INSTANCE);
            let spec = CompositionSpec::standard(k - 23, n, &mut rng)?;
            let argmin = spec.shifts[0].clone();
            (
                Objective::Composition(Box::new(build_composition(spec)?)),
                (-5.0, 5.0),
                0.0,
                Some(argmin),
            )
        }
        _ => return Err(Error::UnknownProblem(format!("F{k}"))),
    };
    Ok(Benchmark {
        id: format!("F{k}"),
        space: SearchSpace::uniform(n, bound.0, bound.1)?,
        objective,
        optimum,
        argmin,
    })
}

impl Benchmark {
    pub fn id(&self) -> &str {
        &self.id
    }

    /// Known minimizer, where one is available in closed form.
    pub fn argmin(&self) -> Option<&[f64]> {
        self.argmin.as_deref()
    }

    pub fn composition(&self) -> Option<&Composition> {
        match &self.objective {
            Objective::Composition(c) => Some(c),
            _ => None,
        }
    }

    /// Checked evaluation.
    pub fn value(&self, x: &[f64], noise: &mut dyn RngCore) -> Result<f64> {
        self.space.check_dim(x.len())?;
        Ok(self.raw(x, noise))
    }

    fn raw(&self, x: &[f64], noise: &mut dyn RngCore) -> f64 {
        match &self.objective {
            Objective::Plain(f) => f(x),
            Objective::Noisy(f) => f(x, noise),
            Objective::Shekel(m) => classic::shekel(x, *m),
            Objective::Composition(c) => c.eval(x),
            Objective::Levy(l) => l.eval(x),
        }
    }
}

impl Problem for Benchmark {
    fn name(&self) -> &str {
        &self.id
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate(&self, x: &[f64], noise: &mut dyn RngCore) -> f64 {
        debug_assert_eq!(x.len(), self.space.dim());
        self.raw(x, noise)
    }

    fn known_optimum(&self) -> Option<f64> {
        Some(self.optimum)
    }
}
