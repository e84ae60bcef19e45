//! Classical test functions. Coefficient tables follow the usual published
//! forms of De Jong's foxholes, Kowalik, Hartmann and Shekel.

use std::f64::consts::{E, PI};

use rand::{Rng, RngCore};

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// Schwefel 2.22: `Σ|xᵢ| + Π|xᵢ|`.
pub fn schwefel_2_22(x: &[f64]) -> f64 {
    let s: f64 = x.iter().map(|v| v.abs()).sum();
    let p: f64 = x.iter().map(|v| v.abs()).product();
    s + p
}

/// Schwefel 1.2: sum of squared prefix sums.
pub fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

/// Schwefel 2.21: `max |xᵢ|`.
pub fn schwefel_2_21(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

/// `Σ (xᵢ + 0.5)²`.
pub fn step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).powi(2)).sum()
}

/// `Σ i·xᵢ⁴ + U[0,1)`, the noise drawn from `noise`.
pub fn quartic_noise(x: &[f64], noise: &mut dyn RngCore) -> f64 {
    quartic(x) + noise.random::<f64>()
}

pub fn quartic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

/// Schwefel 2.26: `Σ −xᵢ sin(√|xᵢ|)`.
pub fn schwefel_2_26(x: &[f64]) -> f64 {
    x.iter().map(|v| -v * v.abs().sqrt().sin()).sum()
}

/// Per-coordinate optimum of [`schwefel_2_26`].
pub const SCHWEFEL_ARGMIN: f64 = 420.968_746_359_982;
pub const SCHWEFEL_MIN_PER_DIM: f64 = -418.982_887_272_433_8;

pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

pub fn griewank(x: &[f64]) -> f64 {
    let s: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let p: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    s - p + 1.0
}

/// `u(x, a, k, m)` boundary penalty of the penalized functions.
pub fn u_penalty(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

pub fn penalized_1(x: &[f64]) -> f64 {
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
    let mut s = 10.0 * (PI * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        s += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * (PI * y[i + 1]).sin().powi(2));
    }
    s += (y[n - 1] - 1.0).powi(2);
    PI / n as f64 * s + x.iter().map(|&v| u_penalty(v, 10.0, 100.0, 4)).sum::<f64>()
}

pub fn penalized_2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut s = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        s += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    s += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    0.1 * s + x.iter().map(|&v| u_penalty(v, 5.0, 100.0, 4)).sum::<f64>()
}

fn foxholes_a(row: usize, j: usize) -> f64 {
    const V: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    if row == 0 {
        V[j % 5]
    } else {
        V[j / 5]
    }
}

/// De Jong's fifth function (Shekel's foxholes).
pub fn foxholes(x: &[f64]) -> f64 {
    let mut s = 1.0 / 500.0;
    for j in 0..25 {
        let d: f64 = (0..2).map(|i| (x[i] - foxholes_a(i, j)).powi(6)).sum();
        s += 1.0 / ((j + 1) as f64 + d);
    }
    1.0 / s
}

pub const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
pub const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

pub fn kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_B_INV)
        .map(|(&a, bi)| {
            let b = 1.0 / bi;
            let r = a - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            r * r
        })
        .sum()
}

pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
}

pub fn branin(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (b - 5.1 * a * a / (4.0 * PI * PI) + 5.0 * a / PI - 6.0).powi(2)
        + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
        + 10.0
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let p = 1.0
        + (a + b + 1.0).powi(2)
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let q = 30.0
        + (2.0 * a - 3.0 * b).powi(2)
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    p * q
}

const HARTMANN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

const HARTMANN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMANN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.038150, 0.5743, 0.8828],
];

const HARTMANN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMANN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartmann<const N: usize>(x: &[f64], a: &[[f64; N]; 4], p: &[[f64; N]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let e: f64 = (0..N).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMANN_C[i] * (-e).exp()
        })
        .sum::<f64>()
}

pub fn hartmann3(x: &[f64]) -> f64 {
    hartmann(x, &HARTMANN3_A, &HARTMANN3_P)
}

pub fn hartmann6(x: &[f64]) -> f64 {
    hartmann(x, &HARTMANN6_A, &HARTMANN6_P)
}

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// Shekel family with the first `m` terms.
pub fn shekel(x: &[f64], m: usize) -> f64 {
    -(0..m)
        .map(|i| {
            let d: f64 = (0..4).map(|j| (x[j] - SHEKEL_A[i][j]).powi(2)).sum();
            1.0 / (d + SHEKEL_C[i])
        })
        .sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_optima() {
        let z = vec![0.0; 30];
        for f in [sphere, schwefel_2_22, schwefel_1_2, schwefel_2_21, rastrigin, griewank, quartic] {
            assert_eq!(f(&z), 0.0);
        }
        assert!(ackley(&z).abs() < 1e-15);
        assert_eq!(rosenbrock(&[1.0; 30]), 0.0);
        assert_eq!(step(&[-0.5; 30]), 0.0);
        assert!(penalized_1(&[-1.0; 30]).abs() < 1e-30);
        assert!(penalized_2(&[1.0; 30]).abs() < 1e-30);
    }

    #[test]
    fn rastrigin_unit_vector() {
        let mut x = vec![0.0; 30];
        x[0] = 1.0;
        assert!((rastrigin(&x) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn u_penalty_branches() {
        assert_eq!(u_penalty(12.0, 10.0, 100.0, 4), 100.0 * 16.0);
        assert_eq!(u_penalty(-12.0, 10.0, 100.0, 4), 100.0 * 16.0);
        assert_eq!(u_penalty(3.0, 10.0, 100.0, 4), 0.0);
    }

    #[test]
    fn schwefel_optimum() {
        let x = vec![SCHWEFEL_ARGMIN; 30];
        assert!((schwefel_2_26(&x) - 30.0 * SCHWEFEL_MIN_PER_DIM).abs() < 1e-6);
    }

    #[test]
    fn fixed_dimension_reference_points() {
        assert!((goldstein_price(&[0.0, -1.0]) - 3.0).abs() < 1e-12);
        assert!((branin(&[PI, 2.275]) - 0.397_887_357_729_738).abs() < 1e-9);
        assert!((foxholes(&[-31.978_328_3, -31.978_328_3]) - 0.998_003_837_794_449).abs() < 1e-9);
    }
}
