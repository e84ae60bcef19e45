//! Hybrid composition functions: a Gaussian-weighted blend of shifted,
//! rotated and rescaled base functions with biases `0, 100, …, 900`.

use std::f64::consts::PI;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::classic;
use crate::error::{Error, Result};
use crate::rotation::{generate_orthogonal_matrix, RotationMatrix};

/// Normalized component height.
pub const COMPOSITION_C: f64 = 2000.0;
const COMPONENTS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseFunction {
    Sphere,
    Griewank,
    Ackley,
    Rastrigin,
    Weierstrass,
}

impl BaseFunction {
    pub fn eval(self, z: &[f64]) -> f64 {
        match self {
            Self::Sphere => classic::sphere(z),
            Self::Griewank => classic::griewank(z),
            Self::Ackley => classic::ackley(z),
            Self::Rastrigin => classic::rastrigin(z),
            Self::Weierstrass => weierstrass(z),
        }
    }
}

/// Weierstrass with `a = 0.5, b = 3, k_max = 20`.
pub fn weierstrass(z: &[f64]) -> f64 {
    const A: f64 = 0.5;
    const B: f64 = 3.0;
    const K: i32 = 20;
    let offset: f64 = (0..=K).map(|k| A.powi(k) * (PI * B.powi(k)).cos()).sum();
    let s: f64 = z
        .iter()
        .map(|&v| {
            (0..=K)
                .map(|k| A.powi(k) * (2.0 * PI * B.powi(k) * (v + 0.5)).cos())
                .sum::<f64>()
        })
        .sum();
    s - z.len() as f64 * offset
}

/// Everything needed to assemble a composition function.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositionSpec {
    pub functions: Vec<BaseFunction>,
    pub sigma: Vec<f64>,
    pub lambda: Vec<f64>,
    pub bias: Vec<f64>,
    pub shifts: Vec<Vec<f64>>,
    pub rotations: Vec<RotationMatrix>,
}

impl CompositionSpec {
    /// One of the six standard compositions (`index` 1..=6) on `[−5, 5]^dim`,
    /// shifts and rotations drawn from `rng`.
    pub fn standard<R: Rng + ?Sized>(index: usize, dim: usize, rng: &mut R) -> Result<Self> {
        use BaseFunction::*;
        let ones = vec![1.0; COMPONENTS];
        let mixed = |a, b, c, d, e| vec![a, a, b, b, c, c, d, d, e, e];
        let (functions, sigma, lambda) = match index {
            1 => (vec![Sphere; COMPONENTS], ones.clone(), vec![5.0 / 100.0; COMPONENTS]),
            2 => (vec![Griewank; COMPONENTS], ones.clone(), vec![5.0 / 100.0; COMPONENTS]),
            3 => (vec![Griewank; COMPONENTS], ones.clone(), ones.clone()),
            4 => (
                mixed(Ackley, Rastrigin, Weierstrass, Griewank, Sphere),
                ones.clone(),
                vec![5.0 / 32.0, 5.0 / 32.0, 1.0, 1.0, 5.0 / 0.5, 5.0 / 0.5, 0.05, 0.05, 0.05, 0.05],
            ),
            5 => (
                mixed(Rastrigin, Weierstrass, Griewank, Ackley, Sphere),
                ones.clone(),
                vec![0.2, 0.2, 5.0 / 0.5, 5.0 / 0.5, 0.05, 0.05, 5.0 / 32.0, 5.0 / 32.0, 0.05, 0.05],
            ),
            6 => {
                let sigma: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).collect();
                let base = [0.2, 0.2, 5.0 / 0.5, 5.0 / 0.5, 0.05, 0.05, 5.0 / 32.0, 5.0 / 32.0, 0.05, 0.05];
                let lambda = sigma.iter().zip(base).map(|(s, b)| s * b).collect();
                (mixed(Rastrigin, Weierstrass, Griewank, Ackley, Sphere), sigma, lambda)
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "composition index must be 1..=6, got {index}"
                )))
            }
        };
        let shifts = (0..COMPONENTS)
            .map(|_| (0..dim).map(|_| rng.random_range(-5.0..5.0)).collect())
            .collect();
        let rotations = (0..COMPONENTS)
            .map(|_| generate_orthogonal_matrix(dim, rng))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            functions,
            sigma,
            lambda,
            bias: (0..COMPONENTS).map(|k| 100.0 * k as f64).collect(),
            shifts,
            rotations,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Composition {
    spec: CompositionSpec,
    dim: usize,
    /// `|f_i(M_iᵀ(5/λ_i · 1))|` per component.
    scale: Vec<f64>,
}

/// Validate `spec` and precompute the per-component normalizers.
pub fn build_composition(spec: CompositionSpec) -> Result<Composition> {
    let k = spec.functions.len();
    if k == 0
        || [spec.sigma.len(), spec.lambda.len(), spec.bias.len(), spec.shifts.len(), spec.rotations.len()]
            .iter()
            .any(|&l| l != k)
    {
        return Err(Error::InvalidParameter("composition lists must share one non-zero length".into()));
    }
    if spec.sigma.iter().chain(&spec.lambda).any(|&v| !(v > 0.0 && v.is_finite())) {
        return Err(Error::InvalidParameter("sigma and lambda must be positive".into()));
    }
    let dim = spec.shifts[0].len();
    if dim == 0 {
        return Err(Error::InvalidDimension("composition needs dim >= 1".into()));
    }
    if spec.shifts.iter().any(|o| o.len() != dim) || spec.rotations.iter().any(|m| m.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, got: 0 });
    }
    let scale = (0..k)
        .map(|i| {
            let z = spec.rotations[i].apply_transpose(&vec![5.0 / spec.lambda[i]; dim]);
            spec.functions[i].eval(&z).abs()
        })
        .collect();
    Ok(Composition { spec, dim, scale })
}

impl Composition {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spec(&self) -> &CompositionSpec {
        &self.spec
    }

    /// Normalized blend weights at `x`.
    pub fn weights(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim as f64;
        // Log domain: σ = 0.1 already underflows exp() at moderate distances.
        let logw: Vec<f64> = self
            .spec
            .shifts
            .iter()
            .zip(&self.spec.sigma)
            .map(|(o, s)| {
                let d2: f64 = x.iter().zip(o).map(|(a, b)| (a - b).powi(2)).sum();
                -d2 / (2.0 * n * s * s)
            })
            .collect();
        let top = (0..logw.len())
            .fold(0, |best, i| if logw[i] > logw[best] { i } else { best });
        let damp = (-(10.0 * logw[top]).exp()).ln_1p();
        let adjusted: Vec<f64> = logw
            .iter()
            .enumerate()
            .map(|(i, &l)| if i == top { 0.0 } else { l - logw[top] + damp })
            .collect();
        let total: f64 = adjusted.iter().map(|l| l.exp()).sum();
        adjusted.iter().map(|l| l.exp() / total).collect()
    }

    pub fn component_value(&self, i: usize, x: &[f64]) -> f64 {
        let lambda = self.spec.lambda[i];
        let u: Vec<f64> = x
            .iter()
            .zip(&self.spec.shifts[i])
            .map(|(a, b)| (a - b) / lambda)
            .collect();
        let z = self.spec.rotations[i].apply_transpose(&u);
        COMPOSITION_C * self.spec.functions[i].eval(&z) / self.scale[i]
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.weights(x)
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > 0.0)
            .map(|(i, &w)| w * (self.component_value(i, x) + self.spec.bias[i]))
            .sum()
    }
}
