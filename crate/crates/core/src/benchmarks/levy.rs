use std::f64::consts::PI;

use crate::engine::{stream_rng, streams};
use crate::error::{Error, Result};
use crate::rotation::{generate_orthogonal_matrix, RotationMatrix};

pub const LEVY_OFFSET: f64 = 900.0;
pub const LEVY_BOUND: f64 = 100.0;

/// Levy function with `wᵢ = 1 + (xᵢ − 1)/4`; zero at the all-ones vector.
pub fn levy(x: &[f64]) -> f64 {
    let w: Vec<f64> = x.iter().map(|v| 1.0 + (v - 1.0) / 4.0).collect();
    let d = w.len();
    let mut s = (PI * w[0]).sin().powi(2);
    for wi in &w[..d - 1] {
        s += (wi - 1.0).powi(2) * (1.0 + 10.0 * (PI * wi + 1.0).sin().powi(2));
    }
    s + (w[d - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * w[d - 1]).sin().powi(2))
}

/// `F(x) = levy(M · 5.12(x − 0.5)/100) + 900` on `[−100, 100]^D`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedRotatedLevy {
    rotation: RotationMatrix,
}

/// Instance whose rotation is drawn from `seed`.
pub fn build_levy_sr(dim: usize, seed: u64) -> Result<ShiftedRotatedLevy> {
    if dim == 0 {
        return Err(Error::InvalidDimension("Levy instance needs dim >= 1".into()));
    }
    let mut rng = stream_rng(seed, streams::INSTANCE);
    Ok(ShiftedRotatedLevy {
        rotation: generate_orthogonal_matrix(dim, &mut rng)?,
    })
}

impl ShiftedRotatedLevy {
    pub fn with_rotation(rotation: RotationMatrix) -> Self {
        Self { rotation }
    }

    pub fn dim(&self) -> usize {
        self.rotation.dim()
    }

    pub fn rotation(&self) -> &RotationMatrix {
        &self.rotation
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let u: Vec<f64> = x.iter().map(|v| 5.12 * (v - 0.5) / 100.0).collect();
        levy(&self.rotation.apply(&u)) + LEVY_OFFSET
    }
}
