//! Random orthogonal matrices and the normalized-space rotation operator.
//!
//! A point `x` is mapped about a center `c` into `[-1, 1]ⁿ` with per-axis
//! radii `rᵢ = max(βᵢ − cᵢ, cᵢ − αᵢ)`, multiplied by an orthogonal matrix,
//! mapped back and clamped into the box:
//!
//! ```text
//! x' = Π[α,β]( I_r · M · I_r⁻¹ · (x − c) + c )
//! ```

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::SearchSpace;

/// Column norms below this are treated as a degenerate draw and redrawn.
const DEGENERATE_NORM: f64 = 1e-12;

/// Dense orthogonal `n × n` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RotationMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RotationMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self { n, data }
    }

    /// Wrap row-major entries. Orthogonality is checked to `1e-10`.
    pub fn from_rows(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(Error::InvalidDimension(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        let m = Self { n, data };
        let err = m.orthogonality_error();
        if !(err < 1e-10) {
            return Err(Error::InvalidParameter(format!(
                "matrix is not orthogonal (max |MᵀM − I| = {err:e})"
            )));
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.n)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// `out = M · z`.
    pub fn apply_into(&self, z: &[f64], out: &mut [f64]) {
        debug_assert_eq!(z.len(), self.n);
        for (o, row) in out.iter_mut().zip(self.rows()) {
            *o = row.iter().zip(z).map(|(a, b)| a * b).sum();
        }
    }

    pub fn apply(&self, z: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        self.apply_into(z, &mut out);
        out
    }

    /// `out = Mᵀ · z`.
    pub fn apply_transpose(&self, z: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for (row, &zi) in self.rows().zip(z) {
            for (o, &m) in out.iter_mut().zip(row) {
                *o += m * zi;
            }
        }
        out
    }

    /// Max-norm of `MᵀM − I`.
    pub fn orthogonality_error(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|k| self.get(k, i) * self.get(k, j)).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Draw a random orthogonal matrix: Gaussian entries, columns orthonormalized
/// by modified Gram–Schmidt with one re-orthogonalization pass. Both
/// determinant signs occur.
pub fn generate_orthogonal_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<RotationMatrix> {
    if n == 0 {
        return Err(Error::InvalidDimension("rotation dimension must be at least 1".into()));
    }
    // Columns stored contiguously while orthonormalizing.
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        for _pass in 0..2 {
            for q in &cols {
                let proj: f64 = q.iter().zip(&v).map(|(a, b)| a * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= proj * qi;
                }
            }
        }
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm < DEGENERATE_NORM {
            continue;
        }
        v.iter_mut().for_each(|a| *a /= norm);
        cols.push(v);
    }
    let mut data = vec![0.0; n * n];
    for (j, col) in cols.iter().enumerate() {
        for (i, &value) in col.iter().enumerate() {
            data[i * n + j] = value;
        }
    }
    Ok(RotationMatrix { n, data })
}

/// Pre-generated matrices shared by every agent during a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RotationPool {
    dimension: usize,
    matrices: Vec<RotationMatrix>,
}

impl RotationPool {
    pub fn generate<R: Rng + ?Sized>(dimension: usize, size: usize, rng: &mut R) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidParameter("rotation pool size must be at least 1".into()));
        }
        let matrices = (0..size)
            .map(|_| generate_orthogonal_matrix(dimension, rng))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dimension, matrices })
    }

    pub fn from_matrices(matrices: Vec<RotationMatrix>) -> Result<Self> {
        let dimension = matrices
            .first()
            .map(RotationMatrix::dim)
            .ok_or_else(|| Error::InvalidParameter("rotation pool must not be empty".into()))?;
        if matrices.iter().any(|m| m.dim() != dimension) {
            return Err(Error::InvalidDimension("pool matrices differ in dimension".into()));
        }
        Ok(Self { dimension, matrices })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn get(&self, index: usize) -> &RotationMatrix {
        &self.matrices[index]
    }

    pub fn choose<R: Rng + ?Sized>(&self, rng: &mut R) -> &RotationMatrix {
        &self.matrices[rng.random_range(0..self.matrices.len())]
    }

    pub fn iter(&self) -> impl Iterator<Item = &RotationMatrix> {
        self.matrices.iter()
    }
}

/// Per-axis radius `rᵢ = max(βᵢ − cᵢ, cᵢ − αᵢ)` about `center`.
pub fn radius(center: &[f64], space: &SearchSpace) -> Result<Vec<f64>> {
    space.check_inside(center)?;
    Ok(space
        .dimensions()
        .iter()
        .zip(center)
        .map(|(d, &c)| (d.upper - c).max(c - d.lower))
        .collect())
}

/// `z = (x − c) / r`.
pub fn normalize(x: &[f64], center: &[f64], radius: &[f64]) -> Vec<f64> {
    x.iter()
        .zip(center)
        .zip(radius)
        .map(|((&xi, &ci), &ri)| (xi - ci) / ri)
        .collect()
}

/// Inverse of [`normalize`]: `x = z·r + c`.
pub fn denormalize(z: &[f64], center: &[f64], radius: &[f64]) -> Vec<f64> {
    z.iter()
        .zip(center)
        .zip(radius)
        .map(|((&zi, &ci), &ri)| zi * ri + ci)
        .collect()
}

/// Rotate `x` about `center` in normalized coordinates and clamp into the box.
pub fn rotate(
    x: &[f64],
    matrix: &RotationMatrix,
    center: &[f64],
    space: &SearchSpace,
) -> Result<Vec<f64>> {
    let n = space.dim();
    space.check_dim(x.len())?;
    if matrix.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: matrix.dim(),
        });
    }
    space.check_inside(x)?;
    let r = radius(center, space)?;
    let u: Vec<f64> = x.iter().zip(center).map(|(a, b)| a - b).collect();
    let z: Vec<f64> = u.iter().zip(&r).map(|(a, b)| a / b).collect();
    // c + r∘(M z), written as x + (r∘(M z) − u) with the diagonal term taken
    // on u directly so that the identity matrix reproduces x bit for bit.
    let mut out: Vec<f64> = (0..n)
        .map(|i| {
            let row = &matrix.as_slice()[i * n..(i + 1) * n];
            let off: f64 = (0..n).filter(|&j| j != i).map(|j| row[j] * z[j]).sum();
            let image = row[i] * u[i] + r[i] * off;
            x[i] + (image - u[i])
        })
        .collect();
    space.project_in_place(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn quarter_turn() -> RotationMatrix {
        RotationMatrix::from_rows(2, vec![0.0, -1.0, 1.0, 0.0]).unwrap()
    }

    #[test]
    fn one_by_one_is_plus_or_minus_one() {
        let mut seen = [false, false];
        for seed in 0..32 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = generate_orthogonal_matrix(1, &mut rng).unwrap();
            let v = m.get(0, 0);
            assert!(v == 1.0 || v == -1.0, "{v}");
            seen[(v > 0.0) as usize] = true;
        }
        assert!(seen[0] && seen[1]);
    }

    #[test]
    fn zero_dimension_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            generate_orthogonal_matrix(0, &mut rng),
            Err(Error::InvalidDimension(_))
        ));
    }

    #[test]
    fn ten_dimensional_matrix_is_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = generate_orthogonal_matrix(10, &mut rng).unwrap();
        assert!(m.orthogonality_error() < 1e-10);
    }

    #[test]
    fn different_streams_give_different_matrices() {
        let a = generate_orthogonal_matrix(4, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let b = generate_orthogonal_matrix(4, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn radius_examples() {
        let s = SearchSpace::uniform(1, -100.0, 100.0).unwrap();
        assert_eq!(radius(&[0.0], &s).unwrap(), vec![100.0]);
        assert_eq!(radius(&[50.0], &s).unwrap(), vec![150.0]);
        let unit = SearchSpace::uniform(1, 0.0, 1.0).unwrap();
        assert_eq!(radius(&[1.0], &unit).unwrap(), vec![1.0]);
        assert!(matches!(radius(&[1.5], &unit), Err(Error::OutOfBounds { .. })));
    }

    #[test]
    fn quarter_turn_about_origin() {
        let s = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let out = rotate(&[0.5, 0.0], &quarter_turn(), &[0.0, 0.0], &s).unwrap();
        assert!((out[0] - 0.0).abs() < 1e-15 && (out[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn quarter_turn_off_center_and_clamped() {
        let s = SearchSpace::uniform(2, 0.0, 2.0).unwrap();
        let c = [0.5, 0.5];
        // z = (1.5, 0)/1.5 = (1, 0) → (0, 1) → (0.5, 2.0)
        let out = rotate(&[2.0, 0.5], &quarter_turn(), &c, &s).unwrap();
        assert!((out[0] - 0.5).abs() < 1e-12 && (out[1] - 2.0).abs() < 1e-12);
        // z = (1, 1) → (−1, 1) → (−1.0, 2.0), clamped to (0, 2)
        let out = rotate(&[2.0, 2.0], &quarter_turn(), &c, &s).unwrap();
        assert_eq!(out, vec![0.0, 2.0]);
    }

    #[test]
    fn identity_rotation_is_exact() {
        let s = SearchSpace::from_bounds(&[(-3.0, 7.0), (0.0, 1.0), (10.0, 11.0)]).unwrap();
        let x = [1.25, 0.3, 10.9];
        let out = rotate(&x, &RotationMatrix::identity(3), &[6.0, 0.9, 10.1], &s).unwrap();
        assert_eq!(out, x.to_vec());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let s = SearchSpace::uniform(3, -1.0, 1.0).unwrap();
        let err = rotate(&[0.0; 3], &quarter_turn(), &[0.0; 3], &s).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        let err = rotate(&[0.0; 2], &RotationMatrix::identity(3), &[0.0; 3], &s).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn pool_has_requested_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let pool = RotationPool::generate(6, 20, &mut rng).unwrap();
        assert_eq!(pool.len(), 20);
        assert!(pool.iter().all(|m| m.dim() == 6));
    }
}
