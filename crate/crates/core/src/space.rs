//! Box-bounded search spaces with optional discrete grids per dimension.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a single coordinate may vary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableKind {
    Continuous,
    /// Sorted list of admissible values.
    Discrete(Vec<f64>),
}

/// Bounds and kind of one coordinate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dimension {
    pub lower: f64,
    pub upper: f64,
    pub kind: VariableKind,
}

impl Dimension {
    pub fn continuous(lower: f64, upper: f64) -> Result<Self> {
        if !(lower.is_finite() && upper.is_finite() && lower < upper) {
            return Err(Error::InvalidSpace(format!(
                "bounds must satisfy lower < upper, got [{lower}, {upper}]"
            )));
        }
        Ok(Self {
            lower,
            upper,
            kind: VariableKind::Continuous,
        })
    }

    /// Discrete coordinate; the bounds are the first and last grid values.
    pub fn discrete(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidSpace(
                "a discrete grid needs at least two values".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidSpace("discrete grid values must be finite".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpace(
                "discrete grid must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            lower: values[0],
            upper: values[values.len() - 1],
            kind: VariableKind::Discrete(values),
        })
    }

    /// Evenly spaced integer-like grid `start, start + step, ..., end`.
    pub fn stepped(start: f64, end: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) || end <= start {
            return Err(Error::InvalidSpace(format!(
                "invalid stepped grid {start}..{end} by {step}"
            )));
        }
        let count = ((end - start) / step).round() as usize + 1;
        let values = (0..count).map(|k| start + step * k as f64).collect();
        Self::discrete(values)
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self.kind, VariableKind::Discrete(_))
    }

    pub fn grid(&self) -> Option<&[f64]> {
        match &self.kind {
            VariableKind::Discrete(values) => Some(values),
            VariableKind::Continuous => None,
        }
    }

    pub fn clamp(&self, value: f64) -> f64 {
        if value < self.lower {
            self.lower
        } else if value > self.upper {
            self.upper
        } else {
            value
        }
    }
}

/// Replace `value` by the nearest grid entry. An exact midpoint goes to the
/// upper neighbour.
pub fn snap_to_grid(grid: &[f64], value: f64) -> f64 {
    let j = grid.partition_point(|&g| g < value);
    if j == 0 {
        return grid[0];
    }
    if j == grid.len() {
        return grid[grid.len() - 1];
    }
    let (lo, hi) = (grid[j - 1], grid[j]);
    if value - lo < hi - value {
        lo
    } else {
        hi
    }
}

/// Per-dimension bounds `[α, β]` plus variable kinds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    dims: Vec<Dimension>,
}

impl SearchSpace {
    pub fn new(dims: Vec<Dimension>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidDimension(
                "search space needs at least one dimension".into(),
            ));
        }
        for d in &dims {
            if !(d.lower < d.upper) {
                return Err(Error::InvalidSpace(format!(
                    "bounds must satisfy lower < upper, got [{}, {}]",
                    d.lower, d.upper
                )));
            }
            if let Some(grid) = d.grid() {
                if grid.len() < 2
                    || grid.windows(2).any(|w| w[0] >= w[1])
                    || grid[0] < d.lower
                    || grid[grid.len() - 1] > d.upper
                {
                    return Err(Error::InvalidSpace(
                        "discrete grid must be sorted, inside the bounds and have two or more values"
                            .into(),
                    ));
                }
            }
        }
        Ok(Self { dims })
    }

    /// `n` identical continuous coordinates on `[lower, upper]`.
    pub fn uniform(n: usize, lower: f64, upper: f64) -> Result<Self> {
        let dim = Dimension::continuous(lower, upper)?;
        Self::new(vec![dim; n])
    }

    pub fn from_bounds(bounds: &[(f64, f64)]) -> Result<Self> {
        let dims = bounds
            .iter()
            .map(|&(lo, hi)| Dimension::continuous(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dims)
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn dimensions(&self) -> &[Dimension] {
        &self.dims
    }

    pub fn lower(&self) -> Vec<f64> {
        self.dims.iter().map(|d| d.lower).collect()
    }

    pub fn upper(&self) -> Vec<f64> {
        self.dims.iter().map(|d| d.upper).collect()
    }

    /// Midpoint `(α + β) / 2` of the box.
    pub fn center(&self) -> Vec<f64> {
        self.dims.iter().map(|d| 0.5 * (d.lower + d.upper)).collect()
    }

    /// Euclidean length `‖β − α‖₂` of the box diagonal.
    pub fn diagonal_norm(&self) -> f64 {
        self.dims
            .iter()
            .map(|d| (d.upper - d.lower).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn has_discrete(&self) -> bool {
        self.dims.iter().any(Dimension::is_discrete)
    }

    pub fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.dims.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dims.len(),
                got: len,
            });
        }
        Ok(())
    }

    /// First coordinate outside `[α, β]`, as an error.
    pub fn check_inside(&self, x: &[f64]) -> Result<()> {
        self.check_dim(x.len())?;
        for (index, (d, &value)) in self.dims.iter().zip(x).enumerate() {
            if !(value >= d.lower && value <= d.upper) {
                return Err(Error::OutOfBounds {
                    index,
                    value,
                    lower: d.lower,
                    upper: d.upper,
                });
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.check_inside(x).is_ok()
    }

    /// Inside the bounds and, for discrete coordinates, exactly on the grid.
    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.contains(x)
            && self.dims.iter().zip(x).all(|(d, &v)| match d.grid() {
                Some(grid) => grid.contains(&v),
                None => true,
            })
    }

    /// Closed-interval clamp of every coordinate.
    pub fn project(&self, x: &[f64]) -> Vec<f64> {
        let mut out = x.to_vec();
        self.project_in_place(&mut out);
        out
    }

    pub fn project_in_place(&self, x: &mut [f64]) {
        for (d, v) in self.dims.iter().zip(x.iter_mut()) {
            *v = d.clamp(*v);
        }
    }

    /// Snap discrete coordinates to their nearest grid value; continuous
    /// coordinates are left alone.
    pub fn snap_discrete(&self, x: &[f64]) -> Vec<f64> {
        let mut out = x.to_vec();
        self.snap_in_place(&mut out);
        out
    }

    pub fn snap_in_place(&self, x: &mut [f64]) {
        for (d, v) in self.dims.iter().zip(x.iter_mut()) {
            if let Some(grid) = d.grid() {
                *v = snap_to_grid(grid, *v);
            }
        }
    }

    /// Uniform draw in the box, discrete coordinates snapped.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let mut x: Vec<f64> = self
            .dims
            .iter()
            .map(|d| d.lower + (d.upper - d.lower) * rng.random::<f64>())
            .collect();
        self.snap_in_place(&mut x);
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn project_clamps_each_coordinate() {
        let s = SearchSpace::uniform(3, -100.0, 100.0).unwrap();
        assert_eq!(s.project(&[-150.0, 42.0, 100.0000001]), vec![-100.0, 42.0, 100.0]);
    }

    #[test]
    fn project_is_idempotent() {
        let s = SearchSpace::from_bounds(&[(0.0, 1.0), (-3.0, 2.0)]).unwrap();
        let once = s.project(&[5.0, -7.0]);
        assert_eq!(s.project(&once), once);
    }

    #[test]
    fn snap_picks_nearest_and_breaks_ties_upward() {
        let grid = [4.1, 7.7];
        assert_eq!(snap_to_grid(&grid, 5.0), 4.1);
        assert_eq!(snap_to_grid(&grid, 5.9), 7.7);
        assert_eq!(snap_to_grid(&grid, 1.0), 4.1);
        assert_eq!(snap_to_grid(&grid, 9.0), 7.7);

        let ints: Vec<f64> = (2..=9).map(f64::from).collect();
        assert_eq!(snap_to_grid(&ints, 2.0), 2.0);
        assert_eq!(snap_to_grid(&ints, 6.5), 7.0);
        assert_eq!(snap_to_grid(&ints, 6.49), 6.0);
    }

    #[test]
    fn center_and_diagonal() {
        let s = SearchSpace::uniform(10, -100.0, 100.0).unwrap();
        assert!(s.center().iter().all(|&c| c == 0.0));
        assert!((s.diagonal_norm() - 632.4555320336759).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_spaces() {
        assert!(Dimension::continuous(1.0, 1.0).is_err());
        assert!(Dimension::discrete(vec![1.0]).is_err());
        assert!(Dimension::discrete(vec![2.0, 1.0]).is_err());
        assert!(SearchSpace::new(vec![]).is_err());
    }

    #[test]
    fn stepped_grid_has_expected_length() {
        let d = Dimension::stepped(600.0, 1000.0, 10.0).unwrap();
        assert_eq!(d.grid().unwrap().len(), 41);
        assert_eq!((d.lower, d.upper), (600.0, 1000.0));
    }

    #[test]
    fn samples_are_feasible() {
        use rand::SeedableRng;
        let s = SearchSpace::new(vec![
            Dimension::continuous(-1.0, 1.0).unwrap(),
            Dimension::stepped(2.0, 9.0, 1.0).unwrap(),
        ])
        .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            assert!(s.is_feasible(&s.sample(&mut rng)));
        }
    }
}
