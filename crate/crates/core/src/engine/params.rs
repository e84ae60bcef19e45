use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::SearchSpace;

/// Final perturbation amplitude, either absolute or as a fraction of the box
/// diagonal `‖β − α‖₂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FinalAmplitude {
    Absolute(f64),
    Ratio(f64),
}

/// How excursion targets and alternative rotation centers are drawn from the
/// visible-spot list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SpotSelection {
    #[default]
    Uniform,
    /// Fitness-proportional on `F_worst − F`.
    Roulette,
}

/// Tunables of the optimizer. Defaults are the benchmark settings
/// `n_X=30, γ=6, T=1000, n_Rot=20, n_VS=10, r_A0=0.5, L_A^T=1e-40, r_p=0.1,
/// r_Ex=0.5` with a `1e-8` stopping tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RealParams {
    /// Number of agents `n_X`.
    #[serde(alias = "n_x")]
    pub population: usize,
    /// Half-width of the truncated logistic range.
    pub gamma: f64,
    /// Iteration horizon `T`.
    #[serde(alias = "t")]
    pub iterations: usize,
    #[serde(alias = "n_rot")]
    pub rotation_pool: usize,
    #[serde(alias = "n_vs")]
    pub visible_spots: usize,
    /// `L_A⁰ = r_A0 · ‖β − α‖₂`.
    #[serde(alias = "r_a0")]
    pub initial_amplitude_ratio: f64,
    pub final_amplitude: FinalAmplitude,
    #[serde(alias = "r_p")]
    pub perturbation_rate: f64,
    #[serde(alias = "r_ex")]
    pub excursion_rate: f64,
    /// Stop once `|F(best) − F(worst)|` over a full visible-spot list drops to
    /// this value. `None` always runs the full horizon.
    pub term_tol: Option<f64>,
    pub seed: u64,
    pub spot_selection: SpotSelection,
    /// Record the solution sequence of agent 0.
    pub record_trajectory: bool,
}

impl Default for RealParams {
    fn default() -> Self {
        Self {
            population: 30,
            gamma: 6.0,
            iterations: 1000,
            rotation_pool: 20,
            visible_spots: 10,
            initial_amplitude_ratio: 0.5,
            final_amplitude: FinalAmplitude::Absolute(1e-40),
            perturbation_rate: 0.1,
            excursion_rate: 0.5,
            term_tol: Some(1e-8),
            seed: 0,
            spot_selection: SpotSelection::Uniform,
            record_trajectory: false,
        }
    }
}

impl RealParams {
    /// Sensitivity-study baseline: benchmark values with `T = 500`.
    pub fn sensitivity_baseline() -> Self {
        Self {
            iterations: 500,
            ..Self::default()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Horizon giving an expected budget of about `2.5 · n_X · T` evaluations.
    pub fn iterations_for_budget(population: usize, nfe: usize) -> usize {
        ((nfe as f64) / (2.5 * population as f64)).round().max(1.0) as usize
    }

    pub fn initial_amplitude(&self, space: &SearchSpace) -> f64 {
        self.initial_amplitude_ratio * space.diagonal_norm()
    }

    pub fn final_amplitude_value(&self, space: &SearchSpace) -> f64 {
        match self.final_amplitude {
            FinalAmplitude::Absolute(v) => v,
            FinalAmplitude::Ratio(r) => r * space.diagonal_norm(),
        }
    }

    pub fn validate(&self, space: &SearchSpace) -> Result<()> {
        fn rate(name: &str, v: f64) -> Result<()> {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{name} must lie in [0, 1], got {v}")))
            }
        }
        for (name, v) in [
            ("population", self.population),
            ("iterations", self.iterations),
            ("rotation_pool", self.rotation_pool),
            ("visible_spots", self.visible_spots),
        ] {
            if v == 0 {
                return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
            }
        }
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return Err(Error::InvalidParameter(format!("gamma must be positive, got {}", self.gamma)));
        }
        rate("initial_amplitude_ratio", self.initial_amplitude_ratio)?;
        rate("perturbation_rate", self.perturbation_rate)?;
        rate("excursion_rate", self.excursion_rate)?;
        if let FinalAmplitude::Ratio(r) = self.final_amplitude {
            rate("final amplitude ratio", r)?;
        }
        let (l0, lt) = (self.initial_amplitude(space), self.final_amplitude_value(space));
        if !(lt >= 0.0 && l0 >= lt) {
            return Err(Error::InvalidParameter(format!(
                "amplitudes must satisfy L_A0 >= L_AT >= 0, got {l0} and {lt}"
            )));
        }
        if let Some(tol) = self.term_tol {
            if !(tol >= 0.0) {
                return Err(Error::InvalidParameter(format!("term_tol must be >= 0, got {tol}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let s = SearchSpace::uniform(10, -100.0, 100.0).unwrap();
        RealParams::default().validate(&s).unwrap();
        let l0 = RealParams::default().initial_amplitude(&s);
        assert!((l0 - 316.227766016838).abs() < 1e-9);
    }

    #[test]
    fn rejects_out_of_range_values() {
        let s = SearchSpace::uniform(2, 0.0, 1.0).unwrap();
        let bad = [
            RealParams { population: 0, ..Default::default() },
            RealParams { iterations: 0, ..Default::default() },
            RealParams { perturbation_rate: 1.5, ..Default::default() },
            RealParams { gamma: 0.0, ..Default::default() },
            RealParams { final_amplitude: FinalAmplitude::Absolute(10.0), ..Default::default() },
        ];
        for p in bad {
            assert!(p.validate(&s).is_err(), "{p:?}");
        }
    }

    #[test]
    fn budget_to_iterations() {
        assert_eq!(RealParams::iterations_for_budget(30, 1200), 16);
        assert_eq!(RealParams::iterations_for_budget(30, 32000), 427);
        assert_eq!(RealParams::iterations_for_budget(30, 37500), 500);
    }

    #[test]
    fn short_aliases_deserialize() {
        let p: RealParams = serde_json::from_str(r#"{"n_x": 12, "r_ex": 0.25}"#).unwrap();
        assert_eq!(p.population, 12);
        assert_eq!(p.excursion_rate, 0.25);
        assert_eq!(p.iterations, 1000);
    }
}
