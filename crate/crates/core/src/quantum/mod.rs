//! Success probabilities for players sharing one Bell state and measuring in
//! input-dependent rotated real bases, and the maximum over that family.
//!
//! The family maximum is not claimed to be the optimum over all quantum
//! strategies. What gets reported as the quantum value is
//! `max(family, classical)`, since any deterministic strategy can be played
//! without using the shared state.

mod analytic;
mod angles;
mod distribution;
mod numeric;
mod optimize;
mod profile;

pub use analytic::{
    analytic_family_max, family_gain, family_value_at, optimal_inner_product,
    optimal_inner_product_by_search, recover_optimal_angles, AnalyticSolution,
};
pub use angles::{format_angle, parse_angle, AngleSet};
pub use distribution::{input_win_probability, joint_distribution, success_probability, JointDistribution};
pub use numeric::{numeric_family_max, NumericSolution};
pub use optimize::golden_section_max;
pub use profile::{coefficient_profile, CoefficientProfile};

use crate::classical::{classical_max, Quarters};
use crate::game::GameTable;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuantumValues {
    /// `max(family, classical)`.
    pub reported: f64,
    pub family: f64,
    pub classical: Quarters,
}

impl QuantumValues {
    pub fn new(family: f64, classical: Quarters) -> Self {
        QuantumValues {
            reported: family.max(classical.value()),
            family,
            classical,
        }
    }

    /// How far the family beats every classical strategy; zero otherwise.
    pub fn separation(&self) -> f64 {
        (self.family - self.classical.value()).max(0.0)
    }
}

pub fn quantum_max(game: GameTable) -> QuantumValues {
    let family = analytic_family_max(&coefficient_profile(game)).value;
    QuantumValues::new(family, classical_max(game).max_probability)
}
