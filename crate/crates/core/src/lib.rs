//! Exhaustive analysis of binary-input binary-output two-party nonlocal games.
//!
//! Every game is a 16-bit win table ([`GameTable`]). For each one the crate
//! computes the exact classical optimum over the 16 deterministic strategies
//! and the exact maximum over a fixed entangled family (one shared Bell state,
//! each player measuring in a real basis rotated by an input-dependent angle).
//! [`scan`] sweeps all games and groups them by partition, and
//! [`simulate`] replays strategies as a seeded Monte Carlo referee.

pub mod analysis;
pub mod anf;
pub mod census;
pub mod classical;
pub mod error;
pub mod game;
pub mod quantum;
pub mod report;
pub mod scan;
pub mod simulate;

pub use analysis::{analyze, GameAnalysis};
pub use anf::{from_anf, to_anf, AnfPolynomial, Monomial};
pub use classical::{
    classical_max, evaluate_strategy, group_of, strategies_winning_both, ClassicalResult, JointStrategy,
    PlayerRule, Quarters, StrategyGroup,
};
pub use error::{Error, Result};
pub use game::{enumerate_games, GameFilter, GameTable, Input, Outcome, Partition, WinnerSet};
pub use quantum::{
    analytic_family_max, coefficient_profile, joint_distribution, numeric_family_max, quantum_max,
    recover_optimal_angles, success_probability, AnalyticSolution, AngleSet, CoefficientProfile,
    QuantumValues,
};
