//! Everything known about a single game, in one value.

use crate::anf::{to_anf, AnfPolynomial};
use crate::classical::{classical_max, ClassicalResult};
use crate::game::{GameTable, Partition};
use crate::quantum::{analytic_family_max, coefficient_profile, AnalyticSolution, QuantumValues};

#[derive(Clone, Debug, PartialEq)]
pub struct GameAnalysis {
    pub game: GameTable,
    pub anf: AnfPolynomial,
    pub partition: Partition,
    pub admissible: bool,
    pub inconsistent: bool,
    pub classical: ClassicalResult,
    pub family: AnalyticSolution,
    pub values: QuantumValues,
}

impl GameAnalysis {
    pub fn separation(&self) -> f64 {
        self.values.separation()
    }
}

pub fn analyze(game: GameTable) -> GameAnalysis {
    let classical = classical_max(game);
    let family = analytic_family_max(&coefficient_profile(game));
    GameAnalysis {
        game,
        anf: to_anf(game),
        partition: game.partition(),
        admissible: game.is_admissible(),
        inconsistent: game.has_inconsistent_pair(),
        values: QuantumValues::new(family.value, classical.max_probability),
        classical,
        family,
    }
}
