use serde::Serialize;

use crate::game::{GameTable, Input};

/// Reduced form of a game's entangled success probability:
/// `P = d/16 + (1/16) * sum_xy c_xy * cos 2(theta_x - psi_y)`.
///
/// `c_xy` counts correlated winners (00, 11) minus anti-correlated winners
/// (01, 10) on input `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoefficientProfile {
    pub total: u8,
    /// Indexed by [`Input::index`]: c00, c01, c10, c11.
    pub coefficients: [i8; 4],
}

impl CoefficientProfile {
    pub fn new(total: u8, coefficients: [i8; 4]) -> Self {
        CoefficientProfile { total, coefficients }
    }

    pub fn coefficient(&self, input: Input) -> i8 {
        self.coefficients[input.index()]
    }

    pub fn is_flat(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }
}

pub fn coefficient_profile(game: GameTable) -> CoefficientProfile {
    let coefficients = Input::ALL.map(|input| {
        game.winners(input)
            .iter()
            .map(|o| if o.is_correlated() { 1i8 } else { -1 })
            .sum()
    });
    CoefficientProfile {
        total: game.total_winners() as u8,
        coefficients,
    }
}
