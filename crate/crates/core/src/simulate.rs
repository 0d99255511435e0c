//! Seeded Monte Carlo referee.
//!
//! Every round draws `(x, y)` uniformly, collects the players' answers and
//! checks them against the win table. The generator is ChaCha8 seeded through
//! `seed_from_u64`, so a given seed yields the same report on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classical::{evaluate_strategy, JointStrategy};
use crate::error::{Error, Result};
use crate::game::{GameTable, Input, Outcome};
use crate::quantum::{joint_distribution, success_probability, AngleSet};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SimulationMode {
    Classical(JointStrategy),
    Quantum(AngleSet),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimulationConfig {
    pub game: GameTable,
    pub mode: SimulationMode,
    pub rounds: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    pub wins: u64,
    pub rounds: u64,
    pub empirical_rate: f64,
    pub expected_rate: f64,
    pub standard_error: f64,
    pub z_score: f64,
}

impl SimulationConfig {
    pub fn expected_rate(&self) -> f64 {
        match self.mode {
            SimulationMode::Classical(s) => evaluate_strategy(self.game, s).value(),
            SimulationMode::Quantum(angles) => success_probability(self.game, &angles),
        }
    }
}

fn sample_outcome(rng: &mut ChaCha8Rng, probabilities: [f64; 4]) -> Outcome {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (o, p) in Outcome::ALL.into_iter().zip(probabilities) {
        acc += p;
        if u < acc {
            return o;
        }
    }
    // u landed in the rounding gap above the cumulative sum.
    Outcome::ALL[3]
}

pub fn run(config: &SimulationConfig) -> Result<SimulationReport> {
    if config.rounds == 0 {
        return Err(Error::InvalidParameter("rounds must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let game = config.game;

    let wins = match config.mode {
        SimulationMode::Classical(s) => (0..config.rounds)
            .filter(|_| {
                let input = Input::ALL[rng.random_range(0..4)];
                game.wins(input, s.respond(input))
            })
            .count() as u64,
        SimulationMode::Quantum(angles) => {
            let dists = Input::ALL.map(|i| joint_distribution(&angles, i).probabilities());
            (0..config.rounds)
                .filter(|_| {
                    let k = rng.random_range(0..4);
                    let outcome = sample_outcome(&mut rng, dists[k]);
                    game.wins(Input::ALL[k], outcome)
                })
                .count() as u64
        }
    };

    let rounds = config.rounds as f64;
    let expected_rate = config.expected_rate();
    let empirical_rate = wins as f64 / rounds;
    let standard_error = (expected_rate * (1.0 - expected_rate) / rounds).sqrt();
    let z_score = if standard_error > 0.0 {
        (empirical_rate - expected_rate) / standard_error
    } else {
        0.0
    };
    Ok(SimulationReport {
        wins,
        rounds: config.rounds,
        empirical_rate,
        expected_rate,
        standard_error,
        z_score,
    })
}
