//! Direct numerical maximization of the success probability.
//!
//! This path never uses the coefficient profile or the norm bound; it only
//! evaluates outcome probabilities, so it serves as an oracle for
//! [`super::analytic_family_max`].

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::game::{GameTable, Input};

use super::distribution::{input_win_probability, success_probability};
use super::optimize::golden_section_max;
use super::AngleSet;

/// Coordinate-descent cycles before giving up on further refinement.
const MAX_CYCLES: usize = 10_000;
/// Bracket width at which a single golden-section line search stops.
const LINE_TOLERANCE: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericSolution {
    pub value: f64,
    pub angles: AngleSet,
}

/// Grid search over `(theta1, psi0, psi1) in [0, pi)^3` with `theta0 = 0`,
/// followed by cyclic coordinate ascent with golden-section line searches
/// until a full cycle improves the value by less than `refine_tol`.
pub fn numeric_family_max(game: GameTable, grid_steps: usize, refine_tol: f64) -> Result<NumericSolution> {
    if grid_steps < 8 {
        return Err(Error::InvalidParameter(format!(
            "grid_steps must be at least 8, got {grid_steps}"
        )));
    }
    if !(refine_tol > 0.0 && refine_tol.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "refine_tol must be positive, got {refine_tol}"
        )));
    }

    let start = grid_search(game, grid_steps);
    let spacing = PI / grid_steps as f64;
    let objective = |c: [f64; 3]| success_probability(game, &AngleSet::new(0.0, c[0], c[1], c[2]));

    let mut coords = start;
    let mut value = objective(coords);
    for _ in 0..MAX_CYCLES {
        let before = value;
        for k in 0..3 {
            let centre = coords[k];
            let (best, best_value) = golden_section_max(
                |v| {
                    let mut trial = coords;
                    trial[k] = v;
                    objective(trial)
                },
                centre - spacing,
                centre + spacing,
                LINE_TOLERANCE,
            );
            if best_value > value {
                coords[k] = best;
                value = best_value;
            }
        }
        if value - before < refine_tol {
            break;
        }
    }

    let angles = AngleSet::new(0.0, coords[0], coords[1], coords[2]).gauge_fixed();
    Ok(NumericSolution {
        value: success_probability(game, &angles),
        angles,
    })
}

/// Best grid point. The objective splits as
/// `[T00(-psi0) + T10(theta1 - psi0)] + [T01(-psi1) + T11(theta1 - psi1)]`,
/// so for each `theta1` the two Bob angles are maximized independently; the
/// result is the maximum over the full `grid_steps^3` grid.
fn grid_search(game: GameTable, steps: usize) -> [f64; 3] {
    let spacing = PI / steps as f64;
    // Success terms are pi-periodic in the angle difference, so one table per
    // input indexed by the difference in grid units covers every grid point.
    let tables: Vec<Vec<f64>> = Input::ALL
        .iter()
        .map(|&input| {
            (0..steps)
                .map(|k| input_win_probability(game, input, k as f64 * spacing))
                .collect()
        })
        .collect();
    let term = |input: usize, diff: isize| tables[input][diff.rem_euclid(steps as isize) as usize];

    let best_bob = |i: isize, low: usize, high: usize| {
        (0..steps as isize)
            .map(|j| (j, term(low, -j) + term(high, i - j)))
            .fold((0, f64::NEG_INFINITY), |best, cand| if cand.1 > best.1 { cand } else { best })
    };

    let mut best = (f64::NEG_INFINITY, [0.0; 3]);
    for i in 0..steps as isize {
        // Bob's input 0 pairs with inputs 00 and 10; input 1 with 01 and 11.
        let (j0, v0) = best_bob(i, 0, 2);
        let (j1, v1) = best_bob(i, 1, 3);
        let total = v0 + v1;
        if total > best.0 {
            best = (total, [i as f64 * spacing, j0 as f64 * spacing, j1 as f64 * spacing]);
        }
    }
    best.1
}
