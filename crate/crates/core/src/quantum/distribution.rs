//! Outcome statistics when both players measure one shared Bell state
//! `(|00> + |11>)/sqrt(2)` in real bases rotated by their input's angle.

use std::ops::Index;

use crate::game::{GameTable, Input, Outcome};

use super::AngleSet;

/// Joint outcome probabilities for one input, indexed by [`Outcome`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JointDistribution {
    probabilities: [f64; 4],
}

impl JointDistribution {
    /// Distribution for the angle difference `theta_x - psi_y`.
    pub fn for_difference(delta: f64) -> Self {
        let same = 0.5 * delta.cos().powi(2);
        let differ = 0.5 * delta.sin().powi(2);
        JointDistribution {
            probabilities: [same, differ, differ, same],
        }
    }

    pub fn probabilities(&self) -> [f64; 4] {
        self.probabilities
    }
}

impl Index<Outcome> for JointDistribution {
    type Output = f64;

    fn index(&self, outcome: Outcome) -> &f64 {
        &self.probabilities[outcome.index()]
    }
}

pub fn joint_distribution(angles: &AngleSet, input: Input) -> JointDistribution {
    JointDistribution::for_difference(angles.difference(input.x, input.y))
}

/// Probability of answering a winning outcome on `input` when the players'
/// angle difference for that input is `delta`.
pub fn input_win_probability(game: GameTable, input: Input, delta: f64) -> f64 {
    let dist = JointDistribution::for_difference(delta);
    game.winners(input).iter().map(|o| dist[o]).sum()
}

/// Success probability with each input equally likely.
pub fn success_probability(game: GameTable, angles: &AngleSet) -> f64 {
    Input::ALL
        .iter()
        .map(|&i| input_win_probability(game, i, angles.difference(i.x, i.y)))
        .sum::<f64>()
        / 4.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    /// Amplitude of outcome (a, b) after measuring the Bell state in the
    /// rotated bases: basis vector 0 at angle t is (cos t, sin t), basis
    /// vector 1 is (-sin t, cos t).
    fn bell_amplitude(theta: f64, psi: f64, outcome: Outcome) -> f64 {
        let basis = |t: f64, bit: u8| {
            if bit == 0 { (t.cos(), t.sin()) } else { (-t.sin(), t.cos()) }
        };
        let (a0, a1) = basis(theta, outcome.a);
        let (b0, b1) = basis(psi, outcome.b);
        FRAC_1_SQRT_2 * (a0 * b0 + a1 * b1)
    }

    #[test]
    fn examples() {
        let p = JointDistribution::for_difference(0.0).probabilities();
        assert_eq!(p, [0.5, 0.0, 0.0, 0.5]);
        let p = JointDistribution::for_difference(PI / 4.0).probabilities();
        for v in p {
            close(v, 0.25, 1e-15);
        }
        let p = JointDistribution::for_difference(PI / 8.0).probabilities();
        let angles = AngleSet::new(PI / 8.0, 0.0, 0.0, 0.0);
        for o in Outcome::ALL {
            let amp = bell_amplitude(angles.theta0, angles.psi0, o);
            close(p[o.index()], amp * amp, 1e-12);
        }
        close(p[0], 0.42678, 1e-5);
        close(p[1], 0.07322, 1e-5);
    }

    #[test]
    fn chsh_at_reference_angles() {
        let angles = AngleSet::new(0.0, PI / 4.0, PI / 8.0, 7.0 * PI / 8.0);
        close(success_probability(GameTable::CHSH, &angles), (PI / 8.0).cos().powi(2), 1e-12);
    }

    #[test]
    fn all_winning_is_certain() {
        let angles = AngleSet::new(0.1, 0.7, 2.2, -0.4);
        close(success_probability(GameTable::from_mask(0xFFFF), &angles), 1.0, 1e-15);
    }

    proptest! {
        #[test]
        fn distribution_is_normalized(theta in -7.0f64..7.0, psi in -7.0f64..7.0) {
            let angles = AngleSet::new(theta, 0.0, psi, 0.0);
            let d = joint_distribution(&angles, Input::new(0, 0));
            let p = d.probabilities();
            prop_assert!((p.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            prop_assert_eq!(p[0], p[3]);
            prop_assert_eq!(p[1], p[2]);
            for o in Outcome::ALL {
                let amp = bell_amplitude(theta, psi, o);
                prop_assert!((d[o] - amp * amp).abs() <= 1e-12);
            }
        }

        #[test]
        fn common_shift_is_invisible(
            mask in any::<u16>(),
            a in proptest::array::uniform4(-4.0f64..4.0),
            phi in -10.0f64..10.0,
        ) {
            let g = GameTable::from_mask(mask);
            let angles = AngleSet::new(a[0], a[1], a[2], a[3]);
            let base = success_probability(g, &angles);
            prop_assert!((success_probability(g, &angles.shifted(phi)) - base).abs() <= 1e-12);
            let flipped = AngleSet::new(a[0] + PI, a[1], a[2], a[3]);
            prop_assert!((success_probability(g, &flipped) - base).abs() <= 1e-12);
        }
    }
}
