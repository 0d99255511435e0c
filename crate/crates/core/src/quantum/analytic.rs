//! Closed-form maximum over the measurement family.
//!
//! Writing `cos 2(theta_x - psi_y)` as the inner product of planar unit
//! vectors `u_x` (at angle `2 theta_x`) and `v_y` (at angle `2 psi_y`), the
//! variable part of the success probability becomes
//! `sum_x u_x . (c_x0 v0 + c_x1 v1)`, which is at most
//! `sum_x |c_x0 v0 + c_x1 v1|` with equality when each `u_x` points along its
//! vector. With `t = <v0, v1>` that bound is
//!
//! ```text
//! g(t) = sqrt(c00^2 + c01^2 + 2 c00 c01 t) + sqrt(c10^2 + c11^2 + 2 c10 c11 t)
//! ```
//!
//! and the family maximum is `(d + max_{t in [-1, 1]} g(t)) / 16`. Both
//! radicands stay non-negative on `[-1, 1]`, so `g` is concave there.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

use super::optimize::golden_section_max;
use super::{AngleSet, CoefficientProfile};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AnalyticSolution {
    pub value: f64,
    /// Optimal inner product between Bob's two vectors.
    pub t_star: f64,
    pub angles: AngleSet,
}

/// Radicand terms `(c_x0^2 + c_x1^2, 2 c_x0 c_x1)` for Alice's input `x`.
fn radicand(profile: &CoefficientProfile, x: usize) -> (f64, f64) {
    let c0 = f64::from(profile.coefficients[2 * x]);
    let c1 = f64::from(profile.coefficients[2 * x + 1]);
    (c0 * c0 + c1 * c1, 2.0 * c0 * c1)
}

/// The norm-bound gain `g(t)`; negative radicands from rounding clamp to 0.
pub fn family_gain(profile: &CoefficientProfile, t: f64) -> f64 {
    (0..2)
        .map(|x| {
            let (a, b) = radicand(profile, x);
            (a + b * t).max(0.0).sqrt()
        })
        .sum()
}

/// `(d + g(t)) / 16`.
pub fn family_value_at(profile: &CoefficientProfile, t: f64) -> f64 {
    (f64::from(profile.total) + family_gain(profile, t)) / 16.0
}

/// Maximizer of `g` on `[-1, 1]`, from the stationary-point equation and the
/// two endpoints.
pub fn optimal_inner_product(profile: &CoefficientProfile) -> f64 {
    let (a0, b0) = radicand(profile, 0);
    let (a1, b1) = radicand(profile, 1);
    if b0 == 0.0 && b1 == 0.0 {
        // g is constant in t.
        return 0.0;
    }

    let mut candidates = Vec::with_capacity(3);
    // g'(t) = 0 needs b0 and b1 of opposite sign; squaring
    // b0 sqrt(a1 + b1 t) = -b1 sqrt(a0 + b0 t) leaves a linear equation.
    if b0 * b1 < 0.0 {
        let t = (b1 * b1 * a0 - b0 * b0 * a1) / (b0 * b1 * (b0 - b1));
        if t > -1.0 && t < 1.0 {
            candidates.push(t);
        }
    }
    candidates.extend([-1.0, 1.0]);

    candidates
        .into_iter()
        .map(|t| (t, family_gain(profile, t)))
        .fold((0.0, f64::NEG_INFINITY), |best, cand| if cand.1 > best.1 { cand } else { best })
        .0
        + 0.0 // turns -0.0 into 0.0
}

/// Bounded golden-section maximization of `g`, used as an independent check
/// on [`optimal_inner_product`].
pub fn optimal_inner_product_by_search(profile: &CoefficientProfile) -> (f64, f64) {
    golden_section_max(|t| family_gain(profile, t), -1.0, 1.0, 1e-12)
}

pub fn analytic_family_max(profile: &CoefficientProfile) -> AnalyticSolution {
    let t_star = optimal_inner_product(profile);
    let angles = recover_optimal_angles(profile, t_star)
        .expect("optimal inner product lies in [-1, 1]");
    AnalyticSolution {
        value: family_value_at(profile, t_star),
        t_star,
        angles,
    }
}

/// Measurement angles attaining `(d + g(t_star)) / 16`.
///
/// Places `v0` at angle 0 and `v1` at `arccos(t_star)`, aims each `u_x` along
/// `c_x0 v0 + c_x1 v1` (angle 0 when that vector vanishes), halves the vector
/// angles to get measurement angles, then fixes the gauge `theta0 = 0` with
/// every angle in `[0, pi)`.
pub fn recover_optimal_angles(profile: &CoefficientProfile, t_star: f64) -> Result<AngleSet> {
    if !(-1.0..=1.0).contains(&t_star) {
        return Err(Error::InvalidParameter(format!(
            "inner product {t_star} is outside [-1, 1]"
        )));
    }
    let phi = t_star.acos();
    let (v1x, v1y) = (phi.cos(), phi.sin());
    let direction = |x: usize| {
        let c0 = f64::from(profile.coefficients[2 * x]);
        let c1 = f64::from(profile.coefficients[2 * x + 1]);
        let (wx, wy) = (c0 + c1 * v1x, c1 * v1y);
        if wx.hypot(wy) < 1e-12 { 0.0 } else { wy.atan2(wx) }
    };
    let raw = AngleSet::new(direction(0) / 2.0, direction(1) / 2.0, 0.0, phi / 2.0);
    let fixed = raw.gauge_fixed();
    debug_assert!(fixed.to_array().iter().all(|v| (0.0..PI).contains(v)));
    Ok(fixed)
}
