use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Measurement rotations: Alice measures at `theta_x` on input `x`, Bob at
/// `psi_y` on input `y`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AngleSet {
    pub theta0: f64,
    pub theta1: f64,
    pub psi0: f64,
    pub psi1: f64,
}

impl AngleSet {
    pub fn new(theta0: f64, theta1: f64, psi0: f64, psi1: f64) -> Self {
        AngleSet { theta0, theta1, psi0, psi1 }
    }

    pub const ZERO: AngleSet = AngleSet { theta0: 0.0, theta1: 0.0, psi0: 0.0, psi1: 0.0 };

    pub fn theta(&self, x: u8) -> f64 {
        if x == 0 { self.theta0 } else { self.theta1 }
    }

    pub fn psi(&self, y: u8) -> f64 {
        if y == 0 { self.psi0 } else { self.psi1 }
    }

    /// `theta_x - psi_y`.
    pub fn difference(&self, x: u8, y: u8) -> f64 {
        self.theta(x) - self.psi(y)
    }

    pub fn alpha(&self) -> f64 {
        self.difference(0, 0)
    }

    pub fn beta(&self) -> f64 {
        self.difference(0, 1)
    }

    pub fn gamma(&self) -> f64 {
        self.difference(1, 0)
    }

    pub fn delta(&self) -> f64 {
        self.difference(1, 1)
    }

    /// Adds `phi` to every angle.
    pub fn shifted(&self, phi: f64) -> Self {
        AngleSet::new(self.theta0 + phi, self.theta1 + phi, self.psi0 + phi, self.psi1 + phi)
    }

    /// Shifts so that `theta0 = 0` and reduces every angle to `[0, pi)`.
    pub fn gauge_fixed(&self) -> Self {
        let reduce = |v: f64| {
            let r = (v - self.theta0).rem_euclid(PI);
            if r >= PI { 0.0 } else { r }
        };
        AngleSet::new(0.0, reduce(self.theta1), reduce(self.psi0), reduce(self.psi1))
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.theta0, self.theta1, self.psi0, self.psi1]
    }

    /// Parses four comma-separated angles such as `0,pi/4,pi/8,7pi/8`.
    pub fn parse_list(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::AngleCount(parts.len()));
        }
        let v: Vec<f64> = parts.iter().map(|p| parse_angle(p)).collect::<Result<_>>()?;
        Ok(AngleSet::new(v[0], v[1], v[2], v[3]))
    }
}

impl fmt::Display for AngleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            format_angle(self.theta0),
            format_angle(self.theta1),
            format_angle(self.psi0),
            format_angle(self.psi1)
        )
    }
}

impl FromStr for AngleSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AngleSet::parse_list(s)
    }
}

const MAX_DENOMINATOR: i64 = 200;
const SYMBOLIC_TOLERANCE: f64 = 1e-9;

/// Prints `p*pi/q` in compact form (`7pi/8`, `pi/4`, `-pi`) when the angle is
/// within 1e-9 of such a value with `q <= 200`, else six decimals.
pub fn format_angle(v: f64) -> String {
    let ratio = v / PI;
    for q in 1..=MAX_DENOMINATOR {
        let p = (ratio * q as f64).round();
        if (v - p * PI / q as f64).abs() > SYMBOLIC_TOLERANCE {
            continue;
        }
        let p = p as i64;
        let numerator = match p {
            0 => return "0".into(),
            1 => "pi".to_string(),
            -1 => "-pi".to_string(),
            _ => format!("{p}pi"),
        };
        return if q == 1 { numerator } else { format!("{numerator}/{q}") };
    }
    format!("{v:.6}")
}

/// Parses one angle: a decimal, or `[sign][coef][*]pi[/den]` (`π` also works).
pub fn parse_angle(s: &str) -> Result<f64> {
    let bad = || Error::AngleParse(s.trim().to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let compact = compact.replace('π', "pi");
    if compact.is_empty() {
        return Err(bad());
    }
    let Some((left, right)) = compact.split_once("pi") else {
        return compact.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    };

    let left = left.strip_suffix('*').unwrap_or(left);
    let coefficient = match left {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => left.parse::<f64>().map_err(|_| bad())?,
    };
    let denominator = match right {
        "" => 1.0,
        _ => {
            let den = right.strip_prefix('/').ok_or_else(bad)?;
            let den = den.parse::<f64>().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            den
        }
    };
    let v = coefficient * PI / denominator;
    if v.is_finite() { Ok(v) } else { Err(bad()) }
}
