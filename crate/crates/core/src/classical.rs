//! Exact classical optimum over the 16 deterministic joint strategies.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::game::{GameTable, Input, Outcome};

/// How one player turns an input bit into an output bit.
///
/// Variant order follows the player's output column read as (input 0, input 1):
/// `00`, `01`, `10`, `11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlayerRule {
    ConstZero,
    Identity,
    Negation,
    ConstOne,
}

impl PlayerRule {
    pub const ALL: [PlayerRule; 4] = [
        PlayerRule::ConstZero,
        PlayerRule::Identity,
        PlayerRule::Negation,
        PlayerRule::ConstOne,
    ];

    pub fn apply(self, input: u8) -> u8 {
        match self {
            PlayerRule::ConstZero => 0,
            PlayerRule::ConstOne => 1,
            PlayerRule::Identity => input,
            PlayerRule::Negation => 1 - input,
        }
    }

    pub fn is_input_dependent(self) -> bool {
        matches!(self, PlayerRule::Identity | PlayerRule::Negation)
    }

    fn symbol(self, var: char) -> String {
        match self {
            PlayerRule::ConstZero => "0".into(),
            PlayerRule::ConstOne => "1".into(),
            PlayerRule::Identity => var.to_string(),
            PlayerRule::Negation => format!("!{var}"),
        }
    }

    fn parse_symbol(s: &str, var: char) -> Option<Self> {
        let s = s.trim();
        match s {
            "0" => Some(PlayerRule::ConstZero),
            "1" => Some(PlayerRule::ConstOne),
            _ => {
                let negated = s
                    .strip_prefix('!')
                    .or_else(|| s.strip_prefix('~'))
                    .map(str::trim);
                match negated {
                    Some(rest) if rest.len() == 1 && rest.starts_with(var) => {
                        Some(PlayerRule::Negation)
                    }
                    None if s.len() == 1 && s.starts_with(var) => Some(PlayerRule::Identity),
                    _ => None,
                }
            }
        }
    }
}

/// Alice's rule consumes `x` and yields `a`; Bob's consumes `y` and yields `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JointStrategy {
    pub alice: PlayerRule,
    pub bob: PlayerRule,
}

impl JointStrategy {
    pub fn new(alice: PlayerRule, bob: PlayerRule) -> Self {
        JointStrategy { alice, bob }
    }

    /// All 16 strategies in the canonical table order: Alice's rule varies
    /// slower, so row `i` has Alice outputs `(i >> 3 & 1, i >> 2 & 1)` and Bob
    /// outputs `(i >> 1 & 1, i & 1)` for inputs 0 and 1.
    pub fn all() -> [JointStrategy; 16] {
        std::array::from_fn(|i| JointStrategy {
            alice: PlayerRule::ALL[i / 4],
            bob: PlayerRule::ALL[i % 4],
        })
    }

    pub fn respond(self, input: Input) -> Outcome {
        Outcome::new(self.alice.apply(input.x), self.bob.apply(input.y))
    }

    pub fn group(self) -> StrategyGroup {
        match (self.alice.is_input_dependent(), self.bob.is_input_dependent()) {
            (false, false) => StrategyGroup::Constant,
            (true, true) => StrategyGroup::InputDependent,
            (true, false) => StrategyGroup::MixedAliceDependent,
            (false, true) => StrategyGroup::MixedBobDependent,
        }
    }
}

impl fmt::Display for JointStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}, b={}", self.alice.symbol('x'), self.bob.symbol('y'))
    }
}

impl FromStr for JointStrategy {
    type Err = Error;

    /// Parses `a=0|1|x|!x, b=0|1|y|!y`; spaces around tokens are optional.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::StrategyParse(s.to_string());
        let (left, right) = s.split_once(',').ok_or_else(bad)?;
        let rule = |part: &str, player: char, var: char| {
            let (name, value) = part.split_once('=').ok_or_else(bad)?;
            if name.trim() != player.to_string() {
                return Err(bad());
            }
            PlayerRule::parse_symbol(value, var).ok_or_else(bad)
        };
        Ok(JointStrategy {
            alice: rule(left, 'a', 'x')?,
            bob: rule(right, 'b', 'y')?,
        })
    }
}

impl Serialize for JointStrategy {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrategyGroup {
    /// Both players ignore their inputs.
    Constant,
    /// Both players use their inputs.
    InputDependent,
    /// Alice uses her input, Bob answers a constant.
    MixedAliceDependent,
    /// Bob uses his input, Alice answers a constant.
    MixedBobDependent,
}

pub fn group_of(s: JointStrategy) -> StrategyGroup {
    s.group()
}

/// A success probability that is an exact multiple of 1/4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quarters(u8);

impl Quarters {
    pub const ZERO: Quarters = Quarters(0);
    pub const HALF: Quarters = Quarters(2);
    pub const THREE_QUARTERS: Quarters = Quarters(3);
    pub const ONE: Quarters = Quarters(4);

    pub const fn new(wins: u8) -> Self {
        assert!(wins <= 4, "at most four inputs can be won");
        Quarters(wins)
    }

    /// Number of inputs won out of four.
    pub fn wins(self) -> u8 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 4.0
    }
}

impl fmt::Display for Quarters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("0"),
            1 => f.write_str("0.25"),
            2 => f.write_str("0.5"),
            3 => f.write_str("0.75"),
            _ => f.write_str("1"),
        }
    }
}

impl Serialize for Quarters {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.value())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalResult {
    pub max_probability: Quarters,
    /// Every optimal strategy, in [`JointStrategy::all`] order.
    pub maximizers: Vec<JointStrategy>,
}

/// Fraction of the four inputs on which `s` answers a winning outcome.
pub fn evaluate_strategy(game: GameTable, s: JointStrategy) -> Quarters {
    let wins = Input::ALL
        .iter()
        .filter(|&&input| game.wins(input, s.respond(input)))
        .count();
    Quarters(wins as u8)
}

pub fn classical_max(game: GameTable) -> ClassicalResult {
    let scored = JointStrategy::all().map(|s| (s, evaluate_strategy(game, s)));
    let best = scored.iter().map(|&(_, q)| q).max().unwrap_or(Quarters::ZERO);
    ClassicalResult {
        max_probability: best,
        maximizers: scored
            .iter()
            .filter(|&&(_, q)| q == best)
            .map(|&(s, _)| s)
            .collect(),
    }
}

/// Strategies whose answers win on both `first` and `second`.
pub fn strategies_winning_both(
    game: GameTable,
    first: Input,
    second: Input,
) -> Result<Vec<JointStrategy>> {
    if first == second {
        return Err(Error::EqualInputs);
    }
    Ok(JointStrategy::all()
        .into_iter()
        .filter(|s| game.wins(first, s.respond(first)) && game.wins(second, s.respond(second)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use PlayerRule::*;

    fn o(a: u8, b: u8) -> Outcome {
        Outcome::new(a, b)
    }

    fn s(alice: PlayerRule, bob: PlayerRule) -> JointStrategy {
        JointStrategy::new(alice, bob)
    }

    #[test]
    fn table_order() {
        let all = JointStrategy::all();
        for (i, st) in all.iter().enumerate() {
            let i = i as u8;
            assert_eq!(st.alice.apply(0), i >> 3 & 1);
            assert_eq!(st.alice.apply(1), i >> 2 & 1);
            assert_eq!(st.bob.apply(0), i >> 1 & 1);
            assert_eq!(st.bob.apply(1), i & 1);
        }
        let unique: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), 16);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate_strategy(GameTable::CHSH, s(ConstZero, ConstZero)), Quarters::THREE_QUARTERS);
        let g4211 = GameTable::from_winners([
            &[o(0, 0), o(0, 1), o(1, 0), o(1, 1)],
            &[o(0, 0), o(1, 1)],
            &[o(0, 1)],
            &[o(1, 0)],
        ]);
        assert_eq!(evaluate_strategy(g4211, s(Identity, ConstZero)), Quarters::THREE_QUARTERS);
        for st in JointStrategy::all() {
            assert_eq!(evaluate_strategy(GameTable::from_mask(0xFFFF), st), Quarters::ONE);
        }
    }

    #[test]
    fn classical_max_examples() {
        assert_eq!(classical_max(GameTable::CHSH).max_probability, Quarters::THREE_QUARTERS);

        let g3111 = GameTable::from_winners([&[o(0, 0), o(0, 1), o(1, 0)], &[o(1, 1)], &[o(0, 1)], &[o(1, 0)]]);
        let r = classical_max(g3111);
        assert_eq!(r.max_probability, Quarters::HALF);
        assert!(r.maximizers.contains(&s(ConstZero, ConstOne)));

        let r = classical_max(GameTable::from_mask(0));
        assert_eq!(r.max_probability, Quarters::ZERO);
        assert_eq!(r.maximizers, JointStrategy::all().to_vec());
    }

    #[test]
    fn maximizers_are_complete_and_ordered() {
        for m in (0..=u16::MAX).step_by(7) {
            let g = GameTable::from_mask(m);
            let r = classical_max(g);
            let expected: Vec<_> = JointStrategy::all()
                .into_iter()
                .filter(|&st| evaluate_strategy(g, st) == r.max_probability)
                .collect();
            assert_eq!(r.maximizers, expected);
            assert!(JointStrategy::all().iter().all(|&st| evaluate_strategy(g, st) <= r.max_probability));
        }
    }

    #[test]
    fn groups() {
        assert_eq!(group_of(s(Identity, ConstZero)), StrategyGroup::MixedAliceDependent);
        assert_eq!(group_of(s(ConstOne, ConstOne)), StrategyGroup::Constant);
        assert_eq!(group_of(s(Negation, Identity)), StrategyGroup::InputDependent);
        assert_eq!(group_of(s(ConstZero, Negation)), StrategyGroup::MixedBobDependent);
        let mut tally = std::collections::HashMap::new();
        for st in JointStrategy::all() {
            *tally.entry(st.group()).or_insert(0) += 1;
        }
        assert_eq!(tally.len(), 4);
        assert!(tally.values().all(|&n| n == 4));
    }

    #[test]
    fn winning_both_examples() {
        let one_each = GameTable::from_winners([&[o(0, 1)], &[], &[], &[o(1, 1)]]);
        let both = strategies_winning_both(one_each, Input::new(0, 0), Input::new(1, 1)).unwrap();
        assert_eq!(both.len(), 1);

        let two_three = GameTable::from_winners([&[o(0, 0), o(1, 1)], &[], &[], &[o(0, 0), o(0, 1), o(1, 0)]]);
        let both = strategies_winning_both(two_three, Input::new(0, 0), Input::new(1, 1)).unwrap();
        assert_eq!(both.len(), 6);

        let full = [o(0, 0), o(0, 1), o(1, 0), o(1, 1)];
        let table2 = GameTable::from_winners([&[o(0, 0), o(0, 1)], &[o(1, 0), o(1, 1)], &full, &full]);
        let both = strategies_winning_both(table2, Input::new(0, 0), Input::new(0, 1)).unwrap();
        assert!(both.is_empty());

        assert!(matches!(
            strategies_winning_both(table2, Input::new(1, 0), Input::new(1, 0)),
            Err(Error::EqualInputs)
        ));
    }

    #[test]
    fn strategy_text() {
        for st in JointStrategy::all() {
            assert_eq!(st.to_string().parse::<JointStrategy>().unwrap(), st);
        }
        assert_eq!("a=0,b=0".parse::<JointStrategy>().unwrap(), s(ConstZero, ConstZero));
        assert_eq!("a = !x , b = y".parse::<JointStrategy>().unwrap(), s(Negation, Identity));
        assert_eq!("a=~x, b=!y".parse::<JointStrategy>().unwrap(), s(Negation, Negation));
        assert_eq!(s(Identity, ConstOne).to_string(), "a=x, b=1");
        for bad in ["a=y, b=0", "a=0", "b=0, a=0", "a=2, b=0", "a=x, b=x", "a=!!x, b=0"] {
            assert!(bad.parse::<JointStrategy>().is_err(), "{bad}");
        }
    }

    #[test]
    fn quarters_display() {
        let shown: Vec<_> = (0..=4).map(|w| Quarters::new(w).to_string()).collect();
        assert_eq!(shown, ["0", "0.25", "0.5", "0.75", "1"]);
    }
}
