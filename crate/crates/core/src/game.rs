//! Win-table representation of binary-input binary-output two-party games.
//!
//! A game is a 16-bit mask. Bit `8x + 4y + 2a + b` is set iff the players win
//! when the referee sends `(x, y)` and they answer `(a, b)`. Each input owns one
//! nibble of the mask, so admissibility is a four-nibble nonzero check.
//!
//! Boolean-function views of a game (see [`crate::anf`]) use the opposite
//! polarity: `f(x, y, a, b) = 0` marks a winning outcome, so a set mask bit
//! corresponds to `f = 0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Referee input `(x, y)`: `x` goes to Alice, `y` to Bob.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Input {
    pub x: u8,
    pub y: u8,
}

/// Player answers `(a, b)`: `a` from Alice, `b` from Bob.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Outcome {
    pub a: u8,
    pub b: u8,
}

impl Input {
    /// The four inputs in order 00, 01, 10, 11.
    pub const ALL: [Input; 4] = [
        Input { x: 0, y: 0 },
        Input { x: 0, y: 1 },
        Input { x: 1, y: 0 },
        Input { x: 1, y: 1 },
    ];

    pub fn new(x: u8, y: u8) -> Self {
        assert!(x < 2 && y < 2, "input bits must be 0 or 1");
        Input { x, y }
    }

    /// Position in [`Input::ALL`], also the nibble index in a game mask.
    pub fn index(self) -> usize {
        (2 * self.x + self.y) as usize
    }

    pub fn complement(self) -> Self {
        Input { x: 1 - self.x, y: 1 - self.y }
    }
}

impl Outcome {
    /// The four outcomes in order 00, 01, 10, 11.
    pub const ALL: [Outcome; 4] = [
        Outcome { a: 0, b: 0 },
        Outcome { a: 0, b: 1 },
        Outcome { a: 1, b: 0 },
        Outcome { a: 1, b: 1 },
    ];

    pub fn new(a: u8, b: u8) -> Self {
        assert!(a < 2 && b < 2, "output bits must be 0 or 1");
        Outcome { a, b }
    }

    pub fn index(self) -> usize {
        (2 * self.a + self.b) as usize
    }

    pub fn complement(self) -> Self {
        Outcome { a: 1 - self.a, b: 1 - self.b }
    }

    /// True for 00 and 11, the outcomes the shared Bell state correlates.
    pub fn is_correlated(self) -> bool {
        self.a == self.b
    }
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.x, self.y)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, self.b)
    }
}

/// The winning outcomes for one input, stored as a 4-bit set indexed by
/// [`Outcome::index`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WinnerSet(u8);

impl WinnerSet {
    pub fn from_bits(bits: u8) -> Self {
        WinnerSet(bits & 0xF)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, outcome: Outcome) -> bool {
        self.0 >> outcome.index() & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Outcome> {
        Outcome::ALL.into_iter().filter(move |&o| self.contains(o))
    }

    /// The value Alice's bit is forced to, if every winner agrees on it.
    pub fn forced_a(self) -> Option<u8> {
        match self.0 {
            0 => None,
            s if s & 0b1100 == 0 => Some(0),
            s if s & 0b0011 == 0 => Some(1),
            _ => None,
        }
    }

    /// The value Bob's bit is forced to, if every winner agrees on it.
    pub fn forced_b(self) -> Option<u8> {
        match self.0 {
            0 => None,
            s if s & 0b1010 == 0 => Some(0),
            s if s & 0b0101 == 0 => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for WinnerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|o| o.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A game as its 16-bit win mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameTable(u16);

/// Number of distinct games.
pub const GAME_COUNT: usize = 1 << 16;

/// Number of games with at least one winner per input: 15^4.
pub const ADMISSIBLE_GAME_COUNT: usize = 50_625;

impl GameTable {
    /// The CHSH game: win iff `a XOR b = x AND y`.
    pub const CHSH: GameTable = GameTable(0x6999);

    pub const fn from_mask(mask: u16) -> Self {
        GameTable(mask)
    }

    pub const fn mask(self) -> u16 {
        self.0
    }

    /// Builds a game from per-input winner lists, in [`Input::ALL`] order.
    pub fn from_winners(winners: [&[Outcome]; 4]) -> Self {
        let mut mask = 0u16;
        for (nibble, outcomes) in winners.iter().enumerate() {
            for o in outcomes.iter() {
                mask |= 1 << (4 * nibble + o.index());
            }
        }
        GameTable(mask)
    }

    pub fn wins(self, input: Input, outcome: Outcome) -> bool {
        self.winners(input).contains(outcome)
    }

    pub fn winners(self, input: Input) -> WinnerSet {
        WinnerSet::from_bits((self.0 >> (4 * input.index())) as u8)
    }

    /// Total number of winning (input, outcome) pairs.
    pub fn total_winners(self) -> u32 {
        self.0.count_ones()
    }

    pub fn partition(self) -> Partition {
        let mut counts = Input::ALL.map(|i| self.winners(i).len() as u8);
        counts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { counts }
    }

    /// Every input has at least one winning outcome.
    pub fn is_admissible(self) -> bool {
        Input::ALL.iter().all(|&i| !self.winners(i).is_empty())
    }

    /// Two inputs that agree on one player's bit, where that player's output
    /// is forced to opposite constants. No deterministic strategy wins both.
    pub fn has_inconsistent_pair(self) -> bool {
        let alice_conflict = (0..2).any(|x| {
            let w0 = self.winners(Input::new(x, 0)).forced_a();
            let w1 = self.winners(Input::new(x, 1)).forced_a();
            matches!((w0, w1), (Some(p), Some(q)) if p != q)
        });
        let bob_conflict = (0..2).any(|y| {
            let w0 = self.winners(Input::new(0, y)).forced_b();
            let w1 = self.winners(Input::new(1, y)).forced_b();
            matches!((w0, w1), (Some(p), Some(q)) if p != q)
        });
        alice_conflict || bob_conflict
    }

    /// Relabels the players: Alice becomes Bob and vice versa.
    pub fn swap_players(self) -> Self {
        let mut mask = 0u16;
        for input in Input::ALL {
            for o in self.winners(input).iter() {
                let i = Input::new(input.y, input.x);
                let o = Outcome::new(o.b, o.a);
                mask |= 1 << (4 * i.index() + o.index());
            }
        }
        GameTable(mask)
    }
}

impl fmt::Display for GameTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:04X}", self.0)
    }
}

impl FromStr for GameTable {
    type Err = Error;

    /// Accepts `0x`-prefixed hexadecimal or plain decimal.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            Some(hex) if !hex.is_empty() && hex.len() <= 4 => u16::from_str_radix(hex, 16),
            Some(_) => return Err(Error::MaskParse(s.to_string())),
            None => t.parse::<u16>(),
        };
        parsed
            .map(GameTable)
            .map_err(|_| Error::MaskParse(s.to_string()))
    }
}

/// Unordered per-input winner counts, largest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    counts: [u8; 4],
}

impl Partition {
    /// Sorts `counts` into canonical order. Each count must be at most 4.
    pub fn new(mut counts: [u8; 4]) -> Self {
        assert!(counts.iter().all(|&c| c <= 4), "at most four outcomes per input");
        counts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { counts }
    }

    pub fn counts(&self) -> [u8; 4] {
        self.counts
    }

    pub fn total(&self) -> u8 {
        self.counts.iter().sum()
    }

    pub fn is_admissible(&self) -> bool {
        self.counts[3] >= 1
    }

    /// Report order: more winners first, then lexicographically descending.
    pub fn report_cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .total()
            .cmp(&self.total())
            .then_with(|| other.counts.cmp(&self.counts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.counts;
        write!(f, "{a}+{b}+{c}+{d}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("partition '{s}'"));
        let parts: Vec<u8> = s
            .split('+')
            .map(|p| p.trim().parse::<u8>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let counts: [u8; 4] = parts.try_into().map_err(|_| bad())?;
        if counts.iter().any(|&c| c > 4) {
            return Err(bad());
        }
        Ok(Partition::new(counts))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameFilter {
    AdmissibleOnly,
    All,
}

/// All games passing `filter`, in ascending mask order.
pub fn enumerate_games(filter: GameFilter) -> impl Iterator<Item = GameTable> {
    (0..=u16::MAX)
        .map(GameTable)
        .filter(move |g| filter == GameFilter::All || g.is_admissible())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(a: u8, b: u8) -> Outcome {
        Outcome::new(a, b)
    }

    /// Example game for the 4+2+1+1 partition.
    fn game_4211() -> GameTable {
        GameTable::from_winners([
            &[o(0, 0), o(0, 1), o(1, 0), o(1, 1)],
            &[o(0, 0), o(1, 1)],
            &[o(0, 1)],
            &[o(1, 0)],
        ])
    }

    #[test]
    fn chsh_winners_on_11() {
        let w: Vec<_> = GameTable::CHSH.winners(Input::new(1, 1)).iter().collect();
        assert_eq!(w, vec![o(0, 1), o(1, 0)]);
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(GameTable::from_mask(0xFFFF).winners(Input::new(x, y)).len(), 4);
                assert!(GameTable::from_mask(0).winners(Input::new(x, y)).is_empty());
            }
        }
    }

    #[test]
    fn partitions() {
        let p = GameTable::CHSH.partition();
        assert_eq!(p.counts(), [2, 2, 2, 2]);
        assert_eq!(p.total(), 8);
        assert_eq!(GameTable::from_mask(0).partition().counts(), [0; 4]);
        let p = game_4211().partition();
        assert_eq!((p.counts(), p.total()), ([4, 2, 1, 1], 8));
        assert_eq!(p.to_string(), "4+2+1+1");
        assert_eq!("1+2+1+4".parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn admissibility() {
        assert!(GameTable::CHSH.is_admissible());
        assert!(!GameTable::from_mask(0).is_admissible());
        assert!(!GameTable::from_mask(0x000F).is_admissible());
    }

    #[test]
    fn inconsistency_detector() {
        let full = [o(0, 0), o(0, 1), o(1, 0), o(1, 1)];
        let table2 = GameTable::from_winners([&[o(0, 0), o(0, 1)], &[o(1, 0), o(1, 1)], &full, &full]);
        assert!(table2.has_inconsistent_pair());
        assert!(!GameTable::CHSH.has_inconsistent_pair());
        assert!(!GameTable::from_mask(0xFFFF).has_inconsistent_pair());

        // Same forced bit, but on the player whose input changes: no conflict.
        let moving = GameTable::from_winners([&[o(0, 0), o(0, 1)], &full, &[o(1, 0), o(1, 1)], &full]);
        assert!(!moving.has_inconsistent_pair());
        // Bob's version of the pattern.
        let bob = GameTable::from_winners([&[o(0, 0), o(1, 0)], &full, &[o(0, 1), o(1, 1)], &full]);
        assert!(bob.has_inconsistent_pair());
        // Inadmissible games can still be inconsistent.
        let partial = GameTable::from_winners([&[o(0, 0)], &[o(1, 1)], &[], &[]]);
        assert!(partial.has_inconsistent_pair() && !partial.is_admissible());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_games(GameFilter::All).count(), GAME_COUNT);
        let admissible: Vec<_> = enumerate_games(GameFilter::AdmissibleOnly).collect();
        assert_eq!(admissible.len(), ADMISSIBLE_GAME_COUNT);
        assert_eq!(admissible[0].mask(), 0x1111);
        assert!(admissible.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn admissible_count_matches_brute_force() {
        let brute = (0..=u16::MAX)
            .filter(|m| (0..4).all(|n| (m >> (4 * n)) & 0xF != 0))
            .count();
        assert_eq!(brute, 15usize.pow(4));
    }

    #[test]
    fn mask_text() {
        assert_eq!(GameTable::CHSH.to_string(), "0x6999");
        assert_eq!("0x6999".parse::<GameTable>().unwrap(), GameTable::CHSH);
        assert_eq!("27033".parse::<GameTable>().unwrap(), GameTable::CHSH);
        assert_eq!("0xffff".parse::<GameTable>().unwrap().mask(), 0xFFFF);
        assert!("0x10000".parse::<GameTable>().is_err());
        assert!("65536".parse::<GameTable>().is_err());
        assert!("0x".parse::<GameTable>().is_err());
        assert!("chsh".parse::<GameTable>().is_err());
    }

    #[test]
    fn player_swap_preserves_structure() {
        for m in 0..=u16::MAX {
            let g = GameTable::from_mask(m);
            let s = g.swap_players();
            assert_eq!(s.swap_players(), g);
            assert_eq!(s.partition(), g.partition());
            assert_eq!(s.is_admissible(), g.is_admissible());
            assert_eq!(s.has_inconsistent_pair(), g.has_inconsistent_pair());
        }
    }
}
