//! Algebraic normal form of a game's boolean function over GF(2).
//!
//! The function is `f(x, y, a, b)` with `f = 0` meaning the outcome wins, the
//! complement of the win mask. Text form: monomials over `x`, `y`, `a`, `b`
//! joined by `+` (or `⊕`), `1` for the constant term and `0` for the zero
//! polynomial. Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::game::GameTable;

const VARS: [(char, u8); 4] = [('x', 8), ('y', 4), ('a', 2), ('b', 1)];

/// A product of distinct variables, as a bit set laid out like mask indices:
/// `x = 8`, `y = 4`, `a = 2`, `b = 1`. The empty set is the constant `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(u8);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_bits(bits: u8) -> Self {
        assert!(bits < 16);
        Monomial(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    fn variables(self) -> impl Iterator<Item = char> {
        VARS.into_iter()
            .filter(move |&(_, bit)| self.0 & bit != 0)
            .map(|(c, _)| c)
    }

    /// Value of the monomial at the point whose index is `8x + 4y + 2a + b`.
    pub fn evaluate(self, point: u8) -> bool {
        point & self.0 == self.0
    }

    /// Canonical order: higher degree first, then lexicographic in x<y<a<b.
    fn canonical_key(self) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<u8>) {
        // Within one degree, lexicographic order over x<y<a<b coincides with
        // descending bit value because x holds the highest bit.
        (std::cmp::Reverse(self.degree()), std::cmp::Reverse(self.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for c in self.variables() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// XOR of monomials; bit `m` of `coefficients` is set iff monomial `m` occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AnfPolynomial {
    coefficients: u16,
}

impl AnfPolynomial {
    pub const ZERO: AnfPolynomial = AnfPolynomial { coefficients: 0 };

    pub fn from_coefficients(coefficients: u16) -> Self {
        AnfPolynomial { coefficients }
    }

    pub fn coefficients(self) -> u16 {
        self.coefficients
    }

    pub fn from_monomials(monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let coefficients = monomials
            .into_iter()
            .fold(0u16, |acc, m| acc ^ (1 << m.bits()));
        AnfPolynomial { coefficients }
    }

    /// Monomials in canonical order.
    pub fn monomials(self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..16u8)
            .filter(|&m| self.coefficients >> m & 1 == 1)
            .map(Monomial)
            .collect();
        out.sort_by_key(|m| m.canonical_key());
        out
    }

    /// `f` at the point `8x + 4y + 2a + b`.
    pub fn evaluate(self, point: u8) -> bool {
        (0..16u8)
            .filter(|&m| self.coefficients >> m & 1 == 1)
            .fold(false, |acc, m| acc ^ Monomial(m).evaluate(point))
    }
}

/// In-place Möbius transform of a 16-entry truth table packed into a `u16`.
/// It is an involution, so the same routine converts in both directions.
fn mobius(mut t: u16) -> u16 {
    const HIGH: [(u32, u16); 4] = [(1, 0xAAAA), (2, 0xCCCC), (4, 0xF0F0), (8, 0xFF00)];
    for (shift, mask) in HIGH {
        t ^= (t << shift) & mask;
    }
    t
}

pub fn to_anf(game: GameTable) -> AnfPolynomial {
    AnfPolynomial {
        coefficients: mobius(!game.mask()),
    }
}

pub fn from_anf(poly: AnfPolynomial) -> GameTable {
    GameTable::from_mask(!mobius(poly.coefficients))
}

impl fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monomials = self.monomials();
        if monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in monomials.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for AnfPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        #[derive(Clone, Copy)]
        enum Term {
            Empty,
            Zero,
            One,
            Vars(u8),
        }

        let mut coefficients = 0u16;
        let mut term = Term::Empty;
        let mut term_start = 0;
        let mut close = |term: Term, at: usize| -> Result<()> {
            match term {
                Term::Empty => return Err(Error::AnfEmptyTerm { position: at }),
                Term::Zero => {}
                Term::One => coefficients ^= 1,
                Term::Vars(bits) => coefficients ^= 1 << bits,
            }
            Ok(())
        };

        for (position, c) in s.chars().enumerate() {
            if c.is_whitespace() {
                continue;
            }
            term = match (c, term) {
                ('+' | '⊕', t) => {
                    close(t, term_start)?;
                    term_start = position + 1;
                    Term::Empty
                }
                ('0', Term::Empty) => Term::Zero,
                ('1', Term::Empty) => Term::One,
                (_, Term::Empty | Term::Vars(_)) => {
                    let bit = VARS
                        .iter()
                        .find(|&&(v, _)| v == c)
                        .map(|&(_, bit)| bit)
                        .ok_or(Error::AnfUnexpectedChar { found: c, position })?;
                    match term {
                        Term::Vars(bits) if bits & bit != 0 => {
                            return Err(Error::AnfUnexpectedChar { found: c, position })
                        }
                        Term::Vars(bits) => Term::Vars(bits | bit),
                        _ => Term::Vars(bit),
                    }
                }
                // Constants do not combine with anything else inside a term.
                (_, Term::Zero | Term::One) => {
                    return Err(Error::AnfUnexpectedChar { found: c, position })
                }
            };
        }
        close(term, term_start)?;
        Ok(AnfPolynomial { coefficients })
    }
}
