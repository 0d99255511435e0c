//! Exhaustive structural checks shared by the theorem suite and the
//! acceptance run. Each returns a short summary on success and the first
//! counterexample on failure.

#![allow(dead_code)]

use nlgames::quantum::{analytic_family_max, coefficient_profile};
use nlgames::{
    classical_max, enumerate_games, strategies_winning_both, GameFilter, GameTable, Input, JointStrategy, Outcome,
    Quarters, StrategyGroup,
};

pub type Check = Result<String, String>;

fn all_games() -> impl Iterator<Item = GameTable> {
    enumerate_games(GameFilter::All)
}

/// Input pairs differing in exactly one bit, with the player whose bit is
/// shared: `true` for Alice (same x), `false` for Bob (same y).
fn adjacent_pairs() -> [(Input, Input, bool); 4] {
    let i = Input::new;
    [
        (i(0, 0), i(0, 1), true),
        (i(1, 0), i(1, 1), true),
        (i(0, 0), i(1, 0), false),
        (i(0, 1), i(1, 1), false),
    ]
}

/// The shared player's output bit, when every winner fixes it to one value.
fn forced_bit(game: GameTable, input: Input, alice: bool) -> Option<u8> {
    let bits: Vec<u8> = game
        .winners(input)
        .iter()
        .map(|o| if alice { o.a } else { o.b })
        .collect();
    match bits.first() {
        Some(&b) if bits.iter().all(|&c| c == b) => Some(b),
        _ => None,
    }
}

/// Two adjacent inputs whose winners force the shared player's bit to
/// opposite constants admit no common strategy; and the detector flags a game
/// exactly when some adjacent pair of nonempty inputs has no common strategy.
pub fn theorem1() -> Check {
    let mut patterns = 0usize;
    for g in all_games() {
        let mut blocked = false;
        for (p, q, alice) in adjacent_pairs() {
            let common = strategies_winning_both(g, p, q).unwrap();
            if let (Some(u), Some(v)) = (forced_bit(g, p, alice), forced_bit(g, q, alice)) {
                if u != v {
                    patterns += 1;
                    if !common.is_empty() {
                        return Err(format!("{g}: {p},{q} forced apart yet {} common strategies", common.len()));
                    }
                }
            }
            let both_nonempty = !g.winners(p).is_empty() && !g.winners(q).is_empty();
            blocked |= both_nonempty && common.is_empty();
        }
        if blocked != g.has_inconsistent_pair() {
            return Err(format!("{g}: detector says {}, enumeration says {blocked}", g.has_inconsistent_pair()));
        }
    }
    Ok(format!("{patterns} forced-apart input pairs, none with a common strategy"))
}

/// Complement inputs with m and n winners share exactly m*n strategies.
pub fn theorem2() -> Check {
    let mut checked = 0usize;
    for g in all_games() {
        for first in [Input::new(0, 0), Input::new(0, 1)] {
            let second = first.complement();
            let m = g.winners(first).len();
            let n = g.winners(second).len();
            let count = strategies_winning_both(g, first, second).unwrap().len();
            if count != m * n {
                return Err(format!("{g}: {first}/{second} has {count} strategies, expected {m}*{n}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} complement pairs over all games"))
}

fn strategy_pairs() -> impl Iterator<Item = (JointStrategy, JointStrategy)> {
    let all = JointStrategy::all();
    (0..16).flat_map(move |i| (i + 1..16).map(move |j| (all[i], all[j])))
}

fn is_theorem3_pair(s: JointStrategy, t: JointStrategy) -> bool {
    use StrategyGroup::*;
    matches!(
        (s.group(), t.group()),
        (Constant, InputDependent)
            | (InputDependent, Constant)
            | (MixedAliceDependent, MixedBobDependent)
            | (MixedBobDependent, MixedAliceDependent)
    )
}

/// Constant vs input-dependent, or Alice-mixed vs Bob-mixed: agreeing on one
/// input means disagreeing on all three others.
pub fn theorem3() -> Check {
    let mut cases = 0usize;
    for (s, t) in strategy_pairs().filter(|&(s, t)| is_theorem3_pair(s, t)) {
        for input in Input::ALL {
            if s.respond(input) != t.respond(input) {
                continue;
            }
            cases += 1;
            for other in Input::ALL.into_iter().filter(|&o| o != input) {
                if s.respond(other) == t.respond(other) {
                    return Err(format!("{s} and {t} agree on {input} and on {other}"));
                }
            }
        }
    }
    Ok(format!("{cases} agreeing (pair, input) cases"))
}

/// Strategies from distinct groups agreeing on an input disagree on its
/// complement.
pub fn theorem4() -> Check {
    let mut cases = 0usize;
    for (s, t) in strategy_pairs().filter(|(s, t)| s.group() != t.group()) {
        for input in Input::ALL {
            if s.respond(input) == t.respond(input) {
                cases += 1;
                let c = input.complement();
                if s.respond(c) == t.respond(c) {
                    return Err(format!("{s} and {t} agree on {input} and on its complement"));
                }
            }
        }
    }
    Ok(format!("{cases} agreeing (pair, input) cases"))
}

fn remaining(input: Input) -> [Input; 2] {
    [Input::new(input.x ^ 1, input.y), Input::new(input.x, input.y ^ 1)]
}

/// Complement outcome pairs {o, o'} contained in the winners of `input`.
fn complement_pairs(g: GameTable, input: Input) -> Vec<(Outcome, Outcome)> {
    let w = g.winners(input);
    [(Outcome::new(0, 0), Outcome::new(1, 1)), (Outcome::new(0, 1), Outcome::new(1, 0))]
        .into_iter()
        .filter(|&(p, q)| w.contains(p) && w.contains(q))
        .collect()
}

/// Strategies winning on `input` with an answer from `pair` and winning on
/// the complement input.
fn restricted(g: GameTable, input: Input, pair: (Outcome, Outcome)) -> Vec<JointStrategy> {
    strategies_winning_both(g, input, input.complement())
        .unwrap()
        .into_iter()
        .filter(|s| {
            let o = s.respond(input);
            o == pair.0 || o == pair.1
        })
        .collect()
}

/// A complement winner pair on `xy` and two winners on the complement input:
/// the four strategies answer four distinct outcomes on some remaining input.
pub fn theorem5() -> Check {
    let mut cases = 0usize;
    for g in all_games() {
        for input in Input::ALL {
            if g.winners(input.complement()).len() != 2 {
                continue;
            }
            for pair in complement_pairs(g, input) {
                cases += 1;
                let s = restricted(g, input, pair);
                if s.len() != 4 {
                    return Err(format!("{g}: {input} gives {} strategies, expected 4", s.len()));
                }
                let spread = remaining(input).into_iter().any(|other| {
                    let mut outs: Vec<_> = s.iter().map(|st| st.respond(other)).collect();
                    outs.sort_unstable_by_key(|o| o.index());
                    outs.dedup();
                    outs.len() == 4
                });
                if !spread {
                    return Err(format!("{g}: {input} strategies repeat an outcome on both remaining inputs"));
                }
            }
        }
    }
    Ok(format!("{cases} configurations"))
}

/// A complement winner pair on `xy` and one winner on the complement input:
/// the two strategies never answer complementary outcomes on the remaining
/// inputs.
pub fn lemma1() -> Check {
    let mut cases = 0usize;
    for g in all_games() {
        for input in Input::ALL {
            if g.winners(input.complement()).len() != 1 {
                continue;
            }
            for pair in complement_pairs(g, input) {
                cases += 1;
                let s = restricted(g, input, pair);
                if s.len() != 2 {
                    return Err(format!("{g}: {input} gives {} strategies, expected 2", s.len()));
                }
                for other in remaining(input) {
                    let (p, q) = (s[0].respond(other), s[1].respond(other));
                    if p == q.complement() {
                        return Err(format!("{g}: {s:?} answer complements {p} and {q} on {other}"));
                    }
                }
            }
        }
    }
    Ok(format!("{cases} configurations"))
}

/// Classical optima are multiples of 1/4 and at least 1/2 when admissible.
pub fn classical_lattice() -> Check {
    let mut admissible = 0usize;
    for g in all_games() {
        let v = classical_max(g).max_probability.value();
        if ![0.0, 0.25, 0.5, 0.75, 1.0].contains(&v) {
            return Err(format!("{g}: classical value {v}"));
        }
        if g.is_admissible() {
            admissible += 1;
            if v < 0.5 {
                return Err(format!("{g}: admissible with classical value {v}"));
            }
        }
    }
    Ok(format!("{admissible} admissible games at least 1/2"))
}

/// An inconsistent pair caps both the classical and the family value at 3/4.
pub fn inconsistent_bounds() -> Check {
    let mut flagged = 0usize;
    for g in all_games().filter(|g| g.has_inconsistent_pair()) {
        flagged += 1;
        let c = classical_max(g).max_probability;
        if c > Quarters::THREE_QUARTERS {
            return Err(format!("{g}: inconsistent but classical {c}"));
        }
        let f = analytic_family_max(&coefficient_profile(g)).value;
        if f > 0.75 + 1e-12 {
            return Err(format!("{g}: inconsistent but family {f}"));
        }
    }
    Ok(format!("{flagged} inconsistent games"))
}

/// Every structural check, labelled.
pub fn theorem_suite() -> Vec<(&'static str, Check)> {
    vec![
        ("theorem 1", theorem1()),
        ("theorem 2", theorem2()),
        ("theorem 3", theorem3()),
        ("theorem 4", theorem4()),
        ("theorem 5", theorem5()),
        ("lemma 1", lemma1()),
        ("classical lattice", classical_lattice()),
        ("inconsistent bounds", inconsistent_bounds()),
    ]
}
