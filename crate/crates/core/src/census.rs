//! Counts of composed games `f(x1, x2, x3, x4) = g1(x1, x2) * g2(x3, x4)`
//! built from pairs of non-constant two-variable functions.

use serde::Serialize;

/// A two-variable boolean function as a truth table; bit `2x + y` holds
/// `g(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoVarFunction(u8);

impl TwoVarFunction {
    pub fn from_table(table: u8) -> Self {
        assert!(table < 16, "a two-variable truth table has four bits");
        TwoVarFunction(table)
    }

    pub fn all() -> impl Iterator<Item = TwoVarFunction> {
        (0..16).map(TwoVarFunction)
    }

    pub fn table(self) -> u8 {
        self.0
    }

    pub fn evaluate(self, x: u8, y: u8) -> u8 {
        (self.0 >> (2 * x + y)) & 1
    }

    /// `|g^-1(0)|`.
    pub fn zero_count(self) -> u32 {
        4 - self.0.count_ones()
    }

    pub fn is_constant(self) -> bool {
        self.0 == 0 || self.0 == 15
    }
}

/// `g1(x1, x2) op g2(x3, x4)` as a 16-entry truth table indexed by
/// `8 x1 + 4 x2 + 2 x3 + x4`; `op` is itself a truth table on bit `2p + q`.
pub fn compose(g1: TwoVarFunction, g2: TwoVarFunction, op: TwoVarFunction) -> u16 {
    (0..16u16)
        .filter(|&i| {
            let bit = |k: u16| ((i >> k) & 1) as u8;
            let p = g1.evaluate(bit(3), bit(2));
            let q = g2.evaluate(bit(1), bit(0));
            op.evaluate(p, q) == 1
        })
        .fold(0, |acc, i| acc | 1 << i)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightClassCount {
    pub g1_zeros: u32,
    pub g2_zeros: u32,
    pub pairs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionCount {
    /// Truth table of the binary operation.
    pub operation: u8,
    /// Distinct composed functions over pairs with one zero each.
    pub distinct: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub total_nonconstant: usize,
    pub total_pairs: usize,
    pub weight_classes: Vec<WeightClassCount>,
    pub compositions: Vec<CompositionCount>,
}

/// Expected pair count for every weight class in {1, 3} x {1, 3}.
pub const EXPECTED_CLASS_PAIRS: usize = 16;
pub const EXPECTED_NONCONSTANT: usize = 14;
pub const EXPECTED_PAIRS: usize = 196;

impl CensusReport {
    pub fn passes(&self) -> bool {
        self.total_nonconstant == EXPECTED_NONCONSTANT
            && self.total_pairs == EXPECTED_PAIRS
            && self.weight_classes.len() == 4
            && self.weight_classes.iter().all(|c| c.pairs == EXPECTED_CLASS_PAIRS)
            && self.compositions.iter().all(|c| c.distinct <= EXPECTED_CLASS_PAIRS)
    }

    pub fn class(&self, g1_zeros: u32, g2_zeros: u32) -> Option<usize> {
        self.weight_classes
            .iter()
            .find(|c| c.g1_zeros == g1_zeros && c.g2_zeros == g2_zeros)
            .map(|c| c.pairs)
    }
}

pub fn census() -> CensusReport {
    let functions: Vec<_> = TwoVarFunction::all().filter(|g| !g.is_constant()).collect();
    let pairs: Vec<_> = functions
        .iter()
        .flat_map(|&g1| functions.iter().map(move |&g2| (g1, g2)))
        .collect();

    let weight_classes = [(1, 1), (1, 3), (3, 1), (3, 3)]
        .into_iter()
        .map(|(w1, w2)| WeightClassCount {
            g1_zeros: w1,
            g2_zeros: w2,
            pairs: pairs
                .iter()
                .filter(|(g1, g2)| g1.zero_count() == w1 && g2.zero_count() == w2)
                .count(),
        })
        .collect();

    let single_zero: Vec<_> = pairs
        .iter()
        .filter(|(g1, g2)| g1.zero_count() == 1 && g2.zero_count() == 1)
        .collect();
    let compositions = TwoVarFunction::all()
        .map(|op| {
            let mut seen: Vec<u16> = single_zero.iter().map(|&&(g1, g2)| compose(g1, g2, op)).collect();
            seen.sort_unstable();
            seen.dedup();
            CompositionCount {
                operation: op.table(),
                distinct: seen.len(),
            }
        })
        .collect();

    CensusReport {
        total_nonconstant: functions.len(),
        total_pairs: pairs.len(),
        weight_classes,
        compositions,
    }
}
