//! Exhaustive sweep over games, per-partition aggregation, and comparison
//! against the published per-partition rows.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::analyze;
use crate::anf::AnfPolynomial;
use crate::classical::{classical_max, JointStrategy, Quarters};
use crate::error::{Error, Result};
use crate::game::{enumerate_games, GameFilter, GameTable, Partition};
use crate::quantum::{analytic_family_max, coefficient_profile, AngleSet, QuantumValues};

/// Separations at or below this are treated as no advantage.
pub const SEPARATION_THRESHOLD: f64 = 1e-9;

/// Tolerance for matching a computed quantum value against a published one,
/// which is printed to two or three decimals.
pub const PUBLISHED_TOLERANCE: f64 = 5e-3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanRecord {
    pub game: GameTable,
    pub partition: Partition,
    pub classical: Quarters,
    pub family: f64,
    pub reported_quantum: f64,
    pub separation: f64,
    pub inconsistent: bool,
}

impl ScanRecord {
    pub fn new(game: GameTable) -> Self {
        let classical = classical_max(game).max_probability;
        let family = analytic_family_max(&coefficient_profile(game)).value;
        let values = QuantumValues::new(family, classical);
        ScanRecord {
            game,
            partition: game.partition(),
            classical,
            family,
            reported_quantum: values.reported,
            separation: values.separation(),
            inconsistent: game.has_inconsistent_pair(),
        }
    }
}

/// One record per game, in ascending mask order whatever the worker count.
pub fn scan(filter: GameFilter, workers: usize) -> Result<Vec<ScanRecord>> {
    if workers == 0 {
        return Err(Error::InvalidParameter("workers must be at least 1".into()));
    }
    let games: Vec<GameTable> = enumerate_games(filter).collect();
    if workers == 1 {
        return Ok(games.into_iter().map(ScanRecord::new).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(|| games.par_iter().map(|&g| ScanRecord::new(g)).collect()))
}

/// A (classical, reported quantum) pair with the quantum value rounded to
/// the nearest millionth, so that equal optima compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OutcomePair {
    pub classical: Quarters,
    pub quantum_micros: i64,
}

impl OutcomePair {
    pub fn new(classical: Quarters, quantum: f64) -> Self {
        OutcomePair {
            classical,
            quantum_micros: (quantum * 1e6).round() as i64,
        }
    }

    pub fn quantum(&self) -> f64 {
        self.quantum_micros as f64 / 1e6
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionSummary {
    pub partition: Partition,
    pub game_count: usize,
    pub outcome_pairs: BTreeSet<OutcomePair>,
    pub max_separation: f64,
    /// First game in scan order attaining `max_separation`, when positive.
    pub witness: Option<GameTable>,
}

/// Groups records by partition; summaries come out ordered by total winners
/// descending, then by counts descending.
pub fn summarize(records: &[ScanRecord]) -> Result<Vec<PartitionSummary>> {
    if records.is_empty() {
        return Err(Error::EmptyRecords);
    }
    let mut groups: BTreeMap<Partition, PartitionSummary> = BTreeMap::new();
    for r in records {
        let s = groups.entry(r.partition).or_insert_with(|| PartitionSummary {
            partition: r.partition,
            game_count: 0,
            outcome_pairs: BTreeSet::new(),
            max_separation: 0.0,
            witness: None,
        });
        s.game_count += 1;
        s.outcome_pairs.insert(OutcomePair::new(r.classical, r.reported_quantum));
        if r.separation > s.max_separation {
            s.max_separation = r.separation;
            s.witness = Some(r.game);
        }
    }
    let mut out: Vec<_> = groups.into_values().collect();
    out.sort_by(|a, b| a.partition.report_cmp(&b.partition));
    Ok(out)
}

/// A partition with a positive separation, described by its witness game.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdvantageRow {
    #[serde(serialize_with = "serialize_display")]
    pub partition: Partition,
    #[serde(rename = "mask", serialize_with = "serialize_display")]
    pub game: GameTable,
    #[serde(serialize_with = "serialize_display")]
    pub anf: AnfPolynomial,
    pub classical: Quarters,
    /// First optimal deterministic strategy.
    pub strategy: JointStrategy,
    pub family: f64,
    pub t_star: f64,
    pub angles: AngleSet,
    pub separation: f64,
}

fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn advantage_table(summaries: &[PartitionSummary]) -> Vec<AdvantageRow> {
    summaries
        .iter()
        .filter(|s| s.max_separation > SEPARATION_THRESHOLD)
        .filter_map(|s| s.witness.map(|w| (s.partition, analyze(w))))
        .map(|(partition, a)| AdvantageRow {
            partition,
            game: a.game,
            anf: a.anf,
            classical: a.classical.max_probability,
            strategy: a.classical.maximizers[0],
            family: a.family.value,
            t_star: a.family.t_star,
            angles: a.family.angles,
            separation: a.separation(),
        })
        .collect()
}

/// One published row: a (classical, quantum) pair seen in a partition, with
/// its separation, or `None` where none was reported.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PublishedRow {
    pub counts: [u8; 4],
    pub classical: Quarters,
    pub quantum: f64,
    pub separation: Option<f64>,
}

const fn row(counts: [u8; 4], classical_quarters: u8, quantum: f64, separation: Option<f64>) -> PublishedRow {
    PublishedRow {
        counts,
        classical: Quarters::new(classical_quarters),
        quantum,
        separation,
    }
}

/// Published per-partition rows for games with 4 to 11 winners.
pub const PUBLISHED_ROWS: &[PublishedRow] = &[
    // 8 winners
    row([4, 2, 1, 1], 3, 0.75, None),
    row([4, 2, 1, 1], 4, 1.0, None),
    row([3, 3, 1, 1], 3, 0.75, None),
    row([3, 3, 1, 1], 4, 1.0, None),
    row([2, 2, 2, 2], 3, 0.853, Some(0.103)),
    row([2, 2, 2, 2], 4, 1.0, None),
    row([3, 2, 2, 1], 3, 0.78, Some(0.03)),
    row([3, 2, 2, 1], 4, 1.0, None),
    // 9 winners
    row([4, 3, 1, 1], 3, 0.75, None),
    row([4, 3, 1, 1], 4, 1.0, None),
    row([4, 2, 2, 1], 4, 1.0, None),
    row([3, 2, 2, 2], 4, 1.0, None),
    row([3, 3, 2, 1], 3, 0.792, Some(0.042)),
    row([3, 3, 2, 1], 4, 1.0, None),
    // 10 winners
    row([4, 4, 1, 1], 4, 1.0, None),
    row([4, 2, 2, 2], 4, 1.0, None),
    row([3, 3, 2, 2], 4, 1.0, None),
    row([4, 3, 2, 1], 4, 1.0, None),
    row([3, 3, 3, 1], 3, 0.8, Some(0.05)),
    row([3, 3, 3, 1], 4, 1.0, None),
    // 11 winners
    row([4, 4, 2, 1], 4, 1.0, None),
    row([4, 3, 3, 1], 4, 1.0, None),
    row([4, 3, 2, 2], 4, 1.0, None),
    row([3, 3, 3, 2], 4, 1.0, None),
    // 7 winners
    row([3, 2, 1, 1], 3, 0.75, None),
    row([3, 2, 1, 1], 4, 1.0, None),
    row([2, 2, 2, 1], 3, 0.762, Some(0.012)),
    row([2, 2, 2, 1], 4, 1.0, None),
    // 6 winners
    row([3, 1, 1, 1], 2, 0.55, Some(0.05)),
    row([3, 1, 1, 1], 3, 0.75, None),
    row([3, 1, 1, 1], 4, 1.0, None),
    row([2, 2, 1, 1], 3, 0.75, None),
    row([2, 2, 1, 1], 4, 1.0, None),
    // 5 winners
    row([2, 1, 1, 1], 2, 0.542, Some(0.042)),
    row([2, 1, 1, 1], 3, 0.75, None),
    row([2, 1, 1, 1], 4, 1.0, None),
    // 4 winners
    row([1, 1, 1, 1], 2, 0.5, None),
    row([1, 1, 1, 1], 3, 0.75, None),
    row([1, 1, 1, 1], 4, 1.0, None),
];

pub fn published_rows(partition: Partition) -> impl Iterator<Item = &'static PublishedRow> {
    PUBLISHED_ROWS.iter().filter(move |r| r.counts == partition.counts())
}

impl PublishedRow {
    pub fn matches(&self, pair: &OutcomePair) -> bool {
        self.classical == pair.classical && (self.quantum - pair.quantum()).abs() <= PUBLISHED_TOLERANCE
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Discrepancy {
    /// The scan found a pair that no published row for the partition lists.
    ExtraPair { partition: Partition, pair: OutcomePair },
    /// A published row has no matching pair in the scan.
    MissingPair { partition: Partition, row: PublishedRow },
    /// The partition appears in no published row at all.
    UntabulatedPartition {
        partition: Partition,
        game_count: usize,
        pairs: Vec<OutcomePair>,
    },
}

/// Differences between the summaries and [`PUBLISHED_ROWS`]. Partitions with
/// a zero count are skipped since the published rows cover admissible games
/// only.
pub fn discrepancies(summaries: &[PartitionSummary]) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    for s in summaries.iter().filter(|s| s.partition.is_admissible()) {
        let rows: Vec<_> = published_rows(s.partition).collect();
        if rows.is_empty() {
            out.push(Discrepancy::UntabulatedPartition {
                partition: s.partition,
                game_count: s.game_count,
                pairs: s.outcome_pairs.iter().copied().collect(),
            });
            continue;
        }
        for pair in &s.outcome_pairs {
            if !rows.iter().any(|r| r.matches(pair)) {
                out.push(Discrepancy::ExtraPair {
                    partition: s.partition,
                    pair: *pair,
                });
            }
        }
        for r in rows {
            if !s.outcome_pairs.iter().any(|p| r.matches(p)) {
                out.push(Discrepancy::MissingPair {
                    partition: s.partition,
                    row: *r,
                });
            }
        }
    }
    out
}
