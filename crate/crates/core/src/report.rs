//! CSV, JSON and Markdown rendering of scan results.
//!
//! Rendering is a pure function of its input, so identical scans produce
//! byte-identical files.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quantum::format_angle;
use crate::scan::{
    AdvantageRow, Discrepancy, OutcomePair, PartitionSummary, ScanRecord, SEPARATION_THRESHOLD,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Markdown => "markdown",
        }
    }

    /// Guesses from a file extension, defaulting to Markdown.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => Format::Csv,
            Some("json") => Format::Json,
            _ => Format::Markdown,
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

pub const RECORD_COLUMNS: [&str; 7] = [
    "mask_hex",
    "partition",
    "classical",
    "family_max",
    "reported_quantum",
    "separation",
    "inconsistent",
];

#[derive(Serialize)]
struct RecordRow {
    mask_hex: String,
    partition: String,
    classical: f64,
    family_max: f64,
    reported_quantum: f64,
    separation: f64,
    inconsistent: bool,
}

impl From<&ScanRecord> for RecordRow {
    fn from(r: &ScanRecord) -> Self {
        RecordRow {
            mask_hex: r.game.to_string(),
            partition: r.partition.to_string(),
            classical: r.classical.value(),
            family_max: r.family,
            reported_quantum: r.reported_quantum,
            separation: r.separation,
            inconsistent: r.inconsistent,
        }
    }
}

fn real(v: f64) -> String {
    format!("{v:.9}")
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<()>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w)?;
    let bytes = w.into_inner().map_err(|e| Error::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is built from UTF-8 strings"))
}

fn json_string<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn render_records(records: &[ScanRecord], format: Format) -> Result<String> {
    if records.is_empty() {
        return Err(Error::EmptyReport("record list"));
    }
    match format {
        Format::Csv => csv_string(|w| {
            w.write_record(RECORD_COLUMNS)?;
            for r in records {
                w.write_record([
                    r.game.to_string(),
                    r.partition.to_string(),
                    real(r.classical.value()),
                    real(r.family),
                    real(r.reported_quantum),
                    real(r.separation),
                    r.inconsistent.to_string(),
                ])?;
            }
            Ok(())
        }),
        Format::Json => json_string(&records.iter().map(RecordRow::from).collect::<Vec<_>>()),
        Format::Markdown => {
            let mut out = format!("| {} |\n|{}\n", RECORD_COLUMNS.join(" | "), "---|".repeat(7));
            for r in records {
                let row = RecordRow::from(r);
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    row.mask_hex,
                    row.partition,
                    r.classical,
                    real(row.family_max),
                    real(row.reported_quantum),
                    real(row.separation),
                    row.inconsistent
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct PairRow {
    classical: f64,
    quantum: f64,
    separation: Option<f64>,
}

impl From<&OutcomePair> for PairRow {
    fn from(p: &OutcomePair) -> Self {
        let gap = p.quantum() - p.classical.value();
        PairRow {
            classical: p.classical.value(),
            quantum: p.quantum(),
            separation: (gap > SEPARATION_THRESHOLD).then_some(gap),
        }
    }
}

#[derive(Serialize)]
struct SummaryRow {
    partition: String,
    total: u8,
    game_count: usize,
    outcome_pairs: Vec<PairRow>,
    max_separation: f64,
    witness: Option<String>,
}

impl From<&PartitionSummary> for SummaryRow {
    fn from(s: &PartitionSummary) -> Self {
        SummaryRow {
            partition: s.partition.to_string(),
            total: s.partition.total(),
            game_count: s.game_count,
            outcome_pairs: s.outcome_pairs.iter().map(PairRow::from).collect(),
            max_separation: s.max_separation,
            witness: s.witness.map(|w| w.to_string()),
        }
    }
}

fn separation_cell(pair: &OutcomePair) -> String {
    PairRow::from(pair)
        .separation
        .map_or_else(|| "NA".to_string(), |s| format!("{s:.6}"))
}

fn summaries_markdown(summaries: &[PartitionSummary]) -> String {
    let mut out = String::from("## Partitions\n\n| Partition | Games | Max. separation | Witness |\n|---|---|---|---|\n");
    for s in summaries {
        let witness = s.witness.map_or_else(|| "-".to_string(), |w| w.to_string());
        writeln!(out, "| {} | {} | {:.9} | {} |", s.partition, s.game_count, s.max_separation, witness).unwrap();
    }

    let mut totals: Vec<u8> = summaries.iter().map(|s| s.partition.total()).collect();
    totals.dedup();
    for total in totals {
        writeln!(out, "\n## {total} successful outcomes\n").unwrap();
        out.push_str(
            "| Partitions | Max. classical success prob. | Max. quantum success prob. | Corresponding Separation |\n\
             |---|---|---|---|\n",
        );
        for s in summaries.iter().filter(|s| s.partition.total() == total) {
            for (i, pair) in s.outcome_pairs.iter().enumerate() {
                let name = if i == 0 { s.partition.to_string() } else { String::new() };
                writeln!(
                    out,
                    "| {} | {} | {:.6} | {} |",
                    name,
                    pair.classical,
                    pair.quantum(),
                    separation_cell(pair)
                )
                .unwrap();
            }
        }
    }
    out
}

pub fn render_summaries(summaries: &[PartitionSummary], format: Format) -> Result<String> {
    if summaries.is_empty() {
        return Err(Error::EmptyReport("summary list"));
    }
    match format {
        Format::Csv => csv_string(|w| {
            w.write_record(["partition", "game_count", "classical", "reported_quantum", "max_separation", "witness"])?;
            for s in summaries {
                for p in &s.outcome_pairs {
                    w.write_record([
                        s.partition.to_string(),
                        s.game_count.to_string(),
                        real(p.classical.value()),
                        format!("{:.6}", p.quantum()),
                        real(s.max_separation),
                        s.witness.map(|g| g.to_string()).unwrap_or_default(),
                    ])?;
                }
            }
            Ok(())
        }),
        Format::Json => json_string(&summaries.iter().map(SummaryRow::from).collect::<Vec<_>>()),
        Format::Markdown => Ok(summaries_markdown(summaries)),
    }
}

fn angles_cell(row: &AdvantageRow) -> String {
    let a = row.angles;
    format!(
        "θ0 = {}, θ1 = {}, ψ0 = {}, ψ1 = {}",
        format_angle(a.theta0),
        format_angle(a.theta1),
        format_angle(a.psi0),
        format_angle(a.psi1)
    )
}

fn advantage_markdown(rows: &[AdvantageRow]) -> String {
    let mut out = String::from(
        "| Partition | Game (ANF) | Mask | Max. classical success prob. | Strategy | Max. quantum success prob. | Angles | Separation |\n\
         |---|---|---|---|---|---|---|---|\n",
    );
    for r in rows {
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {:.6} | {} | {:.9} |",
            r.partition,
            r.anf,
            r.game,
            r.classical,
            r.strategy,
            r.family,
            angles_cell(r),
            r.separation
        )
        .unwrap();
    }
    out
}

pub fn render_advantage(rows: &[AdvantageRow], format: Format) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::EmptyReport("advantage table"));
    }
    match format {
        Format::Csv => csv_string(|w| {
            w.write_record([
                "partition", "mask_hex", "anf", "classical", "strategy", "family_max", "t_star", "theta0", "theta1",
                "psi0", "psi1", "separation",
            ])?;
            for r in rows {
                let a = r.angles;
                w.write_record([
                    r.partition.to_string(),
                    r.game.to_string(),
                    r.anf.to_string(),
                    real(r.classical.value()),
                    r.strategy.to_string(),
                    real(r.family),
                    real(r.t_star),
                    real(a.theta0),
                    real(a.theta1),
                    real(a.psi0),
                    real(a.psi1),
                    real(r.separation),
                ])?;
            }
            Ok(())
        }),
        Format::Json => json_string(rows),
        Format::Markdown => Ok(advantage_markdown(rows)),
    }
}

fn pair_text(p: &OutcomePair) -> String {
    format!("({}, {:.6})", p.classical, p.quantum())
}

pub fn discrepancy_line(d: &Discrepancy) -> String {
    match d {
        Discrepancy::ExtraPair { partition, pair } => {
            format!("{partition}: found {} which no published row lists", pair_text(pair))
        }
        Discrepancy::MissingPair { partition, row } => format!(
            "{partition}: published row ({}, {}) not found in the scan",
            row.classical, row.quantum
        ),
        Discrepancy::UntabulatedPartition {
            partition,
            game_count,
            pairs,
        } => format!(
            "{partition}: {game_count} games, no published rows; found {}",
            pairs.iter().map(pair_text).collect::<Vec<_>>().join(", ")
        ),
    }
}

/// The full Markdown summary: partitions, advantage table and the
/// differences from the published rows.
pub fn render_summary_document(
    summaries: &[PartitionSummary],
    advantage: &[AdvantageRow],
    discrepancies: &[Discrepancy],
) -> Result<String> {
    let mut out = String::from("# Partition summary\n\n");
    out.push_str(&render_summaries(summaries, Format::Markdown)?);
    out.push_str("\n## Quantum advantage\n\n");
    if advantage.is_empty() {
        out.push_str("No partition shows a positive separation.\n");
    } else {
        out.push_str(&advantage_markdown(advantage));
    }
    out.push_str("\n## Discrepancies\n\n");
    if discrepancies.is_empty() {
        out.push_str("None.\n");
    }
    for d in discrepancies {
        writeln!(out, "- {}", discrepancy_line(d)).unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct SummaryDocument<'a> {
    summaries: Vec<SummaryRow>,
    advantage: &'a [AdvantageRow],
    discrepancies: Vec<String>,
}

/// JSON counterpart of [`render_summary_document`].
pub fn render_summary_json(
    summaries: &[PartitionSummary],
    advantage: &[AdvantageRow],
    discrepancies: &[Discrepancy],
) -> Result<String> {
    if summaries.is_empty() {
        return Err(Error::EmptyReport("summary list"));
    }
    json_string(&SummaryDocument {
        summaries: summaries.iter().map(SummaryRow::from).collect(),
        advantage,
        discrepancies: discrepancies.iter().map(discrepancy_line).collect(),
    })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn emit_records(records: &[ScanRecord], format: Format, path: &Path) -> Result<()> {
    write_file(path, &render_records(records, format)?)
}

pub fn emit_summaries(summaries: &[PartitionSummary], format: Format, path: &Path) -> Result<()> {
    write_file(path, &render_summaries(summaries, format)?)
}

pub fn emit_advantage(rows: &[AdvantageRow], format: Format, path: &Path) -> Result<()> {
    write_file(path, &render_advantage(rows, format)?)
}
