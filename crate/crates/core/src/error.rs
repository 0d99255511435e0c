use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ANF: unexpected character '{found}' at position {position}")]
    AnfUnexpectedChar { found: char, position: usize },

    #[error("invalid ANF: empty term at position {position}")]
    AnfEmptyTerm { position: usize },

    #[error("invalid game mask '{0}': expected 0x-prefixed hex or decimal in 0..=65535")]
    MaskParse(String),

    #[error("invalid strategy '{0}': expected \"a=0|1|x|!x, b=0|1|y|!y\"")]
    StrategyParse(String),

    #[error("invalid angle '{0}': expected a decimal or a p*pi/q expression")]
    AngleParse(String),

    #[error("expected exactly four comma-separated angles, got {0}")]
    AngleCount(usize),

    #[error("the two inputs must differ")]
    EqualInputs,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot summarize an empty record list")]
    EmptyRecords,

    #[error("nothing to emit: {0} is empty")]
    EmptyReport(&'static str),

    #[error("unknown output format '{0}' (expected csv, json or markdown)")]
    UnknownFormat(String),

    #[error("format {format} is not supported for {report}")]
    UnsupportedFormat {
        format: &'static str,
        report: &'static str,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
