use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nlgames::census::census;
use nlgames::report::{self, Format};
use nlgames::scan::{advantage_table, discrepancies, scan, summarize};
use nlgames::simulate::{run, SimulationConfig, SimulationMode};
use nlgames::{analyze, from_anf, to_anf, AngleSet, Error, GameFilter, GameTable, JointStrategy};

/// Classical and entangled optima of two-player binary nonlocal games.
#[derive(Parser)]
#[command(name = "nlgames", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one game and print the result as JSON.
    Analyze(GameSource),
    /// Analyze every game and write records and a partition summary.
    Scan(ScanArgs),
    /// Play a game repeatedly against a seeded random referee.
    Simulate(SimulateArgs),
    /// Convert between a win mask and its ANF.
    Anf(GameSource),
    /// Count composed two-variable function pairs by weight class.
    #[command(name = "verify-nga19")]
    VerifyNga19,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GameSource {
    /// Win mask, 0x-prefixed hex or decimal (bit 8x+4y+2a+b set = win).
    #[arg(long)]
    mask: Option<String>,
    /// Algebraic normal form of f, where f = 0 means the outcome wins.
    #[arg(long)]
    anf: Option<String>,
}

impl GameSource {
    fn game(&self) -> Result<GameTable, Error> {
        match (&self.mask, &self.anf) {
            (Some(m), _) => m.parse(),
            (None, Some(a)) => Ok(from_anf(a.parse()?)),
            (None, None) => unreachable!("clap requires one game source"),
        }
    }
}

#[derive(Args)]
struct ScanArgs {
    /// Per-game records.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Partition summary, advantage table and discrepancies; JSON when the
    /// path ends in .json, Markdown otherwise. Printed to stdout if omitted.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Format of the records file: csv, json or markdown.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Include games where some input has no winning outcome.
    #[arg(long)]
    include_inadmissible: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Classical,
    Quantum,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    source: GameSource,
    #[arg(long, value_enum)]
    mode: Mode,
    /// Deterministic strategy, e.g. "a=0, b=!y".
    #[arg(long)]
    strategy: Option<String>,
    /// Four angles theta0,theta1,psi0,psi1, e.g. "0,pi/4,pi/8,7pi/8".
    #[arg(long, allow_hyphen_values = true)]
    angles: Option<String>,
    #[arg(long, default_value_t = 100_000)]
    rounds: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } => Failure::Io(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn print_json(value: &serde_json::Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(Error::from)?;
    println_out(&text)
}

fn println_out(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}").map_err(|e| Failure::Io(format!("stdout: {e}")))
}

fn cmd_analyze(source: &GameSource) -> Result<(), Failure> {
    let a = analyze(source.game()?);
    let strategies: Vec<String> = a.classical.maximizers.iter().map(JointStrategy::to_string).collect();
    print_json(&json!({
        "mask": a.game.to_string(),
        "anf": a.anf.to_string(),
        "partition": a.partition.to_string(),
        "admissible": a.admissible,
        "inconsistent": a.inconsistent,
        "classical": {
            "value": a.classical.max_probability.value(),
            "strategies": strategies,
        },
        "quantum": {
            "family": a.family.value,
            "reported": a.values.reported,
            "angles": a.family.angles,
            "angles_text": a.family.angles.to_string(),
            "t_star": a.family.t_star,
        },
        "separation": a.separation(),
    }))
}

fn cmd_scan(args: &ScanArgs) -> Result<(), Failure> {
    let format: Format = args.format.parse()?;
    let filter = if args.include_inadmissible {
        GameFilter::All
    } else {
        GameFilter::AdmissibleOnly
    };
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let records = scan(filter, jobs)?;
    if let Some(path) = &args.out {
        report::emit_records(&records, format, path)?;
    }

    let summaries = summarize(&records)?;
    let advantage = advantage_table(&summaries);
    let found = discrepancies(&summaries);
    let document = match &args.summary {
        Some(path) if Format::from_path(path) == Format::Json => {
            report::render_summary_json(&summaries, &advantage, &found)?
        }
        _ => report::render_summary_document(&summaries, &advantage, &found)?,
    };
    match &args.summary {
        Some(path) => report::write_file(path, &document)?,
        None => println_out(document.trim_end())?,
    }
    Ok(())
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), Failure> {
    let mode = match (args.mode, &args.strategy, &args.angles) {
        (Mode::Classical, Some(s), None) => SimulationMode::Classical(s.parse()?),
        (Mode::Quantum, None, Some(a)) => SimulationMode::Quantum(AngleSet::parse_list(a)?),
        (Mode::Classical, _, _) => {
            return Err(Failure::Usage("classical mode takes --strategy and no --angles".into()))
        }
        (Mode::Quantum, _, _) => return Err(Failure::Usage("quantum mode takes --angles and no --strategy".into())),
    };
    let config = SimulationConfig {
        game: args.source.game()?,
        mode,
        rounds: args.rounds,
        seed: args.seed,
    };
    let report = run(&config)?;
    print_json(&serde_json::to_value(report).map_err(Error::from)?)
}

fn cmd_anf(source: &GameSource) -> Result<(), Failure> {
    let game = source.game()?;
    let text = if source.mask.is_some() {
        to_anf(game).to_string()
    } else {
        game.to_string()
    };
    println_out(&text)
}

fn cmd_verify() -> Result<bool, Failure> {
    let r = census();
    print_json(&serde_json::to_value(&r).map_err(Error::from)?)?;
    Ok(r.passes())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Analyze(source) => cmd_analyze(source),
        Command::Scan(args) => cmd_scan(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Anf(source) => cmd_anf(source),
        Command::VerifyNga19 => match cmd_verify() {
            Ok(true) => Ok(()),
            Ok(false) => {
                eprintln!("census counts differ from the expected values");
                return ExitCode::from(1);
            }
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
