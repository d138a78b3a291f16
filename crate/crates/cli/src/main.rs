//! Batch verification sweeps over unipotent block combinatorics and
//! character-table fixtures. Reports are JSON lines, one point per line.

mod sweeps;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ublocks::arith::Series;
use ublocks::symbols::Table2Column;

#[derive(Parser, Debug)]
#[command(name = "ublocks", version, about = "Principal-block degree checks for finite classical groups")]
struct Cli {
    #[command(flatten)]
    config: SweepConfig,
    #[command(subcommand)]
    command: Command,
}

/// Sweep bounds and I/O. Bounds left unset take the subcommand's default.
#[derive(Args, Debug, Clone)]
pub struct SweepConfig {
    /// Largest rank for partition sweeps [default: 40; 60 for table2 lifts]
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    /// Largest rank for group sweeps [default: 10; 12 for table2 symbol lifts]
    #[arg(long, global = true)]
    pub rank_max: Option<usize>,
    /// Largest field size r (prime powers only)
    #[arg(long, global = true, default_value_t = 9)]
    pub r_max: u64,
    #[arg(long, global = true, default_value_t = 13)]
    pub p_max: u64,
    #[arg(long, global = true, default_value_t = 13)]
    pub q_max: u64,
    /// Largest e_q for the table of cores
    #[arg(long, global = true, default_value_t = 12)]
    pub eq_max: usize,
    /// Worker threads (0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Report file (JSON lines); stdout when absent
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Fixture directory holding tables/ and oracles/
    #[arg(long, global = true, env = "UBLOCKS_FIXTURES", default_value = "fixtures")]
    pub fixtures: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Linear and unitary groups with e_p in {1, 2}: explicit and brute-force witnesses
    Lemma24,
    /// Group-parameter sweep restricted to points where e_p | e_q applies
    Lemma25,
    /// Table of cores: entries, lifts and twists
    Table2 {
        /// Check a single cell: GL, B/C, SO+ or SO-
        #[arg(long)]
        column: Option<Table2Column>,
        #[arg(long)]
        e_p: Option<usize>,
        #[arg(long)]
        e_q: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Witness search at one parameter point, or over the whole grid
    Blocks {
        #[arg(long)]
        series: Option<Series>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Principal blocks and sporadic exceptions from a character table
    Chartab {
        /// Table file, fixture stem (e.g. m11) or directory of tables
        path: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Cross-check blocks and degrees against the recorded fixture oracles
    Oracle,
}

/// Exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    VerificationFailure,
    InputError,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        ExitCode::from(match s {
            Status::Pass => 0,
            Status::VerificationFailure => 1,
            Status::InputError => 2,
        })
    }
}

/// Line-oriented report sink.
pub struct Report {
    out: Box<dyn Write>,
}

impl Report {
    fn open(path: &Option<PathBuf>) -> io::Result<Report> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Report { out })
    }

    pub fn line<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.out, value)?;
        self.out.write_all(b"\n")
    }

    fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let cfg = cli.config;
    rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build_global().ok();
    let mut report = Report::open(&cfg.out)?;
    let status = match cli.command {
        Command::Lemma24 => sweeps::lemma24(&cfg, &mut report)?,
        Command::Lemma25 => sweeps::group_grid(&cfg, &mut report, true)?,
        Command::Table2 { column, e_p, e_q, m } => sweeps::table2(&cfg, &mut report, column, e_p, e_q, m)?,
        Command::Blocks { series, n, r, p, q } => match (series, n, r, p, q) {
            (Some(series), Some(n), Some(r), Some(p), Some(q)) => {
                sweeps::blocks_point(&mut report, series, n, r, p, q)?
            }
            (None, None, None, None, None) => sweeps::group_grid(&cfg, &mut report, false)?,
            _ => anyhow::bail!(InputError("blocks needs all of --series --n --r --p --q, or none".into())),
        },
        Command::Chartab { path, p, q } => sweeps::chartab(&cfg, &mut report, &path, p, q)?,
        Command::Oracle => sweeps::oracle(&cfg, &mut report)?,
    };
    report.finish()?;
    Ok(status)
}

/// Marks an error as caused by the input rather than a failed check.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some()
                || e.downcast_ref::<ublocks::Error>().is_some()
                || e.downcast_ref::<io::Error>().is_some()
            {
                Status::InputError.into()
            } else {
                Status::VerificationFailure.into()
            }
        }
    }
}
