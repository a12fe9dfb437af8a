//! Command-line front end. Data goes to stdout or the `--csv`/`--json`
//! files; diagnostics and errors go to stderr as
//! `error: code=<n> kind=<kind>: <message>`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::sieve_primes;
use crate::chebotarev::{check_bound_in, FieldLabel};
use crate::density::{rho_count_in, sweep, DensityRow, SweepCheckpoint, SweepMode, SweepOptions};
use crate::error::{Error, Result};
use crate::redei::{admissible_pair, oracle_check, redei_symbol_detailed};
use crate::report::{bound_table, pairs_table, rho_table, triples_table, Table};

/// Exit code for a redei/oracle disagreement.
pub const EXIT_DISAGREEMENT: i32 = 6;

#[derive(Debug, Parser)]
#[command(
    name = "redei",
    version,
    about = "Rédei triple symbols and Borromean prime densities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the Rédei symbol [p1,p2,p3].
    Symbol { p1: u64, p2: u64, p3: u64 },
    /// Normalized solution of x^2 - p1 y^2 - p2 z^2 = 0.
    Solve { p1: u64, p2: u64 },
    /// Linked-pair density table (limit 1/8).
    Pairs(TableArgs),
    /// Borromean-triple density table (limit 1/128).
    Triples {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Per-pair count of third primes with symbol -1 (limit 1/16).
    Rho {
        p1: u64,
        p2: u64,
        #[command(flatten)]
        table: TableArgs,
    },
    /// GRH-effective Chebotarev bound against split-prime counts.
    Bound {
        p1: u64,
        p2: u64,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Compare symbol evaluation with the quartic splitting oracle.
    OracleCheck {
        #[arg(long)]
        max: u64,
    },
    /// Resumable density sweep.
    Sweep {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Stop after this many work ranges (the checkpoint keeps progress).
        #[arg(long)]
        stop_after: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Pairs,
    Triples,
}

impl From<ModeArg> for SweepMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Pairs => SweepMode::Pairs,
            ModeArg::Triples => SweepMode::Triples,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Largest cutoff (primes are counted strictly below it).
    #[arg(long)]
    pub max_x: Option<u64>,
    /// Either a step (`500`, with --max-x) or a comma-separated list of cutoffs.
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

/// Validated run parameters shared by the table commands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub grid: Vec<u64>,
    pub threads: usize,
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
}

impl TableArgs {
    pub fn resolve(&self) -> Result<RunConfig> {
        if self.threads == 0 {
            return Err(Error::InvalidArgument(
                "--threads must be at least 1".into(),
            ));
        }
        let grid = resolve_grid(self.max_x, self.grid.as_deref())?;
        Ok(RunConfig {
            grid,
            threads: self.threads,
            csv: self.csv.clone(),
            json: self.json.clone(),
        })
    }
}

fn resolve_grid(max_x: Option<u64>, grid: Option<&str>) -> Result<Vec<u64>> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidArgument(format!("bad cutoff {s:?}")))
    };
    let cutoffs = match (max_x, grid) {
        (None, None) => {
            return Err(Error::InvalidArgument(
                "--max-x or --grid is required".into(),
            ))
        }
        (Some(max), None) => vec![max],
        (max, Some(g)) if g.contains(',') => {
            let mut list = g.split(',').map(parse).collect::<Result<Vec<_>>>()?;
            if let Some(max) = max {
                match list.last() {
                    Some(&last) if max < last => {
                        return Err(Error::InvalidArgument(format!(
                            "--max-x {max} is below the last grid cutoff {last}"
                        )))
                    }
                    Some(&last) if max == last => {}
                    _ => list.push(max),
                }
            }
            list
        }
        (None, Some(g)) => vec![parse(g)?],
        (Some(max), Some(g)) => {
            let step = parse(g)?;
            if step == 0 {
                return Err(Error::InvalidArgument("grid step must be positive".into()));
            }
            let mut list: Vec<u64> = (1..).map(|k| k * step).take_while(|&x| x <= max).collect();
            if list.last() != Some(&max) {
                list.push(max);
            }
            list
        }
    };
    crate::density::check_grid(&cutoffs)?;
    Ok(cutoffs)
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: code={} kind={}: {}", e.exit_code(), e.kind(), e);
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Symbol { p1, p2, p3 } => cmd_symbol(p1, p2, p3),
        Command::Solve { p1, p2 } => {
            let pair = admissible_pair(p1, p2)?;
            println!("{}", pair.solution());
            Ok(0)
        }
        Command::Pairs(table) => cmd_sweep(SweepMode::Pairs, &table.resolve()?, None, None),
        Command::Triples { table, checkpoint } => cmd_sweep(
            SweepMode::Triples,
            &table.resolve()?,
            checkpoint.as_deref(),
            None,
        ),
        Command::Sweep {
            mode,
            table,
            checkpoint,
            stop_after,
        } => cmd_sweep(
            mode.into(),
            &table.resolve()?,
            checkpoint.as_deref(),
            stop_after,
        ),
        Command::Rho { p1, p2, table } => cmd_rho(p1, p2, &table.resolve()?),
        Command::Bound { p1, p2, table } => cmd_bound(p1, p2, &table.resolve()?),
        Command::OracleCheck { max } => cmd_oracle_check(max),
    }
}

fn cmd_symbol(p1: u64, p2: u64, p3: u64) -> Result<i32> {
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(Error::InadmissiblePair {
            p1,
            p2,
            reason: "primes not distinct".into(),
        });
    }
    let pair = admissible_pair(p1, p2)?;
    let (value, used) = redei_symbol_detailed(&pair, p3)?;
    println!("[{p1},{p2},{p3}] = {value}");
    println!("solution {used}");
    println!("borromean {}", value == crate::arith::Symbol::MinusOne);
    Ok(0)
}

fn cmd_sweep(
    mode: SweepMode,
    cfg: &RunConfig,
    checkpoint: Option<&Path>,
    stop_after: Option<usize>,
) -> Result<i32> {
    let resume = match checkpoint {
        Some(path) if path.exists() => Some(SweepCheckpoint::load(path)?),
        _ => None,
    };
    let opts = SweepOptions {
        threads: cfg.threads,
        checkpoint_path: checkpoint.map(Path::to_path_buf),
        stop_after_ranges: stop_after,
    };
    let out = sweep(&cfg.grid, mode, resume, &opts)?;
    if !out.complete {
        eprintln!(
            "sweep incomplete: {} of {} units done; rerun with the same --checkpoint to resume",
            out.checkpoint.completed_units(),
            out.checkpoint.total_units
        );
        return Ok(0);
    }
    let table = match mode {
        SweepMode::Pairs => pairs_table(
            &out.rows
                .iter()
                .filter_map(|r| match r {
                    DensityRow::Pairs(p) => Some(*p),
                    _ => None,
                })
                .collect::<Vec<_>>(),
        ),
        SweepMode::Triples => triples_table(
            &out.rows
                .iter()
                .filter_map(|r| match r {
                    DensityRow::Triples(t) => Some(*t),
                    _ => None,
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(&table, cfg)?;
    Ok(0)
}

fn cmd_rho(p1: u64, p2: u64, cfg: &RunConfig) -> Result<i32> {
    let pair = admissible_pair(p1, p2)?;
    let primes = sieve_primes(*cfg.grid.last().unwrap());
    let rows = cfg
        .grid
        .iter()
        .map(|&x| Ok((x, primes.pi(x), rho_count_in(&pair, &primes, x)?)))
        .collect::<Result<Vec<_>>>()?;
    emit(&rho_table(&rows), cfg)?;
    Ok(0)
}

fn cmd_bound(p1: u64, p2: u64, cfg: &RunConfig) -> Result<i32> {
    let pair = admissible_pair(p1, p2)?;
    let primes = sieve_primes(*cfg.grid.last().unwrap());
    let mut rows = Vec::new();
    for &x in &cfg.grid {
        for label in FieldLabel::ALL {
            let report = check_bound_in(&pair, &primes, x, label)?;
            if !report.within_bound {
                eprintln!(
                    "anomaly: x={x} label={label} |{} - {}| exceeds {}",
                    report.empirical, report.main_term, report.error_bound
                );
            }
            rows.push(report);
        }
    }
    emit(&bound_table(&rows), cfg)?;
    Ok(0)
}

fn cmd_oracle_check(max: u64) -> Result<i32> {
    let rep = oracle_check(max)?;
    println!(
        "cases={} substituted={} disagreements={}",
        rep.cases,
        rep.substituted,
        rep.disagreements.len()
    );
    if rep.disagreements.is_empty() {
        return Ok(0);
    }
    for [p1, p2, p3] in &rep.disagreements {
        eprintln!("disagreement: [{p1},{p2},{p3}]");
    }
    eprintln!(
        "error: code={EXIT_DISAGREEMENT} kind=oracle-disagreement: {} triples",
        rep.disagreements.len()
    );
    Ok(EXIT_DISAGREEMENT)
}

fn emit(table: &Table, cfg: &RunConfig) -> Result<()> {
    if let Some(path) = &cfg.csv {
        fs::write(path, table.to_csv())?;
    }
    if let Some(path) = &cfg.json {
        fs::write(path, table.to_json())?;
    }
    if cfg.csv.is_none() && cfg.json.is_none() {
        std::io::stdout().write_all(table.to_csv().as_bytes())?;
    }
    Ok(())
}
