use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ones_below, LinkTable, PairCounts, SweepCheckpoint, TripleCounts};
use crate::arith::{sieve_primes, symbol::legendre_fast, PrimeList, Symbol};
use crate::error::{Error, Result};
use crate::redei::AdmissiblePair;

/// Units per checkpoint range.
pub const RANGE_SIZE: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    /// One unit per prime `p ≡ 1 (4)` (row of the pair table).
    Pairs,
    /// One unit per linked pair `p₁ < p₂`.
    Triples,
}

impl SweepMode {
    pub fn counter_names(self) -> &'static [&'static str] {
        match self {
            SweepMode::Pairs => &["ordered_linked"],
            SweepMode::Triples => &["linked", "borromean"],
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub threads: usize,
    /// Written after every batch of ranges.
    pub checkpoint_path: Option<PathBuf>,
    /// Stop after this many new ranges (simulated interruption).
    pub stop_after_ranges: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            threads: 1,
            checkpoint_path: None,
            stop_after_ranges: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DensityRow {
    Pairs(PairCounts),
    Triples(TripleCounts),
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    /// One row per cutoff; empty unless the sweep is complete.
    pub rows: Vec<DensityRow>,
    pub complete: bool,
    pub checkpoint: SweepCheckpoint,
}

struct Plan {
    mode: SweepMode,
    grid: Vec<u64>,
    primes: PrimeList,
    ones: Vec<u64>,
    table: Option<LinkTable>,
    /// Linked index pairs `(i, j)`, `i < j`, lexicographic (triples mode).
    pairs: Vec<(u32, u32)>,
}

impl Plan {
    fn new(mode: SweepMode, grid: &[u64]) -> Self {
        let max = *grid.last().unwrap();
        let primes = sieve_primes(max);
        let ones = ones_below(&primes, max);
        let (table, pairs) = match mode {
            SweepMode::Pairs => (None, Vec::new()),
            SweepMode::Triples => {
                let table = LinkTable::new(&ones);
                let n = ones.len();
                let pairs = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| table.linked(i, j))
                    .map(|(i, j)| (i as u32, j as u32))
                    .collect();
                (Some(table), pairs)
            }
        };
        Plan {
            mode,
            grid: grid.to_vec(),
            primes,
            ones,
            table,
            pairs,
        }
    }

    fn total_units(&self) -> u64 {
        match self.mode {
            SweepMode::Pairs => self.ones.len() as u64,
            SweepMode::Triples => self.pairs.len() as u64,
        }
    }

    /// Grid slot of the first cutoff exceeding `p`.
    fn slot(&self, p: u64) -> usize {
        self.grid.partition_point(|&g| g <= p)
    }

    fn run_range(&self, [lo, hi]: [u64; 2]) -> Result<Vec<Vec<u64>>> {
        let width = self.mode.counter_names().len();
        let mut out = vec![vec![0u64; self.grid.len()]; width];
        let ones = &self.ones;
        match self.mode {
            SweepMode::Pairs => {
                for i in lo as usize..hi as usize {
                    let p = ones[i];
                    for &q in &ones[i + 1..] {
                        let both = (legendre_fast(p, q) == Symbol::One) as u64
                            + (legendre_fast(q, p) == Symbol::One) as u64;
                        out[0][self.slot(q)] += both;
                    }
                }
            }
            SweepMode::Triples => {
                let table = self.table.as_ref().expect("triples plan has a table");
                for &(i, j) in &self.pairs[lo as usize..hi as usize] {
                    let (i, j) = (i as usize, j as usize);
                    let pair = AdmissiblePair::new(ones[i], ones[j])?;
                    for k in j + 1..ones.len() {
                        if table.linked(i, k) && table.linked(j, k) {
                            let slot = self.slot(ones[k]);
                            out[0][slot] += 1;
                            if pair.evaluate(ones[k])?.0 == Symbol::MinusOne {
                                out[1][slot] += 1;
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn rows(&self, ck: &SweepCheckpoint) -> Vec<DensityRow> {
        let names = self.mode.counter_names();
        let mut acc = vec![0u64; names.len()];
        self.grid
            .iter()
            .enumerate()
            .map(|(g, &x)| {
                for (a, name) in acc.iter_mut().zip(names) {
                    *a += ck.counters[*name][g];
                }
                let pi_x = self.primes.pi(x);
                match self.mode {
                    SweepMode::Pairs => DensityRow::Pairs(PairCounts::assemble(
                        x,
                        pi_x,
                        self.primes.pi_one_mod_four(x),
                        acc[0],
                    )),
                    SweepMode::Triples => {
                        DensityRow::Triples(TripleCounts::assemble(x, pi_x, acc[0], acc[1]))
                    }
                }
            })
            .collect()
    }
}

pub fn check_grid(grid: &[u64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty cutoff grid".into()));
    }
    if grid[0] < 2 {
        return Err(Error::InvalidArgument("cutoffs must be at least 2".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "cutoff grid must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Counts for every cutoff in `grid`, resumable from `resume`.
///
/// The unit space is cut into ranges of [`RANGE_SIZE`]; batches of ranges run
/// on a pool of `opts.threads` workers and merge into the checkpoint by
/// integer addition, so the result does not depend on thread count or on
/// where a previous run stopped.
pub fn sweep(
    grid: &[u64],
    mode: SweepMode,
    resume: Option<SweepCheckpoint>,
    opts: &SweepOptions,
) -> Result<SweepOutcome> {
    check_grid(grid)?;
    if opts.threads == 0 {
        return Err(Error::InvalidArgument(
            "thread count must be at least 1".into(),
        ));
    }
    let plan = Plan::new(mode, grid);
    let total = plan.total_units();
    let mut ck = match resume {
        Some(ck) => {
            ck.validate(mode, grid, total)?;
            ck
        }
        None => SweepCheckpoint::empty(mode, grid, total),
    };

    let mut pending = ck.pending(RANGE_SIZE);
    if let Some(limit) = opts.stop_after_ranges {
        pending.truncate(limit);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;

    for batch in pending.chunks(opts.threads * 2) {
        let results: Vec<Vec<Vec<u64>>> = pool.install(|| {
            batch
                .par_iter()
                .map(|&r| plan.run_range(r))
                .collect::<Result<_>>()
        })?;
        for (&range, counters) in batch.iter().zip(&results) {
            ck.absorb(range, counters);
        }
        if let Some(path) = &opts.checkpoint_path {
            ck.save(path)?;
        }
    }
    if let Some(path) = &opts.checkpoint_path {
        ck.save(path)?;
    }

    let complete = ck.is_complete();
    let rows = if complete { plan.rows(&ck) } else { Vec::new() };
    Ok(SweepOutcome {
        rows,
        complete,
        checkpoint: ck,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{count_pairs, count_triples};

    #[test]
    fn single_cutoff_matches_direct_counts() {
        let out = sweep(&[100], SweepMode::Pairs, None, &SweepOptions::default()).unwrap();
        assert!(out.complete);
        assert_eq!(out.rows, vec![DensityRow::Pairs(count_pairs(100))]);

        let out = sweep(&[1500], SweepMode::Triples, None, &SweepOptions::default()).unwrap();
        assert_eq!(
            out.rows,
            vec![DensityRow::Triples(count_triples(1500).unwrap())]
        );
    }

    #[test]
    fn grid_rows_match_direct_counts() {
        let grid = [50, 300, 1000, 2500];
        let opts = SweepOptions {
            threads: 3,
            ..Default::default()
        };
        let pairs = sweep(&grid, SweepMode::Pairs, None, &opts).unwrap();
        let triples = sweep(&grid, SweepMode::Triples, None, &opts).unwrap();
        for (g, &x) in grid.iter().enumerate() {
            assert_eq!(pairs.rows[g], DensityRow::Pairs(count_pairs(x)));
            assert_eq!(
                triples.rows[g],
                DensityRow::Triples(count_triples(x).unwrap())
            );
        }
    }

    #[test]
    fn rejects_bad_grids() {
        let o = SweepOptions::default();
        assert!(sweep(&[], SweepMode::Pairs, None, &o).is_err());
        assert!(sweep(&[100, 100], SweepMode::Pairs, None, &o).is_err());
        assert!(sweep(&[1, 100], SweepMode::Pairs, None, &o).is_err());
        let zero = SweepOptions {
            threads: 0,
            ..Default::default()
        };
        assert!(sweep(&[100], SweepMode::Pairs, None, &zero).is_err());
    }

    #[test]
    fn interrupted_then_resumed_matches() {
        let grid = [1000, 2000, 3000];
        let full = sweep(&grid, SweepMode::Triples, None, &SweepOptions::default()).unwrap();
        assert!(full.checkpoint.total_units > 2 * RANGE_SIZE);
        let stop = SweepOptions {
            stop_after_ranges: Some(1),
            ..Default::default()
        };
        let part = sweep(&grid, SweepMode::Triples, None, &stop).unwrap();
        assert!(!part.complete && part.rows.is_empty());
        assert_eq!(part.checkpoint.ranges, vec![[0, RANGE_SIZE]]);
        let rest = sweep(
            &grid,
            SweepMode::Triples,
            Some(part.checkpoint),
            &SweepOptions {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(rest.complete);
        assert_eq!(rest.rows, full.rows);
        assert_eq!(rest.checkpoint, full.checkpoint);
    }

    #[test]
    fn mismatched_resume_is_rejected() {
        let part = sweep(&[500], SweepMode::Pairs, None, &SweepOptions::default()).unwrap();
        let err = sweep(
            &[600],
            SweepMode::Pairs,
            Some(part.checkpoint),
            &SweepOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::CheckpointInvalid(_)));
    }
}
