//! Exact counts behind the density limits: linked pairs (→ 1/8), Borromean
//! triples (→ 1/128), the per-pair count ρ (→ 1/16) and the character sum E(x).
//!
//! Everything counts primes strictly below the cutoff. The functions here are
//! direct enumerations; [`sweep`] is the chunked, resumable engine used for
//! convergence tables, and the two are checked against each other in tests.

mod checkpoint;
mod sweep;

pub use checkpoint::{SweepCheckpoint, FORMAT_VERSION};
pub use sweep::{check_grid, sweep, DensityRow, SweepMode, SweepOptions, SweepOutcome, RANGE_SIZE};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{sieve_primes, symbol::legendre_fast, PrimeList, Symbol};
use crate::error::Result;
use crate::redei::AdmissiblePair;

pub const PAIR_DENSITY: f64 = 0.125;
pub const RHO_DENSITY: f64 = 0.0625;
pub const BORROMEAN_DENSITY: f64 = 1.0 / 128.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairCounts {
    pub x: u64,
    pub pi_x: u64,
    pub pi_x_1mod4: u64,
    /// Ordered `(p₁, p₂)`, `p₁ ≠ p₂`, both ≡ 1 (4), `(p₁/p₂) = +1`.
    pub ordered_linked: u64,
    pub ratio: f64,
}

impl PairCounts {
    pub(crate) fn assemble(x: u64, pi_x: u64, pi_x_1mod4: u64, ordered_linked: u64) -> Self {
        let ratio = if pi_x == 0 {
            0.0
        } else {
            ordered_linked as f64 / (pi_x as f64 * pi_x as f64)
        };
        PairCounts {
            x,
            pi_x,
            pi_x_1mod4,
            ordered_linked,
            ratio,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TripleCounts {
    pub x: u64,
    pub pi_x: u64,
    /// `C(π(x), 3)`.
    pub unordered_distinct: u64,
    pub linked_unordered: u64,
    /// π_Borr(x).
    pub borromean_unordered: u64,
    pub ratio_all: f64,
    pub ratio_linked: f64,
}

impl TripleCounts {
    pub(crate) fn assemble(x: u64, pi_x: u64, linked: u64, borromean: u64) -> Self {
        let unordered_distinct = binomial3(pi_x);
        let div = |a: u64, b: u64| if b == 0 { 0.0 } else { a as f64 / b as f64 };
        TripleCounts {
            x,
            pi_x,
            unordered_distinct,
            linked_unordered: linked,
            borromean_unordered: borromean,
            ratio_all: div(borromean, unordered_distinct),
            ratio_linked: div(borromean, linked),
        }
    }
}

pub fn binomial3(n: u64) -> u64 {
    if n < 3 {
        return 0;
    }
    let n = n as u128;
    (n * (n - 1) * (n - 2) / 6) as u64
}

fn ones_below(primes: &PrimeList, x: u64) -> Vec<u64> {
    primes
        .primes()
        .iter()
        .zip(primes.residues())
        .take_while(|(&p, _)| p < x)
        .filter(|(_, &r)| r == 1)
        .map(|(&p, _)| p)
        .collect()
}

pub fn count_pairs(x: u64) -> PairCounts {
    count_pairs_in(&sieve_primes(x), x)
}

/// As [`count_pairs`] with a sieve whose cutoff is at least `x`.
pub fn count_pairs_in(primes: &PrimeList, x: u64) -> PairCounts {
    let ones = ones_below(primes, x);
    let ordered: u64 = ones
        .par_iter()
        .map(|&p| {
            ones.iter()
                .filter(|&&q| q != p && legendre_fast(p, q) == Symbol::One)
                .count() as u64
        })
        .sum();
    PairCounts::assemble(x, primes.pi(x), ones.len() as u64, ordered)
}

/// `E(x) = Σ_{p₂} Σ_{p₁} (p₁/p₂)` over primes ≡ 1 (4) below `x`, diagonal
/// (zero) terms included.
pub fn character_sum_e(x: u64) -> i64 {
    let ones = ones_below(&sieve_primes(x), x);
    ones.par_iter()
        .map(|&p2| {
            ones.iter()
                .map(|&p1| legendre_fast(p1, p2).value() as i64)
                .sum::<i64>()
        })
        .sum()
}

/// `E(x)` with the summation order swapped: `Σ_{p₁} Σ_{p₂} (p₁/p₂)`.
pub fn character_sum_e_transposed(x: u64) -> i64 {
    let ones = ones_below(&sieve_primes(x), x);
    ones.par_iter()
        .map(|&p1| {
            ones.iter()
                .map(|&p2| legendre_fast(p1, p2).value() as i64)
                .sum::<i64>()
        })
        .sum()
}

/// ρ(x): primes `p < x`, `p ∉ {p₁, p₂}`, `p ≡ 1 (4)`, `(p₁/p) = (p₂/p) = +1`
/// and `[p₁, p₂, p] = −1`.
pub fn rho_count(pair: &AdmissiblePair, x: u64) -> Result<u64> {
    rho_count_in(pair, &sieve_primes(x), x)
}

pub fn rho_count_in(pair: &AdmissiblePair, primes: &PrimeList, x: u64) -> Result<u64> {
    let mut count = 0;
    for p in split_candidates(pair, primes, x) {
        if pair.evaluate(p)?.0 == Symbol::MinusOne {
            count += 1;
        }
    }
    Ok(count)
}

/// Primes `p < x` outside `{2, p₁, p₂}` with `p ≡ 1 (4)` and
/// `(p₁/p) = (p₂/p) = +1`: the primes splitting completely in `Q(√p₁, √p₂, √−1)`.
pub(crate) fn split_candidates<'a>(
    pair: &'a AdmissiblePair,
    primes: &'a PrimeList,
    x: u64,
) -> impl Iterator<Item = u64> + 'a {
    let (p1, p2) = (pair.p1(), pair.p2());
    primes
        .primes()
        .iter()
        .zip(primes.residues())
        .take_while(move |(&p, _)| p < x)
        .filter(move |(&p, &r)| {
            r == 1
                && p != p1
                && p != p2
                && legendre_fast(p1, p) == Symbol::One
                && legendre_fast(p2, p) == Symbol::One
        })
        .map(|(&p, _)| p)
}

/// `legendre(ones[i], ones[j]) = +1` for `i < j`, row-major upper triangle.
pub(crate) struct LinkTable {
    n: usize,
    bits: Vec<bool>,
}

impl LinkTable {
    pub(crate) fn new(ones: &[u64]) -> Self {
        let n = ones.len();
        let rows: Vec<Vec<bool>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| j > i && legendre_fast(ones[i], ones[j]) == Symbol::One)
                    .collect()
            })
            .collect();
        LinkTable {
            n,
            bits: rows.concat(),
        }
    }

    #[inline]
    pub(crate) fn linked(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < j);
        self.bits[i * self.n + j]
    }
}

/// Unordered triple counts by direct enumeration over `p₁ < p₂ < p₃`, the
/// symbol taken as `[p₁, p₂, p₃]` from the pair `(p₁, p₂)`.
pub fn count_triples(x: u64) -> Result<TripleCounts> {
    let primes = sieve_primes(x);
    let ones = ones_below(&primes, x);
    let table = LinkTable::new(&ones);
    let per_row: Vec<(u64, u64)> = (0..ones.len())
        .into_par_iter()
        .map(|i| -> Result<(u64, u64)> {
            let (mut linked, mut borromean) = (0, 0);
            for j in i + 1..ones.len() {
                if !table.linked(i, j) {
                    continue;
                }
                let pair = AdmissiblePair::new(ones[i], ones[j])?;
                for k in j + 1..ones.len() {
                    if table.linked(i, k) && table.linked(j, k) {
                        linked += 1;
                        if pair.evaluate(ones[k])?.0 == Symbol::MinusOne {
                            borromean += 1;
                        }
                    }
                }
            }
            Ok((linked, borromean))
        })
        .collect::<Result<_>>()?;
    let (linked, borromean) = per_row
        .iter()
        .fold((0, 0), |(a, b), &(l, r)| (a + l, b + r));
    Ok(TripleCounts::assemble(x, primes.pi(x), linked, borromean))
}
