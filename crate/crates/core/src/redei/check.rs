use rayon::prelude::*;

use super::{redei_symbol, splitting_oracle, AdmissiblePair};
use crate::arith::{sieve_primes, symbol::legendre_fast, Symbol};
use crate::error::Result;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleCheckReport {
    /// Admissible ordered triples examined.
    pub cases: u64,
    /// Cases where the oracle ran on a substitute solution because
    /// `p₃ | y₀z₀`.
    pub substituted: u64,
    pub disagreements: Vec<[u64; 3]>,
}

/// Compares [`redei_symbol`] with [`splitting_oracle`] on every admissible
/// ordered triple of primes below `max`.
pub fn oracle_check(max: u64) -> Result<OracleCheckReport> {
    let ones = sieve_primes(max).one_mod_four();
    let parts: Vec<OracleCheckReport> = ones
        .par_iter()
        .map(|&p1| -> Result<OracleCheckReport> {
            let mut rep = OracleCheckReport::default();
            for &p2 in &ones {
                if p2 == p1 || legendre_fast(p2, p1) != Symbol::One {
                    continue;
                }
                let pair = AdmissiblePair::new(p1, p2)?;
                let sol = pair.solution();
                for &p3 in &ones {
                    if p3 == p1
                        || p3 == p2
                        || legendre_fast(p1, p3) != Symbol::One
                        || legendre_fast(p2, p3) != Symbol::One
                    {
                        continue;
                    }
                    rep.cases += 1;
                    let symbol = redei_symbol(&pair, p3)?;
                    let q = p3 as i64;
                    let split = if sol.y % q == 0 || sol.z % q == 0 {
                        rep.substituted += 1;
                        splitting_oracle(&pair.avoiding(p3, true)?, p3)?
                    } else {
                        splitting_oracle(&pair, p3)?
                    };
                    if symbol.is_one() != split {
                        rep.disagreements.push([p1, p2, p3]);
                    }
                }
            }
            Ok(rep)
        })
        .collect::<Result<_>>()?;
    Ok(parts
        .into_iter()
        .fold(OracleCheckReport::default(), |mut acc, r| {
            acc.cases += r.cases;
            acc.substituted += r.substituted;
            acc.disagreements.extend(r.disagreements);
            acc
        }))
}
