//! Rédei triple symbols.
//!
//! For an admissible pair `(p₁, p₂)` a normalized solution `(x₀, y₀, z₀)` of
//! `x² − p₁y² − p₂z² = 0` gives `α₂ = x₀ + y₀√p₁`, and `[p₁, p₂, p₃]` records
//! whether `p₃` splits completely in `k = Q(√p₁, √p₂, √α₂)`. Given
//! `s² ≡ p₁ (mod p₃)`, that happens iff `x₀ + y₀s` is a square mod `p₃`.

mod cache;
mod check;
mod oracle;
mod solve;

pub use cache::PairCache;
pub use check::{oracle_check, OracleCheckReport};
pub use oracle::{quartic_root_count, splitting_oracle};
pub use solve::{
    box_solutions, normalize_solution, normalized_solutions, solve_ternary, TernarySolution,
    WALK_RADIUS,
};

use crate::arith::{is_prime, legendre, sqrt::tonelli_shanks, symbol::legendre_fast, Symbol};
use crate::error::{Error, Result};

/// An ordered admissible pair with a normalized solution of its ternary form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePair {
    p1: u64,
    p2: u64,
    sol: TernarySolution,
    alpha_norm: i128,
}

impl AdmissiblePair {
    /// Validates `(p1, p2)`, solves and normalizes.
    pub fn new(p1: u64, p2: u64) -> Result<Self> {
        let raw = solve_ternary(p1, p2)?;
        let sol = normalize_solution(raw, p1, p2)?;
        Ok(Self::assemble(p1, p2, sol))
    }

    /// Uses a caller-supplied solution, which must already be normalized.
    pub fn with_solution(p1: u64, p2: u64, sol: TernarySolution) -> Result<Self> {
        solve::check_pair(p1, p2)?;
        if !sol.solves(p1, p2)
            || !sol.is_nontrivial()
            || !sol.is_primitive()
            || !sol.is_normalized()
        {
            return Err(Error::InvalidArgument(format!(
                "({sol}) is not a normalized primitive solution for ({p1}, {p2})"
            )));
        }
        Ok(Self::assemble(p1, p2, sol))
    }

    fn assemble(p1: u64, p2: u64, sol: TernarySolution) -> Self {
        let alpha_norm = p2 as i128 * sol.z as i128 * sol.z as i128;
        debug_assert_eq!(
            alpha_norm,
            sol.x as i128 * sol.x as i128 - p1 as i128 * sol.y as i128 * sol.y as i128
        );
        AdmissiblePair {
            p1,
            p2,
            sol,
            alpha_norm,
        }
    }

    pub fn p1(&self) -> u64 {
        self.p1
    }

    pub fn p2(&self) -> u64 {
        self.p2
    }

    pub fn solution(&self) -> TernarySolution {
        self.sol
    }

    /// `N(α₂) = x₀² − p₁y₀² = p₂z₀²`.
    pub fn alpha_norm(&self) -> i128 {
        self.alpha_norm
    }

    /// The same pair with a different normalized solution whose `z` is prime
    /// to `q` (and `y` as well when `avoid_y` is set).
    pub fn avoiding(&self, q: u64, avoid_y: bool) -> Result<AdmissiblePair> {
        let sol = solve::normalized_avoiding(self.p1, self.p2, q, avoid_y, self.sol)?;
        Ok(Self::assemble(self.p1, self.p2, sol))
    }

    /// Symbol evaluation for a third prime already known to satisfy the
    /// admissibility conditions. Returns the solution actually used.
    pub(crate) fn evaluate(&self, p3: u64) -> Result<(Symbol, TernarySolution)> {
        if self.sol.z % p3 as i64 == 0 {
            let other = self.avoiding(p3, false)?;
            return Ok((evaluate_with(&other.sol, self.p1, p3)?, other.sol));
        }
        Ok((evaluate_with(&self.sol, self.p1, p3)?, self.sol))
    }
}

/// `(x₀ + y₀s / p₃)` with its conjugate `(x₀ − y₀s / p₃)` as a cross-check:
/// their product is `p₂z₀²`, a non-zero square mod `p₃`.
fn evaluate_with(sol: &TernarySolution, p1: u64, p3: u64) -> Result<Symbol> {
    let s = tonelli_shanks(p1 % p3, p3) as i128;
    let (x, y) = (sol.x as i128, sol.y as i128);
    let a = crate::arith::reduce(x + y * s, p3);
    let b = crate::arith::reduce(x - y * s, p3);
    let (la, lb) = (legendre_fast(a, p3), legendre_fast(b, p3));
    if la != lb || la == Symbol::Zero {
        return Err(Error::Consistency(format!(
            "conjugate symbols differ for ({sol}) mod {p3}: {la} vs {lb}"
        )));
    }
    Ok(la)
}

pub(crate) fn check_third_prime(pair: &AdmissiblePair, p3: u64) -> Result<()> {
    let fail = |reason: String| Err(Error::InadmissibleThirdPrime { p3, reason });
    if p3 == pair.p1 || p3 == pair.p2 {
        return fail("primes not distinct".into());
    }
    if !is_prime(p3) {
        return fail(format!("{p3} is not prime"));
    }
    if p3 % 4 != 1 {
        return fail(format!("{p3} != 1 mod 4"));
    }
    for p in [pair.p1, pair.p2] {
        if legendre(p as i64, p3)? != Symbol::One {
            return fail(format!("legendre({p},{p3}) = -1"));
        }
    }
    Ok(())
}

pub fn admissible_pair(p1: u64, p2: u64) -> Result<AdmissiblePair> {
    AdmissiblePair::new(p1, p2)
}

/// `[p₁, p₂, p₃]` for the pair's orientation.
pub fn redei_symbol(pair: &AdmissiblePair, p3: u64) -> Result<Symbol> {
    redei_symbol_detailed(pair, p3).map(|(v, _)| v)
}

/// As [`redei_symbol`], also returning the solution used (which differs from
/// the pair's own solution when `p3 | z₀`).
pub fn redei_symbol_detailed(pair: &AdmissiblePair, p3: u64) -> Result<(Symbol, TernarySolution)> {
    check_third_prime(pair, p3)?;
    pair.evaluate(p3)
}

/// Linkage record of a prime triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleVerdict {
    pub primes: [u64; 3],
    pub congruence_ok: [bool; 3],
    /// All six `(pᵢ/pⱼ) = +1`.
    pub legendre_ok: bool,
    pub redei: Option<Symbol>,
    pub borromean: bool,
}

pub fn classify_triple(p1: u64, p2: u64, p3: u64) -> Result<TripleVerdict> {
    classify_with(p1, p2, p3, AdmissiblePair::new)
}

pub(crate) fn classify_with(
    p1: u64,
    p2: u64,
    p3: u64,
    make_pair: impl FnOnce(u64, u64) -> Result<AdmissiblePair>,
) -> Result<TripleVerdict> {
    let primes = [p1, p2, p3];
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(Error::InvalidArgument("primes not distinct".into()));
    }
    if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let congruence_ok = primes.map(|p| p % 4 == 1);
    let mut legendre_ok = true;
    for i in 0..3 {
        for j in 0..3 {
            if i != j && (primes[j] == 2 || legendre_fast(primes[i], primes[j]) != Symbol::One) {
                legendre_ok = false;
            }
        }
    }
    let redei = if congruence_ok.iter().all(|&c| c) && legendre_ok {
        let pair = make_pair(p1, p2)?;
        Some(pair.evaluate(p3)?.0)
    } else {
        None
    };
    Ok(TripleVerdict {
        primes,
        congruence_ok,
        legendre_ok,
        redei,
        borromean: redei == Some(Symbol::MinusOne),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_primes;

    #[test]
    fn pair_examples() {
        let pair = admissible_pair(5, 29).unwrap();
        assert_eq!(pair.solution(), TernarySolution::new(7, 2, 1));
        assert_eq!(pair.alpha_norm(), 29);
        assert_eq!(
            admissible_pair(13, 17).unwrap().solution(),
            TernarySolution::new(-15, 4, 1)
        );
        assert!(matches!(
            admissible_pair(5, 7),
            Err(Error::InadmissiblePair { .. })
        ));
        assert!(matches!(
            admissible_pair(13, 13),
            Err(Error::InadmissiblePair { .. })
        ));
    }

    #[test]
    fn third_prime_errors() {
        let pair = admissible_pair(5, 29).unwrap();
        let reason = |p3| match redei_symbol(&pair, p3) {
            Err(Error::InadmissibleThirdPrime { reason, .. }) => reason,
            other => panic!("{other:?}"),
        };
        assert_eq!(reason(13), "legendre(5,13) = -1");
        assert_eq!(reason(5), "primes not distinct");
        assert_eq!(reason(29), "primes not distinct");
        assert_eq!(reason(7), "7 != 1 mod 4");
        assert_eq!(reason(121), "121 is not prime");
    }

    #[test]
    fn symbol_for_5_29_109_matches_oracle() {
        let pair = admissible_pair(5, 29).unwrap();
        let v = redei_symbol(&pair, 109).unwrap();
        assert_eq!(v.is_one(), splitting_oracle(&pair, 109).unwrap());
    }

    #[test]
    fn classify_examples() {
        let v = classify_triple(5, 13, 17).unwrap();
        assert!(!v.legendre_ok && !v.borromean && v.redei.is_none());
        let v = classify_triple(3, 5, 13).unwrap();
        assert_eq!(v.congruence_ok, [false, true, true]);
        assert!(v.redei.is_none());
        let v = classify_triple(5, 29, 109).unwrap();
        assert!(v.congruence_ok.iter().all(|&c| c) && v.legendre_ok);
        assert_eq!(v.borromean, v.redei == Some(Symbol::MinusOne));
        assert!(matches!(
            classify_triple(5, 5, 13),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            classify_triple(5, 9, 13),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn p3_dividing_z0_is_resolved() {
        // find admissible (pair, p3) with p3 | z0 and check the re-solved
        // symbol against the oracle on the substitute solution
        let ones = sieve_primes(600).one_mod_four();
        let mut seen = 0;
        for &p1 in &ones {
            for &p2 in &ones {
                let Ok(pair) = admissible_pair(p1, p2) else {
                    continue;
                };
                let z = pair.solution().z.unsigned_abs();
                for &p3 in &ones {
                    if z % p3 != 0 || check_third_prime(&pair, p3).is_err() {
                        continue;
                    }
                    let (v, used) = redei_symbol_detailed(&pair, p3).unwrap();
                    assert_ne!(used, pair.solution());
                    assert!(used.z % p3 as i64 != 0 && used.is_normalized() && used.solves(p1, p2));
                    let alt = pair.avoiding(p3, true).unwrap();
                    assert_eq!(v.is_one(), splitting_oracle(&alt, p3).unwrap());
                    seen += 1;
                }
            }
        }
        assert!(seen > 0, "no p3 | z0 case below 600");
    }
}
