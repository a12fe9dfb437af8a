//! Integer and modular arithmetic shared by the symbol, density and
//! Chebotarev modules.
//!
//! All residues are carried as `u64` with `u128` intermediates; signed inputs
//! are reduced with Euclidean remainder before any modular work.

mod integral;
mod sieve;
pub(crate) mod sqrt;
pub(crate) mod symbol;

pub use integral::log_integral;
pub use sieve::{sieve_primes, PrimeList};
pub use sqrt::sqrt_mod;
pub use symbol::{jacobi, legendre, Symbol};

/// `a * b mod m`.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m`.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed value into `[0, m)`.
#[inline]
pub fn reduce(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

/// Floor square root.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    // f64 is off by a few ulps for large n
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: u128) -> Option<u128> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Smallest `r` with `r * r >= n`.
pub fn ceil_sqrt(n: u64) -> u64 {
    let r = isqrt(n as u128) as u64;
    if r * r == n {
        r
    } else {
        r + 1
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_boundaries() {
        for n in 0u128..2000 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
        let big = (u64::MAX as u128) * (u64::MAX as u128);
        assert_eq!(isqrt(big), u64::MAX as u128);
        assert_eq!(exact_sqrt(big), Some(u64::MAX as u128));
        assert_eq!(exact_sqrt(big - 1), None);
    }

    #[test]
    fn ceil_sqrt_values() {
        assert_eq!(ceil_sqrt(29), 6);
        assert_eq!(ceil_sqrt(25), 5);
        assert_eq!(ceil_sqrt(1), 1);
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        let trial = |n: u64| {
            n >= 2
                && (2..)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
    }

    #[test]
    fn pow_mod_small() {
        assert_eq!(pow_mod(5, 14, 29), 1);
        assert_eq!(pow_mod(3, 2, 5), 4);
        assert_eq!(pow_mod(7, 0, 1), 0);
    }
}
