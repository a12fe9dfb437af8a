//! Splitting test for `p₃` in `k = Q(√p₁, √p₂, √α₂)` that does not extract a
//! square root of `α₂`.
//!
//! `√α₂` has minimal polynomial `f(t) = t⁴ − 2x₀t² + p₂z₀²` over Q, and
//! `Q(√α₂)` has Galois closure `k`. For `p₃` prime to the discriminant of `f`,
//! `p₃` splits completely in `k` iff `f` has four distinct roots mod `p₃`.
//! The distinct roots are counted as `deg gcd(f, t^p − t)` over `F_p`.

use super::{check_third_prime, AdmissiblePair};
use crate::arith::{legendre, mul_mod, pow_mod, reduce, Symbol};
use crate::error::{Error, Result};

/// Dense polynomial over `F_p`, lowest coefficient first, no trailing zeros.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(mut a: Poly, b: &[u64], p: u64) -> Poly {
    let db = b.len() - 1;
    let inv = pow_mod(b[db], p - 2, p);
    while a.len() > db {
        let lead = mul_mod(*a.last().unwrap(), inv, p);
        let shift = a.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            let sub = mul_mod(lead, c, p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        a = trim(a);
    }
    a
}

fn mul_rem(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    rem(trim(out), m, p)
}

fn gcd(mut a: Poly, mut b: Poly, p: u64) -> Poly {
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Number of distinct roots in `F_p` of a polynomial of positive degree.
pub(crate) fn distinct_root_count(f: &[u64], p: u64) -> u32 {
    let f = trim(f.to_vec());
    // t^p mod f by square-and-multiply
    let mut acc: Poly = rem(vec![1], &f, p);
    let mut base: Poly = rem(vec![0, 1], &f, p);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_rem(&acc, &base, &f, p);
        }
        base = mul_rem(&base, &base, &f, p);
        e >>= 1;
    }
    // t^p − t
    let mut h = acc;
    h.resize(h.len().max(2), 0);
    h[1] = (h[1] + p - 1) % p;
    let g = gcd(f.clone(), trim(h), p);
    (g.len() - 1) as u32
}

/// `f(t) = t⁴ − 2x₀t² + p₂z₀²` reduced mod `p`.
pub(crate) fn quartic(pair: &AdmissiblePair, p: u64) -> Poly {
    let s = pair.solution();
    vec![
        reduce(pair.alpha_norm(), p),
        0,
        reduce(-2 * s.x as i128, p),
        0,
        1,
    ]
}

/// Number of distinct roots of `t⁴ − 2x₀t² + p₂z₀²` modulo `p3`.
pub fn quartic_root_count(pair: &AdmissiblePair, p3: u64) -> Result<u32> {
    check_third_prime(pair, p3)?;
    check_applicable(pair, p3)?;
    Ok(distinct_root_count(&quartic(pair, p3), p3))
}

fn check_applicable(pair: &AdmissiblePair, p3: u64) -> Result<()> {
    let s = pair.solution();
    let q = p3 as i64;
    if s.z % q == 0 || s.y % q == 0 {
        return Err(Error::OracleInapplicable(format!(
            "{p3} divides y0*z0 for solution ({s}); the quartic is inseparable mod {p3}"
        )));
    }
    Ok(())
}

/// `true` iff `p3` splits completely in the Rédei field of `pair`, decided by
/// root counting. Fails with an oracle-inapplicable error when `p3 | y₀z₀`.
pub fn splitting_oracle(pair: &AdmissiblePair, p3: u64) -> Result<bool> {
    let roots = quartic_root_count(pair, p3)?;
    Ok(roots == 4 && legendre(pair.p2() as i64, p3)? == Symbol::One)
}
