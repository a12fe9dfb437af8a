//! Degrees and discriminants of `Q(√p₁, √p₂, √−1)` and `k(√−1)`, the
//! GRH-conditional effective Chebotarev bound, and the split-prime counts it
//! is compared against.
//!
//! Discriminants come from closed forms (`2⁸p₁⁴p₂⁴` and `2¹⁶p₁⁸p₂⁸`); no
//! maximal-order computation is done.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{log_integral, sieve_primes, PrimeList, Symbol};
use crate::density::split_candidates;
use crate::error::{Error, Result};
use crate::redei::AdmissiblePair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldLabel {
    /// `(k₁k₂)(√−1) = Q(√p₁, √p₂, √−1)`, degree 8.
    #[serde(rename = "k1k2(i)")]
    Biquadratic,
    /// `k(√−1)`, degree 16.
    #[serde(rename = "k(i)")]
    Redei,
}

impl FieldLabel {
    pub const ALL: [FieldLabel; 2] = [FieldLabel::Biquadratic, FieldLabel::Redei];

    pub fn degree(self) -> u32 {
        match self {
            FieldLabel::Biquadratic => 8,
            FieldLabel::Redei => 16,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FieldLabel::Biquadratic => "k1k2(i)",
            FieldLabel::Redei => "k(i)",
        }
    }
}

impl fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FieldLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "k1k2(i)" | "biquadratic" => Ok(FieldLabel::Biquadratic),
            "k(i)" | "redei" => Ok(FieldLabel::Redei),
            other => Err(Error::InvalidArgument(format!(
                "unknown field label {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldParams {
    pub label: FieldLabel,
    pub degree: u32,
    /// Prime → exponent in the absolute discriminant.
    pub disc_factored: BTreeMap<u64, u32>,
    pub log_disc: f64,
}

pub fn field_params(pair: &AdmissiblePair, label: FieldLabel) -> FieldParams {
    discriminant_params(pair.p1(), pair.p2(), label)
}

/// The closed forms only depend on the two primes, so they are available
/// without an admissible pair.
pub fn discriminant_params(p1: u64, p2: u64, label: FieldLabel) -> FieldParams {
    let scale = label.degree() / 8;
    let disc_factored = BTreeMap::from([(2, 8 * scale), (p1, 4 * scale), (p2, 4 * scale)]);
    let log_disc = disc_factored
        .iter()
        .map(|(&p, &e)| e as f64 * (p as f64).ln())
        .sum();
    FieldParams {
        label,
        degree: label.degree(),
        disc_factored,
        log_disc,
    }
}

/// Right-hand side of the effective Chebotarev inequality:
/// `f·√x·[(1/2π + 3/log x)·log Δ + (log x/8π + 1/4π + 6/log x)·n]`.
pub fn grh_error_bound(x: f64, params: &FieldParams, class_fraction: f64) -> Result<f64> {
    grh_error_bound_raw(x, params.log_disc, params.degree, class_fraction)
}

pub fn grh_error_bound_raw(x: f64, log_disc: f64, degree: u32, class_fraction: f64) -> Result<f64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::InvalidArgument(format!(
            "bound needs x >= 2, got {x}"
        )));
    }
    if class_fraction.is_nan() || class_fraction <= 0.0 || class_fraction > 1.0 {
        return Err(Error::InvalidArgument(format!(
            "class fraction must lie in (0, 1], got {class_fraction}"
        )));
    }
    let lx = x.ln();
    let disc_term = (1.0 / (2.0 * PI) + 3.0 / lx) * log_disc;
    let degree_term = (lx / (8.0 * PI) + 1.0 / (4.0 * PI) + 6.0 / lx) * degree as f64;
    Ok(class_fraction * x.sqrt() * (disc_term + degree_term))
}

/// `#S″(x)` (split in `(k₁k₂)(√−1)`), `#S(x)` (split in `k(√−1)`) and ρ(x),
/// counted in one pass over the unramified primes below `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitPartition {
    pub s_double_prime: u64,
    pub s: u64,
    pub rho: u64,
}

pub fn split_partition(
    pair: &AdmissiblePair,
    primes: &PrimeList,
    x: u64,
) -> Result<SplitPartition> {
    let (mut s_double_prime, mut s, mut rho) = (0, 0, 0);
    for p in split_candidates(pair, primes, x) {
        s_double_prime += 1;
        match pair.evaluate(p)?.0 {
            Symbol::One => s += 1,
            _ => rho += 1,
        }
    }
    if s_double_prime != s + rho {
        return Err(Error::Consistency(format!(
            "#S''={s_double_prime} != #S={s} + rho={rho}"
        )));
    }
    Ok(SplitPartition {
        s_double_prime,
        s,
        rho,
    })
}

/// Primes `p < x`, unramified (`p ∉ {2, p₁, p₂}`), splitting completely in
/// the labelled field.
pub fn empirical_split_count(pair: &AdmissiblePair, x: u64, label: FieldLabel) -> Result<u64> {
    empirical_split_count_in(pair, &sieve_primes(x), x, label)
}

pub fn empirical_split_count_in(
    pair: &AdmissiblePair,
    primes: &PrimeList,
    x: u64,
    label: FieldLabel,
) -> Result<u64> {
    let part = split_partition(pair, primes, x)?;
    Ok(match label {
        FieldLabel::Biquadratic => part.s_double_prime,
        FieldLabel::Redei => part.s,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub x: u64,
    pub label: FieldLabel,
    pub main_term: f64,
    pub error_bound: f64,
    pub empirical: u64,
    pub within_bound: bool,
}

/// Compares the identity-class split count with `li(x)/n` and the bound.
/// `within_bound = false` is a finding about the data, not an error.
pub fn check_bound(pair: &AdmissiblePair, x: u64, label: FieldLabel) -> Result<BoundReport> {
    check_bound_in(pair, &sieve_primes(x), x, label)
}

pub fn check_bound_in(
    pair: &AdmissiblePair,
    primes: &PrimeList,
    x: u64,
    label: FieldLabel,
) -> Result<BoundReport> {
    let params = field_params(pair, label);
    let fraction = 1.0 / params.degree as f64;
    let xf = x as f64;
    let main_term = fraction * log_integral(xf)?;
    let error_bound = grh_error_bound(xf, &params, fraction)?;
    let empirical = empirical_split_count_in(pair, primes, x, label)?;
    Ok(BoundReport {
        x,
        label,
        main_term,
        error_bound,
        empirical,
        within_bound: (empirical as f64 - main_term).abs() <= error_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::rho_count;

    fn pair(p1: u64, p2: u64) -> AdmissiblePair {
        AdmissiblePair::new(p1, p2).unwrap()
    }

    #[test]
    fn closed_form_discriminants() {
        let p = pair(5, 29);
        let small = field_params(&p, FieldLabel::Biquadratic);
        assert_eq!(small.degree, 8);
        assert_eq!(
            small.disc_factored,
            BTreeMap::from([(2, 8), (5, 4), (29, 4)])
        );
        let want = 8.0 * 2f64.ln() + 4.0 * 5f64.ln() + 4.0 * 29f64.ln();
        assert!(((small.log_disc - want) / want).abs() < 1e-12);
        let exact = (2f64.powi(8) * 5f64.powi(4) * 29f64.powi(4)).ln();
        assert!(((small.log_disc - exact) / exact).abs() < 1e-12);

        let big = field_params(&p, FieldLabel::Redei);
        assert_eq!(big.degree, 16);
        assert_eq!(
            big.disc_factored,
            BTreeMap::from([(2, 16), (5, 8), (29, 8)])
        );
        assert!((big.log_disc - 2.0 * small.log_disc).abs() < 1e-9);
    }

    #[test]
    fn formula_for_5_13() {
        let small = discriminant_params(5, 13, FieldLabel::Biquadratic);
        assert_eq!(
            small.disc_factored,
            BTreeMap::from([(2, 8), (5, 4), (13, 4)])
        );
        let value: u64 = small
            .disc_factored
            .iter()
            .map(|(&p, &e)| p.pow(e))
            .product();
        assert_eq!(value, 256 * 625 * 28_561);
        assert!(((small.log_disc - (value as f64).ln()) / small.log_disc).abs() < 1e-12);
        let big = discriminant_params(5, 13, FieldLabel::Redei);
        assert_eq!(
            (big.degree, big.disc_factored),
            (16, BTreeMap::from([(2, 16), (5, 8), (13, 8)]))
        );
    }

    #[test]
    fn bound_worked_value() {
        let v = grh_error_bound_raw(4.0, 0.0, 1, 1.0).unwrap();
        let l = 4f64.ln();
        let want = 2.0 * (l / (8.0 * PI) + 1.0 / (4.0 * PI) + 6.0 / l);
        assert!((v - want).abs() < 1e-12);
        assert!((v - 8.926).abs() < 1e-3);
    }

    #[test]
    fn bound_structure() {
        let b = |x, ld, n, f| grh_error_bound_raw(x, ld, n, f).unwrap();
        // linear in log_disc
        let (b0, b1, b2) = (
            b(1e4, 0.0, 8, 0.125),
            b(1e4, 10.0, 8, 0.125),
            b(1e4, 20.0, 8, 0.125),
        );
        assert!(((b2 - b1) - (b1 - b0)).abs() < 1e-9 * b2);
        assert!(b1 > b0);
        assert!(b(1e4, 10.0, 16, 0.125) > b1);
        assert!((b(1e4, 10.0, 8, 0.25) - 2.0 * b1).abs() < 1e-9 * b1);
        // increasing in x from 8 on
        let mut prev = b(8.0, 30.0, 8, 0.125);
        for i in 1..400 {
            let x = 8.0 * 1.05f64.powi(i);
            let cur = b(x, 30.0, 8, 0.125);
            assert!(cur > prev, "x = {x}");
            prev = cur;
        }
        assert!(grh_error_bound_raw(1.9, 0.0, 8, 0.5).is_err());
        assert!(grh_error_bound_raw(10.0, 0.0, 8, 0.0).is_err());
        assert!(grh_error_bound_raw(10.0, 0.0, 8, 1.5).is_err());
    }

    #[test]
    fn split_counts_small() {
        let p = pair(5, 29);
        for label in FieldLabel::ALL {
            assert_eq!(empirical_split_count(&p, 7, label).unwrap(), 0);
        }
        let pi = sieve_primes(2000).len() as f64;
        let c = empirical_split_count(&p, 2000, FieldLabel::Biquadratic).unwrap() as f64;
        assert!((c / pi - 0.125).abs() < 0.05);
    }

    #[test]
    fn partition_matches_rho() {
        for (p1, p2) in [(5, 29), (29, 5), (13, 17), (37, 41)] {
            let p = pair(p1, p2);
            for x in [100u64, 1000, 5000] {
                let s2 = empirical_split_count(&p, x, FieldLabel::Biquadratic).unwrap();
                let s = empirical_split_count(&p, x, FieldLabel::Redei).unwrap();
                assert_eq!(s2 - s, rho_count(&p, x).unwrap());
            }
        }
    }

    #[test]
    fn check_bound_edges() {
        let p = pair(5, 29);
        let r = check_bound(&p, 2, FieldLabel::Biquadratic).unwrap();
        assert_eq!((r.main_term, r.empirical, r.within_bound), (0.0, 0, true));
        let a = check_bound(&p, 10_000, FieldLabel::Biquadratic).unwrap();
        let b = check_bound(&p, 10_000, FieldLabel::Redei).unwrap();
        assert!(a.within_bound && b.within_bound);
        assert!((a.main_term - 2.0 * b.main_term).abs() < 1e-9);
    }

    #[test]
    fn labels_parse() {
        for l in FieldLabel::ALL {
            assert_eq!(l.as_str().parse::<FieldLabel>().unwrap(), l);
        }
        assert!("k".parse::<FieldLabel>().is_err());
    }
}
