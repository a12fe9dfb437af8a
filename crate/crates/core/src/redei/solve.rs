//! Solutions of `x² − p₁y² − p₂z² = 0` and their normalization
//! (`y` even, `x − y ≡ 1 mod 4`).

use std::fmt;

use crate::arith::{ceil_sqrt, exact_sqrt, gcd, is_prime, legendre, Symbol};
use crate::error::{Error, Result};

/// Largest shell radius tried by the conic walk before giving up.
pub const WALK_RADIUS: i64 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TernarySolution {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl TernarySolution {
    pub fn new(x: i64, y: i64, z: i64) -> Self {
        TernarySolution { x, y, z }
    }

    /// `x² − p₁y² − p₂z²`.
    pub fn residual(&self, p1: u64, p2: u64) -> i128 {
        let (x, y, z) = (self.x as i128, self.y as i128, self.z as i128);
        x * x - p1 as i128 * y * y - p2 as i128 * z * z
    }

    pub fn solves(&self, p1: u64, p2: u64) -> bool {
        self.residual(p1, p2) == 0
    }

    pub fn is_nontrivial(&self) -> bool {
        self.x != 0 && self.y != 0 && self.z != 0
    }

    pub fn is_primitive(&self) -> bool {
        gcd(
            gcd(self.x.unsigned_abs(), self.y.unsigned_abs()),
            self.z.unsigned_abs(),
        ) == 1
    }

    pub fn is_normalized(&self) -> bool {
        self.y % 2 == 0 && (self.x - self.y).rem_euclid(4) == 1
    }
}

impl fmt::Display for TernarySolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} y={} z={}", self.x, self.y, self.z)
    }
}

/// Checks the admissibility conditions on an ordered pair, naming the first
/// one that fails.
pub(crate) fn check_pair(p1: u64, p2: u64) -> Result<()> {
    let fail = |reason: String| Err(Error::InadmissiblePair { p1, p2, reason });
    if p1 == p2 {
        return fail("primes not distinct".into());
    }
    for p in [p1, p2] {
        if !is_prime(p) {
            return fail(format!("{p} is not prime"));
        }
    }
    for p in [p1, p2] {
        if p % 4 != 1 {
            return fail(format!("{p} != 1 mod 4"));
        }
    }
    if legendre(p2 as i64, p1)? != Symbol::One {
        return fail(format!("legendre({p2},{p1}) = -1"));
    }
    Ok(())
}

/// Primitive solutions with `1 <= z <= z_max`, `1 <= y <= y_max` and
/// `x > 0`, scanned with `z` in the outer loop.
pub fn box_solutions(p1: u64, p2: u64, y_max: u64, z_max: u64) -> Vec<TernarySolution> {
    let mut out = Vec::new();
    for z in 1..=z_max {
        let base = p2 as u128 * (z as u128) * (z as u128);
        for y in 1..=y_max {
            if gcd(y, z) != 1 {
                continue;
            }
            let rhs = base + p1 as u128 * (y as u128) * (y as u128);
            if let Some(x) = exact_sqrt(rhs) {
                out.push(TernarySolution::new(x as i64, y as i64, z as i64));
            }
        }
    }
    out
}

/// Holzer box bounds `(⌈√p₂⌉, ⌈√p₁⌉)` for `(y, z)`, scaled.
pub(crate) fn holzer_box(p1: u64, p2: u64, scale: u64) -> (u64, u64) {
    (scale * ceil_sqrt(p2), scale * ceil_sqrt(p1))
}

/// A primitive solution from the Holzer box, preferring even `y`.
pub fn solve_ternary(p1: u64, p2: u64) -> Result<TernarySolution> {
    check_pair(p1, p2)?;
    let (y_max, z_max) = holzer_box(p1, p2, 1);
    let found = box_solutions(p1, p2, y_max, z_max);
    found
        .iter()
        .find(|s| s.y % 2 == 0)
        .or_else(|| found.first())
        .copied()
        .ok_or_else(|| {
            Error::Consistency(format!(
                "no solution of x^2 - {p1}y^2 - {p2}z^2 = 0 in the Holzer box"
            ))
        })
}

/// For even `y` and odd `x`, exactly one of `±x` satisfies `x − y ≡ 1 (mod 4)`.
fn fix_sign(s: TernarySolution) -> TernarySolution {
    let (y, z) = (s.y.abs(), s.z.abs());
    let x = if (s.x - y).rem_euclid(4) == 1 {
        s.x
    } else {
        -s.x
    };
    TernarySolution::new(x, y, z)
}

/// Brings a primitive solution into normal form.
///
/// Signs of `y` and `z` are made positive and the sign of `x` fixed. When `y`
/// is odd no sign change helps, so another point on the conic with even `y`
/// is taken from the line pencil through `sol` (see [`conic_walk`]).
pub fn normalize_solution(sol: TernarySolution, p1: u64, p2: u64) -> Result<TernarySolution> {
    if !sol.solves(p1, p2) || !sol.is_nontrivial() || !sol.is_primitive() {
        return Err(Error::InvalidArgument(format!(
            "({sol}) is not a primitive non-trivial solution for ({p1}, {p2})"
        )));
    }
    if sol.y % 2 == 0 {
        return Ok(fix_sign(sol));
    }
    conic_walk(p1, p2, sol, |_| true)
        .map(fix_sign)
        .ok_or(Error::NormalizationExhausted {
            p1,
            p2,
            radius: WALK_RADIUS,
        })
}

/// Searches the rational points `Q(d)·P − 2B(P, d)·d` obtained from the
/// lines through `P` with small integer directions `d`, where `Q` is the
/// ternary form and `B` its bilinear form. Shells `max|dᵢ| = r` are tried in
/// increasing order and the smallest primitive candidate with even `y`
/// passing `accept` is returned (with `y, z > 0`, `x > 0`).
pub(crate) fn conic_walk(
    p1: u64,
    p2: u64,
    base: TernarySolution,
    accept: impl Fn(&TernarySolution) -> bool,
) -> Option<TernarySolution> {
    let (p1w, p2w) = (p1 as i128, p2 as i128);
    let (bx, by, bz) = (base.x as i128, base.y as i128, base.z as i128);
    for r in 1..=WALK_RADIUS {
        let mut best: Option<(i128, TernarySolution)> = None;
        for d0 in -r..=r {
            for d1 in -r..=r {
                for d2 in -r..=r {
                    if d0.abs().max(d1.abs()).max(d2.abs()) != r {
                        continue;
                    }
                    let (d0, d1, d2) = (d0 as i128, d1 as i128, d2 as i128);
                    let q = d0 * d0 - p1w * d1 * d1 - p2w * d2 * d2;
                    let b = bx * d0 - p1w * by * d1 - p2w * bz * d2;
                    let v = [
                        q * bx - 2 * b * d0,
                        q * by - 2 * b * d1,
                        q * bz - 2 * b * d2,
                    ];
                    let g = gcd128(gcd128(v[0], v[1]), v[2]);
                    if g == 0 {
                        continue;
                    }
                    let [x, y, z] = v.map(|t| (t / g).abs());
                    if y == 0 || z == 0 || y % 2 != 0 {
                        continue;
                    }
                    let size = x.max(y).max(z);
                    if size > i64::MAX as i128 {
                        continue;
                    }
                    let cand = TernarySolution::new(x as i64, y as i64, z as i64);
                    if !accept(&cand) {
                        continue;
                    }
                    let key = |s: &TernarySolution| (s.x, s.y, s.z);
                    if best
                        .as_ref()
                        .is_none_or(|(bs, bc)| (size, key(&cand)) < (*bs, key(bc)))
                    {
                        best = Some((size, cand));
                    }
                }
            }
        }
        if let Some((_, s)) = best {
            debug_assert!(s.solves(p1, p2));
            return Some(s);
        }
    }
    None
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All normalized primitive solutions in the Holzer box scaled by `scale`.
pub fn normalized_solutions(p1: u64, p2: u64, scale: u64) -> Vec<TernarySolution> {
    let (y_max, z_max) = holzer_box(p1, p2, scale);
    box_solutions(p1, p2, y_max, z_max)
        .into_iter()
        .filter(|s| s.y % 2 == 0)
        .map(fix_sign)
        .collect()
}

/// A normalized solution whose coordinates avoid divisibility by `q`
/// (`z` only, or both `y` and `z` when `avoid_y` is set). Tries the Holzer
/// box, then the 4× box, then the conic walk from `seed`.
pub(crate) fn normalized_avoiding(
    p1: u64,
    p2: u64,
    q: u64,
    avoid_y: bool,
    seed: TernarySolution,
) -> Result<TernarySolution> {
    let q = q as i64;
    let ok = |s: &TernarySolution| s.z % q != 0 && (!avoid_y || s.y % q != 0);
    for scale in [1, 4] {
        if let Some(s) = normalized_solutions(p1, p2, scale).into_iter().find(ok) {
            return Ok(s);
        }
    }
    conic_walk(p1, p2, seed, ok)
        .map(fix_sign)
        .ok_or(Error::NormalizationExhausted {
            p1,
            p2,
            radius: WALK_RADIUS,
        })
}
