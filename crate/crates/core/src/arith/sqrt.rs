use super::symbol::legendre;
use super::{mul_mod, pow_mod, reduce, Symbol};
use crate::error::{Error, Result};

/// Square root of `a` modulo an odd prime `p` by Tonelli-Shanks.
///
/// Returns the smaller of the two roots; the other one is `p - s`. The
/// quadratic non-residue is the first one found counting up from 2, so the
/// output is deterministic.
pub fn sqrt_mod(a: i64, p: u64) -> Result<u64> {
    if legendre(a, p)? != Symbol::One {
        return Err(Error::NoSquareRoot { a, p });
    }
    let a = reduce(a as i128, p);
    Ok(tonelli_shanks(a, p))
}

/// Requires `a` to be a non-zero quadratic residue mod the odd prime `p`.
pub(crate) fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let root = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        let s = (p - 1).trailing_zeros();
        let q = (p - 1) >> s;
        let z = (2..p)
            .find(|&z| super::symbol::legendre_fast(z, p) == Symbol::MinusOne)
            .expect("an odd prime has a non-residue");
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, q.div_ceil(2), p);
        while t != 1 {
            // least i with t^(2^i) = 1
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        r
    };
    root.min(p - root)
}
