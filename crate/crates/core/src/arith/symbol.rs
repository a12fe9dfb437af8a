use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Value of a Legendre, Jacobi or Rédei symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    MinusOne,
    Zero,
    One,
}

impl Symbol {
    pub fn value(self) -> i8 {
        match self {
            Symbol::MinusOne => -1,
            Symbol::Zero => 0,
            Symbol::One => 1,
        }
    }

    pub fn from_sign(sign: bool) -> Self {
        if sign {
            Symbol::One
        } else {
            Symbol::MinusOne
        }
    }

    pub fn is_one(self) -> bool {
        self == Symbol::One
    }
}

impl Mul for Symbol {
    type Output = Symbol;

    fn mul(self, rhs: Symbol) -> Symbol {
        match self.value() * rhs.value() {
            1 => Symbol::One,
            -1 => Symbol::MinusOne,
            _ => Symbol::Zero,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::MinusOne => "-1",
            Symbol::Zero => "0",
            Symbol::One => "+1",
        })
    }
}

/// Jacobi symbol `(a / m)` for odd `m >= 1`, by the binary reciprocity
/// reduction.
pub fn jacobi(a: i64, m: u64) -> Result<Symbol> {
    if m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "jacobi modulus must be odd, got {m}"
        )));
    }
    let mut a = super::reduce(a as i128, m);
    let mut n = m;
    let mut sign = true;
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        // (2/n) = -1 iff n ≡ 3, 5 (mod 8)
        if twos % 2 == 1 && matches!(n % 8, 3 | 5) {
            sign = !sign;
        }
        if a % 4 == 3 && n % 4 == 3 {
            sign = !sign;
        }
        (a, n) = (n % a, a);
    }
    Ok(if n == 1 {
        Symbol::from_sign(sign)
    } else {
        Symbol::Zero
    })
}

/// Legendre symbol `(a / p)` for an odd prime `p`.
///
/// Primality of `p` is a precondition and is not checked.
pub fn legendre(a: i64, p: u64) -> Result<Symbol> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "legendre modulus must be an odd prime, got {p}"
        )));
    }
    jacobi(a, p)
}

/// Unchecked Legendre symbol for hot loops over sieved primes.
#[inline]
pub(crate) fn legendre_fast(a: u64, p: u64) -> Symbol {
    let mut a = a % p;
    let mut n = p;
    let mut sign = true;
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        if twos % 2 == 1 && matches!(n % 8, 3 | 5) {
            sign = !sign;
        }
        if a % 4 == 3 && n % 4 == 3 {
            sign = !sign;
        }
        (a, n) = (n % a, a);
    }
    if n == 1 {
        Symbol::from_sign(sign)
    } else {
        Symbol::Zero
    }
}
