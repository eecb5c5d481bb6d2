//! Exact rational scalars and their `"num/den"` wire format.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
#[error("malformed rational literal {0:?} (expected \"num/den\" or \"int\")")]
pub struct RatParseError(pub String);

/// Parses `"num/den"` or a bare integer literal.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    let mk_err = || RatParseError(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| mk_err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| mk_err())?;
            if d.is_zero() {
                return Err(mk_err());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s).map_err(|_| mk_err())?;
            Ok(Rat::from(n))
        }
    }
}

/// Formats in the canonical `"num/den"` form (denominator always present and positive).
pub fn fmt_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Sign as -1, 0, +1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
