//! Exact rational polynomials with the asymptotic ("for n >> 0") total order,
//! reduced Hilbert polynomials and slopes.

use crate::ratio::{fmt_rat, parse_rat, sign, Rat, RatParseError};
use num::bigint::BigInt;
use num::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum PolyError {
    #[error("zero polynomial has no reduced form")]
    ZeroPolynomial,
    #[error("leading coefficient {0} is not positive")]
    NonPositiveLeading(String),
    #[error("slope index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
}

/// Polynomial in one variable with exact rational coefficients, stored in the
/// plain monomial basis (`coeffs[i]` multiplies `n^i`, no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<Rat>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None encodes the "minus infinity" degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// The normalized coefficient a_i = i! * coeffs[i].
    pub fn normalized_coeff(&self, i: usize) -> Rat {
        self.coeff(i) * Rat::from(factorial(i))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, n: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c;
        }
        acc
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rat).collect()
    }

    pub fn from_strings(items: &[String]) -> Result<Self, RatParseError> {
        let coeffs = items
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})n", c)?,
                _ => write!(f, "({})n^{}", c, i)?,
            }
        }
        Ok(())
    }
}

pub fn factorial(i: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=i {
        acc *= BigInt::from(k);
    }
    acc
}

/// Total order by eventual dominance: GT iff the top nonzero coefficient of
/// p - q is positive.
pub fn poly_cmp(p: &RationalPoly, q: &RationalPoly) -> Ordering {
    let diff = p.sub(q);
    match diff.leading() {
        None => Ordering::Equal,
        Some(c) => {
            if sign(c) > 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

/// P / a_d with a_d = d! * lead(P); the result has normalized leading
/// coefficient 1.
pub fn reduced_hp(p: &RationalPoly) -> Result<RationalPoly, PolyError> {
    let lead = p.leading().ok_or(PolyError::ZeroPolynomial)?;
    if sign(lead) <= 0 {
        return Err(PolyError::NonPositiveLeading(lead.to_string()));
    }
    let d = p.degree().unwrap();
    let a_d = lead * Rat::from(factorial(d));
    Ok(p.scale(&a_d.recip()))
}

/// The i-th slope of a Hilbert polynomial: a_i / a_d.
pub fn slope(p: &RationalPoly, i: usize) -> Result<Rat, PolyError> {
    let lead = p.leading().ok_or(PolyError::ZeroPolynomial)?;
    if sign(lead) <= 0 {
        return Err(PolyError::NonPositiveLeading(lead.to_string()));
    }
    let d = p.degree().unwrap();
    if i >= d {
        return Err(PolyError::IndexOutOfRange {
            index: i,
            degree: d,
        });
    }
    let a_d = lead * Rat::from(factorial(d));
    Ok(p.normalized_coeff(i) / a_d)
}
