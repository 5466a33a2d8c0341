//! Extended-real Lebesgue exponents in `[1, ∞]`.

use crate::error::{Error, Result};
use core::fmt;

/// A Lebesgue exponent: a finite real `>= 1` or `∞`.
///
/// `∞` is stored as `f64::INFINITY`, so `1/p` and the power-law arithmetic of
/// the closed forms fall out of ordinary float operations (`1/∞ = 0`,
/// `x^(1/∞) = 1`).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Exponent(f64);

impl Exponent {
    pub const ONE: Exponent = Exponent(1.0);
    pub const TWO: Exponent = Exponent(2.0);
    pub const INFINITY: Exponent = Exponent(f64::INFINITY);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 1.0 {
            return Err(Error::InvalidParam("exponent must lie in [1, inf]"));
        }
        Ok(Exponent(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    /// `1/p`, with `1/∞ = 0`.
    pub fn reciprocal(self) -> f64 {
        if self.0.is_infinite() {
            0.0
        } else {
            1.0 / self.0
        }
    }

    /// Conjugate exponent `p'` with `1/p + 1/p' = 1`; `1' = ∞` and `∞' = 1`.
    pub fn conjugate(self) -> Exponent {
        if self.0 == 1.0 {
            Exponent::INFINITY
        } else if self.0.is_infinite() {
            Exponent::ONE
        } else {
            Exponent(self.0 / (self.0 - 1.0))
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// The `(p, q)` pair indexing every mixed-norm space in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentPair {
    pub p: Exponent,
    pub q: Exponent,
}

impl ExponentPair {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        Ok(ExponentPair {
            p: Exponent::new(p)?,
            q: Exponent::new(q)?,
        })
    }

    pub const fn from_exponents(p: Exponent, q: Exponent) -> Self {
        ExponentPair { p, q }
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugates() {
        assert_eq!(Exponent::ONE.conjugate(), Exponent::INFINITY);
        assert_eq!(Exponent::INFINITY.conjugate(), Exponent::ONE);
        assert_eq!(Exponent::TWO.conjugate(), Exponent::TWO);
        let p = Exponent::new(4.0).unwrap();
        assert!((p.conjugate().value() - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(Exponent::new(0.5).is_err());
        assert!(Exponent::new(f64::NAN).is_err());
        assert!(Exponent::new(1.0).is_ok());
    }

    #[test]
    fn infinity_reciprocal_is_zero() {
        assert_eq!(Exponent::INFINITY.reciprocal(), 0.0);
        assert_eq!(Exponent::TWO.reciprocal(), 0.5);
    }
}
