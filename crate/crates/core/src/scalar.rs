//! Scalar traits the exact algorithms are written against.
//!
//! Everything in this crate is generic over [`Scalar`] (a commutative ring
//! with exact arithmetic) or [`Field`] (exact division as well). Floating
//! point types deliberately do not implement these traits: rank and kernel
//! computations here must be decided exactly.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed, ToPrimitive};

/// Exact commutative ring element.
pub trait Scalar: Clone + PartialEq + PartialOrd + Debug + Display + Num + Signed + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// The value as an `i64`, when it is an integer in range.
    fn to_i64_exact(&self) -> Option<i64>;
}

/// Exact field: `a / b` is the true quotient for every nonzero `b`.
pub trait Field: Scalar {
    fn is_integral(&self) -> bool;

    /// Denominator as an `i64` when it fits; used to clear fractions.
    fn denominator_i64(&self) -> Option<i64>;
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn to_i64_exact(&self) -> Option<i64> {
        self.to_i64()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

impl Field for BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn denominator_i64(&self) -> Option<i64> {
        self.denom().to_i64()
    }
}

// Small-word rationals overflow silently in release builds; only use them on
// inputs whose intermediate values are known to stay small.
impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            Some(*self.numer())
        } else {
            None
        }
    }
}

impl Field for Rational64 {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn denominator_i64(&self) -> Option<i64> {
        Some(*self.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn integer_round_trip() {
        assert_eq!(BigRational::from_i64(-7).to_i64_exact(), Some(-7));
        assert_eq!(Rational64::from_i64(3).to_i64_exact(), Some(3));
        assert_eq!(BigInt::from_i64(12).to_i64_exact(), Some(12));
    }

    #[test]
    fn fractions_are_not_integers() {
        let half = BigRational::one() / BigRational::from_i64(2);
        assert_eq!(half.to_i64_exact(), None);
        assert!(!half.is_integral());
        assert_eq!(half.denominator_i64(), Some(2));
        assert!(BigRational::zero().is_integral());
    }
}
