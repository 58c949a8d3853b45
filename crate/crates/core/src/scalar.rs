//! Exact scalar fields.
//!
//! Everything that touches heights, cones or curve coordinates is generic over
//! [`Field`]: an ordered field with exact arithmetic. Floating point types are
//! deliberately not implementors, because marking decisions and cone
//! dimensions depend on exact equalities.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio, Rational64};
use num_traits::{Num, Signed, ToPrimitive, Zero};

pub trait Field: Clone + Debug + Display + Ord + Num + Signed + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// Panics for narrow carriers when `v` does not fit.
    fn from_i128(v: i128) -> Self;

    fn from_fraction(num: i64, den: i64) -> Self;

    /// `(numerator, denominator)` in lowest terms with a positive denominator,
    /// or `None` when a component does not fit in `i64`.
    fn to_fraction(&self) -> Option<(i64, i64)>;

    fn is_integer_value(&self) -> bool;

    /// `(numerator, denominator)` in lowest terms with a positive denominator.
    fn to_big_fraction(&self) -> (BigInt, BigInt);
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn from_i128(v: i128) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_fraction(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    fn is_integer_value(&self) -> bool {
        self.is_integer()
    }

    fn to_big_fraction(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

impl Field for Rational64 {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn from_i128(v: i128) -> Self {
        Ratio::from_integer(i64::try_from(v).expect("integer does not fit a 64-bit rational"))
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn to_fraction(&self) -> Option<(i64, i64)> {
        Some((*self.numer(), *self.denom()))
    }

    fn is_integer_value(&self) -> bool {
        self.is_integer()
    }

    fn to_big_fraction(&self) -> (BigInt, BigInt) {
        (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

/// Dot product of two equally long slices.
pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Zero::is_zero)
}
