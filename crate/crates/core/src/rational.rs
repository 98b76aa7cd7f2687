//! The exact scalar type used throughout the crate.

use num::BigInt;

/// Arbitrary-precision rational. All arithmetic in the crate is closed over
/// this type; nothing is ever rounded.
pub type Rational = num::BigRational;

/// Builds a rational from machine integers. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
