//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals, always
//! kept in lowest terms with a positive denominator (zero is 0/1). The
//! invariants are maintained by `num_rational::BigRational`.

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact quotient n/d; panics if d == 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
