//! Exact rational scalars.
//!
//! Every energy, eigenvalue, and commutativity degree in this crate is a
//! reduced `BigRational` with positive denominator; serialization is always
//! the `"num/den"` form (integers render as `"n/1"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational number, always stored reduced with positive denominator.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reduced fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `"num/den"` rendering, denominator always present.
pub fn fmt_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `|r|`.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    (r.denom() - BigInt::from(1)).is_zero()
}
