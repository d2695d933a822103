//! Scalar traits shared by the polynomial types.
//!
//! Multivariate polynomials only need a commutative ring (`BigInt`, `i64`,
//! `BigRational`, `f64`). Root counting and division need an ordered field,
//! which is a separate marker so integer types cannot reach Sturm code by
//! accident.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed};

pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T> + Send + Sync + 'static
{
}

/// An ordered field: division is exact (up to rounding for floats) and signs are meaningful.
pub trait OrderedField: Scalar + Signed + PartialOrd {
    fn from_i64(v: i64) -> Self;
    /// Exact types answer every sign question exactly.
    const EXACT: bool;
}

impl OrderedField for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    const EXACT: bool = true;
}

impl OrderedField for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    const EXACT: bool = false;
}

impl OrderedField for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
    const EXACT: bool = false;
}

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Decimal-string rendering used in reports (`-29/1600`, `3`).
pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Lossy conversion, for informational fields only.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
