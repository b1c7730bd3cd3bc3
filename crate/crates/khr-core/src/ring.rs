//! Coefficient rings for complexes: exact integers, rationals, and the
//! symbolic equivariant ring.

use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact integer scalar.
pub type Int = BigInt;
/// Exact rational scalar.
pub type Rat = BigRational;

/// Commutative coefficient ring with exact equality.
pub trait Coeff:
    Clone
    + PartialEq
    + core::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_int(v: i64) -> Self;
}

impl Coeff for Int {
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coeff for Rat {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Coefficient ring in which nonzero elements are invertible.
pub trait FieldCoeff: Coeff {
    fn recip(&self) -> Self;
}

impl FieldCoeff for Rat {
    fn recip(&self) -> Self {
        BigRational::recip(self)
    }
}

/// Exact rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact integer rational.
pub fn rat_int(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}
