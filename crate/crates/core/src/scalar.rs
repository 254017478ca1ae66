//! Coefficient fields.
//!
//! Every algorithm in this crate needs exact zero tests, so only exact fields
//! implement [`Scalar`]. The crate root fixes the default field to
//! [`num_rational::BigRational`].

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field of characteristic zero.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// Image of an integer under the unique ring map `Z -> Self`.
    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    /// Sign used by printers; a field with no order may always return `false`.
    fn is_negative(&self) -> bool;
}

impl Scalar for BigRational {
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Machine-word rationals. Panics on overflow, so only suitable for small fixtures.
impl Scalar for Rational64 {
    fn from_integer(n: &BigInt) -> Self {
        let n = n.to_i64().expect("integer does not fit in a Rational64");
        Rational64::from_integer(n)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}
