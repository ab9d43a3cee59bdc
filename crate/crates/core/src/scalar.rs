//! The exact integer ring everything is computed over.
//!
//! Character values, Schur coefficients and eigenvalue multiplicities are all
//! integers. The engine is generic over the representation so that bulk checks
//! can run on machine words while the public API defaults to [`BigInt`].
//! Every operation goes through the checked helpers below, so a machine-word
//! scalar reports [`Error::Overflow`] instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone
    + Debug
    + Display
    + Hash
    + Send
    + Sync
    + 'static
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
{
    fn from_u64_exact(v: u64) -> Result<Self> {
        Self::from_u64(v).ok_or(Error::Overflow)
    }

    fn from_i64_exact(v: i64) -> Result<Self> {
        Self::from_i64(v).ok_or(Error::Overflow)
    }

    fn add_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    fn sub_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow)
    }

    fn mul_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    /// Division that must leave no remainder; a remainder is an internal error.
    fn div_exact(&self, divisor: &Self, context: &str) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Internal(format!("{context}: division by zero")));
        }
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal(format!(
                "{context}: {self} is not divisible by {divisor}"
            )))
        }
    }

    /// Parses a decimal literal, as written by `Display`.
    fn parse_decimal(s: &str) -> Option<Self> {
        Self::from_str_radix(s, 10).ok()
    }
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}

pub(crate) fn factorial<T: Scalar>(n: usize) -> Result<T> {
    (1..=n as u64).try_fold(T::one(), |acc, k| acc.mul_exact(&T::from_u64_exact(k)?))
}
