//! Exact counting arithmetic, generic over the integer type.
//!
//! Fixed-width types report overflow as [`Error::Overflow`]; `BigUint`
//! never overflows.

use std::fmt::{Debug, Display};

use num_integer::Roots;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive, Unsigned};

use crate::error::{Error, Result};

/// Unsigned integer type usable for resource counts.
pub trait Count:
    Clone + Ord + Debug + Display + Unsigned + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToPrimitive + Roots
{
}

impl<T> Count for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Unsigned
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Roots
{
}

pub(crate) fn lift<T: Count>(value: usize, what: &'static str) -> Result<T> {
    T::from_usize(value).ok_or(Error::Overflow(what))
}

pub(crate) fn mul<T: Count>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn add<T: Count>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn sub<T: Count>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

/// `x!`
pub fn factorial<T: Count>(x: usize) -> Result<T> {
    (2..=x).try_fold(T::one(), |acc, i| mul(&acc, &lift(i, "factorial")?, "factorial"))
}

/// `base^exp`
pub fn pow<T: Count>(base: usize, exp: usize) -> Result<T> {
    let base = lift::<T>(base, "power")?;
    (0..exp).try_fold(T::one(), |acc, _| mul(&acc, &base, "power"))
}

/// Integer square root rounded to nearest.
pub fn round_sqrt<T: Count>(x: &T) -> T {
    let floor = x.sqrt();
    // x - floor^2 > floor  <=>  sqrt(x) >= floor + 1/2 for integer x
    let square = floor.clone() * floor.clone();
    if x.clone() - square > floor {
        floor + T::one()
    } else {
        floor
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn factorials() {
        assert_eq!(factorial::<u64>(0).unwrap(), 1);
        assert_eq!(factorial::<u64>(9).unwrap(), 362_880);
        assert_eq!(factorial::<u64>(20).unwrap(), 2_432_902_008_176_640_000);
        assert_eq!(factorial::<u64>(21), Err(Error::Overflow("factorial")));
        assert_eq!(factorial::<u128>(21).unwrap(), 51_090_942_171_709_440_000);
        assert_eq!(factorial::<BigUint>(25).unwrap().to_string(), "15511210043330985984000000");
    }

    #[test]
    fn powers_and_rounded_roots() {
        assert_eq!(pow::<u64>(10, 10).unwrap(), 10_000_000_000);
        assert!(pow::<u64>(16, 16).is_err());
        assert_eq!(round_sqrt(&10_000_000_000u64), 100_000);
        // sqrt(5^5) = 55.9 -> 56, sqrt(3^3) = 5.196 -> 5
        assert_eq!(round_sqrt(&3125u64), 56);
        assert_eq!(round_sqrt(&27u64), 5);
        for x in 0u64..5000 {
            let exact = (x as f64).sqrt().round() as u64;
            assert_eq!(round_sqrt(&x), exact, "x={x}");
        }
    }
}
