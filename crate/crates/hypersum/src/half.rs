//! Half-integers: elements of (1/2)Z stored exactly as twice their value.
//!
//! Gamma arguments and theorem parameters throughout the crate live on the
//! half-integer lattice, so the type stores `2x` as an arbitrary-precision
//! integer and never loses exactness.
//!
//! * [`HalfInteger::new`] / [`HalfInteger::from_twice`] — construction
//! * arithmetic via `Add`, `Sub`, `Neg` and integer shifts
//! * [`HalfInteger::to_rational`] — exact conversion to `BigRational`

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::ExactError;

/// An element of (1/2)Z, stored as twice its value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: BigInt,
}

impl HalfInteger {
    /// The half-integer with value `n` (an ordinary integer).
    pub fn new(n: i64) -> Self {
        HalfInteger { twice: BigInt::from(2 * n) }
    }

    /// The half-integer `t/2`.
    pub fn from_twice(t: impl Into<BigInt>) -> Self {
        HalfInteger { twice: t.into() }
    }

    /// One half.
    pub fn half() -> Self {
        HalfInteger { twice: BigInt::one() }
    }

    /// Twice the value, i.e. the underlying lattice coordinate.
    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    /// True when the value is an ordinary integer.
    pub fn is_integer(&self) -> bool {
        (&self.twice % 2u8).is_zero()
    }

    /// True when the value is an odd multiple of 1/2.
    pub fn is_half_odd(&self) -> bool {
        !self.is_integer()
    }

    /// True when the value is an integer <= 0 (a gamma pole).
    pub fn is_non_positive_integer(&self) -> bool {
        self.is_integer() && !self.twice.is_positive()
    }

    /// The integer value, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(&self.twice / 2)
        } else {
            None
        }
    }

    /// Exact conversion to a rational.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.twice.clone(), BigInt::from(2))
    }

    /// Exact conversion from a rational with denominator 1 or 2.
    pub fn try_from_rational(r: &BigRational) -> Result<Self, ExactError> {
        let two = BigInt::from(2);
        let twice = r.numer() * &two / r.denom();
        if &BigRational::new(twice.clone(), two) == r {
            Ok(HalfInteger { twice })
        } else {
            Err(ExactError::NotHalfInteger(r.to_string()))
        }
    }

    pub fn is_positive(&self) -> bool {
        self.twice.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.twice.is_zero()
    }
}

impl Add<&HalfInteger> for &HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: &HalfInteger) -> HalfInteger {
        HalfInteger { twice: &self.twice + &rhs.twice }
    }
}

impl Sub<&HalfInteger> for &HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: &HalfInteger) -> HalfInteger {
        HalfInteger { twice: &self.twice - &rhs.twice }
    }
}

impl Add<i64> for &HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: i64) -> HalfInteger {
        HalfInteger { twice: &self.twice + BigInt::from(2 * rhs) }
    }
}

impl Neg for &HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> HalfInteger {
        HalfInteger { twice: -&self.twice }
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInteger {
    type Err = ExactError;
    /// Parses `"3"`, `"-7/2"`, `"9/2"` — any rational with denominator 1 or 2.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = BigRational::from_str(s)
            .map_err(|_| ExactError::NotHalfInteger(s.to_string()))?;
        HalfInteger::try_from_rational(&r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn construction_and_predicates() {
        let x = HalfInteger::from_twice(-3); // -3/2
        assert!(x.is_half_odd());
        assert!(!x.is_integer());
        assert!(!x.is_non_positive_integer());
        assert_eq!(x.to_string(), "-3/2");

        let y = HalfInteger::new(-2);
        assert!(y.is_non_positive_integer());
        assert_eq!(y.to_string(), "-2");
        assert_eq!(y.to_integer(), Some(BigInt::from(-2)));
    }

    #[test]
    fn arithmetic() {
        let a = HalfInteger::from_twice(1); // 1/2
        let b = HalfInteger::new(3);
        assert_eq!((&a + &b).to_string(), "7/2");
        assert_eq!((&a - &b).to_string(), "-5/2");
        assert_eq!((&a + 1).to_string(), "3/2");
        assert_eq!((-&a).to_string(), "-1/2");
    }

    #[test]
    fn rational_round_trip() {
        for t in -9..9 {
            let h = HalfInteger::from_twice(t);
            let r = h.to_rational();
            assert_eq!(HalfInteger::try_from_rational(&r).unwrap(), h);
        }
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(HalfInteger::try_from_rational(&third).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(HalfInteger::from_str("9/2").unwrap(), HalfInteger::from_twice(9));
        assert_eq!(HalfInteger::from_str("-4").unwrap(), HalfInteger::new(-4));
        assert!(HalfInteger::from_str("1/3").is_err());
    }
}
