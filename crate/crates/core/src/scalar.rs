//! Exact scalar fields.
//!
//! Every algorithm in the crate is generic over [`Scalar`]. The trait is
//! implemented for arbitrary-precision rationals and for `Ratio<i64>`; no
//! floating-point type implements it, since every check downstream relies
//! on exact zero tests during elimination.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

pub trait Scalar:
    Num + Signed + Clone + Debug + Display + FromPrimitive + FromStr + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the scalar type")
    }

    fn from_frac(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }

    fn half() -> Self {
        Self::from_frac(1, 2)
    }

    /// Parses `"p"`, `"-p"` or `"p/q"`.
    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        s.parse::<Self>().ok()
    }
}

impl Scalar for BigRational {}
impl Scalar for Ratio<i64> {}
impl Scalar for Ratio<i128> {}

/// Converts a big rational to an exact integer if it is one.
pub fn as_integer(q: &BigRational) -> Option<BigInt> {
    if q.is_integer() {
        Some(q.to_integer())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_in_lowest_terms() {
        let q = BigRational::parse_exact("6/-4").unwrap();
        assert_eq!(q, BigRational::from_frac(-3, 2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(BigRational::parse_exact(" 7 ").unwrap(), BigRational::from_int(7));
        assert!(BigRational::parse_exact("1/0").is_none());
        assert!(BigRational::parse_exact("").is_none());
        assert!(BigRational::parse_exact("x/2").is_none());
    }

    #[test]
    fn small_ratio_matches_big() {
        let a = Ratio::<i64>::from_frac(2, 6) + Ratio::<i64>::half();
        assert_eq!(a, Ratio::new(5, 6));
    }
}
