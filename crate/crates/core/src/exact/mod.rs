//! Exact arithmetic substrate: rationals, dense matrices, univariate
//! polynomials with rational coefficients.

mod matrix;
mod poly;
mod polymatrix;

pub use matrix::{RatMatrix, SolutionSpace};
pub use poly::RatPoly;
pub use polymatrix::PolyMatrix;

use alloc::string::String;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `numer / denom` as an exact rational. Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Binomial coefficient `B(a, b) = a! / (b! (a - b)!)`.
///
/// Returns zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for j in 0..b {
        acc *= BigInt::from(a - j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rational(value: &Rational) -> String {
    use alloc::string::ToString;
    if value.is_integer() {
        value.numer().to_string()
    } else {
        alloc::format!("{}/{}", value.numer(), value.denom())
    }
}

/// Converts an integral rational to a `BigInt`.
pub fn to_integer(value: &Rational) -> Option<BigInt> {
    value.is_integer().then(|| value.numer().clone())
}

pub(crate) fn is_negative(value: &Rational) -> bool {
    value.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: i64) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
    }

    #[test]
    fn binom_matches_factorials() {
        for a in 0..20 {
            for b in 0..=a {
                assert_eq!(binom(a, b), factorial(a) / (factorial(b) * factorial(a - b)));
            }
        }
        assert_eq!(binom(8, 4), BigInt::from(70));
        assert_eq!(binom(13, 4), BigInt::from(715));
    }

    #[test]
    fn binom_out_of_range_is_zero() {
        assert_eq!(binom(5, 6), BigInt::zero());
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(-3, 2), BigInt::zero());
        for n in 0..10 {
            assert_eq!(binom(n, 0), BigInt::one());
        }
    }

    #[test]
    fn rationals_are_reduced() {
        let x = rat(6, -4);
        assert_eq!(*x.numer(), BigInt::from(-3));
        assert_eq!(*x.denom(), BigInt::from(2));
        assert_eq!(fmt_rational(&x), "-3/2");
        assert_eq!(fmt_rational(&int(7)), "7");
    }
}
