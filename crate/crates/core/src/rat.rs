//! Exact rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which keeps every value reduced with a
//! positive denominator. The helpers here cover the integer-content handling
//! shared by polynomials, equations and recurrences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `gcd(|num|, den) = 1` and `den >= 1`.
pub fn is_reduced(x: &Rat) -> bool {
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}

/// Factor `c > 0` such that every entry of `c * values` is an integer and the
/// integers have gcd 1. Returns 1 when all values are zero.
pub fn content_scale<'a, I>(values: I) -> Rat
where
    I: IntoIterator<Item = &'a Rat>,
{
    let mut den_lcm = BigInt::one();
    let mut nonzero = Vec::new();
    for v in values {
        if !v.is_zero() {
            den_lcm = den_lcm.lcm(v.denom());
            nonzero.push(v);
        }
    }
    if nonzero.is_empty() {
        return Rat::one();
    }
    let mut num_gcd = BigInt::zero();
    for v in nonzero {
        let scaled = v.numer() * (&den_lcm / v.denom());
        num_gcd = num_gcd.gcd(&scaled);
    }
    Rat::new(den_lcm, num_gcd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_zero_over_one() {
        let z = frac(0, 7);
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert!(is_reduced(&z));
    }

    #[test]
    fn negative_denominator_is_normalized() {
        let x = frac(6, -4);
        assert_eq!(x, frac(-3, 2));
        assert!(is_reduced(&x));
    }

    #[test]
    fn content_of_mixed_fractions() {
        let vals = [frac(1, 2), frac(3, 4), frac(-5, 6)];
        let c = content_scale(&vals);
        // lcm 12: 6, 9, -10 -> gcd 1
        assert_eq!(c, rat(12));
        let vals = [rat(4), rat(-6), rat(0)];
        assert_eq!(content_scale(&vals), frac(1, 2));
        assert_eq!(content_scale(&[rat(0)]), rat(1));
    }
}
