use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative algebra over the rationals.
///
/// Zero and one are produced from an existing value (`zero_like`) because a
/// polynomial's zero still has to know which variables it lives over.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplication by a rational constant.
    fn scale(&self, r: &BigRational) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    /// Embeds a rational constant in the same ring as `self`.
    fn constant_like(&self, r: &BigRational) -> Self {
        self.one_like().scale(r)
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &BigRational) -> Self {
        self * r
    }
}

/// Shorthand for an integer-valued rational.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`, reduced. Panics on a zero denominator.
pub fn rational_frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator individually overflow f64; fall back on
        // a scaled quotient.
        let shift = r.numer().bits().max(r.denom().bits()) as i64 - 900;
        let shift = shift.max(0) as usize;
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub(crate) fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn rationals_stay_reduced() {
        let a = rational_frac(6, -4);
        assert_eq!(a, rational_frac(-3, 2));
        assert!(a.denom() > &BigInt::zero());
        let b = &a * &rational_frac(4, 9) + rational_frac(1, 3);
        assert_eq!(b.numer().gcd(b.denom()), BigInt::one());
        assert_eq!(rational(0).denom(), &BigInt::one());
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(rational(3).pow(5), rational(243));
        assert_eq!(rational_frac(1, 2).pow(0), rational(1));
    }

    #[test]
    fn huge_rational_to_float() {
        let big = BigRational::from_integer(BigInt::from(10).pow(400u32));
        let r = &big / (&big * rational(4));
        assert_eq!(rational_to_f64(&r), 0.25);
    }
}
