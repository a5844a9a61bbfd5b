//! Dyadic rationals m · 2^e in canonical form (odd or zero mantissa).
//!
//! They serve two roles: exact carriers for values in ℤ[1/2], and rounded
//! endpoints/midpoints inside certified ball arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    mantissa: BigInt,
    exponent: i64,
}

impl std::fmt::Debug for DyadicRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl DyadicRational {
    /// Canonicalize so the mantissa is odd (or zero with exponent 0).
    pub fn new(mut mantissa: BigInt, mut exponent: i64) -> Self {
        if mantissa.is_zero() {
            return DyadicRational {
                mantissa,
                exponent: 0,
            };
        }
        while mantissa.is_even() {
            mantissa /= 2;
            exponent += 1;
        }
        DyadicRational { mantissa, exponent }
    }

    pub fn zero() -> Self {
        DyadicRational::new(BigInt::zero(), 0)
    }

    pub fn one() -> Self {
        DyadicRational::new(BigInt::one(), 0)
    }

    pub fn from_int(n: BigInt) -> Self {
        DyadicRational::new(n, 0)
    }

    /// 2^e.
    pub fn power_of_two(e: i64) -> Self {
        DyadicRational::new(BigInt::one(), e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// Exact conversion from a rational whose denominator is a power of two.
    pub fn from_rational(q: &BigRational) -> Option<Self> {
        let den = q.denom();
        if den.is_one() {
            return Some(DyadicRational::from_int(q.numer().clone()));
        }
        // denominator must be 2^k
        let mut d = den.clone();
        let mut k = 0i64;
        while d.is_even() {
            d /= 2;
            k += 1;
        }
        if !d.is_one() {
            return None;
        }
        Some(DyadicRational::new(q.numer().clone(), -k))
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << (self.exponent as usize))
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << ((-self.exponent) as usize),
            )
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << ((self.exponent - e) as usize);
        let b = &other.mantissa << ((other.exponent - e) as usize);
        DyadicRational::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DyadicRational {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        DyadicRational::new(
            &self.mantissa * &other.mantissa,
            self.exponent + other.exponent,
        )
    }

    pub fn abs(&self) -> Self {
        DyadicRational {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Round so the mantissa fits in `prec` bits, in the given direction.
    /// BigInt shift is floor division, so `Down` is the plain shift, `Up`
    /// bumps inexact results by one ulp, and `Nearest` inspects the dropped
    /// top bit (error below one ulp either way).
    pub fn round_to(&self, prec: u32, dir: Rounding) -> Self {
        let bits = self.mantissa.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = (bits - prec as u64) as i64;
        let m = &self.mantissa >> (shift as usize);
        let exact = (&m << (shift as usize)) == self.mantissa;
        let m = match dir {
            Rounding::Down => m,
            Rounding::Up => {
                if exact {
                    m
                } else {
                    m + 1
                }
            }
            Rounding::Nearest => {
                if !exact && (&self.mantissa >> ((shift - 1) as usize)).is_odd() {
                    m + 1
                } else {
                    m
                }
            }
        };
        DyadicRational::new(m, self.exponent + shift)
    }

    pub fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        self.sub(other).mantissa.cmp(&BigInt::zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
    Nearest,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let d = DyadicRational::new(BigInt::from(12), -2); // 12/4 = 3
        assert_eq!(*d.mantissa(), BigInt::from(3));
        assert_eq!(d.exponent(), 0);
        let z = DyadicRational::new(BigInt::zero(), 7);
        assert!(z.is_zero());
        assert_eq!(z.exponent(), 0);
    }

    #[test]
    fn rational_round_trip() {
        let q = BigRational::new(BigInt::from(-7), BigInt::from(16));
        let d = DyadicRational::from_rational(&q).unwrap();
        assert_eq!(d.to_rational(), q);
        assert_eq!(d.exponent(), -4);
        let bad = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(DyadicRational::from_rational(&bad).is_none());
    }

    #[test]
    fn arithmetic() {
        let a = DyadicRational::new(BigInt::from(3), -1); // 3/2
        let b = DyadicRational::new(BigInt::from(5), -2); // 5/4
        assert_eq!(a.add(&b).to_rational(), BigRational::new(11.into(), 4.into()));
        assert_eq!(a.mul(&b).to_rational(), BigRational::new(15.into(), 8.into()));
        assert_eq!(a.sub(&b).to_rational(), BigRational::new(1.into(), 4.into()));
    }

    #[test]
    fn directed_rounding_brackets_value() {
        let v = DyadicRational::new(BigInt::from(0b101011011101i64), -5);
        for prec in [3u32, 5, 8] {
            let lo = v.round_to(prec, Rounding::Down);
            let hi = v.round_to(prec, Rounding::Up);
            assert!(lo.to_rational() <= v.to_rational());
            assert!(v.to_rational() <= hi.to_rational());
            assert!(lo.mantissa().bits() <= prec as u64 + 1);
        }
        let neg = v.neg();
        let lo = neg.round_to(4, Rounding::Down);
        let hi = neg.round_to(4, Rounding::Up);
        assert!(lo.to_rational() <= neg.to_rational());
        assert!(neg.to_rational() <= hi.to_rational());
    }
}
