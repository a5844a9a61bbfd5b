//! Complex ball arithmetic: exact rational midpoints and radii, with
//! midpoint rounding that pushes its error into the radius. The represented
//! set is always the closed disk about the midpoint.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::enclosure::{sqrt_prec, RealEnclosure};
use crate::error::Result;

#[derive(Clone, PartialEq, Eq)]
pub struct BallComplex {
    pub re: BigRational,
    pub im: BigRational,
    pub rad: BigRational,
    pub precision_bits: u32,
}

impl std::fmt::Debug for BallComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use num_traits::ToPrimitive;
        write!(
            f,
            "Ball({:.6} + {:.6}i ± {:.3e})",
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
            self.rad.to_f64().unwrap_or(f64::NAN),
        )
    }
}

fn round_mid(q: &BigRational, prec: u32) -> (BigRational, BigRational) {
    // round toward zero at prec significant bits; return (rounded, |error|)
    if q.is_zero() {
        return (q.clone(), BigRational::zero());
    }
    let nbits = q.numer().bits() as i64;
    let dbits = q.denom().bits() as i64;
    let shift = prec as i64 - (nbits - dbits);
    if shift >= 64 {
        return (q.clone(), BigRational::zero());
    }
    let (num, den) = if shift >= 0 {
        (q.numer() << shift as usize, q.denom().clone())
    } else {
        (q.numer().clone(), q.denom() << (-shift) as usize)
    };
    let m = num / &den; // truncation toward zero
    let rounded = if shift >= 0 {
        BigRational::new(m, BigInt::from(1) << shift as usize)
    } else {
        BigRational::from_integer(m << (-shift) as usize)
    };
    let err = (q - &rounded).abs();
    (rounded, err)
}

impl BallComplex {
    pub fn exact(re: BigRational, im: BigRational) -> Self {
        BallComplex {
            re,
            im,
            rad: BigRational::zero(),
            precision_bits: u32::MAX,
        }
    }

    pub fn exact_rational(re: BigRational) -> Self {
        BallComplex::exact(re, BigRational::zero())
    }

    pub fn new(re: BigRational, im: BigRational, rad: BigRational, precision_bits: u32) -> Self {
        assert!(!rad.is_negative());
        BallComplex {
            re,
            im,
            rad,
            precision_bits,
        }
    }

    pub fn zero(prec: u32) -> Self {
        BallComplex::new(BigRational::zero(), BigRational::zero(), BigRational::zero(), prec)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// |midpoint|² exactly.
    pub fn mid_norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Rational upper bound on the modulus of any point of the ball.
    pub fn modulus_upper(&self) -> BigRational {
        let m = sqrt_prec(&self.mid_norm_sq(), 32)
            .expect("norm is nonnegative")
            .hi()
            .clone();
        m + &self.rad
    }

    /// Enclosure of |z| over the ball.
    pub fn modulus_enclosure(&self, prec: u32) -> Result<RealEnclosure> {
        let m = sqrt_prec(&self.mid_norm_sq(), prec)?;
        let lo = (m.lo() - &self.rad).max(BigRational::zero());
        let hi = m.hi() + &self.rad;
        Ok(RealEnclosure::new(lo, hi))
    }

    /// Round the midpoint to the working precision, growing the radius by
    /// the rounding error.
    pub fn round(&self, prec: u32) -> Self {
        let (re, ere) = round_mid(&self.re, prec);
        let (im, eim) = round_mid(&self.im, prec);
        let (rad, erad) = {
            let (r, e) = round_mid(&self.rad, 32);
            (r + BigRational::from_integer(2.into()) * e, BigRational::zero())
        };
        let _ = erad;
        BallComplex::new(re, im, rad + ere + eim, prec)
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        BallComplex::new(
            &self.re + &other.re,
            &self.im + &other.im,
            &self.rad + &other.rad,
            prec,
        )
        .round(prec)
    }

    pub fn add_rational(&self, q: &BigRational, prec: u32) -> Self {
        BallComplex::new(&self.re + q, self.im.clone(), self.rad.clone(), prec).round(prec)
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        let re = &self.re * &other.re - &self.im * &other.im;
        let im = &self.re * &other.im + &self.im * &other.re;
        let ma = self.modulus_upper();
        let mb = other.modulus_upper();
        let rad = &ma * &other.rad + &mb * &self.rad + &self.rad * &other.rad;
        BallComplex::new(re, im, rad, prec).round(prec)
    }

    pub fn scale_rational(&self, q: &BigRational, prec: u32) -> Self {
        BallComplex::new(&self.re * q, &self.im * q, self.rad.clone() * q.abs(), prec).round(prec)
    }

    pub fn grow(&self, extra: &BigRational) -> Self {
        assert!(!extra.is_negative());
        BallComplex::new(
            self.re.clone(),
            self.im.clone(),
            &self.rad + extra,
            self.precision_bits,
        )
    }

    /// Whether the balls are certainly disjoint: |c₁−c₂|² > (r₁+r₂)².
    pub fn certainly_disjoint(&self, other: &Self) -> bool {
        let dre = &self.re - &other.re;
        let dim = &self.im - &other.im;
        let dist_sq = &dre * &dre + &dim * &dim;
        let rsum = &self.rad + &other.rad;
        dist_sq > &rsum * &rsum
    }

    /// Whether this ball is certainly contained in `outer`:
    /// |c₁−c₂| + r₁ ≤ r₂, checked via squares.
    pub fn certainly_inside(&self, outer: &Self) -> bool {
        let dre = &self.re - &outer.re;
        let dim = &self.im - &outer.im;
        let dist_sq = &dre * &dre + &dim * &dim;
        let slack = &outer.rad - &self.rad;
        if slack.is_negative() {
            return false;
        }
        dist_sq <= &slack * &slack
    }

    /// Whether a specific point is inside the ball.
    pub fn contains_point(&self, re: &BigRational, im: &BigRational) -> bool {
        let dre = &self.re - re;
        let dim = &self.im - im;
        &dre * &dre + &dim * &dim <= &self.rad * &self.rad
    }
}

/// Evaluate a rational-coefficient polynomial on a ball by Horner.
pub fn eval_poly_ball(
    coeffs: &[BigRational],
    z: &BallComplex,
    prec: u32,
) -> BallComplex {
    let mut acc = BallComplex::zero(prec);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, prec).add_rational(c, prec);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_soundness() {
        let a = BallComplex::new(rat(1, 2), rat(1, 3), rat(1, 100), 64);
        let b = BallComplex::new(rat(-2, 1), rat(1, 7), rat(1, 50), 64);
        let s = a.add(&b, 64);
        // exact sum of midpoints must be inside
        assert!(s.contains_point(&(rat(1, 2) + rat(-2, 1)), &(rat(1, 3) + rat(1, 7))));
        let m = a.mul(&b, 64);
        let exact_re = rat(1, 2) * rat(-2, 1) - rat(1, 3) * rat(1, 7);
        let exact_im = rat(1, 2) * rat(1, 7) + rat(1, 3) * rat(-2, 1);
        assert!(m.contains_point(&exact_re, &exact_im));
    }

    #[test]
    fn disjointness_and_containment() {
        let a = BallComplex::new(rat(0, 1), rat(0, 1), rat(1, 4), 64);
        let b = BallComplex::new(rat(1, 1), rat(0, 1), rat(1, 4), 64);
        assert!(a.certainly_disjoint(&b));
        let inner = BallComplex::new(rat(1, 100), rat(0, 1), rat(1, 100), 64);
        assert!(inner.certainly_inside(&a));
        assert!(!a.certainly_inside(&inner));
    }

    #[test]
    fn poly_ball_eval_contains_exact_value() {
        // p(z) = z² + 1 at z = 1/2 + i/3 exactly
        let coeffs = vec![BigRational::one(), BigRational::zero(), BigRational::one()];
        let z = BallComplex::exact(rat(1, 2), rat(1, 3));
        let v = eval_poly_ball(&coeffs, &z, 80);
        let exact_re = rat(1, 4) - rat(1, 9) + rat(1, 1);
        let exact_im = rat(2, 1) * rat(1, 2) * rat(1, 3);
        assert!(v.contains_point(&exact_re, &exact_im));
    }
}
