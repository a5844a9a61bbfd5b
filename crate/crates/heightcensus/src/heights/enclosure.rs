//! Certified real enclosures over exact rational endpoints.
//!
//! Every transcendental quantity in the crate (exp, log, π, ζ, real roots)
//! is produced here as an interval [lo, hi] guaranteed to contain the true
//! value, from series with explicit tail bounds. Working precision escalates
//! (doubling) up to a cap; hitting the cap is an observable outcome, never a
//! silent misclassification.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Closed interval with exact rational endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct RealEnclosure {
    lo: BigRational,
    hi: BigRational,
}

impl std::fmt::Debug for RealEnclosure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{} ≈ {:.6e}, {} ≈ {:.6e}]",
            self.lo,
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi,
            self.hi.to_f64().unwrap_or(f64::NAN)
        )
    }
}

impl RealEnclosure {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order");
        RealEnclosure { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        RealEnclosure {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_int(n: i64) -> Self {
        RealEnclosure::point(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        RealEnclosure::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        RealEnclosure::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Self {
        RealEnclosure::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RealEnclosure::new(lo, hi)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_negative() {
            RealEnclosure::new(&self.hi * c, &self.lo * c)
        } else {
            RealEnclosure::new(&self.lo * c, &self.hi * c)
        }
    }

    /// Reciprocal; requires the enclosure to exclude zero.
    pub fn recip(&self) -> Result<Self> {
        if self.lo.is_positive() || self.hi.is_negative() {
            Ok(RealEnclosure::new(self.hi.recip(), self.lo.recip()))
        } else {
            Err(Error::Certification(
                "reciprocal of an enclosure containing zero".into(),
            ))
        }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            RealEnclosure::new(
                BigRational::zero(),
                self.lo.abs().max(self.hi.abs()),
            )
        }
    }

    pub fn max_with_one(&self) -> Self {
        let one = BigRational::one();
        RealEnclosure::new(self.lo.clone().max(one.clone()), self.hi.clone().max(one))
    }

    pub fn max(&self, other: &Self) -> Self {
        RealEnclosure::new(
            self.lo.clone().max(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
        )
    }

    /// Integer power by repeated interval multiplication with outward
    /// rounding at `prec` bits per step.
    pub fn pow_round(&self, mut e: u64, prec: u32) -> Self {
        let mut base = self.clone();
        let mut acc = RealEnclosure::point(BigRational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).round_out(prec);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).round_out(prec);
            }
        }
        acc
    }

    /// Round endpoints outward to dyadics with roughly `prec` significant
    /// bits, keeping containment.
    pub fn round_out(&self, prec: u32) -> Self {
        RealEnclosure::new(
            rational_round(&self.lo, prec, false),
            rational_round(&self.hi, prec, true),
        )
    }

    /// Certified strict comparison: Some(true) iff self < other surely.
    pub fn certainly_lt(&self, other: &Self) -> Option<bool> {
        if self.hi < other.lo {
            Some(true)
        } else if self.lo >= other.hi {
            Some(false)
        } else {
            None
        }
    }

    /// Certified non-strict comparison: Some(true) iff self ≤ other surely.
    pub fn certainly_le(&self, other: &Self) -> Option<bool> {
        if self.hi <= other.lo {
            Some(true)
        } else if self.lo > other.hi {
            Some(false)
        } else {
            None
        }
    }

    /// Serialization form mandated for enclosures: exact "p/q" strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lo": rational_to_string(&self.lo),
            "hi": rational_to_string(&self.hi),
        })
    }
}

pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn rational_from_string(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Error::Format(format!("bad rational `{s}`")))?;
    let denom: BigInt = d
        .trim()
        .parse()
        .map_err(|_| Error::Format(format!("bad rational `{s}`")))?;
    if denom.is_zero() {
        return Err(Error::Format(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Round a rational to a dyadic with about `prec` significant bits;
/// `up` selects the direction (toward +∞ or −∞).
fn rational_round(q: &BigRational, prec: u32, up: bool) -> BigRational {
    if q.is_zero() {
        return q.clone();
    }
    let nbits = q.numer().bits() as i64;
    let dbits = q.denom().bits() as i64;
    // magnitude ~ 2^(nbits-dbits); keep prec significant bits
    let shift = prec as i64 - (nbits - dbits);
    let (num, den) = if shift >= 0 {
        (q.numer() << shift as usize, q.denom().clone())
    } else {
        (q.numer().clone(), q.denom() << (-shift) as usize)
    };
    let (mut m, r) = num.div_rem(&den);
    // div_rem truncates toward zero; normalize to floor then adjust
    if r.is_negative() {
        m -= 1;
    }
    if up && !(&m * &den == num) {
        m += 1;
    }
    if shift >= 0 {
        BigRational::new(m, BigInt::one() << shift as usize)
    } else {
        BigRational::from_integer(m << (-shift) as usize)
    }
}

/// Precision escalation policy in bits: start, double, stop at cap.
#[derive(Clone, Copy, Debug)]
pub struct PrecisionPolicy {
    pub start: u32,
    pub cap: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            start: 64,
            cap: 4096,
        }
    }
}

impl PrecisionPolicy {
    pub fn with_cap(cap: u32) -> Self {
        PrecisionPolicy {
            start: 64.min(cap),
            cap,
        }
    }

    /// Run `f` at escalating precision until it produces a value.
    pub fn escalate<T>(
        &self,
        what: &str,
        mut f: impl FnMut(u32) -> Result<Option<T>>,
    ) -> Result<T> {
        let mut prec = self.start;
        loop {
            if let Some(v) = f(prec)? {
                return Ok(v);
            }
            if prec >= self.cap {
                return Err(Error::Certification(format!(
                    "{what}: undecided at precision cap {} bits",
                    self.cap
                )));
            }
            prec = (prec * 2).min(self.cap);
        }
    }

    /// Enclosure refinement until the width target is met.
    pub fn refine(
        &self,
        what: &str,
        target: &BigRational,
        mut f: impl FnMut(u32) -> Result<RealEnclosure>,
    ) -> Result<RealEnclosure> {
        assert!(target.is_positive());
        self.escalate(what, |prec| {
            let e = f(prec)?;
            Ok(if e.width() <= *target { Some(e) } else { None })
        })
    }
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// 2^-prec as a convenient width target.
pub fn width_target(prec: u32) -> BigRational {
    pow2(-(prec as i64))
}

/// exp(x) at `prec` working bits: halve the argument until |y| ≤ 1/2, sum
/// the Taylor series with the exact tail bound 2·|y|^(n+1)/(n+1)!, square
/// back up with outward rounding.
pub fn exp_prec(x: &BigRational, prec: u32) -> RealEnclosure {
    if x.is_zero() {
        return RealEnclosure::point(BigRational::one());
    }
    let ax = x.abs();
    let mut halvings = 0u32;
    let mut y = x.clone();
    // |x| / 2^s ≤ 1/2
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    {
        let mut bound = ax;
        while bound > half {
            bound /= BigInt::from(2);
            halvings += 1;
        }
    }
    y /= BigInt::one() << halvings as usize;

    // Series at y with |y| ≤ 1/2; inner precision pays for the squarings.
    let inner = prec + 8 * (halvings + 2);
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    let mut n = 0u64;
    let eps = pow2(-(inner as i64));
    loop {
        n += 1;
        term = term * &y / BigInt::from(n);
        sum += &term;
        // tail ≤ 2 |y|^(n+1)/(n+1)! = 2 |term·y| / (n+1) when y ≤ 1/2
        let tail = BigRational::from_integer(2.into()) * term.abs() * y.abs()
            / BigInt::from(n + 1);
        if tail < eps {
            let mut enc = RealEnclosure::new(&sum - &tail, &sum + &tail);
            for _ in 0..halvings {
                enc = enc.mul(&enc).round_out(inner);
            }
            return enc.round_out(prec + 16);
        }
    }
}

/// Natural logarithm of a positive rational at `prec` working bits.
pub fn log_prec(x: &BigRational, prec: u32) -> Result<RealEnclosure> {
    if !x.is_positive() {
        return Err(Error::Domain(format!(
            "log of a non-positive rational {x}"
        )));
    }
    if x.is_one() {
        return Ok(RealEnclosure::point(BigRational::zero()));
    }
    // x = 2^e · m with 1 ≤ m < 2
    let mut e = x.numer().bits() as i64 - x.denom().bits() as i64;
    let mut m = x / pow2(e);
    while m < BigRational::one() {
        m *= BigInt::from(2);
        e -= 1;
    }
    while m >= BigRational::from_integer(2.into()) {
        m /= BigInt::from(2);
        e += 1;
    }
    let ln_m = atanh_series(&(&m - BigRational::one()) / (&m + BigRational::one()), prec + 8);
    let ln = if e == 0 {
        ln_m
    } else {
        ln2_prec(prec + 8)
            .scale(&BigRational::from_integer(BigInt::from(e)))
            .add(&ln_m)
    };
    Ok(ln.round_out(prec + 16))
}

/// 2·atanh(u) = log((1+u)/(1−u)) for |u| ≤ 1/3, with geometric tail bound.
fn atanh_series(u: &BigRational, prec: u32) -> RealEnclosure {
    debug_assert!(u.abs() <= BigRational::new(BigInt::one(), BigInt::from(3)) * BigRational::from_integer(2.into()));
    let u2 = u * u;
    let mut sum = u.clone();
    let mut pow = u.clone();
    let mut k = 0u64;
    let eps = pow2(-(prec as i64));
    // 1/(1−u²) ≤ 9/8 for |u| ≤ 1/3; stay safe with factor 2
    loop {
        k += 1;
        pow *= &u2;
        sum += &pow / BigInt::from(2 * k + 1);
        let tail = pow.abs() * &u2 * BigRational::from_integer(2.into())
            / BigInt::from(2 * k + 3);
        if tail < eps {
            let two = BigRational::from_integer(2.into());
            return RealEnclosure::new((&sum - &tail) * &two, (&sum + &tail) * &two)
                .round_out(prec + 8);
        }
    }
}

enum CachedConstant {
    Ln2,
    Pi,
}

static CONSTANT_CACHE: Mutex<BTreeMap<(u8, u32), (BigRational, BigRational)>> =
    Mutex::new(BTreeMap::new());

fn cached(kind: CachedConstant, prec: u32, compute: impl Fn() -> RealEnclosure) -> RealEnclosure {
    let key = (
        match kind {
            CachedConstant::Ln2 => 0u8,
            CachedConstant::Pi => 1,
        },
        prec,
    );
    if let Some((lo, hi)) = CONSTANT_CACHE.lock().unwrap().get(&key) {
        return RealEnclosure::new(lo.clone(), hi.clone());
    }
    let v = compute();
    CONSTANT_CACHE
        .lock()
        .unwrap()
        .insert(key, (v.lo.clone(), v.hi.clone()));
    v
}

/// ln 2 = 2 atanh(1/3).
pub fn ln2_prec(prec: u32) -> RealEnclosure {
    cached(CachedConstant::Ln2, prec, || {
        atanh_series(&BigRational::new(BigInt::one(), BigInt::from(3)), prec)
    })
}

/// π by Machin's formula with alternating-series tail bounds.
pub fn pi_prec(prec: u32) -> RealEnclosure {
    cached(CachedConstant::Pi, prec, || {
        let a = arctan_inv(5, prec + 8);
        let b = arctan_inv(239, prec + 8);
        a.scale(&BigRational::from_integer(16.into()))
            .sub(&b.scale(&BigRational::from_integer(4.into())))
            .round_out(prec + 8)
    })
}

/// arctan(1/q) by the alternating Gregory series; the error is bounded by
/// the first omitted term.
fn arctan_inv(q: u64, prec: u32) -> RealEnclosure {
    let q2 = BigRational::from_integer(BigInt::from(q * q));
    let mut term = BigRational::new(BigInt::one(), BigInt::from(q));
    let mut sum = term.clone();
    let mut k = 0u64;
    let eps = pow2(-(prec as i64));
    loop {
        k += 1;
        term = -term / &q2;
        let contrib = &term / BigInt::from(2 * k + 1);
        sum += &contrib;
        let next = term.abs() / (&q2 * BigInt::from(2 * k + 3));
        if next < eps {
            return RealEnclosure::new(&sum - &next, &sum + &next).round_out(prec + 8);
        }
    }
}

/// ζ(s) for integer s ≥ 2 with certified tails: ζ(2) = π²/6, ζ(3) by the
/// fast alternating central-binomial series, s ≥ 4 by direct summation with
/// the integral tail bracket.
pub fn zeta_prec(s: u32, prec: u32) -> Result<RealEnclosure> {
    match s {
        0 | 1 => Err(Error::Domain(format!("zeta({s}) not supported"))),
        2 => {
            let pi = pi_prec(prec + 8);
            Ok(pi
                .mul(&pi)
                .scale(&BigRational::new(BigInt::one(), BigInt::from(6)))
                .round_out(prec + 8))
        }
        3 => Ok(zeta3_prec(prec)),
        _ => {
            // Σ_{k≤n} k^-s + tail, (n+1)^(1-s)/(s-1) ≤ tail ≤ n^(1-s)/(s-1)
            let eps = pow2(-(prec as i64));
            let mut n = 4u64;
            loop {
                let tail_width = BigRational::new(BigInt::one(), BigInt::from(n).pow(s - 1))
                    / BigInt::from(s - 1);
                if tail_width < eps || n > 1 << 22 {
                    break;
                }
                n *= 2;
            }
            if n > 1 << 22 {
                return Err(Error::Budget(format!(
                    "zeta({s}) direct summation needs more than {n} terms"
                )));
            }
            let mut sum = BigRational::zero();
            for k in 1..=n {
                sum += BigRational::new(BigInt::one(), BigInt::from(k).pow(s));
            }
            let lo_tail = BigRational::new(BigInt::one(), BigInt::from(n + 1).pow(s - 1))
                / BigInt::from(s - 1);
            let hi_tail = BigRational::new(BigInt::one(), BigInt::from(n).pow(s - 1))
                / BigInt::from(s - 1);
            Ok(RealEnclosure::new(&sum + lo_tail, &sum + hi_tail).round_out(prec + 8))
        }
    }
}

/// ζ(3) = (5/2) Σ_{k≥1} (−1)^(k−1) / (k³ C(2k,k)); terms decrease in
/// absolute value (ratio < 1/4), so the truncation error is bounded by the
/// first omitted term.
fn zeta3_prec(prec: u32) -> RealEnclosure {
    let mut binom = BigInt::from(2); // C(2,1)
    let mut sum = BigRational::new(BigInt::one(), BigInt::from(2)); // k = 1 term: 1/(1·2)
    let mut k = 1u64;
    let eps = pow2(-(prec as i64 + 4));
    loop {
        k += 1;
        binom = binom * BigInt::from(2 * k - 1) * BigInt::from(2 * k) / (BigInt::from(k) * BigInt::from(k));
        let term = BigRational::new(
            BigInt::one(),
            BigInt::from(k).pow(3) * &binom,
        );
        if k % 2 == 0 {
            sum -= &term;
        } else {
            sum += &term;
        }
        if term < eps {
            let enc = RealEnclosure::new(&sum - &term, &sum + &term);
            return enc
                .scale(&BigRational::new(BigInt::from(5), BigInt::from(2)))
                .round_out(prec + 8);
        }
    }
}

/// n-th root of a nonnegative rational at about `prec` bits, exact when the
/// argument is a perfect n-th power.
pub fn nth_root_prec(q: &BigRational, n: u32, prec: u32) -> Result<RealEnclosure> {
    if q.is_negative() {
        return Err(Error::Domain(format!("nth_root of negative rational {q}")));
    }
    if n == 0 {
        return Err(Error::Domain("0th root".into()));
    }
    if q.is_zero() {
        return Ok(RealEnclosure::point(BigRational::zero()));
    }
    // exact detection
    let rn = q.numer().nth_root(n);
    let rd = q.denom().nth_root(n);
    if &rn.pow(n) == q.numer() && &rd.pow(n) == q.denom() {
        return Ok(RealEnclosure::point(BigRational::new(rn, rd)));
    }
    let k = prec as usize;
    let scaled = (q.numer() << (k * n as usize)) / q.denom();
    let r = scaled.sqrt_if(n);
    let lo = BigRational::new(r.clone(), BigInt::one() << k);
    let hi = BigRational::new(r + BigInt::one(), BigInt::one() << k);
    Ok(RealEnclosure::new(lo, hi))
}

trait NthRootExt {
    fn sqrt_if(&self, n: u32) -> BigInt;
}

impl NthRootExt for BigInt {
    fn sqrt_if(&self, n: u32) -> BigInt {
        if n == 2 {
            self.sqrt()
        } else {
            self.nth_root(n)
        }
    }
}

pub fn sqrt_prec(q: &BigRational, prec: u32) -> Result<RealEnclosure> {
    nth_root_prec(q, 2, prec)
}

/// sqrt of an enclosure of a nonnegative quantity (lo clamped at 0).
pub fn sqrt_enclosure(e: &RealEnclosure, prec: u32) -> Result<RealEnclosure> {
    let lo = if e.lo.is_negative() {
        BigRational::zero()
    } else {
        e.lo.clone()
    };
    let lo_root = sqrt_prec(&lo, prec)?;
    let hi_root = sqrt_prec(&e.hi, prec)?;
    Ok(RealEnclosure::new(lo_root.lo, hi_root.hi))
}

/// log over an enclosure of a positive quantity (monotone).
pub fn log_enclosure(e: &RealEnclosure, prec: u32) -> Result<RealEnclosure> {
    let lo = log_prec(&e.lo, prec)?;
    let hi = log_prec(&e.hi, prec)?;
    Ok(RealEnclosure::new(lo.lo, hi.hi))
}

/// x^(num/den) for a positive enclosure, integer num (can be negative),
/// positive den.
pub fn pow_rational_exp(
    x: &RealEnclosure,
    num: i64,
    den: u32,
    prec: u32,
) -> Result<RealEnclosure> {
    if !x.lo.is_positive() {
        return Err(Error::Domain(
            "rational power of an enclosure not bounded away from 0".into(),
        ));
    }
    let root = if den == 1 {
        x.clone()
    } else {
        let lo = nth_root_prec(&x.lo, den, prec)?;
        let hi = nth_root_prec(&x.hi, den, prec)?;
        RealEnclosure::new(lo.lo, hi.hi)
    };
    let powed = root.pow_round(num.unsigned_abs(), prec + 8);
    if num < 0 {
        powed.recip()
    } else {
        Ok(powed)
    }
}

/// Integer part (floor) of an enclosure, when it is determined.
pub fn floor_enclosure(e: &RealEnclosure) -> Option<BigInt> {
    let lo = e.lo.floor().to_integer();
    let hi = e.hi.floor().to_integer();
    (lo == hi).then_some(lo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn assert_encloses(e: &RealEnclosure, approx: f64, tol: f64) {
        let lo = e.lo().to_f64().unwrap();
        let hi = e.hi().to_f64().unwrap();
        assert!(lo <= approx + tol && approx - tol <= hi, "{approx} not in [{lo}, {hi}]");
        assert!(hi - lo <= 2.0 * tol, "width too large: [{lo}, {hi}]");
    }

    #[test]
    fn exp_known_values() {
        assert_encloses(&exp_prec(&rat(1, 1), 80), std::f64::consts::E, 1e-12);
        assert_encloses(&exp_prec(&rat(3, 1), 80), 20.085536923187668, 1e-10);
        assert_encloses(&exp_prec(&rat(-1, 2), 80), 0.6065306597126334, 1e-12);
        assert!(exp_prec(&rat(0, 1), 64).is_point());
    }

    #[test]
    fn log_known_values() {
        assert_encloses(&log_prec(&rat(2, 1), 80).unwrap(), std::f64::consts::LN_2, 1e-12);
        assert_encloses(&log_prec(&rat(3, 1), 80).unwrap(), 1.0986122886681098, 1e-12);
        assert_encloses(&log_prec(&rat(5, 4), 80).unwrap(), 0.22314355131420976, 1e-12);
        assert_encloses(&log_prec(&rat(1, 3), 80).unwrap(), -1.0986122886681098, 1e-12);
        assert!(log_prec(&rat(1, 1), 64).unwrap().is_point());
        assert!(log_prec(&rat(-1, 1), 64).is_err());
    }

    #[test]
    fn round_trip_exp_log_consistency() {
        // log(exp(2)) must enclose 2
        let e2 = exp_prec(&rat(2, 1), 128);
        let back = log_enclosure(&e2, 128).unwrap();
        assert!(back.contains(&rat(2, 1)));
    }

    #[test]
    fn pi_and_zeta() {
        assert_encloses(&pi_prec(96), std::f64::consts::PI, 1e-14);
        assert_encloses(&zeta_prec(2, 96).unwrap(), 1.6449340668482264, 1e-13);
        assert_encloses(&zeta_prec(3, 96).unwrap(), 1.2020569031595942, 1e-13);
        assert_encloses(&zeta_prec(4, 96).unwrap(), 1.0823232337111382, 1e-13);
        // 12/π² ≈ 1.2158542037080532
        let pi = pi_prec(96);
        let c = RealEnclosure::from_int(12)
            .mul(&pi.mul(&pi).recip().unwrap());
        assert_encloses(&c, 1.2158542037080532, 1e-12);
    }

    #[test]
    fn nth_root_exact_and_inexact() {
        let exact = nth_root_prec(&rat(9, 4), 2, 64).unwrap();
        assert!(exact.is_point());
        assert_eq!(*exact.lo(), rat(3, 2));
        let cube = nth_root_prec(&rat(27, 8), 3, 64).unwrap();
        assert!(cube.is_point());
        assert_eq!(*cube.lo(), rat(3, 2));
        let s2 = nth_root_prec(&rat(2, 1), 2, 100).unwrap();
        assert_encloses(&s2, std::f64::consts::SQRT_2, 1e-14);
        assert!(nth_root_prec(&rat(-2, 1), 2, 64).is_err());
    }

    #[test]
    fn floor_and_comparisons() {
        let e = exp_prec(&rat(1, 1), 64);
        assert_eq!(floor_enclosure(&e), Some(BigInt::from(2)));
        let e3 = exp_prec(&rat(3, 1), 64);
        assert_eq!(floor_enclosure(&e3), Some(BigInt::from(20)));
        let a = RealEnclosure::new(rat(1, 2), rat(2, 3));
        let b = RealEnclosure::new(rat(3, 4), rat(1, 1));
        assert_eq!(a.certainly_lt(&b), Some(true));
        assert_eq!(b.certainly_lt(&a), Some(false));
        let c = RealEnclosure::new(rat(0, 1), rat(1, 1));
        assert_eq!(c.certainly_lt(&a), None);
    }

    #[test]
    fn escalation_policy() {
        let policy = PrecisionPolicy::default();
        // e^4 enclosure to width 1e-30
        let target = rat(1, 1_000_000_000_000_000i64)
            * rat(1, 1_000_000_000_000_000i64);
        let e = policy
            .refine("exp(4)", &target, |p| Ok(exp_prec(&rat(4, 1), p)))
            .unwrap();
        assert!(e.width() <= target);
        // an impossible demand errors at the cap
        let tiny = PrecisionPolicy { start: 16, cap: 32 };
        let r = tiny.refine("exp(4) narrow", &(target.clone() * target.clone()), |p| {
            Ok(exp_prec(&rat(4, 1), p))
        });
        assert!(r.is_err());
    }

    #[test]
    fn rounding_keeps_containment() {
        let v = rat(1, 3);
        let e = RealEnclosure::new(v.clone(), v.clone()).round_out(20);
        assert!(e.contains(&v));
        assert!(e.width() <= rat(1, 100_000));
    }
}
