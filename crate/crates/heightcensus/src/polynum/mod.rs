//! Exact integer/rational polynomial arithmetic, irreducibility over ℤ, and
//! number-field element arithmetic. Everything downstream (enumeration,
//! heights, series construction, the auxiliary-function machinery) sits on
//! this module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

mod dyadic;
mod irreducible;
mod multi;
mod numberfield;

pub use dyadic::DyadicRational;
pub use multi::MultiPoly;
pub use numberfield::{nf_minpoly, nf_reduce, AlgebraicNumber, ComplexBox, NumberFieldElement};

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order with a nonzero leading
/// coefficient; the zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntPolynomial({})", self.to_line())
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPolynomial::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// Coefficients in ascending degree order.
    pub fn from_coeffs_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of X^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact evaluation at a complex rational point, returning (re, im).
    pub fn eval_complex_rational(
        &self,
        re: &BigRational,
        im: &BigRational,
    ) -> (BigRational, BigRational) {
        let mut acc_re = BigRational::zero();
        let mut acc_im = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let new_re = &acc_re * re - &acc_im * im + BigRational::from_integer(c.clone());
            let new_im = &acc_re * im + &acc_im * re;
            acc_re = new_re;
            acc_im = new_im;
        }
        (acc_re, acc_im)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division in ℤ[X]; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let top = rem[i].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            quot[i - dd] = q.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &q * b;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::new(quot))
    }

    /// Max absolute coefficient (usual height); 0 for the zero polynomial.
    pub fn usual_height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Sum of absolute coefficients (length).
    pub fn length(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Sum of squared coefficients (square of the l2 norm).
    pub fn norm2_squared(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Reversal X^d · p(1/X). For p with nonzero constant term this is the
    /// minimal-polynomial transform α ↦ 1/α up to sign normalization.
    pub fn reversal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial::new(coeffs)
    }

    /// Same polynomial with positive leading coefficient.
    pub fn with_positive_leading(&self) -> Self {
        match self.leading() {
            Some(lc) if lc.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// p(cX) for an integer c.
    pub fn compose_scale(&self, c: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &pw;
                pw = &pw * c;
                out
            })
            .collect();
        IntPolynomial::new(coeffs)
    }

    /// Squarefree test via gcd with the derivative.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => gcd_primitive(self, &self.derivative())
                .degree()
                .is_some_and(|d| d == 0),
        }
    }

    /// Text line in the repo polynomial format: degree followed by the
    /// coefficients from leading to constant, space separated.
    pub fn to_line(&self) -> String {
        if self.is_zero() {
            return "0 0".to_string();
        }
        let mut parts = vec![self.degree().unwrap().to_string()];
        for c in self.coeffs.iter().rev() {
            parts.push(c.to_string());
        }
        parts.join(" ")
    }

    pub fn from_line(line: &str) -> Result<Self> {
        let mut it = line.split_whitespace();
        let d: usize = it
            .next()
            .ok_or_else(|| Error::Format("empty polynomial line".into()))?
            .parse()
            .map_err(|_| Error::Format(format!("bad degree in line: {line}")))?;
        let mut desc: Vec<BigInt> = Vec::with_capacity(d + 1);
        for tok in it {
            let c: BigInt = tok
                .parse()
                .map_err(|_| Error::Format(format!("bad coefficient `{tok}` in line: {line}")))?;
            desc.push(c);
        }
        if desc.len() != d + 1 {
            return Err(Error::Format(format!(
                "line declares degree {d} but carries {} coefficients: {line}",
                desc.len()
            )));
        }
        desc.reverse();
        let p = IntPolynomial::new(desc);
        if !p.is_zero() && p.degree() != Some(d) {
            return Err(Error::Format(format!(
                "declared degree {d} does not match leading coefficient in: {line}"
            )));
        }
        Ok(p)
    }
}

/// Factor out the content: returns (content, primitive part) with content > 0
/// and the sign of the leading coefficient preserved.
pub fn content_primitive(p: &IntPolynomial) -> Result<(BigInt, IntPolynomial)> {
    if p.is_zero() {
        return Err(Error::Domain(
            "content of the zero polynomial is undefined".into(),
        ));
    }
    let c = p.content();
    let prim = IntPolynomial::new(p.coeffs.iter().map(|a| a / &c).collect());
    Ok((c, prim))
}

/// Primitive gcd in ℤ[X] via a primitive pseudo-remainder sequence.
pub fn gcd_primitive(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return match content_primitive(b) {
            Ok((_, p)) => p.with_positive_leading(),
            Err(_) => IntPolynomial::zero(),
        };
    }
    if b.is_zero() {
        return gcd_primitive(b, a);
    }
    let (mut p, mut q) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    p = content_primitive(&p).unwrap().1;
    q = content_primitive(&q).unwrap().1;
    loop {
        let r = pseudo_rem(&p, &q);
        if r.is_zero() {
            return q.with_positive_leading();
        }
        let (_, rp) = content_primitive(&r).unwrap();
        p = q;
        q = rp;
        if q.degree() == Some(0) {
            return IntPolynomial::one();
        }
    }
}

/// Pseudo-remainder: lc(q)^(deg p − deg q + 1) · p mod q, exact in ℤ[X].
fn pseudo_rem(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    if dp < dq {
        return p.clone();
    }
    let lc = q.leading().unwrap().clone();
    let mut rem = p.clone();
    while let Some(dr) = rem.degree() {
        if dr < dq {
            break;
        }
        let top = rem.leading().unwrap().clone();
        // rem <- lc * rem - top * X^(dr-dq) * q
        let mut shifted = vec![BigInt::zero(); dr - dq];
        shifted.extend(q.coeffs.iter().map(|c| c * &top));
        rem = rem.scale(&lc).sub(&IntPolynomial::new(shifted));
    }
    rem
}

/// 2-Eisenstein criterion: odd leading coefficient, all lower coefficients
/// even, constant term not divisible by 4. Such polynomials are irreducible
/// over ℚ.
pub fn is_two_eisenstein(p: &IntPolynomial) -> bool {
    let Some(d) = p.degree() else { return false };
    if d < 1 {
        return false;
    }
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    if p.leading().unwrap().mod_floor(&two).is_zero() {
        return false;
    }
    for i in 0..d {
        if !p.coeff(i).mod_floor(&two).is_zero() {
            return false;
        }
    }
    !p.constant_term().mod_floor(&four).is_zero()
}

pub use irreducible::is_irreducible_over_z;

/// Euler's totient for small arguments.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// k-th cyclotomic polynomial, computed by exact division of X^k − 1 by the
/// cyclotomic polynomials of the proper divisors of k.
pub fn cyclotomic(k: u64) -> IntPolynomial {
    assert!(k >= 1);
    let mut table: std::collections::BTreeMap<u64, IntPolynomial> = Default::default();
    for d in 1..=k {
        if k % d != 0 {
            continue;
        }
        // X^d - 1
        let mut coeffs = vec![BigInt::zero(); d as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[d as usize] = BigInt::one();
        let mut phi_d = IntPolynomial::new(coeffs);
        for (e, pe) in table.iter() {
            if d % e == 0 {
                phi_d = phi_d.div_exact(pe).expect("cyclotomic recursion divides");
            }
        }
        table.insert(d, phi_d);
    }
    table.remove(&k).unwrap()
}

/// Whether an irreducible, primitive, positive-leading polynomial is a
/// cyclotomic polynomial (equivalently: its Mahler measure is 1 and it is
/// not X).
pub fn is_cyclotomic(p: &IntPolynomial) -> bool {
    let Some(d) = p.degree() else { return false };
    if d == 0 {
        return false;
    }
    if !p.leading().unwrap().is_one() {
        return false;
    }
    let d64 = d as u64;
    // φ(k) = d forces k ≤ 2 d² for d ≥ 1 (φ(k) ≥ sqrt(k/2)).
    let bound = (2 * d64 * d64 + 2).max(6);
    (1..=bound).any(|k| euler_phi(k) == d64 && cyclotomic(k) == *p)
}

/// Polynomial with rational coefficients, stored as a primitive-ish integer
/// polynomial over a positive common denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    numer: IntPolynomial,
    denom: BigInt,
}

impl std::fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RatPolynomial(({})/{})", self.numer.to_line(), self.denom)
    }
}

impl RatPolynomial {
    /// Build from an integer polynomial over a nonzero denominator,
    /// normalizing so gcd(content(numer), denom) = 1 and denom ≥ 1.
    pub fn new(numer: IntPolynomial, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        if numer.is_zero() {
            return RatPolynomial {
                numer,
                denom: BigInt::one(),
            };
        }
        let (mut numer, mut denom) = if denom.is_negative() {
            (numer.neg(), -denom)
        } else {
            (numer, denom)
        };
        let g = numer.content().gcd(&denom);
        if !g.is_one() {
            numer = IntPolynomial::new(numer.coeffs.iter().map(|c| c / &g).collect());
            denom = denom / &g;
        }
        RatPolynomial { numer, denom }
    }

    pub fn from_int(p: IntPolynomial) -> Self {
        RatPolynomial::new(p, BigInt::one())
    }

    pub fn zero() -> Self {
        RatPolynomial::from_int(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        RatPolynomial::from_int(IntPolynomial::one())
    }

    pub fn from_rational_coeffs(coeffs: &[BigRational]) -> Self {
        let mut denom = BigInt::one();
        for c in coeffs {
            denom = denom.lcm(c.denom());
        }
        let ints = coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        RatPolynomial::new(IntPolynomial::new(ints), denom)
    }

    pub fn numer(&self) -> &IntPolynomial {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.numer.degree()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.numer.coeff(i), self.denom.clone())
    }

    pub fn coeffs_rational(&self) -> Vec<BigRational> {
        (0..self.numer.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn is_monic(&self) -> bool {
        match self.numer.leading() {
            Some(lc) => *lc == self.denom,
            None => false,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let numer = self
            .numer
            .scale(&other.denom)
            .add(&other.numer.scale(&self.denom));
        RatPolynomial::new(numer, &self.denom * &other.denom)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatPolynomial {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatPolynomial::new(self.numer.mul(&other.numer), &self.denom * &other.denom)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatPolynomial::new(self.numer.scale(c.numer()), &self.denom * c.denom())
    }

    pub fn pow(&self, e: usize) -> Self {
        RatPolynomial::new(self.numer.pow(e), num_traits::pow(self.denom.clone(), e))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.numer.eval_rational(x) / BigRational::from_integer(self.denom.clone())
    }

    pub fn derivative(&self) -> Self {
        RatPolynomial::new(self.numer.derivative(), self.denom.clone())
    }
}

/// Exact σ-th formal derivative.
pub fn poly_derivative(p: &RatPolynomial, order: usize) -> RatPolynomial {
    let mut out = p.clone();
    for _ in 0..order {
        out = out.derivative();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs_i64(coeffs)
    }

    #[test]
    fn content_primitive_examples() {
        // 2X + 4 -> (2, X + 2)
        let (c, prim) = content_primitive(&p(&[4, 2])).unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(prim, p(&[2, 1]));
        // X² − X − 1 already primitive
        let (c, prim) = content_primitive(&p(&[-1, -1, 1])).unwrap();
        assert_eq!(c, BigInt::one());
        assert_eq!(prim, p(&[-1, -1, 1]));
        // 6X² + 10X + 4 -> (2, 3X² + 5X + 2)
        let (c, prim) = content_primitive(&p(&[4, 10, 6])).unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(prim, p(&[2, 5, 3]));
        // sign of leading coefficient preserved
        let (c, prim) = content_primitive(&p(&[-4, -10, -6])).unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(prim, p(&[-2, -5, -3]));
        assert!(content_primitive(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn two_eisenstein_examples() {
        assert!(is_two_eisenstein(&p(&[2, 2, 1]))); // X² + 2X + 2
        assert!(!is_two_eisenstein(&p(&[4, 0, 1]))); // X² + 4: 4 | constant
        assert!(is_two_eisenstein(&p(&[2, 6, 2, 3]))); // 3X³ + 2X² + 6X + 2
        assert!(!is_two_eisenstein(&p(&[2, 2, 2]))); // even leading
        assert!(!is_two_eisenstein(&p(&[3, 2, 1]))); // odd constant
    }

    #[test]
    fn derivative_examples() {
        let x3 = RatPolynomial::from_int(p(&[0, 0, 0, 1]));
        assert_eq!(poly_derivative(&x3, 1), RatPolynomial::from_int(p(&[0, 0, 3])));
        assert!(poly_derivative(&x3, 4).is_zero());
        // ((X²−1)²/2)'' = (12X²−4)/2 = 6X² − 2
        let q = RatPolynomial::new(p(&[1, 0, -2, 0, 1]), BigInt::from(2));
        assert_eq!(poly_derivative(&q, 2), RatPolynomial::from_int(p(&[-2, 0, 6])));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // X²−1
        let g = p(&[1, 1]); // X+1
        assert_eq!(a.div_exact(&g).unwrap(), p(&[-1, 1]));
        assert!(p(&[1, 0, 1]).div_exact(&g).is_none());
        let h = gcd_primitive(&p(&[-1, 0, 1]), &p(&[1, 2, 1]));
        assert_eq!(h, p(&[1, 1]));
        assert!(p(&[-2, 0, 1]).is_squarefree());
        assert!(!p(&[1, 2, 1]).is_squarefree());
    }

    #[test]
    fn text_format_round_trip() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(q.to_line(), "2 1 0 -2");
        assert_eq!(IntPolynomial::from_line("2 1 0 -2").unwrap(), q);
        assert!(IntPolynomial::from_line("2 1 0").is_err());
        assert!(IntPolynomial::from_line("2 0 1 2").is_err());
        assert!(IntPolynomial::from_line("x 1").is_err());
    }

    #[test]
    fn cyclotomic_basics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert!(is_cyclotomic(&p(&[1, 0, 1])));
        assert!(is_cyclotomic(&p(&[1, 1, 1, 1, 1]))); // Φ₅
        assert!(!is_cyclotomic(&p(&[-2, 0, 1])));
        assert!(!is_cyclotomic(&p(&[-1, -1, 1])));
        // φ(k) = 2 only for k ∈ {3, 4, 6}
        let ks: Vec<u64> = (1..=20).filter(|&k| euler_phi(k) == 2).collect();
        assert_eq!(ks, vec![3, 4, 6]);
    }

    #[test]
    fn rat_polynomial_normalization() {
        let q = RatPolynomial::new(p(&[2, 4]), BigInt::from(-6));
        assert_eq!(*q.denom(), BigInt::from(3));
        assert_eq!(*q.numer(), p(&[-1, -2]));
        let r = RatPolynomial::from_rational_coeffs(&[
            BigRational::new(BigInt::one(), BigInt::from(2)),
            BigRational::new(BigInt::one(), BigInt::from(3)),
        ]);
        assert_eq!(*r.denom(), BigInt::from(6));
        assert_eq!(*r.numer(), p(&[3, 2]));
    }
}
