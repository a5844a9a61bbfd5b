//! Certified complex root isolation.
//!
//! Floating-point simultaneous iteration proposes root approximations; a
//! rigorous a-posteriori inclusion bound (the disk about z of radius
//! d·|p(z)/p'(z)| contains a root) certifies them. Exact rational roots are
//! split off first and carried as radius-zero balls. Pairwise disjointness
//! of d certified balls proves each contains exactly one root.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ball::BallComplex;
use super::enclosure::sqrt_prec;
use crate::error::{Error, Result};
use crate::polynum::IntPolynomial;

/// Rational lower bound on the minimal distance between distinct roots of a
/// squarefree integer polynomial (Mahler's separation bound
/// sep(p) > √3 · d^(−(d+2)/2) · ‖p‖₂^(−(d−1)), using √3 > 3/2).
pub fn separation_lower_bound(p: &IntPolynomial) -> BigRational {
    let d = p.degree().expect("nonzero polynomial") as u32;
    if d <= 1 {
        return BigRational::one();
    }
    let dd = BigInt::from(d);
    let d_pow = dd.pow(d + 2);
    let d_half_up = d_pow.sqrt() + 1;
    let s = p.norm2_squared();
    let s_pow = s.pow(d - 1);
    let s_half_up = s_pow.sqrt() + 1;
    BigRational::new(BigInt::from(3), BigInt::from(2) * d_half_up * s_half_up)
}

/// All rational roots of p, exactly, via the divisor test on the primitive
/// part (used to deflate before numeric iteration).
fn rational_roots(p: &IntPolynomial) -> Vec<BigRational> {
    let mut out = Vec::new();
    let mut q = p.clone();
    // strip powers of X
    while !q.is_zero() && q.constant_term().is_zero() && q.degree() > Some(0) {
        out.push(BigRational::zero());
        q = q.div_exact(&IntPolynomial::x()).unwrap();
    }
    let Some(d) = q.degree() else { return out };
    if d == 0 {
        return out;
    }
    let lc = q.leading().unwrap().clone();
    let c0 = q.constant_term();
    let mut candidates = Vec::new();
    for v in small_divisors(&lc) {
        for u in small_divisors(&c0) {
            candidates.push(BigRational::new(u.clone(), v.clone()));
            candidates.push(BigRational::new(-u, v));
        }
    }
    candidates.sort();
    candidates.dedup();
    for cand in candidates {
        while q.eval_rational(&cand).is_zero() {
            out.push(cand.clone());
            // divide by (den·X − num) exactly
            let lin = IntPolynomial::new(vec![-cand.numer().clone(), cand.denom().clone()]);
            q = q.div_exact(&lin).expect("root implies divisibility");
            if q.degree().is_none() || q.degree() == Some(0) {
                break;
            }
        }
    }
    out
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let v = n.abs().to_u64().unwrap_or(0);
    if v == 0 {
        return vec![];
    }
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i.saturating_mul(i) <= v {
        if v % i == 0 {
            divs.push(BigInt::from(i));
            if i != v / i {
                divs.push(BigInt::from(v / i));
            }
        }
        i += 1;
    }
    divs
}

/// Deflate all rational roots out of p; returns (rational roots, cofactor).
fn deflate_rational(p: &IntPolynomial) -> (Vec<BigRational>, IntPolynomial) {
    let roots = rational_roots(p);
    let mut q = p.clone();
    for r in &roots {
        let lin = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
        q = q.div_exact(&lin).expect("rational root divides");
    }
    (roots, q)
}

#[derive(Clone, Copy)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn norm_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
    fn sub(self, o: C64) -> C64 {
        C64 {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
    fn mul(self, o: C64) -> C64 {
        C64 {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
    fn div(self, o: C64) -> C64 {
        let n = o.norm_sq();
        C64 {
            re: (self.re * o.re + self.im * o.im) / n,
            im: (self.im * o.re - self.re * o.im) / n,
        }
    }
    fn inv(self) -> C64 {
        C64 { re: 1.0, im: 0.0 }.div(self)
    }
}

/// Aberth–Ehrlich simultaneous iteration in f64; approximations only, all
/// certification happens afterwards in exact arithmetic. Initial points use
/// the exact rational rotation (3/5, 4/5) rather than trig so the float work
/// is reproducible across platforms.
fn aberth_f64(coeffs: &[f64], rounds: usize, salt: f64) -> Vec<C64> {
    let d = coeffs.len() - 1;
    // Cauchy bound: all roots have |z| ≤ 1 + max |a_i| / |a_d|
    let lead = coeffs[d].abs().max(f64::MIN_POSITIVE);
    let mut radius = 0.0f64;
    for c in &coeffs[..d] {
        radius = radius.max(c.abs() / lead);
    }
    let radius = (1.0 + radius).min(1e6) * (0.7 + 0.11 * salt);
    let mut dir = C64 { re: 0.9805, im: 0.1961 }; // offset from the axes
    let rot = C64 { re: 3.0 / 5.0, im: 4.0 / 5.0 };
    let mut z: Vec<C64> = (0..d)
        .map(|_| {
            dir = dir.mul(rot);
            C64 {
                re: radius * dir.re,
                im: radius * dir.im + 0.05,
            }
        })
        .collect();
    let eval = |x: C64| {
        let mut p = C64 { re: 0.0, im: 0.0 };
        let mut dp = C64 { re: 0.0, im: 0.0 };
        for &c in coeffs.iter().rev() {
            dp = dp.mul(x);
            dp.re += p.re;
            dp.im += p.im;
            p = p.mul(x);
            p.re += c;
        }
        (p, dp)
    };
    for _ in 0..rounds {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (p, dp) = eval(z[i]);
            if p.norm_sq() == 0.0 {
                continue;
            }
            let newton = if dp.norm_sq() == 0.0 {
                C64 { re: 1e-3, im: 1e-3 }
            } else {
                p.div(dp)
            };
            let mut s = C64 { re: 0.0, im: 0.0 };
            for j in 0..d {
                if j != i {
                    let diff = z[i].sub(z[j]);
                    if diff.norm_sq() > 0.0 {
                        let r = diff.inv();
                        s.re += r.re;
                        s.im += r.im;
                    }
                }
            }
            let denom = C64 {
                re: 1.0 - (newton.re * s.re - newton.im * s.im),
                im: -(newton.re * s.im + newton.im * s.re),
            };
            let w = if denom.norm_sq() == 0.0 { newton } else { newton.div(denom) };
            z[i] = z[i].sub(w);
            moved = moved.max(w.norm_sq());
        }
        if moved < 1e-28 {
            break;
        }
    }
    z
}

fn rational_from_f64(x: f64, prec: u32) -> BigRational {
    if !x.is_finite() {
        return BigRational::zero();
    }
    let scale = 2f64.powi(40);
    let r = BigRational::new(
        BigInt::from((x * scale).round() as i128),
        BigInt::from(1u64 << 40),
    );
    // keep the requested working size
    let _ = prec;
    r
}

struct ExactComplex {
    re: BigRational,
    im: BigRational,
}

fn eval_p_dp(p: &IntPolynomial, z: &ExactComplex) -> (ExactComplex, ExactComplex) {
    let (pre, pim) = p.eval_complex_rational(&z.re, &z.im);
    let d = p.derivative();
    let (dre, dim) = d.eval_complex_rational(&z.re, &z.im);
    (
        ExactComplex { re: pre, im: pim },
        ExactComplex { re: dre, im: dim },
    )
}

fn round_rat(q: &BigRational, prec: u32) -> BigRational {
    let nbits = q.numer().bits() as i64;
    let dbits = q.denom().bits() as i64;
    let shift = prec as i64 - (nbits - dbits);
    if q.is_zero() || shift >= 0 && q.denom().bits() <= prec as u64 {
        return q.clone();
    }
    if shift >= 0 {
        let m = (q.numer() << shift as usize) / q.denom();
        BigRational::new(m, BigInt::one() << shift as usize)
    } else {
        let m = q.numer() / (q.denom() << (-shift) as usize);
        BigRational::from_integer(m << (-shift) as usize)
    }
}

/// Newton refinement with exact residual certification. Returns a ball
/// around z of radius d·|p(z)/p'(z)| (upper bound), or None when the
/// iteration failed to produce a small certified radius.
fn certify_newton(
    p: &IntPolynomial,
    start: &ExactComplex,
    target_rad: &BigRational,
    max_steps: u32,
) -> Option<BallComplex> {
    let d = p.degree().unwrap();
    let d_big = BigRational::from_integer(BigInt::from(d as u64));
    let mut z = ExactComplex {
        re: start.re.clone(),
        im: start.im.clone(),
    };
    let mut prec = 96u32;
    for _ in 0..max_steps {
        let (val, der) = eval_p_dp(p, &z);
        let val_n = &val.re * &val.re + &val.im * &val.im;
        if val_n.is_zero() {
            return Some(BallComplex::new(z.re, z.im, BigRational::zero(), u32::MAX));
        }
        let der_n = &der.re * &der.re + &der.im * &der.im;
        if der_n.is_zero() {
            return None;
        }
        // certified inclusion radius: d · |p/p'| ≤ d · sqrt_up(|p|²/|p'|²)
        let ratio_sq = &val_n / &der_n;
        let rad_up = sqrt_prec(&ratio_sq, 64).ok()?.hi() * &d_big;
        if rad_up <= *target_rad {
            return Some(BallComplex::new(z.re, z.im, rad_up, prec));
        }
        // Newton step: z ← z − p/p' (exact, then rounded)
        let inv_den = der_n;
        let step_re = (&val.re * &der.re + &val.im * &der.im) / &inv_den;
        let step_im = (&val.im * &der.re - &val.re * &der.im) / &inv_den;
        z = ExactComplex {
            re: round_rat(&(&z.re - step_re), prec),
            im: round_rat(&(&z.im - step_im), prec),
        };
        prec = (prec * 2).min(1 << 20);
    }
    None
}

/// Closed-form certified roots for a squarefree quadratic with no rational
/// roots (discriminant not a perfect square).
fn quadratic_roots(p: &IntPolynomial, target_rad: &BigRational) -> Result<Vec<BallComplex>> {
    let c0 = BigRational::from_integer(p.coeff(0));
    let c1 = BigRational::from_integer(p.coeff(1));
    let c2 = BigRational::from_integer(p.coeff(2));
    let disc = &c1 * &c1 - BigRational::from_integer(4.into()) * &c2 * &c0;
    let two_c2 = BigRational::from_integer(2.into()) * &c2;
    let mut prec = 64u32;
    loop {
        let ok_width = target_rad * two_c2.abs();
        let root = sqrt_prec(&disc.abs(), prec)?;
        if root.width() <= ok_width {
            let mid = (root.lo() + root.hi()) / BigRational::from_integer(2.into());
            let half = root.width() / BigRational::from_integer(2.into());
            let rad = &half / two_c2.abs();
            let center1;
            let center2;
            let (im1, im2);
            if disc.is_negative() {
                let re = -&c1 / &two_c2;
                center1 = (re.clone(), &mid / &two_c2);
                center2 = (re, -&mid / &two_c2);
                im1 = true;
                im2 = true;
            } else {
                center1 = ((-&c1 + &mid) / &two_c2, BigRational::zero());
                center2 = ((-&c1 - &mid) / &two_c2, BigRational::zero());
                im1 = false;
                im2 = false;
            }
            let _ = (im1, im2);
            return Ok(vec![
                BallComplex::new(center1.0, center1.1, rad.clone(), prec),
                BallComplex::new(center2.0, center2.1, rad, prec),
            ]);
        }
        prec *= 2;
        if prec > 1 << 20 {
            return Err(Error::Certification(
                "quadratic discriminant sqrt did not converge".into(),
            ));
        }
    }
}

/// Certified roots of a squarefree polynomial: exactly deg(p) pairwise
/// disjoint balls, each containing one root, radii at most 2^(−precision_bits)
/// (0 for exact rational roots).
pub fn certified_roots(p: &IntPolynomial, precision_bits: u32) -> Result<Vec<BallComplex>> {
    let Some(d) = p.degree() else {
        return Err(Error::Domain("roots of the zero polynomial".into()));
    };
    if d == 0 {
        return Err(Error::Domain("roots of a constant polynomial".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::Domain(format!(
            "certified_roots requires a squarefree polynomial, got {}",
            p.to_line()
        )));
    }
    let target = BigRational::new(BigInt::one(), BigInt::one() << precision_bits as usize);
    // tighten to the separation scale so disjointness is achievable
    let sep = separation_lower_bound(p);
    let quarter_sep = sep / BigRational::from_integer(8.into());
    let target = if target < quarter_sep { target } else { quarter_sep };

    let (rationals, cofactor) = deflate_rational(p);
    let mut balls: Vec<BallComplex> = rationals
        .iter()
        .map(|r| BallComplex::exact_rational(r.clone()))
        .collect();

    if let Some(cd) = cofactor.degree() {
        // a linear cofactor is impossible: its root would be rational and
        // already deflated
        assert_ne!(cd, 1, "deflation left a linear cofactor");
        if cd >= 2 {
            if cd == 2 {
                balls.extend(quadratic_roots(&cofactor, &target)?);
            } else {
                let max_h = cofactor.usual_height();
                let lead = cofactor
                    .leading()
                    .unwrap()
                    .to_f64()
                    .filter(|v| v.is_finite() && *v != 0.0);
                let coeffs_f64: Option<Vec<f64>> = cofactor
                    .coeffs()
                    .iter()
                    .map(|c| c.to_f64().filter(|v| v.is_finite()))
                    .collect();
                let (coeffs_f64, _lead) = match (coeffs_f64, lead) {
                    (Some(c), Some(l)) => (c, l),
                    _ => {
                        return Err(Error::Certification(format!(
                            "coefficients too large for the numeric stage (height {max_h})"
                        )))
                    }
                };
                let mut found: Option<Vec<BallComplex>> = None;
                'attempt: for attempt in 0..6 {
                    let approx = aberth_f64(&coeffs_f64, 200 + 100 * attempt, attempt as f64 * 0.137);
                    let mut cand = Vec::with_capacity(cd);
                    for a in approx {
                        let start = ExactComplex {
                            re: rational_from_f64(a.re, 96),
                            im: rational_from_f64(a.im, 96),
                        };
                        match certify_newton(&cofactor, &start, &target, 64) {
                            Some(b) => cand.push(b),
                            None => continue 'attempt,
                        }
                    }
                    // all pairwise disjoint?
                    let mut all = balls.clone();
                    all.extend(cand.iter().cloned());
                    if pairwise_disjoint(&all) {
                        found = Some(cand);
                        break;
                    }
                }
                match found {
                    Some(c) => balls.extend(c),
                    None => {
                        return Err(Error::Certification(format!(
                            "could not certify disjoint root enclosures for {}",
                            p.to_line()
                        )))
                    }
                }
            }
        }
    }

    if balls.len() != d {
        return Err(Error::Certification(format!(
            "expected {d} roots, certified {}",
            balls.len()
        )));
    }
    if !pairwise_disjoint(&balls) {
        return Err(Error::Certification(format!(
            "root enclosures for {} are not pairwise disjoint",
            p.to_line()
        )));
    }
    // canonical deterministic order: by (re, im) of the centers
    balls.sort_by(|a, b| (&a.re, &a.im).cmp(&(&b.re, &b.im)));
    Ok(balls)
}

fn pairwise_disjoint(balls: &[BallComplex]) -> bool {
    for i in 0..balls.len() {
        for j in i + 1..balls.len() {
            if !balls[i].certainly_disjoint(&balls[j]) {
                return false;
            }
        }
    }
    true
}

/// Refine one isolated root ball of p to a smaller radius; the refined ball
/// is certified to stay inside the original, so it keeps selecting the same
/// root.
pub fn refine_root(
    p: &IntPolynomial,
    ball: &BallComplex,
    target_rad: &BigRational,
) -> Result<BallComplex> {
    if ball.rad <= *target_rad {
        return Ok(ball.clone());
    }
    let start = ExactComplex {
        re: ball.re.clone(),
        im: ball.im.clone(),
    };
    let refined = certify_newton(p, &start, target_rad, 96).ok_or_else(|| {
        Error::Certification(format!("failed to refine root ball of {}", p.to_line()))
    })?;
    // same-root guarantee: the refined ball must sit inside the original,
    // which contains exactly one root
    if refined.certainly_inside(ball) || refined.rad.is_zero() && ball.contains_point(&refined.re, &refined.im) {
        Ok(refined)
    } else {
        Err(Error::Certification(
            "refined ball escaped the original enclosure".into(),
        ))
    }
}
