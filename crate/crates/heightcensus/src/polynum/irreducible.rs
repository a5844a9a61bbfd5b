//! Irreducibility over ℤ by bounded factor search.
//!
//! A nontrivial factorization of a primitive p either has a linear factor
//! (found by the rational root test) or a factor g of degree k with
//! 2 ≤ k ≤ deg(p)/2. Any such g satisfies lc(g) | lc(p), g(0) | p(0),
//! g(±1) | p(±1), g(2) | p(2), and its coefficients obey the Mignotte-type
//! bound |b_i| ≤ C(k,i)·‖p‖₂. Enumerating divisor tuples determines the
//! candidate g (degree ≤ 4 needs at most five interpolation constraints) and
//! exact division settles it. Adequate for desk-scale degrees (≤ 8).

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Largest coefficient magnitude for which the divisor enumeration is
/// attempted; beyond it the candidate space is unreasonable for this search.
const DIVISOR_LIMIT: u64 = u64::MAX / 4;

pub fn is_irreducible_over_z(p: &IntPolynomial) -> Result<bool> {
    let Some(d) = p.degree() else {
        return Err(Error::Domain("irreducibility of the zero polynomial".into()));
    };
    if d == 0 {
        return Err(Error::Domain(
            "irreducibility requires degree ≥ 1".into(),
        ));
    }
    if !p.is_primitive() {
        return Err(Error::Domain(format!(
            "irreducibility test requires a primitive polynomial, got {}",
            p.to_line()
        )));
    }
    let p = p.with_positive_leading();
    if d == 1 {
        return Ok(true);
    }
    if p.constant_term().is_zero() {
        return Ok(false); // X divides
    }
    if has_rational_root(&p)? {
        return Ok(false);
    }
    if d <= 3 {
        return Ok(true); // reducible degree ≤ 3 implies a linear factor
    }
    for k in 2..=d / 2 {
        if find_factor(&p, k)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn to_small(n: &BigInt) -> Result<u64> {
    n.abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT).ok_or_else(|| {
        Error::Budget(format!(
            "factor search needs the divisors of {n}, which is beyond the desk-scale limit"
        ))
    })
}

/// Positive divisors of |n| (n nonzero), by trial division.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let v = to_small(n)?;
    debug_assert!(v > 0);
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
    divs.sort();
    Ok(divs)
}

fn signed_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let pos = divisors(n)?;
    let mut out = Vec::with_capacity(pos.len() * 2);
    for d in pos {
        out.push(-&d);
        out.push(d);
    }
    Ok(out)
}

/// Rational root test: p(u/v) = 0 for v | lc(p), u | p(0).
fn has_rational_root(p: &IntPolynomial) -> Result<bool> {
    let d = p.degree().unwrap();
    let lc = p.leading().unwrap().clone();
    let c0 = p.constant_term();
    for v in divisors(&lc)? {
        for u in signed_divisors(&c0)? {
            if !u.gcd(&v).is_one() {
                continue;
            }
            // v^d p(u/v) = Σ a_i u^i v^(d−i)
            let mut acc = BigInt::zero();
            let mut upow = BigInt::one();
            let mut vals = Vec::with_capacity(d + 1);
            for i in 0..=d {
                vals.push(upow.clone());
                if i < d {
                    upow = &upow * &u;
                }
            }
            let mut vpow = BigInt::one();
            for i in (0..=d).rev() {
                acc += p.coeff(i) * &vals[i] * &vpow;
                if i > 0 {
                    vpow = &vpow * &v;
                }
            }
            if acc.is_zero() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Mignotte-type bound on |b_i| for a degree-k divisor: C(k,i) · ceil(‖p‖₂).
fn mignotte_bound(p: &IntPolynomial, k: usize, i: usize) -> BigInt {
    let norm_sq = p.norm2_squared();
    let mut root = norm_sq.sqrt();
    if &root * &root < norm_sq {
        root += 1;
    }
    binomial(k, i) * root
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Search for a degree-k factor (k ∈ {2,3,4}); returns it if one exists.
fn find_factor(p: &IntPolynomial, k: usize) -> Result<Option<IntPolynomial>> {
    debug_assert!((2..=4).contains(&k));
    let lc = p.leading().unwrap().clone();
    let c0 = p.constant_term();
    let p1 = p.eval_int(&BigInt::one());
    let pm1 = p.eval_int(&BigInt::from(-1));
    // ±1 and ±2 are not roots once the rational root test has passed.
    debug_assert!(!p1.is_zero() && !pm1.is_zero());
    let b_top = divisors(&lc)?;
    let b_bot = signed_divisors(&c0)?;
    let s_one = signed_divisors(&p1)?;
    let two = BigInt::from(2);

    let try_candidate = |coeffs: Vec<BigInt>| -> Option<IntPolynomial> {
        let g = IntPolynomial::new(coeffs);
        if g.degree() != Some(k) {
            return None;
        }
        p.div_exact(&g).map(|_| g)
    };

    match k {
        2 => {
            let bound1 = mignotte_bound(p, 2, 1);
            for bk in &b_top {
                for b0 in &b_bot {
                    for s1 in &s_one {
                        let b1 = s1 - bk - b0;
                        if b1.abs() > bound1 {
                            continue;
                        }
                        let gm1 = bk - &b1 + b0;
                        if gm1.is_zero() || !pm1.is_multiple_of(&gm1) {
                            continue;
                        }
                        if let Some(g) = try_candidate(vec![b0.clone(), b1, bk.clone()]) {
                            return Ok(Some(g));
                        }
                    }
                }
            }
        }
        3 => {
            let s_mone = signed_divisors(&pm1)?;
            let bound1 = mignotte_bound(p, 3, 1);
            let bound2 = mignotte_bound(p, 3, 2);
            for bk in &b_top {
                for b0 in &b_bot {
                    for s1 in &s_one {
                        for s2 in &s_mone {
                            // g(1)+g(−1) = 2(b2+b0), g(1)−g(−1) = 2(b3+b1)
                            let sum = s1 + s2;
                            let diff = s1 - s2;
                            if sum.is_odd() || diff.is_odd() {
                                continue;
                            }
                            let b2 = &sum / &two - b0;
                            let b1 = &diff / &two - bk;
                            if b1.abs() > bound1 || b2.abs() > bound2 {
                                continue;
                            }
                            if let Some(g) =
                                try_candidate(vec![b0.clone(), b1, b2, bk.clone()])
                            {
                                return Ok(Some(g));
                            }
                        }
                    }
                }
            }
        }
        4 => {
            let s_mone = signed_divisors(&pm1)?;
            let p2 = p.eval_int(&BigInt::from(2));
            debug_assert!(!p2.is_zero());
            let s_two = signed_divisors(&p2)?;
            let bounds: Vec<BigInt> = (1..=3).map(|i| mignotte_bound(p, 4, i)).collect();
            let six = BigInt::from(6);
            for bk in &b_top {
                for b0 in &b_bot {
                    for s1 in &s_one {
                        for s2 in &s_mone {
                            let sum = s1 + s2;
                            let diff = s1 - s2;
                            if sum.is_odd() || diff.is_odd() {
                                continue;
                            }
                            let b2 = &sum / &two - bk - b0;
                            if b2.abs() > bounds[1] {
                                continue;
                            }
                            let u = &diff / &two; // b3 + b1
                            for s3 in &s_two {
                                // g(2) = 16 b4 + 8 b3 + 4 b2 + 2 b1 + b0
                                let w = s3 - BigInt::from(16) * bk - BigInt::from(4) * &b2 - b0;
                                let num = &w - &two * &u;
                                if !num.is_multiple_of(&six) {
                                    continue;
                                }
                                let b3 = num / &six;
                                let b1 = &u - &b3;
                                if b1.abs() > bounds[0] || b3.abs() > bounds[2] {
                                    continue;
                                }
                                if let Some(g) = try_candidate(vec![
                                    b0.clone(),
                                    b1,
                                    b2.clone(),
                                    b3,
                                    bk.clone(),
                                ]) {
                                    return Ok(Some(g));
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynum::{content_primitive, is_two_eisenstein};

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs_i64(coeffs)
    }

    #[test]
    fn small_known_cases() {
        assert!(is_irreducible_over_z(&p(&[-2, 0, 1])).unwrap()); // X²−2
        assert!(!is_irreducible_over_z(&p(&[-1, 0, 1])).unwrap()); // X²−1
        assert!(is_irreducible_over_z(&p(&[1, 0, 0, 0, 1])).unwrap()); // X⁴+1
        assert!(is_irreducible_over_z(&p(&[1, 1, 1])).unwrap());
        assert!(!is_irreducible_over_z(&p(&[0, 0, 1])).unwrap()); // X²
        assert!(!is_irreducible_over_z(&p(&[2, 3, 1])).unwrap()); // (X+1)(X+2)
        // (X²+X+1)(X²+2) has no rational root but splits in degree 2
        let q = p(&[1, 1, 1]).mul(&p(&[2, 0, 1]));
        assert!(!is_irreducible_over_z(&q).unwrap());
        // degree 6 = (X²+X+1)(X⁴+1), factor search must reach k = 2
        let q6 = p(&[1, 1, 1]).mul(&p(&[1, 0, 0, 0, 1]));
        assert!(!is_irreducible_over_z(&q6).unwrap());
        // X⁵ − X − 1 is irreducible
        assert!(is_irreducible_over_z(&p(&[-1, -1, 0, 0, 0, 1])).unwrap());
        // Errors
        assert!(is_irreducible_over_z(&p(&[2, 4])).is_err());
        assert!(is_irreducible_over_z(&IntPolynomial::zero()).is_err());
        assert!(is_irreducible_over_z(&p(&[5])).is_err());
    }

    /// Independent oracle for degree ≤ 4: plain-loop rational root search plus
    /// the quadratic×quadratic split solved coefficient-wise.
    pub(crate) fn oracle_reducible(q: &IntPolynomial) -> bool {
        let q = q.with_positive_leading();
        let d = q.degree().unwrap();
        assert!((1..=4).contains(&d));
        if d == 1 {
            return false;
        }
        if q.constant_term().is_zero() {
            return true;
        }
        // linear factor: scan all u/v with |u| ≤ |q(0)|, 1 ≤ v ≤ lc
        let lc_i = q.leading().unwrap().to_i64().unwrap();
        let c0_i = q.constant_term().abs().to_i64().unwrap();
        for v in 1..=lc_i {
            for u in -c0_i..=c0_i {
                if u == 0 {
                    continue;
                }
                let x = num_rational::BigRational::new(BigInt::from(u), BigInt::from(v));
                if q.eval_rational(&x).is_zero() {
                    return true;
                }
            }
        }
        if d < 4 {
            return false;
        }
        // quadratic × quadratic: (uX²+vX+w)(u'X²+v'X+w') matched on all five
        // coefficients; v,v' solved from a linear 2×2 system per (u,u',w,w').
        let a: Vec<i128> = (0..=4)
            .map(|i| q.coeff(4 - i).to_i128().unwrap())
            .collect(); // a[0] = leading ... a[4] = constant
        let a0 = a[0];
        let a4 = a[4];
        let udivs: Vec<i128> = (1..=a0).filter(|u| a0 % u == 0).collect();
        let mut wdivs: Vec<i128> = Vec::new();
        for w in 1..=a4.abs() {
            if a4 % w == 0 {
                wdivs.push(w);
                wdivs.push(-w);
            }
        }
        for &u in &udivs {
            let up = a0 / u;
            for &w in &wdivs {
                let wp = a4 / w;
                // a1 = u v' + up v ; a3 = v wp + v' w
                let det = u * wp - up * w;
                if det != 0 {
                    let v_num = a[1] * wp - a[3] * up;
                    let vp_num = a[3] * u - a[1] * w;
                    if v_num % det != 0 || vp_num % det != 0 {
                        continue;
                    }
                    let v = v_num / det;
                    let vp = vp_num / det;
                    if u * wp + up * w + v * vp == a[2] {
                        return true;
                    }
                } else {
                    // degenerate: scan v directly, v' determined when possible
                    for v in -200i128..=200 {
                        if u == 0 {
                            continue;
                        }
                        let rem = a[1] - up * v;
                        if rem % u != 0 {
                            continue;
                        }
                        let vp = rem / u;
                        if v * wp + vp * w == a[3] && u * wp + up * w + v * vp == a[2] {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn agrees_with_oracle_on_degree_up_to_4_height_5() {
        let h = 5i64;
        let mut checked = 0u64;
        for d in 1..=4usize {
            let mut coeffs = vec![0i64; d + 1];
            loop {
                // odometer over a0 ∈ 1..=h, a_i ∈ −h..=h
                let poly = {
                    let mut asc = coeffs.clone();
                    asc.reverse();
                    p(&asc)
                };
                if poly.degree() == Some(d) && poly.leading().unwrap().is_positive() {
                    if let Ok((c, prim)) = content_primitive(&poly) {
                        if c.is_one() {
                            let got = is_irreducible_over_z(&prim).unwrap();
                            let want = !oracle_reducible(&prim);
                            assert_eq!(got, want, "mismatch on {}", prim.to_line());
                            checked += 1;
                        }
                    }
                }
                // increment odometer: coeffs[0] is leading
                let mut i = coeffs.len();
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    let (lo, hi) = if i == 0 { (1, h) } else { (-h, h) };
                    if coeffs[i] < hi {
                        coeffs[i] += 1;
                        break;
                    }
                    coeffs[i] = lo;
                    if i == 0 {
                        coeffs[0] = 0; // signals wraparound
                    }
                }
                if coeffs[0] == 0 {
                    break;
                }
            }
        }
        assert!(checked > 50_000, "oracle sweep covered {checked} polynomials");
    }

    #[test]
    fn eisenstein_implies_irreducible_up_to_degree_4_height_8() {
        let h = 8i64;
        for d in 2..=4usize {
            // leading odd, middle even, constant ≡ 2 mod 4
            let mut count = 0u32;
            let evens: Vec<i64> = (-h..=h).filter(|c| c % 2 == 0).collect();
            let consts: Vec<i64> = (-h..=h).filter(|c| c.rem_euclid(4) == 2).collect();
            let odds: Vec<i64> = (1..=h).filter(|c| c % 2 == 1).collect();
            let mut mids = vec![0usize; d - 1];
            for &lead in &odds {
                loop {
                    for &c0 in &consts {
                        let mut asc = vec![c0];
                        for &mi in mids.iter().rev() {
                            asc.push(evens[mi]);
                        }
                        asc.push(lead);
                        let poly = p(&asc);
                        assert!(is_two_eisenstein(&poly));
                        if poly.is_primitive() {
                            assert!(
                                is_irreducible_over_z(&poly).unwrap(),
                                "Eisenstein poly judged reducible: {}",
                                poly.to_line()
                            );
                            count += 1;
                        }
                    }
                    // odometer over middle coefficients
                    let mut i = 0;
                    while i < mids.len() {
                        mids[i] += 1;
                        if mids[i] < evens.len() {
                            break;
                        }
                        mids[i] = 0;
                        i += 1;
                    }
                    if i == mids.len() {
                        break;
                    }
                }
            }
            assert!(count > 0);
        }
    }

    #[test]
    fn product_of_primitives_is_reducible() {
        let cases = [
            (p(&[1, 1, 1]), p(&[-2, 0, 1])),
            (p(&[-1, -1, 1]), p(&[1, 1])),
            (p(&[1, 0, 1]), p(&[1, 0, 1])),
            (p(&[3, 2]), p(&[-5, 1, 2])),
        ];
        for (a, b) in cases {
            let prod = a.mul(&b);
            let (_, prim) = content_primitive(&prod).unwrap();
            assert!(!is_irreducible_over_z(&prim).unwrap());
        }
    }
}
