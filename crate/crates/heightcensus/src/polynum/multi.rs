//! Dense multivariate integer polynomials (coefficient tensors) used by the
//! auxiliary-function machinery.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// t-variate integer polynomial stored as a dense tensor. `shape[i]` is the
/// number of coefficients in variable i (degree bound + 1); the coefficient
/// of X₁^{e₁}···X_t^{e_t} sits at row-major index Σ e_i · stride_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    shape: Vec<usize>,
    coeffs: Vec<BigInt>,
}

impl MultiPoly {
    pub fn new(shape: Vec<usize>, coeffs: Vec<BigInt>) -> Self {
        assert!(!shape.is_empty());
        assert_eq!(shape.iter().product::<usize>(), coeffs.len());
        MultiPoly { shape, coeffs }
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = shape.iter().product();
        MultiPoly {
            shape,
            coeffs: vec![BigInt::zero(); n],
        }
    }

    pub fn vars(&self) -> usize {
        self.shape.len()
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [BigInt] {
        &mut self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Sum of the absolute values of all coefficients.
    pub fn length(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Exponent tuple for a flat index, row-major with the last variable
    /// fastest.
    pub fn exponents(&self, mut idx: usize) -> Vec<usize> {
        let mut exps = vec![0usize; self.shape.len()];
        for i in (0..self.shape.len()).rev() {
            exps[i] = idx % self.shape[i];
            idx /= self.shape[i];
        }
        exps
    }

    pub fn flat_index(&self, exps: &[usize]) -> usize {
        let mut idx = 0;
        for (e, s) in exps.iter().zip(&self.shape) {
            debug_assert!(e < s);
            idx = idx * s + e;
        }
        idx
    }

    /// Evaluate at a point given by per-variable power tables:
    /// `powers[i][e]` = (value of variable i)^e in any ring, combined by the
    /// caller's multiply/add. Here specialized to exact rationals.
    pub fn eval_rational(&self, point: &[num_rational::BigRational]) -> num_rational::BigRational {
        use num_rational::BigRational;
        use num_traits::One;
        assert_eq!(point.len(), self.vars());
        let powers: Vec<Vec<BigRational>> = point
            .iter()
            .zip(&self.shape)
            .map(|(x, &s)| {
                let mut tbl = Vec::with_capacity(s);
                tbl.push(BigRational::one());
                for e in 1..s {
                    let prev = tbl[e - 1].clone();
                    tbl.push(prev * x);
                }
                tbl
            })
            .collect();
        let mut acc = BigRational::zero();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exps = self.exponents(idx);
            let mut term = BigRational::from_integer(c.clone());
            for (i, &e) in exps.iter().enumerate() {
                term *= &powers[i][e];
            }
            acc += term;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn length_and_eval() {
        // X₁ − X₂ over shape [2,2]: coeffs ordered (e1,e2) = (0,0),(0,1),(1,0),(1,1)
        let p = MultiPoly::new(
            vec![2, 2],
            vec![
                BigInt::from(0),
                BigInt::from(-1),
                BigInt::from(1),
                BigInt::from(0),
            ],
        );
        assert_eq!(p.length(), BigInt::from(2));
        let v = p.eval_rational(&[
            BigRational::from_integer(5.into()),
            BigRational::from_integer(3.into()),
        ]);
        assert_eq!(v, BigRational::from_integer(2.into()));
        assert_eq!(p.exponents(1), vec![0, 1]);
        assert_eq!(p.flat_index(&[1, 0]), 2);
    }
}
