//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp::PolyModP;
use super::valuation::{val, Valuation};
use crate::error::{Error, Result};

/// Integer polynomial, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        PolyZ::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyZ::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        PolyZ::new(vec![c])
    }

    pub fn x() -> Self {
        PolyZ::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        PolyZ::new(coeffs)
    }

    /// `x^7 + a x + b`.
    pub fn trinomial(a: &BigInt, b: &BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); 8];
        coeffs[0] = b.clone();
        coeffs[1] = a.clone();
        coeffs[7] = BigInt::one();
        PolyZ::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> PolyZ {
        PolyZ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `f(x + c)` by Horner's rule on polynomials.
    pub fn shift(&self, c: &BigInt) -> PolyZ {
        let lin = PolyZ::new(vec![c.clone(), BigInt::one()]);
        self.compose(&lin)
    }

    /// `f(g(x))`.
    pub fn compose(&self, g: &PolyZ) -> PolyZ {
        self.coeffs.iter().rev().fold(PolyZ::zero(), |acc, c| {
            &(&acc * g) + &PolyZ::constant(c.clone())
        })
    }

    pub fn scale(&self, c: &BigInt) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_exact(&self, c: &BigInt) -> PolyZ {
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> PolyZ {
        let mut acc = PolyZ::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division by a monic divisor.
    pub fn div_rem_monic(&self, d: &PolyZ) -> Result<(PolyZ, PolyZ)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        if !d.is_monic() {
            return Err(Error::NonMonic(d.to_string()));
        }
        let Some(n) = self.degree() else {
            return Ok((PolyZ::zero(), PolyZ::zero()));
        };
        if n < dd {
            return Ok((PolyZ::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs[..dd].iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        Ok((PolyZ::new(quo), PolyZ::new(rem)))
    }

    /// Minimum valuation over the coefficients.
    pub fn valuation(&self, p: u64) -> Valuation {
        self.coeffs
            .iter()
            .filter_map(|c| val(c, p))
            .min()
            .map_or(Valuation::Infinite, Valuation::Finite)
    }

    pub fn reduce(&self, p: u64) -> PolyModP {
        let pb = BigInt::from(p);
        PolyModP::new(
            p,
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&pb);
                    r.iter_u64_digits().next().unwrap_or(0)
                })
                .collect(),
        )
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyZ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyZ::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::new(out)
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: PolyZ) -> PolyZ {
        &self + &rhs
    }
}

impl Sub for PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: PolyZ) -> PolyZ {
        &self - &rhs
    }
}

impl Mul for PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: PolyZ) -> PolyZ {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_degree() {
        let f = PolyZ::trinomial(&BigInt::from(-3), &BigInt::from(8));
        assert_eq!(f.to_string(), "x^7 - 3*x + 8");
        assert_eq!(f.degree(), Some(7));
        assert!(f.is_monic());
        assert_eq!(PolyZ::zero().degree(), None);
    }

    #[test]
    fn division_reconstructs() {
        let f = PolyZ::trinomial(&BigInt::from(5), &BigInt::from(7));
        let d = PolyZ::from_i64(&[2, 1, 1]);
        let (q, r) = f.div_rem_monic(&d).unwrap();
        assert!(r.degree().unwrap() < 2);
        assert_eq!(&(&q * &d) + &r, f);
        assert!(f.div_rem_monic(&PolyZ::from_i64(&[1, 2])).is_err());
    }

    #[test]
    fn shift_matches_binomial_expansion() {
        // F(x + 1) for F = x^7 + ax + b has constant term 1 + a + b
        let f = PolyZ::trinomial(&BigInt::from(4), &BigInt::from(9));
        let g = f.shift(&BigInt::one());
        assert_eq!(
            g,
            PolyZ::from_i64(&[14, 11, 21, 35, 35, 21, 7, 1])
        );
    }
}
