//! Polynomials over the prime field F_p.

use std::fmt;

use num_bigint::BigInt;

use super::poly::PolyZ;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Polynomial with coefficients reduced into `[0, p)`, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyModP {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyModP { p, coeffs }
    }

    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        PolyModP::new(
            p,
            coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        PolyModP { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        PolyModP::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        PolyModP::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> PolyModP {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> PolyModP {
        PolyModP::new(
            self.p,
            self.coeffs.iter().map(|&x| mul_mod(x, c, self.p)).collect(),
        )
    }

    pub fn add(&self, rhs: &PolyModP) -> PolyModP {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyModP::new(
            self.p,
            (0..n).map(|i| (self.coeff(i) + rhs.coeff(i)) % self.p).collect(),
        )
    }

    pub fn sub(&self, rhs: &PolyModP) -> PolyModP {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyModP::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - rhs.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &PolyModP) -> PolyModP {
        if self.is_zero() || rhs.is_zero() {
            return PolyModP::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        PolyModP::new(self.p, out)
    }

    /// Division with remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &PolyModP) -> (PolyModP, PolyModP) {
        let dd = d.degree().expect("division by zero polynomial");
        let p = self.p;
        let Some(n) = self.degree() else {
            return (PolyModP::zero(p), PolyModP::zero(p));
        };
        if n < dd {
            return (PolyModP::zero(p), self.clone());
        }
        let inv = inv_mod(d.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = mul_mod(rem[k + dd], inv, p);
            if c == 0 {
                continue;
            }
            quo[k] = c;
            for (j, &dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mul_mod(c, dj, p)) % p;
            }
        }
        rem.truncate(dd);
        (PolyModP::new(p, quo), PolyModP::new(p, rem))
    }

    pub fn rem(&self, d: &PolyModP) -> PolyModP {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &PolyModP) -> PolyModP {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> PolyModP {
        PolyModP::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &PolyModP) -> PolyModP {
        let mut base = self.rem(m);
        let mut acc = PolyModP::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Lift with coefficients in `[0, p)`.
    pub fn lift(&self) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lift with coefficients in `(-p/2, p/2]`.
    pub fn lift_balanced(&self) -> PolyZ {
        let half = self.p / 2;
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.p)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &PolyModP) -> (PolyModP, PolyModP, PolyModP) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (PolyModP::one(p), PolyModP::zero(p));
        let (mut t0, mut t1) = (PolyModP::zero(p), PolyModP::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}
