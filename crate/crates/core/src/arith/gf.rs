//! Small finite fields F_p[t]/(mu) and polynomial factorization over them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fp::{inv_mod, PolyModP};
use crate::error::{Error, Result};

/// Element of a residue field, stored as a reduced polynomial in the generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidualFieldElement {
    rep: PolyModP,
}

impl ResidualFieldElement {
    pub fn representative(&self) -> &PolyModP {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

/// F_p[t]/(mu) for monic irreducible mu of degree 1, 2 or 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    p: u64,
    modulus: PolyModP,
    var: char,
}

/// Polynomial over a residue field, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPoly {
    coeffs: Vec<ResidualFieldElement>,
}

impl FieldPoly {
    pub fn new(mut coeffs: Vec<ResidualFieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FieldPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[ResidualFieldElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&ResidualFieldElement> {
        self.coeffs.last()
    }
}

impl ResidueField {
    /// The prime field itself, with generator `t = 0`.
    pub fn prime(p: u64) -> Self {
        ResidueField {
            p,
            modulus: PolyModP::x(p),
            var: 'x',
        }
    }

    pub fn new(modulus: PolyModP) -> Result<Self> {
        ResidueField::with_var(modulus, 'x')
    }

    /// Checks that `modulus` is monic irreducible of degree at most 3.
    pub fn with_var(modulus: PolyModP, var: char) -> Result<Self> {
        let p = modulus.modulus();
        let d = modulus.degree().ok_or(Error::ZeroPolynomial)?;
        if !(1..=3).contains(&d) {
            return Err(Error::Unsupported(format!(
                "residue field of degree {d} over F_{p}"
            )));
        }
        if !modulus.is_monic() {
            return Err(Error::NonMonic(modulus.to_string()));
        }
        if d > 1 {
            // degree <= 3: irreducible iff no root in F_p
            let x = PolyModP::x(p);
            let g = x.pow_mod(p, &modulus).sub(&x).gcd(&modulus);
            if g.degree() != Some(0) {
                return Err(Error::InvalidParameters(format!(
                    "{modulus} is reducible over F_{p}"
                )));
            }
        }
        Ok(ResidueField { p, modulus, var })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &PolyModP {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(1)
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.degree() as u32)
    }

    pub fn var(&self) -> char {
        self.var
    }

    // ---- elements ----

    pub fn element(&self, rep: PolyModP) -> ResidualFieldElement {
        ResidualFieldElement {
            rep: rep.rem(&self.modulus),
        }
    }

    pub fn from_u64(&self, c: u64) -> ResidualFieldElement {
        self.element(PolyModP::new(self.p, vec![c]))
    }

    pub fn zero(&self) -> ResidualFieldElement {
        ResidualFieldElement {
            rep: PolyModP::zero(self.p),
        }
    }

    pub fn one(&self) -> ResidualFieldElement {
        self.from_u64(1)
    }

    /// The class of the generator `t`.
    pub fn generator(&self) -> ResidualFieldElement {
        self.element(PolyModP::x(self.p))
    }

    pub fn add(&self, a: &ResidualFieldElement, b: &ResidualFieldElement) -> ResidualFieldElement {
        ResidualFieldElement { rep: a.rep.add(&b.rep) }
    }

    pub fn sub(&self, a: &ResidualFieldElement, b: &ResidualFieldElement) -> ResidualFieldElement {
        ResidualFieldElement { rep: a.rep.sub(&b.rep) }
    }

    pub fn neg(&self, a: &ResidualFieldElement) -> ResidualFieldElement {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &ResidualFieldElement, b: &ResidualFieldElement) -> ResidualFieldElement {
        self.element(a.rep.mul(&b.rep))
    }

    /// Panics on zero.
    pub fn inv(&self, a: &ResidualFieldElement) -> ResidualFieldElement {
        assert!(!a.is_zero(), "inverse of zero in residue field");
        let (g, s, _) = a.rep.xgcd(&self.modulus);
        debug_assert!(g.degree() == Some(0));
        let c = inv_mod(g.leading(), self.p);
        self.element(s.scale(c))
    }

    pub fn pow(&self, a: &ResidualFieldElement, e: &BigUint) -> ResidualFieldElement {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub fn pow_u64(&self, a: &ResidualFieldElement, e: u64) -> ResidualFieldElement {
        self.pow(a, &BigUint::from(e))
    }

    /// Unique `p`-th root, `a^(q/p)`.
    pub fn pth_root(&self, a: &ResidualFieldElement) -> ResidualFieldElement {
        let e = BigUint::from(self.p).pow(self.degree() as u32 - 1);
        self.pow(a, &e)
    }

    /// All field elements; only sensible for tiny fields.
    pub fn elements(&self) -> Vec<ResidualFieldElement> {
        let k = self.degree();
        let total = (self.p as usize).pow(k as u32);
        (0..total)
            .map(|mut n| {
                let mut c = Vec::with_capacity(k);
                for _ in 0..k {
                    c.push((n % self.p as usize) as u64);
                    n /= self.p as usize;
                }
                self.element(PolyModP::new(self.p, c))
            })
            .collect()
    }

    pub fn elem_to_string(&self, a: &ResidualFieldElement) -> String {
        a.rep.to_string().replace('x', &self.var.to_string())
    }

    // ---- polynomials ----

    pub fn poly(&self, coeffs: Vec<ResidualFieldElement>) -> FieldPoly {
        FieldPoly::new(coeffs)
    }

    /// Polynomial with prime-field coefficients.
    pub fn poly_from_fp(&self, f: &PolyModP) -> FieldPoly {
        FieldPoly::new(f.coeffs().iter().map(|&c| self.from_u64(c)).collect())
    }

    pub fn poly_x(&self) -> FieldPoly {
        FieldPoly::new(vec![self.zero(), self.one()])
    }

    pub fn poly_one(&self) -> FieldPoly {
        FieldPoly::new(vec![self.one()])
    }

    fn coeff(&self, f: &FieldPoly, i: usize) -> ResidualFieldElement {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.zero())
    }

    pub fn padd(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        FieldPoly::new(
            (0..n)
                .map(|i| self.add(&self.coeff(a, i), &self.coeff(b, i)))
                .collect(),
        )
    }

    pub fn psub(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        FieldPoly::new(
            (0..n)
                .map(|i| self.sub(&self.coeff(a, i), &self.coeff(b, i)))
                .collect(),
        )
    }

    pub fn pscale(&self, a: &FieldPoly, c: &ResidualFieldElement) -> FieldPoly {
        FieldPoly::new(a.coeffs.iter().map(|x| self.mul(x, c)).collect())
    }

    pub fn pmul(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        if a.is_zero() || b.is_zero() {
            return FieldPoly::new(Vec::new());
        }
        let mut out = vec![self.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(x, y));
            }
        }
        FieldPoly::new(out)
    }

    /// Panics on a zero divisor.
    pub fn pdivrem(&self, a: &FieldPoly, d: &FieldPoly) -> (FieldPoly, FieldPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(n) = a.degree() else {
            return (a.clone(), a.clone());
        };
        if n < dd {
            return (FieldPoly::new(Vec::new()), a.clone());
        }
        let inv = self.inv(d.leading().unwrap());
        let mut rem = a.coeffs.clone();
        let mut quo = vec![self.zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = self.mul(&rem[k + dd], &inv);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = self.sub(&rem[k + j], &self.mul(&c, dj));
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (FieldPoly::new(quo), FieldPoly::new(rem))
    }

    pub fn prem(&self, a: &FieldPoly, d: &FieldPoly) -> FieldPoly {
        self.pdivrem(a, d).1
    }

    pub fn pmonic(&self, a: &FieldPoly) -> FieldPoly {
        match a.leading() {
            None => a.clone(),
            Some(lc) => self.pscale(a, &self.inv(lc)),
        }
    }

    pub fn pgcd(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = self.prem(&a, &b);
            a = b;
            b = r;
        }
        self.pmonic(&a)
    }

    pub fn pderiv(&self, a: &FieldPoly) -> FieldPoly {
        FieldPoly::new(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.mul(c, &self.from_u64(i as u64 % self.p)))
                .collect(),
        )
    }

    pub fn peval(&self, a: &FieldPoly, x: &ResidualFieldElement) -> ResidualFieldElement {
        a.coeffs
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    pub fn ppowmod(&self, a: &FieldPoly, e: &BigUint, m: &FieldPoly) -> FieldPoly {
        let base = self.prem(a, m);
        let mut acc = self.prem(&self.poly_one(), m);
        for i in (0..e.bits()).rev() {
            acc = self.prem(&self.pmul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.prem(&self.pmul(&acc, &base), m);
            }
        }
        acc
    }

    pub fn is_one(&self, a: &FieldPoly) -> bool {
        a.degree() == Some(0)
    }

    pub fn poly_to_string(&self, f: &FieldPoly, y: char) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in f.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = self.elem_to_string(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            let mono = match i {
                0 => String::new(),
                1 => y.to_string(),
                _ => format!("{y}^{i}"),
            };
            terms.push(match (i, cs.as_str()) {
                (0, _) => cs.clone(),
                (_, "1") => mono,
                _ => format!("{cs}*{mono}"),
            });
        }
        terms.join(" + ")
    }

    // ---- factorization ----

    /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
    pub fn factor(&self, f: &FieldPoly) -> Result<Vec<(FieldPoly, usize)>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.pmonic(f);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5e97_1c ^ self.p);
        let mut out = Vec::new();
        for (g, m) in self.squarefree(&f) {
            for (h, d) in self.distinct_degree(&g) {
                for irr in self.equal_degree(&h, d, &mut rng) {
                    out.push((irr, m));
                }
            }
        }
        out.sort_by(|(f, m), (g, n)| (f.degree(), f, m).cmp(&(g.degree(), g, n)));
        Ok(out)
    }

    /// Squarefree decomposition of a monic polynomial.
    pub fn squarefree(&self, f: &FieldPoly) -> Vec<(FieldPoly, usize)> {
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let df = self.pderiv(f);
        let mut c = self.pgcd(f, &df);
        let mut w = self.pdivrem(f, &c).0;
        let mut i = 1;
        while !self.is_one(&w) {
            let y = self.pgcd(&w, &c);
            let z = self.pdivrem(&w, &y).0;
            if !self.is_one(&z) {
                out.push((self.pmonic(&z), i));
            }
            i += 1;
            w = y;
            c = self.pdivrem(&c, &w).0;
        }
        if !self.is_one(&c) {
            let p = self.p as usize;
            let root = FieldPoly::new(
                c.coeffs
                    .iter()
                    .step_by(p)
                    .map(|a| self.pth_root(a))
                    .collect(),
            );
            for (g, m) in self.squarefree(&self.pmonic(&root)) {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
    pub fn distinct_degree(&self, f: &FieldPoly) -> Vec<(FieldPoly, usize)> {
        let q = self.order();
        let x = self.poly_x();
        let mut out = Vec::new();
        let mut f = f.clone();
        let mut h = self.prem(&x, &f);
        let mut d = 0;
        loop {
            let n = f.degree().unwrap_or(0);
            if n == 0 {
                break;
            }
            d += 1;
            if n < 2 * d {
                out.push((f.clone(), n));
                break;
            }
            h = self.ppowmod(&h, &q, &f);
            let g = self.pgcd(&self.psub(&h, &x), &f);
            if !self.is_one(&g) {
                out.push((g.clone(), d));
                f = self.pdivrem(&f, &g).0;
                h = self.prem(&h, &f);
            }
        }
        out
    }

    /// Splits a product of distinct irreducibles of degree `d`.
    pub fn equal_degree(&self, f: &FieldPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FieldPoly> {
        let n = f.degree().unwrap_or(0);
        if n == d {
            return vec![self.pmonic(f)];
        }
        let q = self.order();
        let k = self.degree();
        loop {
            let a = FieldPoly::new(
                (0..n)
                    .map(|_| {
                        let c: Vec<u64> = (0..k).map(|_| rng.gen_range(0..self.p)).collect();
                        self.element(PolyModP::new(self.p, c))
                    })
                    .collect(),
            );
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if self.p == 2 {
                // trace map to F_2
                let mut t = self.prem(&a, f);
                let mut s = t.clone();
                for _ in 1..(k * d) {
                    t = self.prem(&self.pmul(&t, &t), f);
                    s = self.padd(&s, &t);
                }
                s
            } else {
                let e = (q.pow(d as u32) - BigUint::one()) >> 1;
                self.psub(&self.ppowmod(&a, &e, f), &self.poly_one())
            };
            let g = self.pgcd(&b, f);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                let h = self.pdivrem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&h, d, rng));
                return out;
            }
        }
    }
}

impl fmt::Display for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 1 {
            write!(f, "F_{}", self.p)
        } else {
            let m = self.modulus.to_string().replace('x', &self.var.to_string());
            write!(f, "F_{}[{}]/({})", self.p, self.var, m)
        }
    }
}

/// Factorization of a polynomial over F_p into monic irreducibles.
pub fn factor_over_fp(f: &PolyModP) -> Result<Vec<(PolyModP, usize)>> {
    let p = f.modulus();
    let field = ResidueField::prime(p);
    let g = field.poly_from_fp(f);
    Ok(field
        .factor(&g)?
        .into_iter()
        .map(|(h, m)| {
            let c = h.coeffs().iter().map(|e| e.representative().coeff(0)).collect();
            (PolyModP::new(p, c), m)
        })
        .collect())
}
