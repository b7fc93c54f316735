//! Irreducibility of monic integer polynomials over Q.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp::PolyModP;
use super::gf::factor_over_fp;
use super::integer::{factorize, primes_up_to};
use super::poly::PolyZ;
use super::resultant::discriminant_poly;
use super::valuation::val;
use crate::error::{Error, Result};

/// How an irreducibility verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// An integer root.
    RationalRoot(BigInt),
    /// Zero discriminant, so a repeated factor.
    RepeatedFactor,
    Eisenstein(u64),
    /// Irreducible modulo this prime.
    ModP(u64),
    /// Factor degree patterns modulo these primes admit no proper factor.
    DegreeSets(Vec<u64>),
    /// Exhaustive Hensel recombination at this prime found nothing.
    Hensel(u64),
    /// Explicit nontrivial monic factor.
    Factor(PolyZ),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub certificate: Certificate,
}

pub fn is_irreducible_over_q(f: &PolyZ) -> Result<bool> {
    Ok(irreducibility(f)?.irreducible)
}

pub fn irreducibility(f: &PolyZ) -> Result<Irreducibility> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(Error::NonMonic(f.to_string()));
    }
    let no = |c| Ok(Irreducibility { irreducible: false, certificate: c });
    let yes = |c| Ok(Irreducibility { irreducible: true, certificate: c });
    if n <= 1 {
        return yes(Certificate::DegreeSets(Vec::new()));
    }
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return no(Certificate::RationalRoot(BigInt::zero()));
    }
    if let Some(r) = rational_root(f) {
        return no(Certificate::RationalRoot(r));
    }
    if let Some(p) = eisenstein_prime(f) {
        return yes(Certificate::Eisenstein(p));
    }
    let disc = discriminant_poly(f)?;
    if disc.is_zero() {
        return no(Certificate::RepeatedFactor);
    }

    let mut possible: BTreeSet<usize> = (1..n).collect();
    let mut used = Vec::new();
    let mut good = None;
    for p in primes_up_to(200) {
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fs = factor_over_fp(&f.reduce(p))?;
        if fs.len() == 1 {
            return yes(Certificate::ModP(p));
        }
        let degs: Vec<usize> = fs.iter().map(|(g, _)| g.degree().unwrap()).collect();
        let sums = subset_sums(&degs);
        possible.retain(|d| sums.contains(d));
        used.push(p);
        if good.as_ref().is_none_or(|(_, k): &(u64, usize)| fs.len() < *k) {
            good = Some((p, fs.len()));
        }
        if possible.is_empty() {
            return yes(Certificate::DegreeSets(used));
        }
        if used.len() >= 12 {
            break;
        }
    }
    let (p, _) = good.ok_or_else(|| Error::Internal("no good prime below 200".into()))?;
    match hensel_search(f, p)? {
        Some(g) => no(Certificate::Factor(g)),
        None => yes(Certificate::Hensel(p)),
    }
}

fn subset_sums(degs: &[usize]) -> BTreeSet<usize> {
    let mut s = BTreeSet::from([0]);
    for &d in degs {
        let next: Vec<usize> = s.iter().map(|x| x + d).collect();
        s.extend(next);
    }
    s
}

/// Integer root among the divisors of the constant term, when that term is small enough to factor.
fn rational_root(f: &PolyZ) -> Option<BigInt> {
    let c0 = f.coeff(0);
    if c0.magnitude().bits() > 90 {
        return None;
    }
    let fac = factorize(&c0);
    let mut divisors = vec![BigInt::one()];
    for (p, e) in &fac.factors {
        let p = BigInt::from(p.clone());
        let mut next = Vec::new();
        for d in &divisors {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divisors = next;
    }
    for d in divisors {
        for r in [d.clone(), -d] {
            if f.eval(&r).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

fn eisenstein_prime(f: &PolyZ) -> Option<u64> {
    let n = f.degree()?;
    let mut g = BigInt::zero();
    for c in &f.coeffs()[..n] {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        return None;
    }
    // only small primes are tried; larger common factors are left to the other tests
    let mut g = g.abs();
    for p in primes_up_to(10_000) {
        let pb = BigInt::from(p);
        if !(&g % &pb).is_zero() {
            continue;
        }
        if val(&f.coeff(0), p) == Some(1) {
            return Some(p);
        }
        while (&g % &pb).is_zero() {
            g /= &pb;
        }
        if g.is_one() {
            break;
        }
    }
    None
}

/// Lifts `f = g h (mod p)` to `mod p^k`; `g` monic, `f` monic, `g`, `h` coprime mod p.
fn hensel_lift(f: &PolyZ, g0: &PolyModP, h0: &PolyModP, p: u64, k: u32) -> (PolyZ, PolyZ) {
    let (one, s, t) = g0.xgcd(h0);
    debug_assert!(one.degree() == Some(0));
    let mut g = g0.lift();
    let mut h = h0.lift();
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    for _ in 1..k {
        let err = &(f - &(&g * &h)).div_exact(&pk);
        let e = err.reduce(p);
        let tau = t.mul(&e).rem(g0);
        let sigma = s.mul(&e).rem(h0);
        g = &g + &tau.lift().scale(&pk);
        h = &h + &sigma.lift().scale(&pk);
        pk *= &pb;
    }
    (g, h)
}

fn symmetric(f: &PolyZ, m: &BigInt) -> PolyZ {
    let half = m / 2;
    PolyZ::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Searches for a monic factor of degree at most n/2 by two-factor lifting of every
/// subset of the modular factors.
fn hensel_search(f: &PolyZ, p: u64) -> Result<Option<PolyZ>> {
    let n = f.degree().unwrap();
    let fbar = f.reduce(p);
    let fs: Vec<PolyModP> = factor_over_fp(&fbar)?.into_iter().map(|(g, _)| g).collect();
    let r = fs.len();
    // coefficient bound for factors of degree <= n/2
    let bound = BigInt::from(2u32).pow((n / 2) as u32) * f.l1_norm();
    let mut k = 1u32;
    let pb = BigInt::from(p);
    while pb.pow(k) <= &bound * 2 {
        k += 1;
    }
    let modulus = pb.pow(k);
    for mask in 1u32..(1 << r) - 1 {
        let deg: usize = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| fs[i].degree().unwrap())
            .sum();
        if deg > n / 2 {
            continue;
        }
        let mut g0 = PolyModP::one(p);
        let mut h0 = PolyModP::one(p);
        for (i, fi) in fs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g0 = g0.mul(fi);
            } else {
                h0 = h0.mul(fi);
            }
        }
        let (g, _) = hensel_lift(f, &g0, &h0, p, k);
        let cand = symmetric(&g, &modulus);
        if !cand.is_monic() {
            continue;
        }
        let (_, rem) = f.div_rem_monic(&cand)?;
        if rem.is_zero() {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Small helper for callers that only hold (a, b).
pub fn trinomial_is_irreducible(a: &BigInt, b: &BigInt) -> Result<bool> {
    is_irreducible_over_q(&PolyZ::trinomial(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(a: i64, b: i64) -> PolyZ {
        PolyZ::trinomial(&BigInt::from(a), &BigInt::from(b))
    }

    #[test]
    fn golden_trinomials() {
        assert!(is_irreducible_over_q(&tri(6, 6)).unwrap());
        assert!(!is_irreducible_over_q(&tri(2, 3)).unwrap());
        assert!(is_irreducible_over_q(&tri(28, 32)).unwrap());
        assert!(is_irreducible_over_q(&tri(3, 8)).unwrap());
        assert!(is_irreducible_over_q(&tri(-1, 9)).unwrap());
        assert!(is_irreducible_over_q(&tri(803, 2112)).unwrap());
        assert!(is_irreducible_over_q(&tri(35, 72)).unwrap());
        assert!(!is_irreducible_over_q(&tri(0, 0)).unwrap());
    }

    #[test]
    fn finds_factors_without_rational_roots() {
        let g = PolyZ::from_i64(&[3, 1, 1]);
        let h = PolyZ::from_i64(&[5, -2, 0, 1, 0, 1]);
        let f = &g * &h;
        let v = irreducibility(&f).unwrap();
        assert!(!v.irreducible);
        match v.certificate {
            Certificate::Factor(c) => {
                assert!(f.div_rem_monic(&c).unwrap().1.is_zero());
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        let sq = &g * &g;
        assert!(!is_irreducible_over_q(&(&sq * &PolyZ::from_i64(&[7, 0, 0, 1]))).unwrap());
    }

    #[test]
    fn modular_certificate_is_a_single_factor() {
        let f = tri(28, 32);
        if let Certificate::ModP(p) = irreducibility(&f).unwrap().certificate {
            let fs = factor_over_fp(&f.reduce(p)).unwrap();
            assert_eq!(fs.len(), 1);
            assert_eq!(fs[0].1, 1);
        }
    }

    /// Exhaustive oracle for |a|, |b| <= 6: every root has modulus below 2, so the
    /// coefficients of a monic factor of degree <= 3 are at most 12 in absolute value.
    fn brute_reducible(a: i64, b: i64) -> bool {
        let f = tri(a, b);
        // linear factors
        for r in -(b.abs())..=b.abs() {
            if r != 0 && b % r != 0 {
                continue;
            }
            if f.eval(&BigInt::from(r)).is_zero() {
                return true;
            }
        }
        // quadratic and cubic factors x^2 + c1 x + c0, x^3 + c2 x^2 + c1 x + c0 with c0 | b
        let divs: Vec<i64> = (1..=b.abs()).filter(|d| b % d == 0).flat_map(|d| [d, -d]).collect();
        for &c0 in &divs {
            for c1 in -12..=12 {
                let q = PolyZ::from_i64(&[c0, c1, 1]);
                if f.div_rem_monic(&q).unwrap().1.is_zero() {
                    return true;
                }
            }
        }
        for &c0 in &divs {
            for c1 in -12..=12 {
                for c2 in -12..=12 {
                    let q = PolyZ::from_i64(&[c0, c1, c2, 1]);
                    if f.div_rem_monic(&q).unwrap().1.is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn agrees_with_brute_force_on_small_trinomials() {
        for a in -6i64..=6 {
            for b in 1i64..=6 {
                let got = is_irreducible_over_q(&tri(a, b)).unwrap();
                assert_eq!(!got, brute_reducible(a, b), "a={a} b={b}");
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn products_are_reducible(
            g in proptest::collection::vec(-4i64..5, 1..4),
            h in proptest::collection::vec(-4i64..5, 1..5),
        ) {
            let mut g = g; g.push(1);
            let mut h = h; h.push(1);
            let f = &PolyZ::from_i64(&g) * &PolyZ::from_i64(&h);
            proptest::prop_assert!(!is_irreducible_over_q(&f).unwrap());
        }
    }
}
