//! Monogenic fields defined by non-monogenic trinomials x^7 + 2^u a x + 2^v b.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::integer::square_prime_divisors;
use crate::arith::poly::PolyZ;
use crate::arith::resultant::charpoly_of_element;
use crate::arith::valuation::val;
use crate::error::{Error, Result};
use crate::newton::{polygon_index, principal_polygon, PrincipalPolygon};
use crate::trinomial::Trinomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicFamilyParams {
    u: u32,
    v: u32,
    a: BigInt,
    b: BigInt,
    trinomial: Trinomial,
}

impl MonogenicFamilyParams {
    /// Checks every hypothesis and names the first one that fails.
    pub fn new(u: u32, v: u32, a: BigInt, b: BigInt) -> Result<Self> {
        let fail = |s: &str| Err(Error::FamilyHypothesis(s.to_string()));
        if u + 1 < v {
            return fail("u >= v - 1");
        }
        if !(2..=6).contains(&v) {
            return fail("2 <= v <= 6");
        }
        if !b.gcd(&BigInt::from(6)).is_one() {
            return fail("gcd(6, b) = 1");
        }
        if (&a % BigInt::from(7)).is_zero() {
            return fail("7 does not divide a");
        }
        let d = BigInt::from(823543) * b.pow(6) + BigInt::from(46656) * a.pow(7);
        let (squares, certified) = square_prime_divisors(&d);
        if !certified {
            return Err(Error::Unsupported(format!(
                "cannot certify the square-free condition on {d}"
            )));
        }
        for p in squares {
            let pi = BigInt::from(p.clone());
            if pi != BigInt::from(2) && !(&b % &pi).is_zero() {
                return fail(&format!("p^2 does not divide 7^7 b^6 + 6^6 a^7 at p = {p}"));
            }
        }
        let two = BigInt::from(2);
        let trinomial = Trinomial::new(&a * two.pow(u), &b * two.pow(v))?;
        trinomial.require_irreducible()?;
        Ok(MonogenicFamilyParams { u, v, a, b, trinomial })
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn trinomial(&self) -> &Trinomial {
        &self.trinomial
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonogenicCertificate {
    /// theta = alpha^x / 2^y with v x - 7 y = 1.
    pub x: u32,
    pub y: u32,
    /// Minimal polynomial of theta, constant term first, as decimal strings.
    pub g: Vec<String>,
    /// Lower bound for v_2 of the index of alpha, from the polygon of F at x.
    pub alpha_index_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MonogenicOutcome {
    Certificate(MonogenicCertificate),
    /// The polygon of F at x has several sides, so the argument does not apply as stated.
    Discrepancy { polygon: PrincipalPolygon, note: String },
}

/// 2-Eisenstein: monic, 2 | every lower coefficient, 4 does not divide the constant term.
pub fn is_two_eisenstein(g: &PolyZ) -> bool {
    let Some(n) = g.degree() else { return false };
    g.is_monic()
        && n >= 1
        && val(&g.coeff(0), 2) == Some(1)
        && (1..n).all(|i| val(&g.coeff(i), 2).is_none_or(|v| v >= 1))
}

pub fn monogenic_family_certificate(params: &MonogenicFamilyParams) -> Result<MonogenicOutcome> {
    let f = params.trinomial.poly();
    let polygon = principal_polygon(&f, &PolyZ::x(), 2)?;
    if polygon.sides.len() != 1 || polygon.sides[0].degree() != 1 {
        return Ok(MonogenicOutcome::Discrepancy {
            note: format!(
                "polygon {polygon} of F at x has {} sides; a single side of degree 1 needs 7u >= 6v",
                polygon.sides.len()
            ),
            polygon,
        });
    }
    let v = params.v;
    let x = (1..7u32).find(|x| (v * x) % 7 == 1).expect("v is prime to 7");
    let y = (v * x - 1) / 7;

    let c = charpoly_of_element(&PolyZ::monomial(BigInt::one(), x as usize), &f)?;
    let mut coeffs = Vec::with_capacity(8);
    for i in 0..=7u32 {
        let d = BigInt::from(2).pow(y * (7 - i));
        let (q, r) = c.coeff(i as usize).div_rem(&d);
        if !r.is_zero() {
            return Err(Error::InconsistencyDetected(format!(
                "alpha^{x}/2^{y} is not integral: coefficient {i} of {c}"
            )));
        }
        coeffs.push(q);
    }
    let g = PolyZ::new(coeffs);
    if !is_two_eisenstein(&g) {
        return Err(Error::InconsistencyDetected(format!("{g} is not 2-Eisenstein")));
    }
    Ok(MonogenicOutcome::Certificate(MonogenicCertificate {
        x,
        y,
        g: g.coeffs().iter().map(|c| c.to_string()).collect(),
        alpha_index_bound: polygon_index(&polygon, 1),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(u: u32, v: u32, a: i64, b: i64) -> Result<MonogenicFamilyParams> {
        MonogenicFamilyParams::new(u, v, BigInt::from(a), BigInt::from(b))
    }

    fn cert(u: u32, v: u32) -> MonogenicCertificate {
        match monogenic_family_certificate(&params(u, v, 1, 1).unwrap()).unwrap() {
            MonogenicOutcome::Certificate(c) => c,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solves_the_linear_equation() {
        let c = cert(6, 6);
        assert_eq!((c.x, c.y), (6, 5));
        assert!(c.alpha_index_bound >= 1);
        let c = cert(3, 3);
        assert_eq!((c.x, c.y), (5, 2));
    }

    #[test]
    fn two_sided_polygon_is_a_discrepancy() {
        let out = monogenic_family_certificate(&params(1, 2, 1, 1).unwrap()).unwrap();
        let MonogenicOutcome::Discrepancy { polygon, .. } = out else { panic!() };
        assert_eq!(polygon.to_string(), "(0,2) -> (1,1) -> (7,0)");
    }

    #[test]
    fn hypotheses_are_named() {
        let msg = |r: Result<MonogenicFamilyParams>| r.unwrap_err().to_string();
        assert!(msg(params(1, 4, 1, 1)).contains("u >= v - 1"));
        assert!(msg(params(6, 7, 1, 1)).contains("2 <= v <= 6"));
        assert!(msg(params(6, 6, 1, 3)).contains("gcd(6, b)"));
        assert!(msg(params(6, 6, 7, 1)).contains("7 does not divide a"));
    }

    #[test]
    fn eisenstein_check() {
        assert!(is_two_eisenstein(&PolyZ::from_i64(&[2, 4, 0, 1])));
        assert!(!is_two_eisenstein(&PolyZ::from_i64(&[4, 2, 1])));
        assert!(!is_two_eisenstein(&PolyZ::from_i64(&[2, 1, 1])));
    }
}
