//! When is Z[alpha] the full ring of integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::fp::PolyModP;
use crate::arith::gf::factor_over_fp;
use crate::arith::integer::{factorize, square_prime_divisors};
use crate::arith::poly::PolyZ;
use crate::arith::valuation::val;
use crate::error::{Error, Result};
use crate::trinomial::Trinomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosednessVerdict {
    pub closed: bool,
    /// Failed conditions, numbered 1 to 6.
    pub violated: Vec<u8>,
    /// Set when a cofactor of 6^6 a^7 + 7^7 b^6 could not be shown squarefree.
    pub unverified: bool,
}

pub(crate) fn residue(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

fn divides(p: u64, n: &BigInt) -> bool {
    residue(n, p) == 0
}

/// The six conditions, each evaluated as stated.
pub fn integral_closed(t: &Trinomial) -> Result<ClosednessVerdict> {
    t.require_irreducible()?;
    let (a, b) = (t.a(), t.b());
    let mut violated = Vec::new();

    // (1) p | a and p | b force v_p(b) = 1
    let g = a.gcd(b);
    let fac = factorize(&g);
    let mut unverified = !fac.complete();
    if fac
        .factors
        .iter()
        .any(|(p, _)| p.to_u64().and_then(|q| val(b, q)) != Some(1))
    {
        violated.push(1);
    } else if !fac.complete() {
        // every prime of a composite leftover divides b to order >= 1; v_p(b) = 1 needs p^2 not | b
        let bb = b.magnitude();
        if fac.unfactored.iter().any(|c| !(bb / c).gcd(c).is_one()) {
            violated.push(1);
        }
    }

    let (a4, b4) = (residue(a, 4), residue(b, 4));
    if divides(2, b) && !divides(2, a) {
        let ok = (a4 == 3 && b4 == 2) || (a4 == 1 && b4 == 0);
        if !ok {
            violated.push(2);
        }
    }

    if divides(3, b) {
        match residue(a, 3) {
            2 => {
                let plus = b + BigInt::from(1) + a;
                let minus = b - BigInt::from(1) - a;
                if val(&plus, 3) != Some(1) || val(&minus, 3) != Some(1) {
                    violated.push(3);
                }
            }
            1 => {
                let a9 = residue(a, 9);
                if !(a9 == 4 || a9 == 7 || val(b, 3) == Some(1)) {
                    violated.push(4);
                }
            }
            _ => {}
        }
    }

    if divides(7, a) && !divides(7, b) {
        let c = BigInt::from(1) - a - b.pow(6);
        if val(&c, 7) != Some(1) {
            violated.push(5);
        }
    }

    let d = BigInt::from(823543) * b.pow(6) + BigInt::from(46656) * a.pow(7);
    let (squares, certified) = square_prime_divisors(&d);
    unverified |= !certified;
    let bad6 = squares.iter().any(|p| {
        let small = p.to_u64();
        if matches!(small, Some(2 | 3 | 7)) {
            return false;
        }
        let pi = BigInt::from(p.clone());
        let both = (a % &pi).is_zero() && (b % &pi).is_zero();
        !both
    });
    if bad6 {
        violated.push(6);
    }

    Ok(ClosednessVerdict {
        closed: violated.is_empty(),
        violated,
        unverified,
    })
}

/// Primes p with p^2 | Delta, the only possible divisors of the index of alpha; the flag
/// is false when the list may be incomplete.
pub fn index_candidate_primes(t: &Trinomial) -> (Vec<u64>, bool) {
    let (ps, mut certified) = square_prime_divisors(&t.discriminant());
    let small: Vec<u64> = ps.iter().filter_map(|p| p.to_u64()).collect();
    certified &= small.len() == ps.len();
    (small, certified)
}

/// Dedekind's criterion: true iff p divides the index of Z[alpha] for monic f.
pub fn dedekind_divides_index(f: &PolyZ, p: u64) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NonMonic(f.to_string()));
    }
    let factors = factor_over_fp(&f.reduce(p))?;
    let mut g = PolyZ::one();
    let mut h = PolyZ::one();
    let mut g_bar = PolyModP::one(p);
    for (phi, m) in &factors {
        let lift = phi.lift();
        g = &g * &lift;
        h = &h * &lift.pow(*m as u32 - 1);
        g_bar = g_bar.mul(phi);
    }
    let diff = f - &(&g * &h);
    let t = diff.div_exact(&BigInt::from(p));
    let common = t.reduce(p).gcd(&g_bar).gcd(&h.reduce(p));
    Ok(common.degree().is_some_and(|d| d > 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(a: i64, b: i64) -> ClosednessVerdict {
        integral_closed(&Trinomial::from_i64(a, b).unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(verdict(6, 6).violated, Vec::<u8>::new());
        assert!(verdict(6, 6).closed);
        // v_7(1 - 28 - 32^6) = 2 as well
        assert_eq!(verdict(28, 32).violated, vec![1, 5]);
        assert_eq!(verdict(3, 8).violated, vec![2]);
        assert!(!verdict(-1, 9).closed);
        assert!(!verdict(35, 72).closed);
    }

    #[test]
    fn reducible_is_rejected() {
        let t = Trinomial::from_i64(2, 3).unwrap();
        assert!(matches!(integral_closed(&t), Err(Error::Reducible { .. })));
    }

    #[test]
    fn dedekind_on_eisenstein_and_known_divisors() {
        let f = Trinomial::from_i64(6, 6).unwrap().poly();
        for p in [2, 3, 5, 7] {
            assert!(!dedekind_divides_index(&f, p).unwrap());
        }
        let f = Trinomial::from_i64(3, 8).unwrap().poly();
        assert!(dedekind_divides_index(&f, 2).unwrap());
        // x^2 + 4 = (x+2i)(x-2i) has index 2 in Z[i]
        assert!(dedekind_divides_index(&PolyZ::from_i64(&[4, 0, 1]), 2).unwrap());
        assert!(!dedekind_divides_index(&PolyZ::from_i64(&[1, 0, 1]), 2).unwrap());
        // x^2 - 5: the golden ratio lies outside Z[sqrt 5]
        assert!(dedekind_divides_index(&PolyZ::from_i64(&[-5, 0, 1]), 2).unwrap());
    }

    #[test]
    fn condition_five_and_six() {
        // 1 - a - b^6 is -7 and -49
        assert!(!verdict(7, 1).violated.contains(&5));
        assert!(verdict(49, 1).violated.contains(&5));
        // 7^7 + 6^6 = 11 * 239 * 331, while 11^2 divides 7^7 12^6 + 6^6
        assert!(verdict(1, 1).closed);
        assert!(verdict(1, 12).violated.contains(&6));
    }
}
