//! Integer factorization helpers built on `num-prime`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Prime factorization of |n|; `complete` is false when a composite cofactor was left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigUint, u32)>,
    pub unfactored: Vec<BigUint>,
}

impl Factorization {
    pub fn complete(&self) -> bool {
        self.unfactored.is_empty()
    }
}

/// Trial-division bound used before handing large cofactors to the generic routines.
pub const TRIAL_BOUND: u64 = 1_000_000;

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    num_prime::nt_funcs::primes(limit + 1)
        .into_iter()
        .filter(|&p| p <= limit)
        .collect()
}

pub fn is_prime_u64(n: u64) -> bool {
    num_prime::nt_funcs::is_prime64(n)
}

pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    num_prime::nt_funcs::is_prime(n, None).probably()
}

pub fn factorize(n: &BigInt) -> Factorization {
    let m = n.magnitude().clone();
    if m.is_zero() {
        return Factorization {
            factors: Vec::new(),
            unfactored: vec![m],
        };
    }
    if let Some(small) = m.to_u128() {
        let factors = num_prime::nt_funcs::factorize128(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e as u32))
            .collect();
        return Factorization {
            factors,
            unfactored: Vec::new(),
        };
    }
    let mut rest = m;
    let mut factors = Vec::new();
    for p in primes_up_to(TRIAL_BOUND) {
        let pb = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
        if rest.is_one() {
            break;
        }
    }
    let mut unfactored = Vec::new();
    if !rest.is_one() {
        let (found, left) = num_prime::nt_funcs::factors(rest, None);
        for (p, e) in found {
            factors.push((p, e as u32));
        }
        unfactored = left.unwrap_or_default();
    }
    factors.sort();
    Factorization { factors, unfactored }
}

/// Primes p with p^2 | n, and whether the list is certified complete.
pub fn square_prime_divisors(n: &BigInt) -> (Vec<BigUint>, bool) {
    let f = factorize(n);
    let mut out: Vec<BigUint> = f
        .factors
        .iter()
        .filter(|(_, e)| *e >= 2)
        .map(|(p, _)| p.clone())
        .collect();
    let mut certified = true;
    for c in &f.unfactored {
        // a leftover composite may still be a perfect square of an unknown prime
        let r = c.sqrt();
        if &r * &r == *c
            && is_probable_prime(&r) {
                out.push(r);
                continue;
            }
        certified = false;
    }
    out.sort();
    out.dedup();
    (out, certified)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_discriminant_sized_values() {
        // 6^6 * 7^7 * (6 + 7) style products
        let n = BigInt::from(2u64.pow(20)) * BigInt::from(7u64.pow(7)) * BigInt::from(1753);
        let f = factorize(&-n);
        assert!(f.complete());
        assert_eq!(
            f.factors,
            vec![
                (BigUint::from(2u32), 20),
                (BigUint::from(7u32), 7),
                (BigUint::from(1753u32), 1)
            ]
        );
    }

    #[test]
    fn square_divisors() {
        let n = BigInt::from(4u32 * 9 * 11 * 11 * 13);
        let (ps, ok) = square_prime_divisors(&n);
        assert!(ok);
        assert_eq!(ps, vec![BigUint::from(2u32), BigUint::from(3u32), BigUint::from(11u32)]);
    }

    #[test]
    fn beyond_u128() {
        let p = BigUint::from(1_000_000_007u64);
        let n = BigInt::from(p.pow(5)) * BigInt::from(3u32);
        let f = factorize(&n);
        assert!(f.complete());
        assert_eq!(f.factors, vec![(BigUint::from(3u32), 1), (p, 5)]);
    }

    proptest::proptest! {
        #[test]
        fn factorization_multiplies_back(n in 1u64..u64::MAX) {
            let f = factorize(&BigInt::from(n));
            let prod = f.factors.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
            proptest::prop_assert_eq!(prod, BigUint::from(n));
            proptest::prop_assert!(f.factors.iter().all(|(p, _)| is_probable_prime(p)));
        }
    }
}
