//! p-adic valuations and unit parts of integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A p-adic valuation: a non-negative integer, or infinity for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn is_finite(self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// Panics on infinity; callers check for zero first.
    pub fn unwrap(self) -> u64 {
        self.finite().expect("valuation of zero is infinite")
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest `k` with `p^k | n`, or infinity for `n = 0`.
pub fn padic_valuation(n: &BigInt, p: u64) -> Valuation {
    match val(n, p) {
        Some(v) => Valuation::Finite(v),
        None => Valuation::Infinite,
    }
}

/// Valuation as an `Option`, `None` standing for zero.
pub(crate) fn val(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    if p == 2 {
        return n.magnitude().trailing_zeros();
    }
    let pb = BigInt::from(p);
    let mut m = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return Some(k);
        }
        m = q;
        k += 1;
    }
}

/// `n / p^{v_p(n)}`, sign preserved.
pub fn unit_part(n: &BigInt, p: u64) -> Result<BigInt> {
    let v = val(n, p).ok_or(Error::UndefinedUnitPart)?;
    Ok(n / BigInt::from(p).pow(v as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn small_valuations() {
        assert_eq!(padic_valuation(&bi(12), 2), Valuation::Finite(2));
        assert_eq!(padic_valuation(&bi(0), 5), Valuation::Infinite);
        assert_eq!(padic_valuation(&bi(823543), 7), Valuation::Finite(7));
        assert_eq!(padic_valuation(&bi(-96), 2), Valuation::Finite(5));
        assert_eq!(padic_valuation(&bi(10), 3), Valuation::Finite(0));
    }

    #[test]
    fn unit_parts() {
        assert_eq!(unit_part(&bi(12), 2).unwrap(), bi(3));
        assert_eq!(unit_part(&bi(-96), 2).unwrap(), bi(-3));
        assert_eq!(unit_part(&bi(9), 3).unwrap(), bi(1));
        assert_eq!(unit_part(&bi(0), 3), Err(Error::UndefinedUnitPart));
    }

    #[test]
    fn ordering_puts_infinity_last() {
        assert!(Valuation::Finite(100) < Valuation::Infinite);
        assert_eq!(Valuation::Finite(2) + Valuation::Infinite, Valuation::Infinite);
    }

    proptest::proptest! {
        #[test]
        fn valuation_splits_n(n in -1_000_000_000i64..1_000_000_000, pi in 0usize..6) {
            let p = [2u64, 3, 5, 7, 11, 13][pi];
            proptest::prop_assume!(n != 0);
            let n = bi(n);
            let v = padic_valuation(&n, p).unwrap();
            let u = unit_part(&n, p).unwrap();
            proptest::prop_assert_eq!(&u * BigInt::from(p).pow(v as u32), n);
            proptest::prop_assert!(!(&u % BigInt::from(p)).is_zero());
        }

        #[test]
        fn valuation_is_additive(m in 1i64..100_000, n in 1i64..100_000) {
            let prod = bi(m) * bi(n);
            proptest::prop_assert_eq!(
                padic_valuation(&prod, 3),
                padic_valuation(&bi(m), 3) + padic_valuation(&bi(n), 3)
            );
        }
    }
}
