//! Counting monic irreducibles, the common index divisor test, tame discriminants.

use crate::error::{Error, Result};
use crate::newton::SplittingType;

fn mobius(mut n: u32) -> i128 {
    let mut mu = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// N_f(p) = (1/f) sum over d | f of mu(d) p^(f/d); saturates at u64::MAX.
pub fn count_monic_irreducibles(p: u64, f: u32) -> u64 {
    assert!(f >= 1, "degree must be positive");
    let mut s: i128 = 0;
    for d in (1..=f).filter(|d| f.is_multiple_of(*d)) {
        let Some(pw) = (p as i128).checked_pow(f / d) else {
            return u64::MAX;
        };
        s += mobius(d) * pw;
    }
    u64::try_from(s / f as i128).unwrap_or(u64::MAX)
}

/// p divides i(K) iff some residue degree f occurs more than N_f(p) times.
pub fn is_common_index_divisor(ty: &SplittingType, p: u64) -> bool {
    let max_f = ty.factors().iter().map(|&(_, f)| f).max().unwrap_or(0);
    (1..=max_f).any(|f| ty.count_with_residue_degree(f) as u64 > count_monic_irreducibles(p, f))
}

/// v_p(d_K) = sum (e - 1) f when p divides no ramification index.
pub fn tame_dk_valuation(ty: &SplittingType, p: u64) -> Result<u64> {
    if !ty.is_tame(p) {
        return Err(Error::WildRamification { p });
    }
    Ok(ty.factors().iter().map(|&(e, f)| ((e - 1) * f) as u64).sum())
}
