//! The trinomial x^7 + a x + b.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::integer::{factorize, primes_up_to};
use crate::arith::irreducible::{irreducibility, Irreducibility};
use crate::arith::poly::PolyZ;
use crate::arith::valuation::val;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trinomial {
    #[serde(with = "crate::report::decimal")]
    a: BigInt,
    #[serde(with = "crate::report::decimal")]
    b: BigInt,
}

impl Trinomial {
    /// Rejects inputs with v_p(a) >= 6 and v_p(b) >= 7 for some prime p.
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Reducible { a: "0".into(), b: "0".into() });
        }
        let t = Trinomial { a, b };
        if let Some(p) = t.hypothesis_violation()? {
            return Err(Error::HypothesisViolation { p });
        }
        Ok(t)
    }

    pub fn from_i64(a: i64, b: i64) -> Result<Self> {
        Trinomial::new(BigInt::from(a), BigInt::from(b))
    }

    /// No hypothesis check; for internal use on inputs already known to be fine.
    pub fn new_unchecked(a: BigInt, b: BigInt) -> Self {
        Trinomial { a, b }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn poly(&self) -> PolyZ {
        PolyZ::trinomial(&self.a, &self.b)
    }

    pub fn discriminant(&self) -> BigInt {
        discriminant(self)
    }

    pub fn irreducibility(&self) -> Result<Irreducibility> {
        irreducibility(&self.poly())
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.irreducibility()?.irreducible)
    }

    /// Errors with `Reducible` unless F is irreducible over Q.
    pub fn require_irreducible(&self) -> Result<()> {
        if self.is_irreducible()? {
            Ok(())
        } else {
            Err(Error::Reducible {
                a: self.a.to_string(),
                b: self.b.to_string(),
            })
        }
    }

    /// The smallest prime witnessing a violation of the standing hypothesis, as a string.
    fn hypothesis_violation(&self) -> Result<Option<String>> {
        if self.a.is_zero() && self.b.is_zero() {
            return Ok(Some("2".into()));
        }
        let g = self.a.gcd(&self.b);
        let bad = |p: &BigUint| {
            let p64 = p.to_u64();
            let va = match p64 {
                Some(q) => val(&self.a, q),
                None => big_val(&self.a, p),
            };
            let vb = match p64 {
                Some(q) => val(&self.b, q),
                None => big_val(&self.b, p),
            };
            va.is_none_or(|v| v >= 6) && vb.is_none_or(|v| v >= 7)
        };
        let fac = factorize(&g);
        for (p, e) in &fac.factors {
            if *e >= 6 && bad(p) {
                return Ok(Some(p.to_string()));
            }
        }
        for c in &fac.unfactored {
            // a prime with p^6 | c satisfies p <= c^(1/6)
            let limit = c.nth_root(6);
            let Some(limit) = limit.to_u64().filter(|&l| l <= 50_000_000) else {
                return Err(Error::Unsupported(format!(
                    "cannot certify the standing hypothesis for gcd(a, b) = {g}"
                )));
            };
            for p in primes_up_to(limit) {
                let pb = BigUint::from(p);
                if (c % &pb).is_zero() && bad(&pb) {
                    return Ok(Some(p.to_string()));
                }
            }
        }
        Ok(None)
    }
}

fn big_val(n: &BigInt, p: &BigUint) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let mut m = n.magnitude().clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Some(k);
        }
        m = q;
        k += 1;
    }
}

/// Delta = -(6^6 a^7 + 7^7 b^6).
pub fn discriminant(t: &Trinomial) -> BigInt {
    -(BigInt::from(46656) * t.a.pow(7) + BigInt::from(823543) * t.b.pow(6))
}

impl fmt::Display for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}
