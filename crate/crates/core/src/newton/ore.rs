//! Ore's theorem at first order, and the explicit second-order cases for trinomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::engine::decompose_with_key;
use super::expansion::phi_expansion;
use super::polygon::{expansion_points, PrincipalPolygon};
use super::residual::{residual_from_expansion, residue_field_of};
use super::splitting::SplittingType;
use crate::arith::gf::factor_over_fp;
use crate::arith::poly::PolyZ;
use crate::arith::valuation::{unit_part, val};
use crate::error::{Error, Result};
use crate::trinomial::Trinomial;

/// First-order data: the primes Ore's theorem certifies, and the bound on the index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OreFactorization {
    /// Primes from (phi, side, psi) with psi simple; the whole type when `regular`.
    pub partial: SplittingType,
    /// Lower bound on v_p of the index of Z[alpha], exact when `regular`.
    pub index: u64,
    pub regular: bool,
    /// Repeated residual factors, as "phi: side: psi^k".
    pub unresolved: Vec<String>,
}

pub fn ore_factorization(f: &PolyZ, p: u64) -> Result<OreFactorization> {
    let mut out = OreFactorization {
        partial: SplittingType::default(),
        index: 0,
        regular: true,
        unresolved: Vec::new(),
    };
    for (phibar, mult) in factor_over_fp(&f.reduce(p))? {
        let phi = phibar.lift_balanced();
        let m = phi.degree().unwrap() as u32;
        if mult == 1 {
            out.partial.push(1, m);
            continue;
        }
        let field = residue_field_of(&phi, p)?;
        let exp = phi_expansion(f, &phi)?;
        let vals = exp.valuations(p);
        let n = PrincipalPolygon::from_points(&expansion_points(&vals));
        out.index += m as u64 * n.lattice_count();
        for side in &n.sides {
            let r = residual_from_expansion(&field, &exp, &vals, side, p);
            for (psi, k) in field.factor(&r)? {
                let d = psi.degree().unwrap() as u32;
                if k == 1 {
                    out.partial.push(side.e as u32, m * d);
                } else {
                    out.regular = false;
                    out.unresolved.push(format!(
                        "{phi}: {side}: ({})^{k}",
                        field.poly_to_string(&psi, 'y')
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Every residual polynomial of every phi-side is squarefree.
pub fn is_p_regular(f: &PolyZ, p: u64) -> Result<bool> {
    Ok(ore_factorization(f, p)?.regular)
}

/// The non-regular trinomial configurations resolved by an explicit second-order polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondOrderCase {
    pub p: u64,
    pub label: &'static str,
    pub key: PolyZ,
}

impl SecondOrderCase {
    /// p = 2 with v_2(a) = 2, v_2(b) >= 3 or v_2(a) = 4, v_2(b) >= 5; p = 3 with v_3(a) = 3,
    /// v_3(b) >= 4. Anything else is unsupported.
    pub fn for_trinomial(t: &Trinomial, p: u64) -> Result<SecondOrderCase> {
        let va = val(t.a(), p);
        let vb = val(t.b(), p).unwrap_or(u64::MAX);
        let x3 = |c1: i64, c0: i64| PolyZ::from_i64(&[c0, c1, 0, 1]);
        let case = match (p, va) {
            (2, Some(2)) if vb == 3 => SecondOrderCase {
                p,
                label: "v2(a)=2, v2(b)=3",
                key: x3(2, 2),
            },
            (2, Some(2)) if vb >= 4 => SecondOrderCase {
                p,
                label: "v2(a)=2, v2(b)>=4",
                key: x3(0, 2),
            },
            (2, Some(4)) if vb >= 5 => SecondOrderCase {
                p,
                label: "v2(a)=4, v2(b)>=5",
                key: x3(0, 4),
            },
            (3, Some(3)) if vb >= 4 => {
                let a3 = unit_part(t.a(), 3)?.mod_floor(&BigInt::from(3));
                let c = if a3 == BigInt::from(1) { 3 } else { -3 };
                SecondOrderCase {
                    p,
                    label: "v3(a)=3, v3(b)>=4",
                    key: PolyZ::from_i64(&[c, 0, 1]),
                }
            }
            _ => {
                return Err(Error::UnsupportedSecondOrder(format!(
                    "no explicit second-order case for {t} at p = {p}"
                )))
            }
        };
        debug_assert!(!t.b().is_zero() || vb == u64::MAX);
        Ok(case)
    }
}

/// Primes and index found by the second-order polygon at the case's key polynomial.
pub fn second_order_refine(f: &PolyZ, case: &SecondOrderCase) -> Result<(SplittingType, u64)> {
    let (_, t, ind) = decompose_with_key(f, case.p, &case.key)?;
    Ok((t, ind))
}
