//! First-order residual polynomials.

use std::fmt;

use num_bigint::BigInt;

use super::expansion::{phi_expansion, PhiExpansion};
use super::polygon::Side;
use crate::arith::gf::{FieldPoly, ResidualFieldElement, ResidueField};
use crate::arith::poly::PolyZ;
use crate::arith::valuation::Valuation;
use crate::error::{Error, Result};

/// Residual polynomial of a side over F_phi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualPoly {
    pub field: ResidueField,
    pub poly: FieldPoly,
}

impl ResidualPoly {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[ResidualFieldElement] {
        self.poly.coeffs()
    }

    pub fn factor(&self) -> Result<Vec<(FieldPoly, usize)>> {
        self.field.factor(&self.poly)
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(self.factor()?.iter().all(|(_, m)| *m == 1))
    }
}

impl fmt::Display for ResidualPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.poly_to_string(&self.poly, 'y'))
    }
}

/// F_p[x]/(phi mod p); errors for degree above 3.
pub fn residue_field_of(phi: &PolyZ, p: u64) -> Result<ResidueField> {
    ResidueField::new(phi.reduce(p))
}

/// Class of c / p^u in `field`.
pub(crate) fn residue(field: &ResidueField, c: &PolyZ, p: u64, u: u64) -> ResidualFieldElement {
    let q = c.div_exact(&BigInt::from(p).pow(u as u32));
    field.element(q.reduce(p))
}

/// t_k = residue of a_{s+ke} / p^{u_{s+ke}} for points on the side, zero above it.
pub(crate) fn residual_from_expansion(
    field: &ResidueField,
    exp: &PhiExpansion,
    vals: &[Valuation],
    side: &Side,
    p: u64,
) -> FieldPoly {
    let coeffs = (0..=side.degree())
        .map(|k| {
            let i = (side.start.0 + k * side.e) as usize;
            let u = side.start.1 - k * side.h;
            if vals.get(i).copied() == Some(Valuation::Finite(u)) {
                residue(field, &exp.coeffs()[i], p, u)
            } else {
                field.zero()
            }
        })
        .collect();
    field.poly(coeffs)
}

pub fn residual_polynomial(f: &PolyZ, phi: &PolyZ, p: u64, side: &Side) -> Result<ResidualPoly> {
    let field = residue_field_of(phi, p)?;
    let exp = phi_expansion(f, phi)?;
    let vals = exp.valuations(p);
    if side.end.0 as usize > vals.len().max(1) {
        return Err(Error::InvalidParameters(format!("side {side} outside the expansion")));
    }
    let poly = residual_from_expansion(&field, &exp, &vals, side, p);
    Ok(ResidualPoly { field, poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::polygon::principal_polygon;

    fn tri(a: i64, b: i64) -> PolyZ {
        PolyZ::trinomial(&BigInt::from(a), &BigInt::from(b))
    }

    #[test]
    fn cube_at_three() {
        // v_3(a) = 3, b chosen with v_3(b) >= 5 so the long side has slope -1/2
        for (a, a3) in [(27i64, 1u64), (54, 2), (-27, 2)] {
            let f = tri(a, 243);
            let n = principal_polygon(&f, &PolyZ::x(), 3).unwrap();
            let side = *n.sides.last().unwrap();
            assert_eq!((side.h, side.e, side.degree()), (1, 2, 3));
            let r = residual_polynomial(&f, &PolyZ::x(), 3, &side).unwrap();
            let k = &r.field;
            let want = k.poly(vec![k.from_u64(a3), k.zero(), k.zero(), k.one()]);
            assert_eq!(r.poly, want);
            let fs = r.factor().unwrap();
            assert_eq!(fs.len(), 1);
            assert_eq!(fs[0].1, 3);
            assert_eq!(fs[0].0, k.poly(vec![k.from_u64(a3), k.one()]));
        }
    }

    #[test]
    fn quadratic_residual_at_x_plus_one() {
        // a = 5 (mod 8), v_2(b - (a + 1)) = 4
        let (a, b) = (5i64, 6 + 16);
        let f = tri(a, b);
        let phi = PolyZ::from_i64(&[1, 1]);
        let n = principal_polygon(&f, &phi, 2).unwrap();
        let side = *n.sides.iter().find(|s| s.degree() == 2).unwrap();
        let r = residual_polynomial(&f, &phi, 2, &side).unwrap();
        let k = &r.field;
        assert_eq!(r.poly, k.poly(vec![k.one(), k.one(), k.one()]));
        assert!(r.is_squarefree().unwrap());
    }

    #[test]
    fn quadratic_phi_residual() {
        // a = 3 (mod 8), b = 0 (mod 8), phi = x^2 + x + 1 over F_2
        let f = tri(3, 8);
        let phi = PolyZ::from_i64(&[1, 1, 1]);
        let n = principal_polygon(&f, &phi, 2).unwrap();
        for side in &n.sides {
            let r = residual_polynomial(&f, &phi, 2, side).unwrap();
            assert!(r.is_squarefree().unwrap(), "{side}: {r}");
            let c = r.coeffs();
            assert!(!c[0].is_zero() && !c.last().unwrap().is_zero());
        }
    }

    #[test]
    fn degree_one_sides_are_linear() {
        let f = tri(6, 6);
        let n = principal_polygon(&f, &PolyZ::x(), 2).unwrap();
        let r = residual_polynomial(&f, &PolyZ::x(), 2, &n.sides[0]).unwrap();
        assert_eq!(r.degree(), 1);
        assert!(r.is_squarefree().unwrap());
    }
}
