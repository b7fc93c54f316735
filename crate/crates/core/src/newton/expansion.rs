//! Expansions in powers of a monic polynomial.

use crate::arith::poly::PolyZ;
use crate::arith::valuation::Valuation;
use crate::error::{Error, Result};

/// F = sum a_i phi^i with deg a_i < deg phi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiExpansion {
    phi: PolyZ,
    coeffs: Vec<PolyZ>,
}

impl PhiExpansion {
    pub fn phi(&self) -> &PolyZ {
        &self.phi
    }

    pub fn coeffs(&self) -> &[PolyZ] {
        &self.coeffs
    }

    /// Coefficient a_i, zero past the top.
    pub fn coeff(&self, i: usize) -> PolyZ {
        self.coeffs.get(i).cloned().unwrap_or_else(PolyZ::zero)
    }

    /// Index of the top coefficient.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn valuations(&self, p: u64) -> Vec<Valuation> {
        self.coeffs.iter().map(|c| c.valuation(p)).collect()
    }

    /// Horner evaluation of the expansion.
    pub fn reconstruct(&self) -> PolyZ {
        self.coeffs
            .iter()
            .rev()
            .fold(PolyZ::zero(), |acc, c| &(&acc * &self.phi) + c)
    }
}

pub fn phi_expansion(f: &PolyZ, phi: &PolyZ) -> Result<PhiExpansion> {
    if !phi.is_monic() {
        return Err(Error::NonMonic(phi.to_string()));
    }
    if phi.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidParameters(format!(
            "expansion in a constant polynomial {phi}"
        )));
    }
    let mut coeffs = Vec::new();
    let mut q = f.clone();
    while !q.is_zero() {
        let (next, r) = q.div_rem_monic(phi)?;
        coeffs.push(r);
        q = next;
    }
    Ok(PhiExpansion {
        phi: phi.clone(),
        coeffs,
    })
}
