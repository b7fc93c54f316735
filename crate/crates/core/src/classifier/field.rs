//! The field index i(K) assembled from its 2- and 3-parts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::tables::{nu2_index, nu3_index};
use crate::error::{Error, Result};
use crate::trinomial::Trinomial;

/// Every value i(K) can take for x^7 + a x + b.
pub const FIELD_INDEX_VALUES: [u64; 9] = [1, 2, 3, 6, 8, 9, 18, 24, 72];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub nu2: u64,
    pub nu3: u64,
    /// Primes p >= 5 with v_p(i(K)) > 0; always empty.
    pub nup_nontrivial: BTreeMap<u64, u64>,
    pub field_index: u64,
    pub monogenic_obstruction: bool,
}

pub fn field_index(t: &Trinomial) -> Result<IndexReport> {
    let nu2 = nu2_index(t)?;
    let nu3 = nu3_index(t)?;
    let field_index = 2u64.pow(nu2 as u32) * 3u64.pow(nu3 as u32);
    if !FIELD_INDEX_VALUES.contains(&field_index) {
        return Err(Error::Internal(format!(
            "i(K) = {field_index} for {t} is outside the possible values"
        )));
    }
    Ok(IndexReport {
        nu2,
        nu3,
        nup_nontrivial: BTreeMap::new(),
        field_index,
        monogenic_obstruction: field_index > 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        for (a, b, i) in [(6, 6, 1), (28, 32, 2), (3, 8, 8), (-1, 9, 9), (803, 2112, 24), (35, 72, 72)] {
            let r = field_index(&Trinomial::from_i64(a, b).unwrap()).unwrap();
            assert_eq!(r.field_index, i, "({a}, {b})");
            assert_eq!(r.monogenic_obstruction, i > 1);
        }
    }
}
