//! v_p(i(K)) from the splitting type of p, for the types that occur in degree 7.

use serde::{Deserialize, Serialize};

use super::counting::is_common_index_divisor;
use crate::error::{Error, Result};
use crate::newton::SplittingType;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EngstromKey {
    pub p: u64,
    pub ty: SplittingType,
}

impl EngstromKey {
    pub fn new(p: u64, ty: SplittingType) -> Result<Self> {
        if ty.degree() != 7 {
            return Err(Error::InvalidParameters(format!("{ty} has degree {}", ty.degree())));
        }
        Ok(EngstromKey { p, ty })
    }
}

struct Entry {
    p: u64,
    profile: &'static [u32],
    value: u64,
    /// Types this entry was read off from.
    seen: &'static [&'static [(u32, u32)]],
}

/// Keyed on the residue degree profile; the recorded types are the ones the values come from.
const TABLE: &[Entry] = &[
    Entry { p: 2, profile: &[1, 1, 1], value: 1, seen: &[&[(1, 1), (3, 1), (3, 1)]] },
    Entry { p: 2, profile: &[1, 2, 2], value: 1, seen: &[&[(1, 1), (1, 2), (2, 2)]] },
    Entry { p: 2, profile: &[1, 1, 1, 2], value: 1, seen: &[&[(1, 1), (1, 1), (1, 1), (2, 2)]] },
    Entry { p: 2, profile: &[1, 2, 2, 2], value: 3, seen: &[&[(1, 1), (1, 2), (1, 2), (1, 2)]] },
    Entry {
        p: 2,
        profile: &[1, 1, 1, 2, 2],
        value: 3,
        seen: &[&[(1, 1), (1, 1), (1, 1), (1, 2), (1, 2)]],
    },
    Entry { p: 3, profile: &[1, 1, 1, 1], value: 1, seen: &[&[(1, 1), (1, 1), (2, 1), (3, 1)]] },
    Entry {
        p: 3,
        profile: &[1, 1, 1, 1, 1],
        value: 2,
        seen: &[&[(1, 1), (1, 1), (1, 1), (2, 1), (2, 1)]],
    },
];

/// Whether the lookup hit a recorded type or only its residue degree profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngstromMatch {
    NotDivisor,
    Type,
    Profile,
}

pub fn engstrom_lookup(key: &EngstromKey) -> Result<(u64, EngstromMatch)> {
    if !is_common_index_divisor(&key.ty, key.p) {
        return Ok((0, EngstromMatch::NotDivisor));
    }
    let profile = key.ty.residue_profile();
    let entry = TABLE
        .iter()
        .find(|e| e.p == key.p && e.profile == profile.as_slice())
        .ok_or_else(|| Error::NotTabulated(format!("{} at p = {}", key.ty, key.p)))?;
    let exact = entry.seen.iter().any(|s| *s == key.ty.factors());
    if !exact {
        log::debug!("{} at p = {} matched by residue degrees only", key.ty, key.p);
    }
    Ok((entry.value, if exact { EngstromMatch::Type } else { EngstromMatch::Profile }))
}

pub fn engstrom_nu(key: &EngstromKey) -> Result<u64> {
    Ok(engstrom_lookup(key)?.0)
}
