//! Report documents.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::integer::primes_up_to;
use crate::arith::valuation::val;
use crate::classifier::{
    dedekind_divides_index, field_index, index_candidate_primes, integral_closed, verify_nup,
    FIELD_INDEX_VALUES,
};
use crate::error::{Error, Result};
use crate::index::{assemble_nu_with, classifier_nu, AssembleOptions};
use crate::newton::SplittingType;
use crate::trinomial::Trinomial;

/// Serde adapter writing big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub const CSV_HEADER: [&str; 8] = [
    "a",
    "b",
    "irreducible",
    "nu2",
    "nu3",
    "field_index",
    "closed",
    "discrepancy_flags",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub p: u64,
    pub nu: u64,
    pub splitting_type: Option<SplittingType>,
    pub alpha_index: Option<u64>,
    pub scan_upper_bound: Option<u64>,
    pub tags: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    #[serde(with = "decimal")]
    pub a: BigInt,
    #[serde(with = "decimal")]
    pub b: BigInt,
    pub irreducible: bool,
    #[serde(with = "decimal")]
    pub discriminant: BigInt,
    pub primes: Vec<PrimeRecord>,
    pub nu2: u64,
    pub nu3: u64,
    pub field_index: u64,
    pub integrally_closed: bool,
    pub closedness_violated: Vec<u8>,
    pub closedness_unverified: bool,
    pub monogenic_obstruction: bool,
    pub discrepancies: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// Cross-check each closed form against the engine and the other sources.
    pub check: bool,
    pub scan: Option<(usize, u64)>,
}

/// 2, 3, 5, 7 and every p <= 100 with p^2 | Delta.
pub fn default_primes(t: &Trinomial) -> Vec<u64> {
    let d = t.discriminant();
    let mut ps: BTreeSet<u64> = [2, 3, 5, 7].into();
    ps.extend(primes_up_to(100).into_iter().filter(|&p| val(&d, p).is_some_and(|v| v >= 2)));
    ps.into_iter().collect()
}

pub fn build_report(t: &Trinomial, opts: &ReportOptions) -> Result<ReportDocument> {
    t.require_irreducible()?;
    let idx = field_index(t)?;
    let closed = integral_closed(t)?;
    let mut discrepancies = Vec::new();
    let mut primes = Vec::new();
    for p in default_primes(t) {
        let rec = if opts.check || opts.scan.is_some() {
            let ao = AssembleOptions { scan: opts.scan };
            match assemble_nu_with(t, p, &ao) {
                Ok((nu, ev)) => PrimeRecord {
                    p,
                    nu,
                    splitting_type: ev.splitting_type,
                    alpha_index: ev.engine_index,
                    scan_upper_bound: ev.scan_upper_bound,
                    tags: ev.tags,
                },
                Err(Error::InconsistencyDetected(msg)) => {
                    discrepancies.push(msg);
                    PrimeRecord {
                        p,
                        nu: classifier_nu(t, p)?,
                        splitting_type: None,
                        alpha_index: None,
                        scan_upper_bound: None,
                        tags: vec!["inconsistent".into()],
                    }
                }
                Err(e) => return Err(e),
            }
        } else {
            PrimeRecord {
                p,
                nu: classifier_nu(t, p)?,
                splitting_type: None,
                alpha_index: None,
                scan_upper_bound: None,
                tags: Vec::new(),
            }
        };
        primes.push(rec);
    }

    if opts.check {
        for p in default_primes(t).into_iter().filter(|&p| p >= 5) {
            if let Err(e) = verify_nup(t, p) {
                discrepancies.push(format!("p = {p}: {e}"));
            }
        }
        let product: u64 = primes.iter().map(|r| r.p.pow(r.nu as u32)).product();
        if product != idx.field_index || !FIELD_INDEX_VALUES.contains(&product) {
            discrepancies.push(format!("per-prime product {product} differs from i(K) = {}", idx.field_index));
        }
        if idx.field_index > 1 && closed.closed {
            discrepancies.push("i(K) > 1 but Z[alpha] reported integrally closed".into());
        }
        let (candidates, complete) = index_candidate_primes(t);
        if complete && !closed.unverified {
            let f = t.poly();
            let mut dedekind_closed = true;
            for p in candidates {
                if dedekind_divides_index(&f, p)? {
                    dedekind_closed = false;
                }
            }
            if dedekind_closed != closed.closed {
                discrepancies.push(format!(
                    "closedness conditions give {} but Dedekind gives {dedekind_closed}",
                    closed.closed
                ));
            }
        }
    }

    Ok(ReportDocument {
        a: t.a().clone(),
        b: t.b().clone(),
        irreducible: true,
        discriminant: t.discriminant(),
        primes,
        nu2: idx.nu2,
        nu3: idx.nu3,
        field_index: idx.field_index,
        integrally_closed: closed.closed,
        closedness_violated: closed.violated,
        closedness_unverified: closed.unverified,
        monogenic_obstruction: idx.monogenic_obstruction,
        discrepancies,
    })
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidParameters(format!("bad report: {e}")))
    }

    pub fn csv_record(&self) -> [String; 8] {
        [
            self.a.to_string(),
            self.b.to_string(),
            self.irreducible.to_string(),
            self.nu2.to_string(),
            self.nu3.to_string(),
            self.field_index.to_string(),
            self.integrally_closed.to_string(),
            self.discrepancies.len().to_string(),
        ]
    }
}
