//! Upper bounds on v_p(i(K)) from sampled generators theta in Z[alpha].

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::poly::PolyZ;
use crate::arith::resultant::{charpoly_of_element, discriminant_poly};
use crate::arith::valuation::val;
use crate::error::{Error, Result};
use crate::newton::decompose;
use crate::trinomial::Trinomial;

pub const DEFAULT_BUDGET: usize = 2000;
const COEFF_RANGE: std::ops::RangeInclusive<i64> = -3..=3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub p: u64,
    /// Generators evaluated, alpha included.
    pub samples: usize,
    /// Sampled elements whose characteristic polynomial has a repeated root.
    pub skipped: usize,
    /// Minimum of v_p(disc g_theta).
    pub best_disc_valuation: u64,
    /// theta as a polynomial in alpha, constant term first.
    pub witness: Vec<i64>,
    pub alpha_disc_valuation: u64,
    /// min over theta of v_p(ind theta) - v_p(ind alpha).
    pub relative_min: u64,
    /// Every sample differs from disc F by an even power of p.
    pub parity_ok: bool,
    /// v_p(ind alpha) from the polygon engine, when it finishes.
    pub alpha_index: Option<u64>,
    /// min over theta of v_p(ind theta), an upper bound for v_p(i(K)).
    pub upper_bound: Option<u64>,
}

fn samples(budget: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alpha = vec![0, 1, 0, 0, 0, 0, 0];
    let mut seen = HashSet::from([alpha.clone()]);
    let mut out = vec![alpha];
    // 7^7 vectors in all; the attempt cap only matters for absurd budgets
    let mut attempts = 0usize;
    while out.len() < budget && attempts < 50 * budget {
        attempts += 1;
        let c: Vec<i64> = (0..7).map(|_| rng.gen_range(COEFF_RANGE)).collect();
        if c[1..].iter().all(|&x| x == 0) || !seen.insert(c.clone()) {
            continue;
        }
        out.push(c);
    }
    out
}

fn disc_valuation(c: &[i64], f: &PolyZ, p: u64) -> Result<Option<u64>> {
    let g = charpoly_of_element(&PolyZ::from_i64(c), f)?;
    let d = discriminant_poly(&g)?;
    Ok(val(&d, p))
}

#[cfg(feature = "parallel")]
fn evaluate(items: &[Vec<i64>], f: &PolyZ, p: u64) -> Result<Vec<Option<u64>>> {
    use rayon::prelude::*;
    items.par_iter().map(|c| disc_valuation(c, f, p)).collect()
}

#[cfg(not(feature = "parallel"))]
fn evaluate(items: &[Vec<i64>], f: &PolyZ, p: u64) -> Result<Vec<Option<u64>>> {
    items.iter().map(|c| disc_valuation(c, f, p)).collect()
}

pub fn generator_scan(t: &Trinomial, p: u64, budget: usize, seed: u64) -> Result<ScanResult> {
    if budget == 0 {
        return Err(Error::InvalidParameters("scan budget must be positive".into()));
    }
    t.require_irreducible()?;
    let f = t.poly();
    let items = samples(budget, seed);
    let vals = evaluate(&items, &f, p)?;
    let alpha_disc_valuation = vals[0].ok_or_else(|| Error::Internal("disc F vanishes".into()))?;

    let mut best: Option<(u64, usize)> = None;
    let mut skipped = 0;
    let mut parity_ok = true;
    for (i, v) in vals.iter().enumerate() {
        let Some(v) = *v else {
            skipped += 1;
            continue;
        };
        if v < alpha_disc_valuation || (v - alpha_disc_valuation) % 2 != 0 {
            parity_ok = false;
        }
        if best.is_none_or(|(b, _)| v < b) {
            best = Some((v, i));
        }
    }
    let (best_disc_valuation, w) = best.expect("alpha always counts");
    let relative_min = best_disc_valuation.saturating_sub(alpha_disc_valuation) / 2;
    let alpha_index = match decompose(&f, p) {
        Ok(d) => Some(d.index),
        Err(Error::UnsupportedSecondOrder(msg)) => {
            log::info!("scan of {t} at {p}: no exact index ({msg})");
            None
        }
        Err(e) => return Err(e),
    };
    Ok(ScanResult {
        p,
        samples: items.len(),
        skipped,
        best_disc_valuation,
        witness: items[w].clone(),
        alpha_disc_valuation,
        relative_min,
        parity_ok,
        alpha_index,
        upper_bound: alpha_index.map(|i| i + relative_min),
    })
}
