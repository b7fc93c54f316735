//! v_p(i(K)) from the closed forms, checked against every other source available.

use serde::{Deserialize, Serialize};

use super::counting::is_common_index_divisor;
use super::engstrom::{engstrom_lookup, EngstromKey, EngstromMatch};
use super::scan::generator_scan;
use crate::classifier::{nu2_index, nu3_index, nup_index};
use crate::error::{Error, Result};
use crate::newton::{decompose, SplittingType};
use crate::trinomial::Trinomial;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub splitting_type: Option<SplittingType>,
    /// v_p(ind alpha).
    pub engine_index: Option<u64>,
    pub common_index_divisor: Option<bool>,
    pub engstrom: Option<u64>,
    pub engstrom_match: Option<EngstromMatch>,
    pub scan_upper_bound: Option<u64>,
    pub tags: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AssembleOptions {
    /// (budget, seed) for a generator scan; none by default.
    pub scan: Option<(usize, u64)>,
}

pub fn classifier_nu(t: &Trinomial, p: u64) -> Result<u64> {
    match p {
        2 => nu2_index(t),
        3 => nu3_index(t),
        _ => nup_index(t, p),
    }
}

pub fn assemble_nu(t: &Trinomial, p: u64) -> Result<(u64, Evidence)> {
    assemble_nu_with(t, p, &AssembleOptions::default())
}

pub fn assemble_nu_with(t: &Trinomial, p: u64, opts: &AssembleOptions) -> Result<(u64, Evidence)> {
    let nu = classifier_nu(t, p)?;
    let mut ev = Evidence::default();
    let conflict = |what: String, ev: &Evidence| {
        log::warn!("{t} at p = {p}: {what}; evidence {ev:?}");
        Err(Error::InconsistencyDetected(format!("{t} at p = {p}: {what}")))
    };

    match decompose(&t.poly(), p) {
        Ok(d) => {
            let ty = d.splitting_type();
            let cid = is_common_index_divisor(&ty, p);
            ev.engine_index = Some(d.index);
            ev.common_index_divisor = Some(cid);
            if d.second_order {
                ev.tags.push("second-order".into());
            }
            match engstrom_lookup(&EngstromKey::new(p, ty.clone())?) {
                Ok((v, m)) => {
                    ev.engstrom = Some(v);
                    ev.engstrom_match = Some(m);
                }
                Err(Error::NotTabulated(k)) => {
                    log::info!("type not tabulated, classifier value kept: {k}");
                    ev.tags.push("type-not-tabulated".into());
                }
                Err(e) => return Err(e),
            }
            ev.splitting_type = Some(ty);
            if cid != (nu > 0) {
                return conflict(format!("classifier gives {nu} but common divisor test gives {cid}"), &ev);
            }
            if let Some(v) = ev.engstrom.filter(|&v| v != nu) {
                return conflict(format!("classifier gives {nu} but the type table gives {v}"), &ev);
            }
        }
        Err(Error::UnsupportedSecondOrder(msg)) => {
            log::info!("{t} at p = {p}: engine stopped: {msg}");
            ev.tags.push("engine-unsupported".into());
        }
        Err(e) => return Err(e),
    }

    if let Some((budget, seed)) = opts.scan {
        let s = generator_scan(t, p, budget, seed)?;
        if !s.parity_ok {
            ev.scan_upper_bound = s.upper_bound;
            return conflict("discriminant parity broken in scan".into(), &ev);
        }
        ev.scan_upper_bound = s.upper_bound;
        if let Some(u) = s.upper_bound.filter(|&u| u < nu) {
            return conflict(format!("scan bound {u} is below {nu}"), &ev);
        }
    }
    Ok((nu, ev))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(a: i64, b: i64, p: u64) -> (u64, Evidence) {
        assemble_nu(&Trinomial::from_i64(a, b).unwrap(), p).unwrap()
    }

    #[test]
    fn worked_examples() {
        let (nu, ev) = run(28, 32, 2);
        assert_eq!(nu, 1);
        assert_eq!(ev.splitting_type.unwrap().to_string(), "{(1,1),(3,1),(3,1)}");
        assert_eq!(ev.engstrom, Some(1));
        assert_eq!(ev.common_index_divisor, Some(true));

        let (nu, ev) = run(6, 6, 3);
        assert_eq!(nu, 0);
        assert_eq!(ev.splitting_type.unwrap().to_string(), "{(7,1)}");
        assert_eq!(ev.common_index_divisor, Some(false));

        let (nu, ev) = run(-1, 9, 2);
        assert_eq!(nu, 0);
        assert_eq!(ev.splitting_type.unwrap().to_string(), "{(1,7)}");
    }

    #[test]
    fn untabulated_type_keeps_the_closed_form() {
        // a = 3 mod 8, b = 4 mod 8 gives three unramified primes of degree 1 and one of degree 4
        let (nu, ev) = run(11, 4, 2);
        assert_eq!(nu, 1);
        assert_eq!(ev.splitting_type.unwrap().to_string(), "{(1,1),(1,1),(1,1),(1,4)}");
        assert!(ev.tags.contains(&"type-not-tabulated".to_string()));
    }

    #[test]
    fn scan_bound_is_attached() {
        let t = Trinomial::from_i64(3, 8).unwrap();
        let (nu, ev) = assemble_nu_with(&t, 2, &AssembleOptions { scan: Some((100, 1)) }).unwrap();
        assert_eq!(nu, 3);
        assert!(ev.scan_upper_bound.unwrap() >= 3);
    }
}
