//! wasm-bindgen entry points for the static demo page in `www/`.
//!
//! Every export returns a JSON string; the plain `*_json` functions carry the
//! logic so they can be tested off the browser.

use num_bigint::BigInt;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use septic_index::arith::factor_over_fp;
use septic_index::classifier::field_index;
use septic_index::newton::{decompose, phi_expansion, principal_polygon};
use septic_index::report::{build_report, default_primes, ReportOptions};
use septic_index::{Error, Trinomial};

/// Cells per heatmap request.
pub const MAX_CELLS: usize = 10_000;

fn trinomial(a: &str, b: &str) -> Result<Trinomial, String> {
    let parse = |s: &str, name: &str| s.trim().parse::<BigInt>().map_err(|e| format!("{name}: {e}"));
    Trinomial::new(parse(a, "a")?, parse(b, "b")?).map_err(|e| e.to_string())
}

/// Points of every phi-polygon of F at p, one per irreducible factor of F mod p.
pub fn polygons_json(a: &str, b: &str, p: u64) -> Result<String, String> {
    let t = trinomial(a, b)?;
    t.require_irreducible().map_err(|e| e.to_string())?;
    let f = t.poly();
    let factors = factor_over_fp(&f.reduce(p)).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for (phi_bar, mult) in factors {
        let phi = phi_bar.lift();
        let exp = phi_expansion(&f, &phi).map_err(|e| e.to_string())?;
        let points: Vec<[u64; 2]> = exp
            .valuations(p)
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.finite().map(|v| [i as u64, v]))
            .collect();
        let polygon = principal_polygon(&f, &phi, p).map_err(|e| e.to_string())?;
        let sides: Vec<Value> = polygon
            .sides
            .iter()
            .map(|s| json!({ "start": s.start, "end": s.end, "slope": format!("-{}/{}", s.h, s.e) }))
            .collect();
        out.push(json!({ "phi": phi.to_string(), "multiplicity": mult, "points": points, "sides": sides }));
    }
    let engine = match decompose(&f, p) {
        Ok(d) => json!({ "splitting_type": d.splitting_type().to_string(), "index": d.index, "regular": d.regular }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    Ok(json!({ "polynomial": t.to_string(), "p": p, "factors": out, "engine": engine }).to_string())
}

/// i(K) over a box of (a, b); null cells carry the reason.
pub fn heatmap_json(a_lo: i64, a_hi: i64, b_lo: i64, b_hi: i64) -> Result<String, String> {
    if a_lo > a_hi || b_lo > b_hi {
        return Err("empty range".into());
    }
    let cells = (a_hi - a_lo + 1) as u128 * (b_hi - b_lo + 1) as u128;
    if cells > MAX_CELLS as u128 {
        return Err(format!("{cells} cells, at most {MAX_CELLS}"));
    }
    let mut rows = Vec::new();
    for b in (b_lo..=b_hi).rev() {
        let row: Vec<Value> = (a_lo..=a_hi)
            .map(|a| match Trinomial::from_i64(a, b).and_then(|t| field_index(&t)) {
                Ok(r) => json!(r.field_index),
                Err(Error::Reducible { .. }) => json!("reducible"),
                Err(Error::HypothesisViolation { .. }) => json!("hypothesis"),
                Err(e) => json!(e.to_string()),
            })
            .collect();
        rows.push(row);
    }
    Ok(json!({ "a": [a_lo, a_hi], "b": [b_hi, b_lo], "rows": rows }).to_string())
}

/// The checked report plus the engine decomposition at each reported prime.
pub fn report_json(a: &str, b: &str) -> Result<String, String> {
    let t = trinomial(a, b)?;
    let r = build_report(&t, &ReportOptions { check: true, scan: None }).map_err(|e| e.to_string())?;
    let f = t.poly();
    let decompositions: Vec<Value> = default_primes(&t)
        .into_iter()
        .map(|p| match decompose(&f, p) {
            Ok(d) => json!({
                "p": p,
                "splitting_type": d.splitting_type().to_string(),
                "ideals": d.primes.iter().map(|q| json!({ "e": q.e, "f": q.f })).collect::<Vec<_>>(),
                "trace": d.trace.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            }),
            Err(e) => json!({ "p": p, "error": e.to_string() }),
        })
        .collect();
    let report: Value = serde_json::from_str(&r.to_json()).map_err(|e| e.to_string())?;
    Ok(json!({ "polynomial": t.to_string(), "report": report, "decompositions": decompositions }).to_string())
}

#[wasm_bindgen]
pub fn polygons(a: &str, b: &str, p: u32) -> Result<String, JsValue> {
    polygons_json(a, b, p as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn heatmap(a_lo: i32, a_hi: i32, b_lo: i32, b_hi: i32) -> Result<String, JsValue> {
    heatmap_json(a_lo as i64, a_hi as i64, b_lo as i64, b_hi as i64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn report(a: &str, b: &str) -> Result<String, JsValue> {
    report_json(a, b).map_err(|e| JsValue::from_str(&e))
}
