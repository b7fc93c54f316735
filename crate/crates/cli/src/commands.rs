use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use num_bigint::BigInt;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::json;

use septic_index::arith::integer::is_prime_u64;
use septic_index::classifier::{
    matching_rows, monogenic_family_certificate, row_classes, sample_row, MonogenicFamilyParams,
    MonogenicOutcome,
};
use septic_index::index::assemble_nu;
use septic_index::newton::decompose;
use septic_index::report::{build_report, ReportDocument, ReportOptions, CSV_HEADER};
use septic_index::{Error, Result, Trinomial};

use crate::range::IntRange;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Internal(format!("i/o: {e}"))
}

pub fn index(a: BigInt, b: BigInt, as_json: bool, scan: Option<(usize, u64)>) -> Result<u8> {
    let t = Trinomial::new(a, b)?;
    let r = build_report(&t, &ReportOptions { check: true, scan })?;
    if as_json {
        println!("{}", r.to_json());
        return Ok(0);
    }
    println!("{t}");
    println!("discriminant {}", r.discriminant);
    println!("{:>4}  {:>3}  {:<32} {:>10}  tags", "p", "nu", "splitting type", "v_p(ind a)");
    for rec in &r.primes {
        let ty = rec.splitting_type.as_ref().map_or("-".to_string(), |t| t.to_string());
        let ind = rec.alpha_index.map_or("-".to_string(), |i| i.to_string());
        println!("{:>4}  {:>3}  {:<32} {:>10}  {}", rec.p, rec.nu, ty, ind, rec.tags.join(","));
    }
    println!("i(K) = {} (nu_2 = {}, nu_3 = {})", r.field_index, r.nu2, r.nu3);
    let closed = if r.integrally_closed {
        "yes".to_string()
    } else {
        let v: Vec<String> = r.closedness_violated.iter().map(|c| c.to_string()).collect();
        format!("no (conditions {} fail)", v.join(", "))
    };
    println!("Z[alpha] integrally closed: {closed}");
    if r.closedness_unverified {
        println!("  (square-free part of the discriminant not fully certified)");
    }
    println!("common index divisor obstruction: {}", yes_no(r.monogenic_obstruction));
    for d in &r.discrepancies {
        println!("discrepancy: {d}");
    }
    Ok(0)
}

pub fn factor(a: BigInt, b: BigInt, p: u64, as_json: bool) -> Result<u8> {
    if p > 100 || !is_prime_u64(p) {
        return Err(Error::InvalidParameters(format!("p = {p} must be a prime <= 100")));
    }
    let t = Trinomial::new(a, b)?;
    t.require_irreducible()?;
    let d = decompose(&t.poly(), p)?;
    if as_json {
        let v = json!({
            "a": t.a().to_string(),
            "b": t.b().to_string(),
            "p": p,
            "splitting_type": d.splitting_type(),
            "decomposition": d,
        });
        println!("{v}");
        return Ok(0);
    }
    println!("{t} at p = {p}");
    for e in &d.trace {
        println!("  {e}");
    }
    println!("splitting type {}", d.splitting_type());
    let ideals: Vec<String> = d
        .primes
        .iter()
        .enumerate()
        .map(|(i, q)| {
            if q.e > 1 {
                format!("P{}^{}", i + 1, q.e)
            } else {
                format!("P{}", i + 1)
            }
        })
        .collect();
    let fs: Vec<String> = d.primes.iter().map(|q| q.f.to_string()).collect();
    println!("{p} Z_K = {}  (f = {})", ideals.join(" "), fs.join(", "));
    println!(
        "v_{p}(ind alpha) = {} (first order {}), p-regular: {}, second order used: {}",
        d.index,
        d.first_order_index,
        yes_no(d.regular),
        yes_no(d.second_order)
    );
    Ok(0)
}

pub struct ScanArgs {
    pub a: IntRange,
    pub b: IntRange,
    pub check: bool,
    pub json: bool,
    pub jobs: Option<usize>,
    pub scan: Option<(usize, u64)>,
    pub out: Option<PathBuf>,
}

enum Row {
    Report(Box<ReportDocument>),
    Skipped(&'static str),
    Failed(String),
}

fn scan_one(a: i64, b: i64, opts: &ReportOptions) -> Row {
    let t = match Trinomial::from_i64(a, b) {
        Ok(t) => t,
        Err(Error::HypothesisViolation { .. }) => return Row::Skipped("hypothesis"),
        Err(Error::Reducible { .. }) => return Row::Skipped("reducible"),
        Err(e) => return Row::Failed(format!("({a}, {b}): {e}")),
    };
    match build_report(&t, opts) {
        Ok(r) => Row::Report(Box::new(r)),
        Err(Error::Reducible { .. }) => Row::Skipped("reducible"),
        Err(e) => Row::Failed(format!("({a}, {b}): {e}")),
    }
}

enum Out {
    Csv(csv::Writer<Box<dyn Write>>),
    Json(BufWriter<Box<dyn Write>>),
}

/// Rows per parallel batch; output is written batch by batch in input order.
const BATCH: usize = 1024;

pub fn scan(args: ScanArgs) -> Result<u8> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(io_err)?;
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(File::create(path).map_err(io_err)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = if args.json {
        Out::Json(BufWriter::new(sink))
    } else {
        let mut w = csv::Writer::from_writer(sink);
        w.write_record(CSV_HEADER).map_err(io_err)?;
        Out::Csv(w)
    };
    let opts = ReportOptions { check: args.check, scan: args.scan };

    let pairs: Vec<(i64, i64)> = args.a.iter().flat_map(|a| args.b.iter().map(move |b| (a, b))).collect();
    let (mut fields, mut reducible, mut hypothesis, mut inconsistent) = (0u64, 0u64, 0u64, 0u64);
    let mut failures = Vec::new();
    for chunk in pairs.chunks(BATCH) {
        let rows: Vec<Row> = pool.install(|| chunk.par_iter().map(|&(a, b)| scan_one(a, b, &opts)).collect());
        for row in rows {
            match row {
                Row::Report(r) => {
                    fields += 1;
                    if !r.discrepancies.is_empty() {
                        inconsistent += 1;
                        for d in &r.discrepancies {
                            log::warn!("({}, {}): {d}", r.a, r.b);
                        }
                    }
                    match &mut out {
                        Out::Csv(w) => w.write_record(r.csv_record()).map_err(io_err)?,
                        Out::Json(w) => writeln!(w, "{}", r.to_json()).map_err(io_err)?,
                    }
                }
                Row::Skipped("reducible") => reducible += 1,
                Row::Skipped(_) => hypothesis += 1,
                Row::Failed(msg) => failures.push(msg),
            }
        }
    }
    match &mut out {
        Out::Csv(w) => w.flush().map_err(io_err)?,
        Out::Json(w) => w.flush().map_err(io_err)?,
    }
    for f in &failures {
        eprintln!("failed: {f}");
    }
    eprintln!(
        "scanned {} pairs: {fields} fields, {reducible} reducible, {hypothesis} outside the hypothesis, \
         {} failures, {inconsistent} inconsistencies",
        pairs.len(),
        failures.len()
    );
    Ok(if failures.is_empty() { 0 } else { 1 })
}

pub fn monogenic(u: u32, v: u32, a: BigInt, b: BigInt, as_json: bool) -> Result<u8> {
    let params = MonogenicFamilyParams::new(u, v, a, b)?;
    let out = monogenic_family_certificate(&params)?;
    if as_json {
        println!("{}", serde_json::to_string(&out).map_err(io_err)?);
        return Ok(0);
    }
    println!("{}", params.trinomial());
    match out {
        MonogenicOutcome::Certificate(c) => {
            println!("theta = alpha^{} / 2^{}", c.x, c.y);
            let g = septic_index::arith::PolyZ::new(c.g.iter().map(|s| s.parse().unwrap()).collect());
            println!("minimal polynomial of theta: {g} (2-Eisenstein)");
            println!("v_2(ind alpha) >= {}", c.alpha_index_bound);
        }
        MonogenicOutcome::Discrepancy { note, .. } => println!("discrepancy: {note}"),
    }
    Ok(0)
}

pub fn verify_tables(per_row: usize, seed: u64, as_json: bool) -> Result<u8> {
    let mut ambiguous = Vec::new();
    for a in 0..128i64 {
        for b in 0..128i64 {
            let t = Trinomial::new_unchecked(BigInt::from(a + 128 * 17), BigInt::from(b + 128 * 23));
            if matching_rows(&t, 2)?.len() > 1 {
                ambiguous.push(format!("p = 2: ({a}, {b}) mod 128"));
            }
        }
    }
    for a in 0..243i64 {
        for b in 0..243i64 {
            let t = Trinomial::new_unchecked(BigInt::from(a + 243 * 5), BigInt::from(b + 243 * 7));
            if matching_rows(&t, 3)?.len() > 1 {
                ambiguous.push(format!("p = 3: ({a}, {b}) mod 243"));
            }
        }
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut bad = 0usize;
    for p in [2u64, 3] {
        for (row, _) in row_classes(p) {
            let (mut agree, mut unsupported, mut conflicts) = (0usize, 0usize, Vec::new());
            for _ in 0..per_row {
                let Some(t) = sample_row(p, row, 3000, 200_000, &mut rng) else { break };
                match assemble_nu(&t, p) {
                    Ok((_, ev)) if ev.tags.iter().any(|t| t == "engine-unsupported") => unsupported += 1,
                    Ok(_) => agree += 1,
                    Err(e) => conflicts.push(format!("{t}: {e}")),
                }
            }
            bad += conflicts.len();
            rows.push(json!({
                "p": p, "row": row, "agree": agree, "unsupported": unsupported, "conflicts": conflicts,
            }));
        }
    }
    let ok = ambiguous.is_empty() && bad == 0;
    if as_json {
        println!("{}", json!({ "ambiguous": ambiguous, "rows": rows, "ok": ok }));
    } else {
        println!("disjointness: {} ambiguous classes", ambiguous.len());
        for a in &ambiguous {
            println!("  {a}");
        }
        for r in &rows {
            println!(
                "nu_{} row {}: {} agree, {} unsupported, {} conflicts",
                r["p"], r["row"], r["agree"], r["unsupported"], r["conflicts"].as_array().map_or(0, |c| c.len())
            );
            for c in r["conflicts"].as_array().into_iter().flatten() {
                println!("  {}", c.as_str().unwrap_or_default());
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}
