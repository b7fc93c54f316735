//! Splitting types and v_p(ind alpha) against values computed independently with PARI/GP
//! (idealprimedec, and nfinit for the field discriminant).

use num_bigint::BigInt;
use septic_index::newton::{decompose, SplittingType};
use septic_index::Trinomial;

struct Reference {
    a: BigInt,
    b: BigInt,
    p: u64,
    ty: SplittingType,
    index: u64,
}

fn load() -> Vec<Reference> {
    let text = include_str!("data/reference_types.csv");
    text.lines()
        .skip(1)
        .map(|line| {
            let cols: Vec<&str> = line.split(',').collect();
            let ty = cols[3]
                .split(';')
                .map(|ef| {
                    let (e, f) = ef.split_once('.').unwrap();
                    (e.parse().unwrap(), f.parse().unwrap())
                })
                .collect();
            Reference {
                a: cols[0].parse().unwrap(),
                b: cols[1].parse().unwrap(),
                p: cols[2].parse().unwrap(),
                ty: SplittingType::new(ty),
                index: cols[4].parse().unwrap(),
            }
        })
        .collect()
}

#[test]
fn engine_matches_reference() {
    let refs = load();
    assert!(refs.len() > 500);
    let mut failures = Vec::new();
    for r in &refs {
        let t = Trinomial::new(r.a.clone(), r.b.clone()).unwrap();
        match decompose(&t.poly(), r.p) {
            Ok(d) if d.splitting_type() == r.ty && d.index == r.index => {}
            Ok(d) => failures.push(format!(
                "({}, {}) at {}: got {} index {}, expected {} index {}",
                r.a,
                r.b,
                r.p,
                d.splitting_type(),
                d.index,
                r.ty,
                r.index
            )),
            Err(e) => failures.push(format!("({}, {}) at {}: {e}", r.a, r.b, r.p)),
        }
    }
    assert!(failures.is_empty(), "{} mismatches:\n{}", failures.len(), failures.join("\n"));
}
