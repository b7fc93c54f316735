//! Closed-form values of v_2(i(K)) and v_3(i(K)), and the p >= 5 check.

use num_bigint::BigInt;
use rand::Rng;

use super::closedness::residue;
use crate::arith::valuation::{unit_part, val};
use crate::error::{Error, Result};
use crate::index::{count_monic_irreducibles, is_common_index_divisor};
use crate::newton::decompose;
use crate::trinomial::Trinomial;

/// One table row: number (from 1), value, and whether it matches.
struct Row {
    number: usize,
    value: u64,
    hit: bool,
}

fn pick(p: u64, rows: &[Row]) -> Result<u64> {
    let hits: Vec<&Row> = rows.iter().filter(|r| r.hit).collect();
    match hits.as_slice() {
        [] => Ok(0),
        [r] => Ok(r.value),
        _ => Err(Error::TableAmbiguity {
            p,
            rows: hits.iter().map(|r| r.number).collect(),
        }),
    }
}

fn delta_parts(t: &Trinomial, p: u64) -> Result<(u64, BigInt)> {
    let d = t.discriminant();
    let v = val(&d, p).ok_or_else(|| Error::InvalidParameters("zero discriminant".into()))?;
    Ok((v, unit_part(&d, p)?))
}

fn nu2_rows(t: &Trinomial) -> Result<Vec<Row>> {
    let (a, b) = (t.a(), t.b());
    let (a8, b4, b8) = (residue(a, 8), residue(b, 4), residue(b, 8));
    let (a16, b16) = (residue(a, 16), residue(b, 16));
    let row3 = if a8 == 1 && b4 == 2 {
        let (v, u) = delta_parts(t, 2)?;
        v % 2 == 0 && residue(&u, 4) == 3
    } else {
        false
    };
    Ok(vec![
        Row { number: 1, value: 1, hit: residue(a, 32) == 28 && residue(b, 32) == 0 },
        Row { number: 2, value: 1, hit: residue(a, 128) == 112 && residue(b, 128) == 0 },
        Row { number: 3, value: 1, hit: row3 },
        Row { number: 4, value: 1, hit: a8 == 3 && b8 == 4 },
        Row { number: 5, value: 3, hit: residue(a, 4) == 3 && b8 == 0 },
        // b = +-(a + 1) mod 16; the class (5, 2) carries the type {(1,1),(2,1),(2,2)}
        // and v_2 = 0, while (5, 10) carries a common index divisor
        Row {
            number: 6,
            value: 1,
            hit: matches!((a16, b16), (5, 6) | (5, 10) | (13, 2) | (13, 14)),
        },
    ])
}

fn nu3_rows(t: &Trinomial) -> Result<Vec<Row>> {
    let (a, b) = (t.a(), t.b());
    let (a9, b9) = (residue(a, 9), residue(b, 9));
    let b36 = b9 == 3 || b9 == 6;
    let (mut even, mut odd) = (false, false);
    if a9 == 2 && b36 {
        let (v, u) = delta_parts(t, 3)?;
        even = v % 2 == 0 && v / 2 >= 5;
        odd = v % 2 == 1 && v / 2 >= 5 && residue(&u, 3) == 1;
    }
    Ok(vec![
        Row { number: 1, value: 1, hit: a9 == 5 && b36 },
        Row { number: 2, value: 2, hit: a9 == 8 && b9 == 0 },
        Row { number: 3, value: 1, hit: even },
        Row { number: 4, value: 2, hit: odd },
    ])
}

/// Congruence classes (a mod m, b mod m, m) covering each row, by row number.
pub fn row_classes(p: u64) -> Vec<(usize, Vec<(i64, i64, i64)>)> {
    match p {
        2 => vec![
            (1, vec![(28, 0, 32)]),
            (2, vec![(112, 0, 128)]),
            (3, vec![(1, 2, 8), (1, 6, 8)]),
            (4, vec![(3, 4, 8)]),
            (5, vec![(3, 0, 8), (7, 0, 8)]),
            (6, vec![(5, 6, 16), (5, 10, 16), (13, 2, 16), (13, 14, 16)]),
        ],
        3 => vec![
            (1, vec![(5, 3, 9), (5, 6, 9)]),
            (2, vec![(8, 0, 9)]),
            (3, vec![(2, 3, 9), (2, 6, 9)]),
            (4, vec![(2, 3, 9), (2, 6, 9)]),
        ],
        _ => Vec::new(),
    }
}

/// A random irreducible trinomial hitting exactly the given row, with multipliers
/// of the modulus drawn from [-spread, spread]; `None` after `tries` misses.
pub fn sample_row<R: Rng>(p: u64, row: usize, spread: i64, tries: usize, rng: &mut R) -> Option<Trinomial> {
    let classes = row_classes(p).into_iter().find(|(r, _)| *r == row)?.1;
    for _ in 0..tries {
        let (ra, rb, m) = classes[rng.gen_range(0..classes.len())];
        let a = ra + m * rng.gen_range(-spread..=spread);
        let b = rb + m * rng.gen_range(-spread..=spread);
        let Ok(t) = Trinomial::from_i64(a, b) else { continue };
        if matching_rows(&t, p).ok()? == [row] && t.is_irreducible().ok()? {
            return Some(t);
        }
    }
    None
}

/// Numbers of the matching rows; more than one means the table is ambiguous at (a, b).
pub fn matching_rows(t: &Trinomial, p: u64) -> Result<Vec<usize>> {
    let rows = match p {
        2 => nu2_rows(t)?,
        3 => nu3_rows(t)?,
        _ => return Ok(Vec::new()),
    };
    Ok(rows.iter().filter(|r| r.hit).map(|r| r.number).collect())
}

pub fn nu2_index(t: &Trinomial) -> Result<u64> {
    t.require_irreducible()?;
    pick(2, &nu2_rows(t)?)
}

pub fn nu3_index(t: &Trinomial) -> Result<u64> {
    t.require_irreducible()?;
    pick(3, &nu3_rows(t)?)
}

/// Always 0 for p >= 5.
pub fn nup_index(t: &Trinomial, p: u64) -> Result<u64> {
    if p < 5 {
        return Err(Error::InvalidParameters(format!("p = {p} is below 5")));
    }
    t.require_irreducible()?;
    Ok(0)
}

/// Checks the reason p >= 5 cannot divide i(K): the computed splitting type never
/// has more primes of residue degree f than there are monic irreducibles of degree f.
pub fn verify_nup(t: &Trinomial, p: u64) -> Result<()> {
    nup_index(t, p)?;
    if p == 5 {
        // 5 | Delta exactly on these classes of (a, b) mod 5
        let d = residue(&t.discriminant(), 5) == 0;
        let class = (residue(t.a(), 5), residue(t.b(), 5));
        let listed = matches!(class, (0, 0) | (2, 2) | (2, 3) | (3, 1) | (3, 4));
        if d != listed {
            return Err(Error::InconsistencyDetected(format!(
                "(a, b) = {class:?} mod 5 misclassified"
            )));
        }
    } else if (1..=7u32).any(|f| 7 / f as u64 > count_monic_irreducibles(p, f)) {
        return Err(Error::Internal(format!("N_f counting fails at p = {p}")));
    }
    let ty = decompose(&t.poly(), p)?.splitting_type();
    if is_common_index_divisor(&ty, p) {
        return Err(Error::InconsistencyDetected(format!(
            "{p} is a common index divisor with type {ty}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64) -> Trinomial {
        Trinomial::from_i64(a, b).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(nu2_index(&t(28, 32)).unwrap(), 1);
        assert_eq!(nu2_index(&t(3, 8)).unwrap(), 3);
        assert_eq!(nu2_index(&t(6, 6)).unwrap(), 0);
        assert_eq!(nu3_index(&t(-1, 9)).unwrap(), 2);
        assert_eq!(nu3_index(&t(803, 2112)).unwrap(), 1);
        assert_eq!(nu3_index(&t(6, 6)).unwrap(), 0);
        assert_eq!(nu2_index(&t(35, 72)).unwrap(), 3);
        assert_eq!(nu3_index(&t(35, 72)).unwrap(), 2);
        assert_eq!(nu2_index(&t(803, 2112)).unwrap(), 3);
    }

    #[test]
    fn large_primes_never_divide() {
        assert_eq!(nup_index(&t(6, 6), 5).unwrap(), 0);
        assert_eq!(nup_index(&t(28, 32), 7).unwrap(), 0);
        assert_eq!(nup_index(&t(803, 2112), 11).unwrap(), 0);
        assert!(nup_index(&t(6, 6), 3).is_err());
        for (a, b, p) in [(6, 6, 5), (28, 32, 7), (803, 2112, 11), (1, 12, 11)] {
            verify_nup(&t(a, b), p).unwrap();
        }
    }

    #[test]
    fn mod_five_classes_match_the_discriminant() {
        for a in 0..5i64 {
            for b in 0..5i64 {
                let d = 46656 * a.pow(7) + 823543 * b.pow(6);
                let listed = matches!((a, b), (0, 0) | (2, 2) | (2, 3) | (3, 1) | (3, 4));
                assert_eq!(d % 5 == 0, listed, "({a}, {b})");
            }
        }
    }

    #[test]
    fn every_row_can_be_sampled() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for p in [2, 3] {
            for (row, _) in row_classes(p) {
                let t = sample_row(p, row, 3000, 200_000, &mut rng).expect("row hit");
                assert_eq!(matching_rows(&t, p).unwrap(), vec![row]);
            }
        }
    }

    #[test]
    fn rows_are_disjoint_on_residue_sweeps() {
        // one representative per class mod 2^7 and mod 3^5; the rows that also read
        // Delta are separated by a mod 8 (for p = 2) or by the parity of v_3(Delta)
        for a in 0..128i64 {
            for b in 0..128i64 {
                let tr = Trinomial::new_unchecked(BigInt::from(a + 128 * 17), BigInt::from(b + 128 * 23));
                assert!(matching_rows(&tr, 2).unwrap().len() <= 1, "({a}, {b}) mod 128");
            }
        }
        for a in 0..243i64 {
            for b in 0..243i64 {
                let tr = Trinomial::new_unchecked(BigInt::from(a + 243 * 5), BigInt::from(b + 243 * 7));
                assert!(matching_rows(&tr, 3).unwrap().len() <= 1, "({a}, {b}) mod 243");
            }
        }
    }
}
