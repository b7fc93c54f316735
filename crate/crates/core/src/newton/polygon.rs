//! Lower convex hulls, principal polygons and lattice counts.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::expansion::phi_expansion;
use crate::arith::poly::PolyZ;
use crate::arith::valuation::Valuation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolygonPoint {
    pub abscissa: u64,
    pub ordinate: Valuation,
}

/// A segment of a Newton polygon with slope -h/e, gcd(h, e) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Side {
    pub start: (u64, u64),
    pub end: (u64, u64),
    pub h: u64,
    pub e: u64,
}

impl Side {
    /// Panics unless `end` lies strictly to the right of `start` and no higher.
    pub fn new(start: (u64, u64), end: (u64, u64)) -> Side {
        assert!(end.0 > start.0 && end.1 <= start.1, "bad side {start:?} -> {end:?}");
        let run = end.0 - start.0;
        let rise = start.1 - end.1;
        let g = run.gcd(&rise);
        Side {
            start,
            end,
            h: rise / g,
            e: run / g,
        }
    }

    pub fn length(&self) -> u64 {
        self.end.0 - self.start.0
    }

    pub fn height(&self) -> u64 {
        self.start.1 - self.end.1
    }

    pub fn degree(&self) -> u64 {
        self.length() / self.e
    }

    /// The ordinate at `x`, as a fraction with denominator `e`.
    fn scaled_ordinate(&self, x: u64) -> u64 {
        self.start.1 * self.e - (x - self.start.0) * self.h
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})->({},{}) slope -{}/{}",
            self.start.0, self.start.1, self.end.0, self.end.1, self.h, self.e
        )
    }
}

/// Negative-slope part of a lower convex hull; slopes increase left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalPolygon {
    pub sides: Vec<Side>,
}

impl PrincipalPolygon {
    /// Principal part of the hull of the finite points.
    pub fn from_points(points: &[PolygonPoint]) -> PrincipalPolygon {
        let pts: Vec<(i64, i64)> = points
            .iter()
            .filter_map(|p| p.ordinate.finite().map(|y| (p.abscissa as i64, y as i64)))
            .collect();
        let hull = lower_hull(&pts);
        let sides = hull
            .windows(2)
            .filter(|w| w[1].1 < w[0].1)
            .map(|w| Side::new((w[0].0 as u64, w[0].1 as u64), (w[1].0 as u64, w[1].1 as u64)))
            .collect();
        PrincipalPolygon { sides }
    }

    pub fn length(&self) -> u64 {
        self.sides.iter().map(Side::length).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn start(&self) -> Option<(u64, u64)> {
        self.sides.first().map(|s| s.start)
    }

    pub fn end(&self) -> Option<(u64, u64)> {
        self.sides.last().map(|s| s.end)
    }

    /// Floor of the polygon's ordinate at `x`, inside its span.
    pub fn floor_at(&self, x: u64) -> Option<u64> {
        let s = self.sides.iter().find(|s| s.start.0 <= x && x <= s.end.0)?;
        Some(s.scaled_ordinate(x) / s.e)
    }

    /// Lattice points strictly inside the horizontal span, on or below the polygon and
    /// strictly above the line of slope -`thr` through the last vertex.
    pub fn lattice_count_above(&self, thr: u64) -> u64 {
        let (Some((x0, _)), Some((x1, y1))) = (self.start(), self.end()) else {
            return 0;
        };
        (x0 + 1..x1)
            .map(|x| {
                let top = self.floor_at(x).unwrap();
                let base = y1 + thr * (x1 - x);
                top.saturating_sub(base)
            })
            .sum()
    }

    /// Lattice points with x >= 1 and y >= 1 on or below the polygon.
    pub fn lattice_count(&self) -> u64 {
        let Some((x1, _)) = self.end() else {
            return 0;
        };
        (1..x1).map(|x| self.floor_at(x).unwrap_or(0)).sum()
    }
}

impl fmt::Display for PrincipalPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sides.is_empty() {
            return write!(f, "(empty)");
        }
        let s0 = self.sides[0].start;
        write!(f, "({},{})", s0.0, s0.1)?;
        for s in &self.sides {
            write!(f, " -> ({},{})", s.end.0, s.end.1)?;
        }
        Ok(())
    }
}

/// Lower convex hull vertices, left to right; collinear points are dropped so sides are maximal.
pub fn lower_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort();
    // keep the lowest point per abscissa
    pts.dedup_by(|b, a| a.0 == b.0);
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(pts.len());
    for p in pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) as i128 * (p.1 - a.1) as i128 - (b.1 - a.1) as i128 * (p.0 - a.0) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Principal part of the phi-polygon of F at p.
pub fn principal_polygon(f: &PolyZ, phi: &PolyZ, p: u64) -> Result<PrincipalPolygon> {
    if !f.reduce(p).rem(&phi.reduce(p)).is_zero() {
        return Err(Error::NotAFactor {
            phi: phi.to_string(),
            p,
        });
    }
    let e = phi_expansion(f, phi)?;
    Ok(PrincipalPolygon::from_points(&expansion_points(&e.valuations(p))))
}

pub(crate) fn expansion_points(vals: &[Valuation]) -> Vec<PolygonPoint> {
    vals.iter()
        .enumerate()
        .map(|(i, &v)| PolygonPoint {
            abscissa: i as u64,
            ordinate: v,
        })
        .collect()
}

/// deg phi times the lattice points under the principal polygon.
pub fn polygon_index(polygon: &PrincipalPolygon, deg_phi: u64) -> u64 {
    deg_phi * polygon.lattice_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn poly_of(points: &[(u64, u64)]) -> PrincipalPolygon {
        let pts: Vec<PolygonPoint> = points
            .iter()
            .map(|&(x, y)| PolygonPoint {
                abscissa: x,
                ordinate: Valuation::Finite(y),
            })
            .collect();
        PrincipalPolygon::from_points(&pts)
    }

    fn tri(a: i64, b: i64) -> PolyZ {
        PolyZ::trinomial(&BigInt::from(a), &BigInt::from(b))
    }

    #[test]
    fn eisenstein_like_side() {
        let n = principal_polygon(&tri(2, 2), &PolyZ::x(), 2).unwrap();
        assert_eq!(n.sides, vec![Side::new((0, 1), (7, 0))]);
        assert_eq!((n.sides[0].h, n.sides[0].e), (1, 7));
        assert_eq!(polygon_index(&n, 1), 0);
    }

    #[test]
    fn two_sided_polygon() {
        // v(a) = 2, v(b) = 3
        let n = principal_polygon(&tri(12, 40), &PolyZ::x(), 2).unwrap();
        assert_eq!(n.sides, vec![Side::new((0, 3), (1, 2)), Side::new((1, 2), (7, 0))]);
        assert_eq!(n.sides[1].degree(), 2);
        assert_eq!(polygon_index(&n, 1), 5);
    }

    #[test]
    fn height_one_is_single_side() {
        for a in [2, 4, 8, 6, 10] {
            let n = principal_polygon(&tri(a, 6), &PolyZ::x(), 2).unwrap();
            assert_eq!(n.sides.len(), 1);
            assert_eq!(n.sides[0].height(), 1);
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(polygon_index(&poly_of(&[(0, 2), (2, 0)]), 1), 1);
        assert_eq!(polygon_index(&poly_of(&[(0, 2), (2, 0)]), 3), 3);
        assert_eq!(polygon_index(&poly_of(&[(0, 3), (1, 2), (7, 0)]), 1), 5);
    }

    #[test]
    fn collinear_points_merge() {
        let n = poly_of(&[(0, 4), (1, 3), (2, 2), (4, 0)]);
        assert_eq!(n.sides, vec![Side::new((0, 4), (4, 0))]);
        assert_eq!(n.sides[0].degree(), 4);
    }

    #[test]
    fn horizontal_tail_is_not_principal() {
        let n = poly_of(&[(0, 2), (1, 0), (3, 0), (4, 1)]);
        assert_eq!(n.sides, vec![Side::new((0, 2), (1, 0))]);
    }

    #[test]
    fn not_a_factor() {
        assert!(matches!(
            principal_polygon(&tri(1, 1), &PolyZ::x(), 2),
            Err(Error::NotAFactor { .. })
        ));
    }

    #[test]
    fn count_above_sloped_baseline() {
        // (0,6) -> (2,2) -> (3,0) above the line of slope -1 through (3,0)
        let n = poly_of(&[(0, 6), (2, 2), (3, 0)]);
        // x = 1: top 4, base 2; x = 2: top 2, base 1
        assert_eq!(n.lattice_count_above(1), 3);
        assert_eq!(n.lattice_count_above(0), 6);
    }

    /// Brute force: every lattice point (x, y), 1 <= x, 1 <= y, below every hull line.
    fn brute_count(pts: &[(i64, i64)]) -> u64 {
        let hull = lower_hull(pts);
        let last = *hull.iter().min_by_key(|p| (p.1, p.0)).unwrap();
        let xmax = last.0;
        let mut n = 0;
        for x in 1..xmax {
            for y in 1..=64 {
                // (x, y) lies on or below the hull iff it is below the upper envelope of segments
                let ok = hull.windows(2).any(|w| {
                    let (a, b) = (w[0], w[1]);
                    a.0 <= x && x <= b.0 && (y - a.1) * (b.0 - a.0) <= (b.1 - a.1) * (x - a.0)
                });
                if ok {
                    n += 1;
                }
            }
        }
        n
    }

    proptest::proptest! {
        #[test]
        fn hull_is_convex_and_below(ys in proptest::collection::vec(0i64..12, 2..9)) {
            let mut ys = ys;
            *ys.last_mut().unwrap() = 0;
            let pts: Vec<(i64, i64)> = ys.iter().enumerate().map(|(i, &y)| (i as i64, y)).collect();
            let hull = lower_hull(&pts);
            // slopes strictly increase
            for w in hull.windows(3) {
                let s1 = (w[1].1 - w[0].1) * (w[2].0 - w[1].0);
                let s2 = (w[2].1 - w[1].1) * (w[1].0 - w[0].0);
                proptest::prop_assert!(s1 < s2);
            }
            // every point on or above
            for &(x, y) in &pts {
                for w in hull.windows(2) {
                    let (a, b) = (w[0], w[1]);
                    if a.0 <= x && x <= b.0 {
                        proptest::prop_assert!((y - a.1) * (b.0 - a.0) >= (b.1 - a.1) * (x - a.0));
                    }
                }
            }
            let n = PrincipalPolygon::from_points(&pts.iter().map(|&(x, y)| PolygonPoint {
                abscissa: x as u64, ordinate: Valuation::Finite(y as u64)
            }).collect::<Vec<_>>());
            for s in &n.sides {
                proptest::prop_assert_eq!(s.length(), s.e * s.degree());
                proptest::prop_assert_eq!(s.height(), s.h * s.degree());
            }
            // the principal part ends at the first zero ordinate
            let first_zero = ys.iter().position(|&y| y == 0).unwrap() as u64;
            proptest::prop_assert_eq!(n.end().map_or(first_zero, |e| e.0), first_zero);
            let prefix: Vec<(i64, i64)> = pts[..=first_zero as usize].to_vec();
            proptest::prop_assert_eq!(n.lattice_count(), brute_count(&prefix));
        }
    }
}
