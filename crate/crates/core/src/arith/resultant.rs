//! Resultants, discriminants and characteristic polynomials over Z.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::PolyZ;
use crate::error::{Error, Result};

/// Determinant by fraction-free Gaussian elimination (Bareiss).
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Res(f, g) as the determinant of the Sylvester matrix.
pub fn resultant(f: &PolyZ, g: &PolyZ) -> Result<BigInt> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    let n = g.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 && n == 0 {
        return Ok(BigInt::one());
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in rows.iter_mut().enumerate().take(n) {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    Ok(determinant(rows))
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
pub fn discriminant_poly(f: &PolyZ) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidParameters("discriminant of a constant".into()));
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(f, &f.derivative())?;
    let r = r / f.leading().unwrap();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Matrix of multiplication by `g(alpha)` on the power basis, alpha a root of monic `f`.
pub fn multiplication_matrix(g: &PolyZ, f: &PolyZ) -> Result<Vec<Vec<BigInt>>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(Error::NonMonic(f.to_string()));
    }
    let mut cols = Vec::with_capacity(n);
    let mut cur = g.div_rem_monic(f)?.1;
    for _ in 0..n {
        cols.push(cur.clone());
        cur = (&cur * &PolyZ::x()).div_rem_monic(f)?.1;
    }
    Ok((0..n)
        .map(|i| cols.iter().map(|c| c.coeff(i)).collect())
        .collect())
}

/// Characteristic polynomial det(y I - A) by Faddeev-LeVerrier; divisions are exact.
pub fn charpoly_matrix(a: &[Vec<BigInt>]) -> PolyZ {
    let n = a.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for (l, row) in m.iter().enumerate() {
                    if !a[i][l].is_zero() && !row[j].is_zero() {
                        s += &a[i][l] * &row[j];
                    }
                }
                if i == j {
                    s += &c[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        m = next;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &m[l][i];
            }
        }
        c[n - k] = -tr / BigInt::from(k);
    }
    PolyZ::new(c)
}

/// Characteristic polynomial of `g(alpha)`, alpha a root of monic `f`.
pub fn charpoly_of_element(g: &PolyZ, f: &PolyZ) -> Result<PolyZ> {
    Ok(charpoly_matrix(&multiplication_matrix(g, f)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::valuation::val;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Res_x(F(x), y - g(x)) as a polynomial in y, by evaluating at y = 0..n and interpolating.
    fn charpoly_by_interpolation(g: &PolyZ, f: &PolyZ) -> PolyZ {
        let n = f.degree().unwrap();
        let xs: Vec<BigInt> = (0..=n as i64).map(bi).collect();
        let ys: Vec<BigInt> = xs
            .iter()
            .map(|y| {
                let h = &PolyZ::constant(y.clone()) - g;
                // Res(F, h) is the product of h over the roots of F since F is monic
                let h = h.div_rem_monic(f).unwrap().1;
                if h.is_zero() {
                    BigInt::zero()
                } else {
                    resultant(f, &h).unwrap()
                }
            })
            .collect();
        // Newton divided differences over integer nodes; exact since nodes are 0..n
        let mut coef = ys.clone();
        for j in 1..=n {
            for i in (j..=n).rev() {
                coef[i] = (&coef[i] - &coef[i - 1]) / bi(j as i64);
            }
        }
        let mut out = PolyZ::constant(coef[n].clone());
        for i in (0..n).rev() {
            let lin = PolyZ::new(vec![-xs[i].clone(), BigInt::one()]);
            out = &(&out * &lin) + &PolyZ::constant(coef[i].clone());
        }
        out
    }

    #[test]
    fn small_resultants() {
        let f = PolyZ::from_i64(&[-1, 1]);
        let g = PolyZ::from_i64(&[1, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), bi(2));
        let h = PolyZ::trinomial(&bi(3), &bi(5));
        assert_eq!(resultant(&h, &h).unwrap(), bi(0));
        assert!(resultant(&PolyZ::zero(), &h).is_err());
    }

    #[test]
    fn trinomial_discriminant_closed_form() {
        for (a, b) in [(6i64, 6i64), (28, 32), (3, 8), (-1, 9), (0, 1), (1, 0)] {
            let f = PolyZ::trinomial(&bi(a), &bi(b));
            let expect = -(BigInt::from(6).pow(6) * bi(a).pow(7) + BigInt::from(7).pow(7) * bi(b).pow(6));
            assert_eq!(discriminant_poly(&f).unwrap(), expect);
            // sign convention: disc = -Res(F, F')
            assert_eq!(resultant(&f, &f.derivative()).unwrap(), -expect);
        }
    }

    #[test]
    fn charpoly_identity_and_translation() {
        let f = PolyZ::trinomial(&bi(5), &bi(-3));
        assert_eq!(charpoly_of_element(&PolyZ::x(), &f).unwrap(), f);
        let g = PolyZ::from_i64(&[1, 1]);
        assert_eq!(
            charpoly_of_element(&g, &f).unwrap(),
            f.shift(&bi(-1))
        );
    }

    #[test]
    fn charpoly_of_fourth_power_has_expected_slope() {
        // alpha has 2-adic value v/7, so every root of the charpoly of alpha^4 has value 4v/7
        for (a, b, v) in [(4i64, 2i64, 1u64), (64, 64, 6)] {
            let f = PolyZ::trinomial(&bi(a), &bi(b));
            let g = charpoly_of_element(&PolyZ::monomial(BigInt::one(), 4), &f).unwrap();
            assert_eq!(g.degree(), Some(7));
            assert!(g.is_monic());
            let top = 4 * v;
            assert_eq!(val(&g.coeff(0), 2), Some(top));
            for i in 1..7 {
                let vi = val(&g.coeff(i), 2).unwrap_or(u64::MAX / 8);
                assert!(7 * vi >= top * (7 - i as u64));
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn charpoly_matches_resultant_oracle(
            a in -20i64..20, b in -20i64..20,
            g in proptest::collection::vec(-3i64..4, 1..7),
        ) {
            let f = PolyZ::trinomial(&bi(a), &bi(b));
            let g = PolyZ::from_i64(&g);
            proptest::prop_assume!(g.degree().unwrap_or(0) >= 1);
            let cp = charpoly_of_element(&g, &f).unwrap();
            proptest::prop_assert_eq!(cp, charpoly_by_interpolation(&g, &f));
        }

        #[test]
        fn resultant_is_multiplicative(
            f in proptest::collection::vec(-5i64..6, 2..5),
            g in proptest::collection::vec(-5i64..6, 2..5),
            h in proptest::collection::vec(-5i64..6, 2..4),
        ) {
            let (f, g, h) = (PolyZ::from_i64(&f), PolyZ::from_i64(&g), PolyZ::from_i64(&h));
            proptest::prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
            let lhs = resultant(&f, &(&g * &h)).unwrap();
            let rhs = resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }
}
