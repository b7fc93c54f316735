//! Prime decomposition and index of monic F at p, up to second order.
//!
//! First order works with the phi-polygons of the irreducible factors of F mod p. A
//! repeated residual factor of degree one on a side of integral slope is resolved by
//! translating phi; any other repeated factor opens a second-order polygon built from a
//! key polynomial phi_2 and the valuation v_2 = e_1 [v_p, phi_1, h_1/e_1]. Degree 7 never
//! needs a third order.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::expansion::phi_expansion;
use super::polygon::{expansion_points, PolygonPoint, PrincipalPolygon, Side};
use super::residual::{residual_from_expansion, residue, residue_field_of};
use super::splitting::SplittingType;
use crate::arith::fp::{inv_mod, PolyModP};
use crate::arith::gf::{factor_over_fp, FieldPoly, ResidualFieldElement, ResidueField};
use crate::arith::poly::PolyZ;
use crate::arith::valuation::Valuation;
use crate::error::{Error, Result};

/// Refinement steps allowed before giving up.
const MAX_STEPS: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeIdeal {
    pub e: u32,
    pub f: u32,
    pub order: u8,
    /// The key polynomial whose polygon produced this prime.
    pub phi: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEntry {
    Factor {
        phi: String,
        multiplicity: usize,
    },
    Side {
        order: u8,
        phi: String,
        side: Side,
        residual: String,
        factors: Vec<(String, usize)>,
    },
    Refine {
        order: u8,
        from: String,
        to: String,
    },
    KeyPolynomial {
        phi: String,
        value: u64,
    },
    Index {
        order: u8,
        phi: String,
        contribution: u64,
    },
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEntry::Factor { phi, multiplicity } => {
                write!(f, "factor {phi} with multiplicity {multiplicity} mod p")
            }
            TraceEntry::Side {
                order,
                phi,
                side,
                residual,
                factors,
            } => {
                write!(f, "order {order} side of {phi}: {side}, residual {residual} =")?;
                for (g, m) in factors {
                    write!(f, " ({g})")?;
                    if *m > 1 {
                        write!(f, "^{m}")?;
                    }
                }
                Ok(())
            }
            TraceEntry::Refine { order, from, to } => {
                write!(f, "order {order} refinement {from} -> {to}")
            }
            TraceEntry::KeyPolynomial { phi, value } => {
                write!(f, "second-order key polynomial {phi}, v_2 = {value}")
            }
            TraceEntry::Index {
                order,
                phi,
                contribution,
            } => write!(f, "order {order} index from {phi}: {contribution}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub p: u64,
    pub primes: Vec<PrimeIdeal>,
    /// v_p((Z_K : Z[alpha])).
    pub index: u64,
    /// Ore's first-order bound, exact when `regular`.
    pub first_order_index: u64,
    pub regular: bool,
    pub second_order: bool,
    pub trace: Vec<TraceEntry>,
}

impl Decomposition {
    pub fn splitting_type(&self) -> SplittingType {
        SplittingType::new(self.primes.iter().map(|q| (q.e, q.f)).collect())
    }
}

struct Ctx<'a> {
    f: &'a PolyZ,
    p: u64,
    primes: Vec<PrimeIdeal>,
    index: u64,
    first_order_index: u64,
    regular: bool,
    second_order: bool,
    trace: Vec<TraceEntry>,
    steps: usize,
    key_override: Option<PolyZ>,
    order2_primes: Vec<(u32, u32)>,
    order2_index: u64,
}

fn ppow(p: u64, k: u64) -> BigInt {
    BigInt::from(p).pow(k as u32)
}

fn factor_strings(field: &ResidueField, fs: &[(FieldPoly, usize)]) -> Vec<(String, usize)> {
    fs.iter()
        .map(|(g, m)| (field.poly_to_string(g, 'y'), *m))
        .collect()
}

/// Splits the principal polygon of the points on [0, `width`] and checks that every side is
/// steeper than -`thr`, with total length `width`.
fn window_polygon(points: &[PolygonPoint], width: u64, thr: u64, what: &str) -> Result<PrincipalPolygon> {
    let pts: Vec<PolygonPoint> = points.iter().filter(|q| q.abscissa <= width).copied().collect();
    let n = PrincipalPolygon::from_points(&pts);
    let ok = n.start().map(|s| s.0) == Some(0)
        && n.length() == width
        && n.sides.iter().all(|s| s.h > thr * s.e);
    if !ok {
        return Err(Error::Internal(format!(
            "{what}: polygon {n} does not cover [0, {width}] with slopes below -{thr}"
        )));
    }
    Ok(n)
}

impl Ctx<'_> {
    fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > MAX_STEPS {
            return Err(Error::Unsupported(format!(
                "refinement did not stabilise after {MAX_STEPS} steps"
            )));
        }
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        let p = self.p;
        for (phibar, mult) in factor_over_fp(&self.f.reduce(p))? {
            let phi = phibar.lift_balanced();
            let m = phi.degree().unwrap() as u32;
            self.trace.push(TraceEntry::Factor {
                phi: phi.to_string(),
                multiplicity: mult,
            });
            if mult == 1 {
                self.primes.push(PrimeIdeal {
                    e: 1,
                    f: m,
                    order: 1,
                    phi: phi.to_string(),
                });
                continue;
            }
            let field = residue_field_of(&phi, p)?;
            let exp = phi_expansion(self.f, &phi)?;
            let vals = exp.valuations(p);
            if vals[0] == Valuation::Infinite {
                return Err(Error::InvalidParameters(format!("{phi} divides the polynomial")));
            }
            let n = PrincipalPolygon::from_points(&expansion_points(&vals));
            if n.length() != mult as u64 {
                return Err(Error::Internal(format!(
                    "principal polygon of {phi} has length {} for multiplicity {mult}",
                    n.length()
                )));
            }
            let ind = m as u64 * n.lattice_count();
            self.index += ind;
            self.first_order_index += ind;
            self.trace.push(TraceEntry::Index {
                order: 1,
                phi: phi.to_string(),
                contribution: ind,
            });
            for side in &n.sides {
                let r = residual_from_expansion(&field, &exp, &vals, side, p);
                let fs = field.factor(&r)?;
                self.trace.push(TraceEntry::Side {
                    order: 1,
                    phi: phi.to_string(),
                    side: *side,
                    residual: field.poly_to_string(&r, 'y'),
                    factors: factor_strings(&field, &fs),
                });
                if fs.iter().any(|(_, k)| *k > 1) {
                    self.regular = false;
                }
                for (psi, k) in fs {
                    self.order1_factor(&phi, &field, side.h, side.e, &psi, k)?;
                }
            }
        }
        Ok(())
    }

    /// A factor psi^k of the residual polynomial of a side of slope -h/e at phi.
    fn order1_factor(
        &mut self,
        phi: &PolyZ,
        field: &ResidueField,
        h: u64,
        e: u64,
        psi: &FieldPoly,
        k: usize,
    ) -> Result<()> {
        let m = phi.degree().unwrap() as u32;
        let dpsi = psi.degree().unwrap() as u32;
        if k == 1 {
            self.primes.push(PrimeIdeal {
                e: e as u32,
                f: m * dpsi,
                order: 1,
                phi: phi.to_string(),
            });
            return Ok(());
        }
        if e == 1 && dpsi == 1 {
            return self.refine_order1(phi, field, h, psi, k);
        }
        self.second_order(phi, field, h, e, psi, k)
    }

    /// phi -> phi - lift(c) p^h for the root c of psi, then the polygon on [0, k].
    fn refine_order1(
        &mut self,
        phi: &PolyZ,
        field: &ResidueField,
        h: u64,
        psi: &FieldPoly,
        k: usize,
    ) -> Result<()> {
        self.step()?;
        let p = self.p;
        let c = field.neg(&psi.coeffs()[0]);
        let shift = c.representative().lift_balanced().scale(&ppow(p, h));
        let phi2 = phi - &shift;
        self.trace.push(TraceEntry::Refine {
            order: 1,
            from: phi.to_string(),
            to: phi2.to_string(),
        });
        let exp = phi_expansion(self.f, &phi2)?;
        let vals = exp.valuations(p);
        let n = window_polygon(&expansion_points(&vals), k as u64, h, "first-order refinement")?;
        let m = phi.degree().unwrap() as u64;
        let ind = m * n.lattice_count_above(h);
        self.index += ind;
        self.trace.push(TraceEntry::Index {
            order: 1,
            phi: phi2.to_string(),
            contribution: ind,
        });
        for side in &n.sides {
            let r = residual_from_expansion(field, &exp, &vals, side, p);
            let fs = field.factor(&r)?;
            self.trace.push(TraceEntry::Side {
                order: 1,
                phi: phi2.to_string(),
                side: *side,
                residual: field.poly_to_string(&r, 'y'),
                factors: factor_strings(field, &fs),
            });
            for (psi2, k2) in fs {
                self.order1_factor(&phi2, field, side.h, side.e, &psi2, k2)?;
            }
        }
        Ok(())
    }

    fn second_order(
        &mut self,
        phi1: &PolyZ,
        field1: &ResidueField,
        h1: u64,
        e1: u64,
        psi1: &FieldPoly,
        k: usize,
    ) -> Result<()> {
        self.second_order = true;
        let ty = Order2::new(self.p, phi1, field1, h1, e1, psi1)?;
        let phi2 = match self.key_override.take() {
            Some(g) => {
                ty.check_key(&g)?;
                g
            }
            None => ty.key_polynomial(),
        };
        self.trace.push(TraceEntry::KeyPolynomial {
            phi: phi2.to_string(),
            value: ty.v0,
        });
        self.order2_polygon(&ty, &phi2, k as u64, 0)
    }

    /// N_2 of F at `phi2` on [0, width], sides steeper than -thr, and everything below it.
    fn order2_polygon(&mut self, ty: &Order2, phi2: &PolyZ, width: u64, thr: u64) -> Result<()> {
        let exp = phi_expansion(self.f, phi2)?;
        let mut points = Vec::with_capacity(exp.len());
        let mut reds = Vec::with_capacity(exp.len());
        for (j, b) in exp.coeffs().iter().enumerate() {
            match ty.red2(b) {
                Some((v, r)) => {
                    points.push(PolygonPoint {
                        abscissa: j as u64,
                        ordinate: Valuation::Finite(v + j as u64 * ty.v0),
                    });
                    reds.push(Some(r));
                }
                None => reds.push(None),
            }
        }
        if reds.first().is_none_or(|r| r.is_none()) {
            return Err(Error::InvalidParameters(format!("{phi2} divides the polynomial")));
        }
        let n = if thr == 0 {
            let n = PrincipalPolygon::from_points(&points);
            if n.length() != width {
                return Err(Error::Internal(format!(
                    "second-order polygon {n} at {phi2} has length {} for multiplicity {width}",
                    n.length()
                )));
            }
            n
        } else {
            window_polygon(&points, width, thr, "second-order refinement")?
        };
        let mult = ty.m1 as u64 * ty.f1 as u64;
        let ind = mult * n.lattice_count_above(thr);
        self.index += ind;
        self.order2_index += ind;
        self.trace.push(TraceEntry::Index {
            order: 2,
            phi: phi2.to_string(),
            contribution: ind,
        });
        let ord: Vec<Option<u64>> = {
            let mut o = vec![None; reds.len()];
            for q in &points {
                o[q.abscissa as usize] = q.ordinate.finite();
            }
            o
        };
        let k2 = &ty.field2;
        for side in &n.sides {
            let coeffs = (0..=side.degree())
                .map(|i| {
                    let j = (side.start.0 + i * side.e) as usize;
                    let y = side.start.1 - i * side.h;
                    match (&reds[j], ord[j]) {
                        (Some(r), Some(o)) if o == y => r.clone(),
                        _ => k2.zero(),
                    }
                })
                .collect();
            let r2 = k2.poly(coeffs);
            let fs = k2.factor(&r2)?;
            self.trace.push(TraceEntry::Side {
                order: 2,
                phi: phi2.to_string(),
                side: *side,
                residual: k2.poly_to_string(&r2, 'y'),
                factors: factor_strings(k2, &fs),
            });
            for (psi2, m2) in fs {
                let d = psi2.degree().unwrap() as u32;
                if m2 == 1 {
                    let (e, f) = (ty.e1 as u32 * side.e as u32, ty.m1 as u32 * ty.f1 as u32 * d);
                    self.primes.push(PrimeIdeal {
                        e,
                        f,
                        order: 2,
                        phi: phi2.to_string(),
                    });
                    self.order2_primes.push((e, f));
                } else if side.e == 1 && d == 1 {
                    self.step()?;
                    let c = k2.neg(&psi2.coeffs()[0]);
                    let next = ty.refine(phi2, side.h, &c)?;
                    self.trace.push(TraceEntry::Refine {
                        order: 2,
                        from: phi2.to_string(),
                        to: next.to_string(),
                    });
                    self.order2_polygon(ty, &next, m2 as u64, side.h)?;
                } else {
                    return Err(Error::UnsupportedSecondOrder(format!(
                        "residual factor {} with multiplicity {m2} on side {side} of {phi2} needs a third order",
                        k2.poly_to_string(&psi2, 'y')
                    )));
                }
            }
        }
        Ok(())
    }
}

/// First-order type (phi_1, -h_1/e_1, psi_1) with the data of its second-order valuation.
struct Order2 {
    p: u64,
    phi1: PolyZ,
    field1: ResidueField,
    h1: u64,
    e1: u64,
    f1: usize,
    m1: usize,
    psi1: FieldPoly,
    field2: ResidueField,
    /// Class of y in F_2 = F_1[y]/(psi_1).
    z: ResidualFieldElement,
    /// l h_1 - l' e_1 = 1.
    l: i64,
    lp: i64,
    v0: u64,
}

impl Order2 {
    fn new(
        p: u64,
        phi1: &PolyZ,
        field1: &ResidueField,
        h1: u64,
        e1: u64,
        psi1: &FieldPoly,
    ) -> Result<Order2> {
        let m1 = phi1.degree().unwrap();
        let f1 = psi1.degree().unwrap();
        let (field2, z) = if f1 == 1 {
            (field1.clone(), field1.neg(&psi1.coeffs()[0]))
        } else if m1 == 1 {
            let mu = PolyModP::new(
                p,
                psi1.coeffs()
                    .iter()
                    .map(|c| c.representative().coeff(0))
                    .collect(),
            );
            let k = ResidueField::with_var(mu, 'z')?;
            let z = k.generator();
            (k, z)
        } else {
            return Err(Error::UnsupportedSecondOrder(format!(
                "residual factor of degree {f1} over a residue field of degree {m1}"
            )));
        };
        let (l, lp) = if e1 == 1 {
            (0, -1)
        } else {
            let l = inv_mod(h1 % e1, e1) as i64;
            (l, (l * h1 as i64 - 1) / e1 as i64)
        };
        Ok(Order2 {
            p,
            phi1: phi1.clone(),
            field1: field1.clone(),
            h1,
            e1,
            f1,
            m1,
            psi1: psi1.clone(),
            field2,
            z,
            l,
            lp,
            v0: e1 * f1 as u64 * h1,
        })
    }

    fn embed(&self, c: &ResidualFieldElement) -> ResidualFieldElement {
        if self.f1 == 1 {
            c.clone()
        } else {
            self.field2.from_u64(c.representative().coeff(0))
        }
    }

    fn z_pow(&self, t: i64) -> ResidualFieldElement {
        let k = &self.field2;
        let base = if t < 0 { k.inv(&self.z) } else { self.z.clone() };
        k.pow_u64(&base, t.unsigned_abs())
    }

    /// sum_{k=0}^{f_1} p^{(f_1 - k) h_1} lift(psi_k) phi_1^{k e_1}.
    fn key_polynomial(&self) -> PolyZ {
        let mut acc = PolyZ::zero();
        for (k, c) in self.psi1.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = c.representative().lift_balanced().scale(&ppow(self.p, (self.f1 - k) as u64 * self.h1));
            acc = &acc + &(&coef * &self.phi1.pow((k as u64 * self.e1) as u32));
        }
        acc
    }

    /// A caller-supplied phi_2 must have a one-sided phi_1-polygon of slope -h_1/e_1 and
    /// residual polynomial psi_1.
    fn check_key(&self, g: &PolyZ) -> Result<()> {
        let bad = |why: &str| {
            Err(Error::UnsupportedSecondOrder(format!(
                "{g} is not a key polynomial for ({}, -{}/{}, {}): {why}",
                self.phi1,
                self.h1,
                self.e1,
                self.field1.poly_to_string(&self.psi1, 'y')
            )))
        };
        if !g.is_monic() || g.degree() != Some(self.m1 * self.e1 as usize * self.f1) {
            return bad("wrong degree");
        }
        let exp = phi_expansion(g, &self.phi1)?;
        let mut coeffs = Vec::new();
        for (i, c) in exp.coeffs().iter().enumerate() {
            let Some(v) = c.valuation(self.p).finite() else {
                if i % self.e1 as usize == 0 {
                    coeffs.push(self.field1.zero());
                }
                continue;
            };
            let w = self.e1 * v + i as u64 * self.h1;
            if w < self.v0 {
                return bad("polygon below the side");
            }
            if i % self.e1 as usize == 0 {
                coeffs.push(if w == self.v0 {
                    residue(&self.field1, c, self.p, v)
                } else {
                    self.field1.zero()
                });
            }
        }
        if self.field1.poly(coeffs) != self.psi1 {
            return bad("residual polynomial differs");
        }
        Ok(())
    }

    /// (v_2(g), residue of g / gamma^{v_2(g)}) for nonzero g of degree below deg phi_2.
    fn red2(&self, g: &PolyZ) -> Option<(u64, ResidualFieldElement)> {
        if g.is_zero() {
            return None;
        }
        let exp = phi_expansion(g, &self.phi1).ok()?;
        let vals = exp.valuations(self.p);
        let w: Vec<Option<u64>> = vals
            .iter()
            .enumerate()
            .map(|(i, v)| v.finite().map(|v| self.e1 * v + i as u64 * self.h1))
            .collect();
        let vmin = w.iter().flatten().min().copied()?;
        let s = w.iter().position(|&x| x == Some(vmin)).unwrap();
        let k2 = &self.field2;
        let mut acc = k2.zero();
        let mut zk = k2.one();
        let mut i = s;
        while i < w.len() {
            if w[i] == Some(vmin) {
                let r = residue(&self.field1, &exp.coeffs()[i], self.p, vals[i].unwrap());
                acc = k2.add(&acc, &k2.mul(&zk, &self.embed(&r)));
            }
            zk = k2.mul(&zk, &self.z);
            i += self.e1 as usize;
        }
        let nu_s = vals[s].unwrap() as i64;
        let t = -self.lp * s as i64 - self.l * nu_s;
        Some((vmin, k2.mul(&self.z_pow(t), &acc)))
    }

    /// phi_2 - g with v_2(g) = v_2(phi_2) + h_2 and red_2(g) = c.
    fn refine(&self, phi2: &PolyZ, h2: u64, c: &ResidualFieldElement) -> Result<PolyZ> {
        let v = self.v0 + h2;
        let e1 = self.e1 as i64;
        let beta0 = ((v as i64 % e1) * self.l).rem_euclid(e1);
        let alpha0 = (v as i64 - self.h1 as i64 * beta0) / e1;
        let t0 = -self.lp * beta0 - self.l * alpha0;
        let k2 = &self.field2;
        let target = k2.mul(c, &self.z_pow(-t0));
        let deltas: Vec<PolyZ> = if self.f1 == 1 {
            vec![target.representative().lift_balanced()]
        } else {
            (0..self.f1)
                .map(|j| {
                    PolyModP::new(self.p, vec![target.representative().coeff(j)]).lift_balanced()
                })
                .collect()
        };
        let mut g = PolyZ::zero();
        for (j, d) in deltas.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let pe = alpha0 - self.h1 as i64 * j as i64;
            debug_assert!(pe >= 0);
            let term = &d.scale(&ppow(self.p, pe as u64)) * &self.phi1.pow((beta0 + e1 * j as i64) as u32);
            g = &g + &term;
        }
        match self.red2(&g) {
            Some((w, r)) if w == v && &r == c => {}
            other => {
                return Err(Error::Internal(format!(
                    "second-order approximant {g} has residue data {other:?}, wanted ({v}, {c:?})"
                )))
            }
        }
        Ok(phi2 - &g)
    }
}

fn ctx(f: &PolyZ, p: u64, key_override: Option<PolyZ>) -> Result<Ctx<'_>> {
    if !f.is_monic() {
        return Err(Error::NonMonic(f.to_string()));
    }
    Ok(Ctx {
        f,
        p,
        primes: Vec::new(),
        index: 0,
        first_order_index: 0,
        regular: true,
        second_order: false,
        trace: Vec::new(),
        steps: 0,
        key_override,
        order2_primes: Vec::new(),
        order2_index: 0,
    })
}

fn finish(c: Ctx<'_>) -> Result<Decomposition> {
    let d = Decomposition {
        p: c.p,
        primes: c.primes,
        index: c.index,
        first_order_index: c.first_order_index,
        regular: c.regular,
        second_order: c.second_order,
        trace: c.trace,
    };
    let n = c.f.degree().unwrap() as u32;
    if d.splitting_type().degree() != n {
        return Err(Error::Internal(format!(
            "splitting type {} does not add up to degree {n}",
            d.splitting_type()
        )));
    }
    Ok(d)
}

/// Factorization of p and v_p of the index of Z[alpha], alpha a root of monic squarefree F.
pub fn decompose(f: &PolyZ, p: u64) -> Result<Decomposition> {
    let mut c = ctx(f, p, None)?;
    c.run()?;
    finish(c)
}

/// Like [`decompose`], but the first second-order type uses `phi2` as key polynomial.
/// Returns the decomposition with the primes and index found at second order.
pub fn decompose_with_key(
    f: &PolyZ,
    p: u64,
    phi2: &PolyZ,
) -> Result<(Decomposition, SplittingType, u64)> {
    let mut c = ctx(f, p, Some(phi2.clone()))?;
    c.run()?;
    if c.key_override.is_some() {
        return Err(Error::UnsupportedSecondOrder(format!(
            "no second-order type at p = {p} for key polynomial {phi2}"
        )));
    }
    let t = SplittingType::new(c.order2_primes.clone());
    let ind = c.order2_index;
    Ok((finish(c)?, t, ind))
}
