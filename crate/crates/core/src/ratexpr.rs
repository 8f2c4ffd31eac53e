//! Reduced rational functions `num/den` over the Laurent polynomial ring.
//!
//! Canonical form: `num` and `den` are true polynomials (no negative
//! exponents; Laurent input is cleared by a common monomial), `den` is
//! nonzero, s-free (rationalized by conjugation against `s^2 = 4y^3 + u`),
//! coprime to `num`, and monic under the fixed graded-lex order. Equal
//! expressions therefore have identical representations.

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Mono};
use crate::rat::{rat_int, Rat};
use crate::var::{ChartTag, Var, NVARS};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatExpr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatExpr {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<RatExpr> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(mut num: LaurentPoly, mut den: LaurentPoly) -> RatExpr {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatExpr {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        // rationalize s out of the denominator: 1/(p + q s) = (p - q s)/(p^2 - q^2 (4y^3+u))
        if den.uses(Var::S) {
            let (p, q) = den.split_s();
            let conj = &p - &q.mul_mono(&Mono::var(Var::S, 1));
            num = &num * &conj;
            den = &(&p * &p) - &(&(&q * &q) * &LaurentPoly::s_square());
            debug_assert!(!den.uses(Var::S));
            debug_assert!(!den.is_zero(), "4y^3+u is not a square");
        }
        // clear negative exponents by a common monomial
        let mn = num.laurent_clearing_mono();
        let md = den.laurent_clearing_mono();
        let clear = mn.mul(&md);
        if !clear.is_one() {
            num = num.mul_mono(&clear);
            den = den.mul_mono(&clear);
        }
        let g = LaurentPoly::gcd(&num, &den);
        if !g.as_constant().map_or(false, |c| c.is_one()) {
            num = num.divexact(&g).expect("gcd divides num");
            den = den.divexact(&g).expect("gcd divides den");
        }
        let lead = den.make_monic();
        if !lead.is_one() {
            num = num.mul_rat(&(Rat::one() / lead));
        }
        RatExpr { num, den }
    }

    pub fn zero() -> RatExpr {
        RatExpr {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> RatExpr {
        RatExpr {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn int(n: i64) -> RatExpr {
        RatExpr {
            num: LaurentPoly::int(n),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> RatExpr {
        RatExpr {
            num: LaurentPoly::constant(c),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> RatExpr {
        Self::canonical(p, LaurentPoly::one())
    }

    pub fn var(v: Var) -> RatExpr {
        RatExpr {
            num: LaurentPoly::var(v),
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == LaurentPoly::one() && self.den == LaurentPoly::one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == LaurentPoly::one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den == LaurentPoly::one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.uses(v)
    }

    /// Check that only the symbols of `chart` occur.
    pub fn check_chart(&self, chart: ChartTag) -> Result<()> {
        for v in crate::var::ALL_VARS {
            if self.uses(v) && !chart.allows(v) {
                return Err(Error::ChartViolation {
                    sym: v.name().to_string(),
                    chart,
                });
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &RatExpr) -> RatExpr {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        let den = &self.den * &other.den;
        Self::canonical(num, den)
    }

    pub fn sub(&self, other: &RatExpr) -> RatExpr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatExpr {
        RatExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatExpr) -> RatExpr {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::canonical(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn mul_rat(&self, c: &Rat) -> RatExpr {
        if c.is_zero() {
            return Self::zero();
        }
        RatExpr {
            num: self.num.mul_rat(c),
            den: self.den.clone(),
        }
    }

    pub fn div(&self, other: &RatExpr) -> Result<RatExpr> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self::canonical(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn inv(&self) -> Result<RatExpr> {
        RatExpr::one().div(self)
    }

    pub fn pow(&self, e: i32) -> Result<RatExpr> {
        if e == 0 {
            return Ok(Self::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Idempotent by construction; re-canonicalizes explicitly.
    pub fn canonicalize(&self) -> RatExpr {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    /// Partial derivative. In chart B the symbol `s` is the dependent
    /// function sqrt(4y^3+u): ds/dy = 6y^2 s/(4y^3+u), ds/du = s/(2(4y^3+u)).
    pub fn partial(&self, v: Var, chart: ChartTag) -> Result<RatExpr> {
        if !chart.coords().contains(&v) {
            return Err(Error::UnknownVariable(v));
        }
        let dn = poly_partial(&self.num, v, chart)?;
        if self.den == LaurentPoly::one() {
            return Ok(dn);
        }
        let dd = poly_partial(&self.den, v, chart)?;
        // (n/d)' = (n' d - n d')/d^2
        let den_expr = RatExpr::from_poly(self.den.clone());
        let num_expr = RatExpr::from_poly(self.num.clone());
        let t = dn.mul(&den_expr).sub(&num_expr.mul(&dd));
        t.div(&den_expr.mul(&den_expr))
    }

    /// Substitute images for variables; absent variables map to themselves.
    pub fn subst(&self, map: &BTreeMap<Var, RatExpr>) -> Result<RatExpr> {
        let n = poly_subst(&self.num, map)?;
        let d = poly_subst(&self.den, map)?;
        n.div(&d)
    }

    /// Total Sigma-weight when homogeneous: weight(num) - weight(den).
    pub fn weight_parts_signature(&self) -> (BTreeMap<i64, LaurentPoly>, BTreeMap<i64, LaurentPoly>) {
        (self.num.weight_parts(), self.den.weight_parts())
    }

    pub fn to_grammar_string(&self) -> String {
        self.to_string()
    }
}

/// Chart-aware partial derivative of a polynomial; rational because of ds.
fn poly_partial(p: &LaurentPoly, v: Var, chart: ChartTag) -> Result<RatExpr> {
    let formal = RatExpr::from_poly(p.deriv_formal(v));
    match chart {
        ChartTag::A => Ok(formal),
        ChartTag::B => {
            let (_, p1) = p.split_s();
            if p1.is_zero() {
                return Ok(formal);
            }
            let ds = ds_dv(v)?;
            Ok(formal.add(&RatExpr::from_poly(p1).mul(&ds)))
        }
    }
}

/// ds/dv in chart B, rationalized.
fn ds_dv(v: Var) -> Result<RatExpr> {
    let ssq = RatExpr::from_poly(LaurentPoly::s_square());
    let s = RatExpr::var(Var::S);
    match v {
        Var::Y => {
            // 6y^2 / s = 6y^2 s/(4y^3+u)
            let n = RatExpr::from_poly(LaurentPoly::term(rat_int(6), Mono::var(Var::Y, 2)));
            n.mul(&s).div(&ssq)
        }
        Var::U => {
            // 1/(2s) = s/(2(4y^3+u))
            s.div(&ssq.mul_rat(&rat_int(2)))
        }
        Var::X | Var::Alpha => Ok(RatExpr::zero()),
        _ => Err(Error::UnknownVariable(v)),
    }
}

fn poly_subst(p: &LaurentPoly, map: &BTreeMap<Var, RatExpr>) -> Result<RatExpr> {
    let mut acc = RatExpr::zero();
    for (m, c) in p.terms() {
        let mut t = RatExpr::from_rat(c.clone());
        for i in 0..NVARS {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let v = crate::var::ALL_VARS[i];
            let img = map.get(&v).cloned().unwrap_or_else(|| RatExpr::var(v));
            t = t.mul(&img.pow(e)?);
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// Convert between the charts: A -> B sends y' to s; B -> A sends s to y'
/// and u to y'^2 - 4y^3. Round trips are the identity.
pub fn chart_convert(e: &RatExpr, target: ChartTag) -> Result<RatExpr> {
    let mut map = BTreeMap::new();
    match target {
        ChartTag::B => {
            map.insert(Var::Yp, RatExpr::var(Var::S));
        }
        ChartTag::A => {
            map.insert(Var::S, RatExpr::var(Var::Yp));
            let u_img = RatExpr::from_poly(
                &LaurentPoly::var_pow(Var::Yp, 2)
                    - &LaurentPoly::term(rat_int(4), Mono::var(Var::Y, 3)),
            );
            map.insert(Var::U, u_img);
        }
    }
    let out = e.subst(&map)?;
    out.check_chart(target)?;
    Ok(out)
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn xv() -> RatExpr {
        RatExpr::var(Var::X)
    }
    fn yv() -> RatExpr {
        RatExpr::var(Var::Y)
    }
    fn ypv() -> RatExpr {
        RatExpr::var(Var::Yp)
    }
    fn uv() -> RatExpr {
        RatExpr::var(Var::U)
    }
    fn sv() -> RatExpr {
        RatExpr::var(Var::S)
    }

    #[test]
    fn gcd_cancellation_example() {
        // (x^2 - y^2)/(x - y) -> x + y
        let n = xv().mul(&xv()).sub(&yv().mul(&yv()));
        let d = xv().sub(&yv());
        let e = n.div(&d).unwrap();
        assert_eq!(e, xv().add(&yv()));
    }

    #[test]
    fn common_factor_example() {
        // (u*yp)/yp -> u
        let e = uv().mul(&ypv()).div(&ypv()).unwrap();
        assert_eq!(e, uv());
    }

    #[test]
    fn s_times_s_reduces() {
        let e = sv().mul(&sv());
        let expect = RatExpr::from_poly(LaurentPoly::s_square());
        assert_eq!(e, expect);
    }

    #[test]
    fn inverse_of_s_is_conjugated() {
        // 1/s = s/(4y^3+u); product with s equals 1
        let inv = sv().inv().unwrap();
        let expect = sv().div(&RatExpr::from_poly(LaurentPoly::s_square())).unwrap();
        assert_eq!(inv, expect);
        assert!(inv.mul(&sv()).is_one());
        assert!(!inv.den().uses(Var::S));
    }

    #[test]
    fn inverse_example() {
        // a * (1/a) = 1 for a = x + 2y/y'
        let a = xv().add(&yv().mul_rat(&rat_int(2)).div(&ypv()).unwrap());
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn sub_to_zero() {
        let a = yv().mul(&yv()).mul_rat(&rat_int(6)).add(&xv());
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn canonicalize_idempotent() {
        let e = xv()
            .add(&yv().mul_rat(&rat(2, 3)))
            .div(&ypv().mul(&uv()))
            .unwrap();
        assert_eq!(e.canonicalize(), e);
        assert_eq!(e.canonicalize().canonicalize(), e.canonicalize());
    }

    #[test]
    fn denominator_monic() {
        // 1/(2x - 2y): den normalized to x - y
        let e = RatExpr::one()
            .div(&xv().sub(&yv()).mul_rat(&rat_int(2)))
            .unwrap();
        assert_eq!(e.den().to_string(), "x - y");
        assert_eq!(e.num().to_string(), "1/2");
    }

    #[test]
    fn partial_derivative_examples() {
        // d(yp^2 - 4y^3)/dyp = 2yp in chart A
        let p = ypv()
            .mul(&ypv())
            .sub(&yv().pow(3).unwrap().mul_rat(&rat_int(4)));
        let d = p.partial(Var::Yp, ChartTag::A).unwrap();
        assert_eq!(d, ypv().mul_rat(&rat_int(2)));
        // d(x + 2y/yp)/dx = 1
        let a = xv().add(&yv().mul_rat(&rat_int(2)).div(&ypv()).unwrap());
        assert!(a.partial(Var::X, ChartTag::A).unwrap().is_one());
        // ds/dy = 6y^2 s/(4y^3+u) in chart B
        let ds = sv().partial(Var::Y, ChartTag::B).unwrap();
        let expect = yv()
            .pow(2)
            .unwrap()
            .mul_rat(&rat_int(6))
            .mul(&sv())
            .div(&RatExpr::from_poly(LaurentPoly::s_square()))
            .unwrap();
        assert_eq!(ds, expect);
    }

    #[test]
    fn chart_round_trip() {
        // u (chart B) -> yp^2 - 4y^3 (chart A) -> u
        let back = chart_convert(&uv(), ChartTag::A).unwrap();
        let expect = ypv()
            .pow(2)
            .unwrap()
            .sub(&yv().pow(3).unwrap().mul_rat(&rat_int(4)));
        assert_eq!(back, expect);
        // yp chart A -> s
        assert_eq!(chart_convert(&ypv(), ChartTag::B).unwrap(), sv());
        // round trip on a fraction
        let e = xv()
            .add(&yv().mul_rat(&rat_int(2)).div(&ypv()).unwrap());
        let rt = chart_convert(&chart_convert(&e, ChartTag::B).unwrap(), ChartTag::A).unwrap();
        assert_eq!(rt, e);
    }

    #[test]
    fn chart_b_image_of_u_plus_4y3() {
        // u + 4y^3 in chart B converts to yp^2 in chart A
        let e = uv().add(&yv().pow(3).unwrap().mul_rat(&rat_int(4)));
        let a = chart_convert(&e, ChartTag::A).unwrap();
        assert_eq!(a, ypv().pow(2).unwrap());
    }
}
