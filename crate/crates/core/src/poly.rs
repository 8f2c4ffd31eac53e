//! Multivariate Laurent polynomials over Q in the fixed universe
//! `x, y, y', alpha, u, s`.
//!
//! Representation: a map from exponent vectors to nonzero rational
//! coefficients. Negative exponents are permitted only for `y'`, `u` and
//! `alpha`. The symbol `s` obeys `s^2 = 4y^3 + u`; reduction keeps every
//! stored s-exponent in {0, 1}. The monomial order is graded lexicographic
//! with `x > y > y' > alpha > u > s`; the leading term is the maximal one.

use crate::rat::{rat_int, rat_to_string, Rat};
use crate::var::{Var, ALL_VARS, NVARS};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector in the order x, y, y', alpha, u, s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [i32; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    pub fn var(v: Var, e: i32) -> Mono {
        let mut m = [0; NVARS];
        m[v as usize] = e;
        Mono(m)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v as usize]
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i] + other.0[i];
        }
        Mono(m)
    }

    pub fn div(&self, other: &Mono) -> Mono {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i] - other.0[i];
        }
        Mono(m)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Sigma-weight: x:+1, y:-2, y':-3, alpha:-1, u:-6, s:-3 per exponent.
    pub fn weight(&self) -> i64 {
        ALL_VARS
            .iter()
            .map(|&v| (self.exp(v) as i64) * v.weight())
            .sum()
    }
}

/// Graded lexicographic: compare total degree, then exponents in variable
/// order (larger exponent first wins).
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        LaurentPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rat::one(), Mono::var(v, 1))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::term(Rat::one(), Mono::var(v, e))
    }

    pub fn term(c: Rat, m: Mono) -> Self {
        let mut p = LaurentPoly {
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p.reduce_s();
        p
    }

    /// `4y^3 + u`, the square of `s`.
    pub fn s_square() -> Self {
        &Self::term(rat_int(4), Mono::var(Var::Y, 3)) + &Self::var(Var::U)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::ONE).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading (grlex-maximal) term.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn max_exp(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_exp(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.max_exp(v)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    pub fn has_negative_exp(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&e| e < 0))
    }

    fn insert_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Rewrite s^k with k >= 2 as (4y^3 + u)^(k div 2) * s^(k mod 2).
    fn reduce_s(&mut self) {
        let needs = self.terms.keys().any(|m| m.exp(Var::S) >= 2);
        if !needs {
            return;
        }
        let ssq = Self::s_square();
        let old = std::mem::take(&mut self.terms);
        for (m, c) in old {
            let se = m.exp(Var::S);
            if se < 2 {
                self.insert_term(m, c);
            } else {
                let k = se / 2;
                let r = se % 2;
                let mut base = m;
                base.0[Var::S as usize] = r;
                let mut repl = Self::term(c, base);
                for _ in 0..k {
                    repl = repl.mul_unreduced(&ssq);
                }
                for (mm, cc) in repl.terms {
                    self.insert_term(mm, cc);
                }
            }
        }
        // products of y^3/u with a residual s cannot re-create s^2
        debug_assert!(self.terms.keys().all(|m| m.exp(Var::S) < 2));
    }

    fn mul_unreduced(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        let mut out = LaurentPoly {
            terms: self.terms.iter().map(|(mm, c)| (mm.mul(m), c.clone())).collect(),
        };
        out.reduce_s();
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative (treats all six symbols as independent;
    /// the chart-aware derivative that knows ds lives on `RatExpr`).
    pub fn deriv_formal(&self, v: Var) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut mm = *m;
            mm.0[v as usize] = e - 1;
            out.insert_term(mm, c * rat_int(e as i64));
        }
        out
    }

    /// Split into the s-free part and the coefficient of s: p = p0 + s*p1.
    pub fn split_s(&self) -> (LaurentPoly, LaurentPoly) {
        let mut p0 = LaurentPoly::zero();
        let mut p1 = LaurentPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(Var::S) == 0 {
                p0.insert_term(*m, c.clone());
            } else {
                let mut mm = *m;
                mm.0[Var::S as usize] = 0;
                p1.insert_term(mm, c.clone());
            }
        }
        (p0, p1)
    }

    /// Coefficient of alpha^k, with the alpha factor removed.
    pub fn alpha_coefficient(&self, k: i32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(Var::Alpha) == k {
                let mut mm = *m;
                mm.0[Var::Alpha as usize] = 0;
                out.insert_term(mm, c.clone());
            }
        }
        out
    }

    /// Group terms by Sigma-weight.
    pub fn weight_parts(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight())
                .or_insert_with(LaurentPoly::zero)
                .insert_term(*m, c.clone());
        }
        out
    }

    /// The monomial that clears every negative exponent when multiplied in.
    pub fn laurent_clearing_mono(&self) -> Mono {
        let mut m = [0; NVARS];
        for t in self.terms.keys() {
            for i in 0..NVARS {
                if t.0[i] < -m[i] {
                    m[i] = -t.0[i];
                }
            }
        }
        for e in m.iter_mut() {
            if *e < 0 {
                *e = 0;
            }
        }
        Mono(m)
    }

    /// Substitute a rational value for every variable. Used by randomized
    /// identity checks. Returns None when an exponent is negative at a zero
    /// point or s appears (s is not a free value).
    pub fn eval(&self, vals: &[Rat; NVARS]) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            if m.exp(Var::S) != 0 {
                return None;
            }
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = &vals[i];
                if base.is_zero() && e < 0 {
                    return None;
                }
                let p = base.pow(e);
                t *= p;
            }
            acc += t;
        }
        Some(acc)
    }

    // ---- polynomial gcd machinery (nonnegative exponents only) ----

    /// Univariate view in `v`: exponent -> coefficient (v removed).
    fn univar(&self, v: Var) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut mm = *m;
            mm.0[v as usize] = 0;
            out.entry(e)
                .or_insert_with(LaurentPoly::zero)
                .insert_term(mm, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    fn from_univar(v: Var, map: BTreeMap<i32, LaurentPoly>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, p) in map {
            for (m, c) in p.terms {
                let mut mm = m;
                mm.0[v as usize] += e;
                out.insert_term(mm, c);
            }
        }
        out
    }

    fn first_var_used(&self, other: &Self) -> Option<Var> {
        ALL_VARS
            .iter()
            .copied()
            .find(|&v| self.uses(v) || other.uses(v))
    }

    /// Normalize so the grlex-leading coefficient is 1. Returns the factor
    /// that was divided out.
    pub fn make_monic(&mut self) -> Rat {
        if let Some((_, c)) = self.leading() {
            let c = c.clone();
            if !c.is_one() {
                for v in self.terms.values_mut() {
                    *v /= &c;
                }
            }
            c
        } else {
            Rat::one()
        }
    }

    /// gcd of two polynomials (no negative exponents). Result is monic.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        debug_assert!(!a.has_negative_exp() && !b.has_negative_exp());
        let mut g = Self::gcd_inner(a, b);
        g.make_monic();
        g
    }

    fn gcd_inner(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.is_constant() || b.is_constant() {
            return LaurentPoly::one();
        }
        let v = a.first_var_used(b).expect("nonconstant");
        if !a.uses(v) {
            let cont_b = Self::content_in(b, v);
            return Self::gcd_inner(a, &cont_b);
        }
        if !b.uses(v) {
            let cont_a = Self::content_in(a, v);
            return Self::gcd_inner(&cont_a, b);
        }
        let (cont_a, pp_a) = Self::content_primitive(a, v);
        let (cont_b, pp_b) = Self::content_primitive(b, v);
        let g_cont = Self::gcd_inner(&cont_a, &cont_b);
        let g_pp = Self::gcd_primitive(pp_a, pp_b, v);
        &g_cont * &g_pp
    }

    fn content_in(p: &LaurentPoly, v: Var) -> LaurentPoly {
        let uni = p.univar(v);
        let mut g = LaurentPoly::zero();
        for c in uni.values() {
            g = Self::gcd_inner(&g, c);
            if g.is_constant() && !g.is_zero() {
                return LaurentPoly::one();
            }
        }
        g
    }

    fn content_primitive(p: &LaurentPoly, v: Var) -> (LaurentPoly, LaurentPoly) {
        let cont = Self::content_in(p, v);
        let pp = p.divexact(&cont).expect("content divides");
        (cont, pp)
    }

    /// Primitive PRS gcd of two primitive polynomials in main variable v.
    fn gcd_primitive(a: LaurentPoly, b: LaurentPoly, v: Var) -> LaurentPoly {
        let (mut p, mut q) = if a.degree_in(v) >= b.degree_in(v) {
            (a, b)
        } else {
            (b, a)
        };
        loop {
            if q.is_zero() {
                return p;
            }
            let r = Self::pseudo_rem(&p, &q, v);
            if r.is_zero() {
                return q;
            }
            if !r.uses(v) {
                return LaurentPoly::one();
            }
            let (_, rp) = Self::content_primitive(&r, v);
            p = q;
            q = rp;
        }
    }

    /// Pseudo-remainder of p by q in variable v.
    fn pseudo_rem(p: &LaurentPoly, q: &LaurentPoly, v: Var) -> LaurentPoly {
        let dq = q.degree_in(v);
        let quni = q.univar(v);
        let lq = quni.get(&dq).cloned().expect("leading");
        let mut r = p.clone();
        while !r.is_zero() && r.degree_in(v) >= dq {
            let dr = r.degree_in(v);
            let runi = r.univar(v);
            let lr = runi.get(&dr).cloned().expect("leading");
            // r <- lq * r - lr * v^(dr-dq) * q
            let shifted = q.mul_mono(&Mono::var(v, dr - dq));
            r = &(&r * &lq) - &(&shifted * &lr);
            debug_assert!(r.degree_in(v) < dr || r.is_zero());
        }
        r
    }

    /// Exact division; None when the division is not exact.
    pub fn divexact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.mul_rat(&(Rat::one() / c)));
        }
        let (ld_m, ld_c) = {
            let (m, c) = d.leading().expect("nonzero");
            (*m, c.clone())
        };
        let mut r = self.clone();
        let mut q = LaurentPoly::zero();
        while !r.is_zero() {
            let (lr_m, lr_c) = {
                let (m, c) = r.leading().expect("nonzero");
                (*m, c.clone())
            };
            if !ld_m.divides(&lr_m) {
                return None;
            }
            let t_m = lr_m.div(&ld_m);
            let t_c = &lr_c / &ld_c;
            let t = LaurentPoly::term(t_c, t_m);
            let prev_lead = lr_m;
            r = &r - &(&t * d);
            q = &q + &t;
            if let Some((m, _)) = r.leading() {
                if *m >= prev_lead {
                    return None;
                }
            }
        }
        Some(q)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.mul_unreduced(other);
        out.reduce_s();
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending grlex order
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono_str = mono_to_string(m);
            if mono_str.is_empty() {
                write!(f, "{}", rat_to_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono_str}")?;
            } else {
                write!(f, "{}*{mono_str}", rat_to_string(&mag))?;
            }
        }
        Ok(())
    }
}

fn mono_to_string(m: &Mono) -> String {
    let mut parts = Vec::new();
    for v in ALL_VARS {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(v.name().to_string());
        } else {
            parts.push(format!("{}^{}", v.name(), e));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn x() -> LaurentPoly {
        LaurentPoly::var(Var::X)
    }
    fn y() -> LaurentPoly {
        LaurentPoly::var(Var::Y)
    }
    fn s() -> LaurentPoly {
        LaurentPoly::var(Var::S)
    }

    #[test]
    fn s_squared_reduces() {
        let p = &s() * &s();
        assert_eq!(p, LaurentPoly::s_square());
        let p3 = &p * &s();
        // s^3 = (4y^3+u) s
        assert_eq!(p3, &LaurentPoly::s_square() * &s());
        assert!(p3.terms.keys().all(|m| m.exp(Var::S) <= 1));
    }

    #[test]
    fn grlex_leading() {
        // x^2 > x*y > y^2 > x in grlex with x > y
        let p = &(&x() * &x()) + &(&x() * &y());
        let (m, _) = p.leading().unwrap();
        assert_eq!(*m, Mono::var(Var::X, 2));
    }

    #[test]
    fn gcd_cancellation() {
        // gcd(x^2 - y^2, x - y) = x - y (monic)
        let p = &(&x() * &x()) - &(&y() * &y());
        let q = &x() - &y();
        let g = LaurentPoly::gcd(&p, &q);
        assert_eq!(g, q);
        let quot = p.divexact(&g).unwrap();
        assert_eq!(quot, &x() + &y());
    }

    #[test]
    fn gcd_multivar() {
        // gcd((x+y)*(y+1), (x+y)*(x*y - 3)) = x + y
        let a = &(&x() + &y()) * &(&y() + &LaurentPoly::one());
        let b = &(&x() + &y()) * &(&(&x() * &y()) - &LaurentPoly::int(3));
        let g = LaurentPoly::gcd(&a, &b);
        assert_eq!(g, &x() + &y());
    }

    #[test]
    fn divexact_fails_cleanly() {
        let a = &x() + &LaurentPoly::one();
        assert!(a.divexact(&y()).is_none());
    }

    #[test]
    fn display_roundtrip_shape() {
        let p = &(&x() * &x()) - &(&y().mul_rat(&rat(1, 3))) ;
        assert_eq!(p.to_string(), "x^2 - 1/3*y");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn weight_parts() {
        // x has weight 1, y weight -2
        let p = &x() + &y();
        let parts = p.weight_parts();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&1], x());
        assert_eq!(parts[&-2], y());
    }
}
