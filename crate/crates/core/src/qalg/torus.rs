//! The quantum torus `Y_k Y_j = q^{2 b_jk} Y_j Y_k` in the normal-ordered basis.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};

use crate::cluster::ExchangeMatrix;
use crate::error::{Error, Result};
use crate::exact::laurent::{render_monomial, render_terms};
use crate::exact::rational::sqrt_exact;
use crate::exact::{Direction, HalfVec, LaurentPoly, QScalar, Rational, VarSet};
use crate::expr::Algebra;

/// Generators `Y_1 … Y_n` with the commutation data of `b`.
#[derive(Debug, PartialEq, Eq)]
pub struct QRing {
    pub b: ExchangeMatrix,
    pub vars: VarSet,
}

impl QRing {
    pub fn new(b: &ExchangeMatrix, vars: &VarSet) -> Result<Arc<Self>> {
        if b.n() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: b.n(),
                found: vars.len(),
            });
        }
        Ok(Arc::new(Self {
            b: b.clone(),
            vars: vars.clone(),
        }))
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    /// `Y^a Y^b = q^{θ(a,b)} Y^{a+b}`, returned in quarter units:
    /// `4θ = 2 Σ_{k<j} a2_j b2_k b_kj` for doubled exponents.
    pub fn theta(&self, a: &HalfVec, b: &HalfVec) -> i32 {
        let n = self.n();
        let mut s: i64 = 0;
        for j in 0..n {
            let aj = a.get(j) as i64;
            if aj == 0 {
                continue;
            }
            for k in 0..j {
                s += aj * b.get(k) as i64 * self.b.get(k, j);
            }
        }
        (2 * s) as i32
    }

    /// `Y^v Y^m = q^{λ} Y^m Y^v`; quarter units.
    pub fn lambda(&self, v: &HalfVec, m: &HalfVec) -> i32 {
        self.theta(v, m) - self.theta(m, v)
    }
}

#[derive(Clone, Debug)]
pub struct QTorusElem {
    ring: Arc<QRing>,
    terms: BTreeMap<HalfVec, QScalar>,
}

impl QTorusElem {
    pub fn zero(ring: &Arc<QRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(ring: &Arc<QRing>, c: QScalar) -> Self {
        Self::monomial(ring, HalfVec::zero(ring.n()), c)
    }

    pub fn one(ring: &Arc<QRing>) -> Self {
        Self::scalar(ring, QScalar::one())
    }

    pub fn generator(ring: &Arc<QRing>, i: usize) -> Self {
        Self::monomial(ring, HalfVec::unit(ring.n(), i), QScalar::one())
    }

    /// `c · Y^v` with `Y^v` the normal-ordered basis element.
    pub fn monomial(ring: &Arc<QRing>, v: HalfVec, c: QScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(v, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<QRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HalfVec, &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_monomial(&self) -> Option<(&HalfVec, &QScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Number of `(monomial, q-power)` pairs, the size of the fully expanded form.
    pub fn expanded_len(&self) -> usize {
        self.terms.values().map(QScalar::len).sum()
    }

    fn add_term(&mut self, v: HalfVec, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&v) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&v);
                }
            }
            None => {
                self.terms.insert(v, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::VarSetMismatch {
                left: self.ring.vars.names().join(","),
                right: other.ring.vars.names().join(","),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(v, c)| (v.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = Self::zero(&self.ring);
        for (v, x) in &self.terms {
            out.add_term(v.clone(), x * c);
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.ring);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let t = self.ring.theta(a, b);
                out.add_term(a.add(b), (ca * cb).shift(t));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// `(c q^e Y^v)^r` for `r ∈ ½ℤ`; the root is fixed by `(X^{1/2})² = X`
    /// with a positive rational coefficient.
    pub fn monomial_pow(&self, r: &Rational) -> Result<Self> {
        let (v, c) = self
            .as_monomial()
            .ok_or_else(|| Error::NonMonomial(self.to_string()))?;
        let (e, coeff) = c
            .as_monomial()
            .ok_or_else(|| Error::NonMonomial(self.to_string()))?;
        let two = Rational::from_integer(2.into());
        let r2 = r * &two;
        if !r2.is_integer() {
            return Err(Error::Unsupported(format!("exponent {r} on {self}")));
        }
        let k: i32 = r2
            .to_integer()
            .try_into()
            .map_err(|_| Error::Unsupported(format!("exponent {r}")))?;
        // X^{k/2} = (X^{1/2})^k; first the square root if k is odd
        let (base_v, base_e, base_c) = if k % 2 == 0 {
            (v.clone(), e, coeff.clone())
        } else {
            let hv = v
                .halve()
                .ok_or_else(|| Error::NotASquare(self.to_string()))?;
            let t = self.ring.theta(&hv, &hv);
            if (e - t) % 2 != 0 {
                return Err(Error::NotASquare(self.to_string()));
            }
            let sc = sqrt_exact(coeff).ok_or_else(|| Error::NotASquare(self.to_string()))?;
            (hv, (e - t) / 2, sc)
        };
        let steps = if k % 2 == 0 { k / 2 } else { k };
        let base = Self::monomial(&self.ring, base_v, QScalar::monomial(base_c, base_e));
        if steps >= 0 {
            base.pow(steps as u32)
        } else {
            base.monomial_inverse()?.pow((-steps) as u32)
        }
    }

    /// Inverse of `c q^e Y^v`: `(Y^v)^{-1} = q^{θ(v,v)} Y^{-v}`.
    pub fn monomial_inverse(&self) -> Result<Self> {
        let (v, c) = self
            .as_monomial()
            .ok_or_else(|| Error::NonMonomial(self.to_string()))?;
        let cinv = c
            .inverse()
            .ok_or_else(|| Error::NonMonomial(self.to_string()))?;
        let t = self.ring.theta(v, v);
        Ok(Self::monomial(&self.ring, v.neg(), cinv.shift(t)))
    }

    /// Top-degree (or degree-zero) part in a central generator `v`, with
    /// that power stripped. Mirrors [`LaurentPoly::leading`].
    pub fn leading(&self, v: usize, dir: Direction) -> Result<(Self, Rational)> {
        if (0..self.ring.n()).any(|j| self.ring.b.get(v, j) != 0) {
            return Err(Error::Unsupported(format!(
                "{} is not central",
                self.ring.vars.name(v)
            )));
        }
        if self.is_zero() {
            return Err(Error::Unsupported("leading part of zero".into()));
        }
        let target = match dir {
            Direction::Infinity => self.terms.keys().map(|e| e.get(v)).max().unwrap_or(0),
            Direction::Zero => {
                if self.terms.keys().any(|e| e.get(v) < 0) {
                    return Err(Error::DivergentLimit {
                        var: self.ring.vars.name(v).to_string(),
                        poly: self.to_string(),
                    });
                }
                0
            }
        };
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            if e.get(v) == target {
                let mut ne = e.clone();
                ne.set(v, 0);
                out.add_term(ne, c.clone());
            }
        }
        Ok((out, Rational::new(target.into(), 2.into())))
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.check(other).is_ok() && self.terms == other.terms
    }

    /// Sets `q = 1` and reads normal-ordered monomials commutatively.
    pub fn classical_limit(&self, vars: &VarSet) -> Result<LaurentPoly> {
        if vars.len() != self.ring.n() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.n(),
                found: vars.len(),
            });
        }
        Ok(LaurentPoly::from_terms(
            vars,
            self.terms.iter().map(|(v, c)| (v.clone(), c.at_one())),
        ))
    }
}

impl PartialEq for QTorusElem {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for QTorusElem {
    /// Scalar coefficients first, then the normal-ordered monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<(String, Rational)> = Vec::new();
        for (v, c) in &self.terms {
            let mono = render_monomial(&self.ring.vars, v);
            for (e, r) in c.terms() {
                let qf = QScalar::q_pow(e).to_string();
                let m = match (qf.as_str(), mono.as_str()) {
                    ("1", m) => m.to_string(),
                    (q, "1") => q.to_string(),
                    (q, m) => format!("{q}*{m}"),
                };
                pieces.push((m, r.clone()));
            }
        }
        render_terms(f, pieces.iter().map(|(m, c)| (m.clone(), c)))
    }
}

/// Expression target: names of the ring's generators and `q`.
#[derive(Clone, Debug)]
pub struct QTorusAlgebra {
    pub ring: Arc<QRing>,
}

impl Algebra for QTorusAlgebra {
    type Elem = QTorusElem;
    fn constant(&self, c: &Rational) -> Result<QTorusElem> {
        Ok(QTorusElem::scalar(&self.ring, QScalar::from_rational(c.clone())))
    }
    fn var(&self, name: &str) -> Result<QTorusElem> {
        if name == "q" {
            return Ok(QTorusElem::scalar(&self.ring, QScalar::q_pow(4)));
        }
        Ok(QTorusElem::generator(&self.ring, self.ring.vars.require(name)?))
    }
    fn add(&self, a: &QTorusElem, b: &QTorusElem) -> Result<QTorusElem> {
        a.try_add(b)
    }
    fn neg(&self, a: &QTorusElem) -> Result<QTorusElem> {
        Ok(a.neg())
    }
    fn mul(&self, a: &QTorusElem, b: &QTorusElem) -> Result<QTorusElem> {
        a.try_mul(b)
    }
    fn pow(&self, a: &QTorusElem, r: &Rational) -> Result<QTorusElem> {
        if r.is_integer() && !r.is_negative() {
            let k: u32 = r
                .to_integer()
                .try_into()
                .map_err(|_| Error::Unsupported(format!("exponent {r}")))?;
            return a.pow(k);
        }
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (q^{e/4})^r for any rational r with e·r integral, so q^(-1/4) is allowed
        if let Some((v, c)) = a.as_monomial() {
            if let Some((e, coeff)) = c.as_monomial() {
                let er = r * Rational::from_integer(e.into());
                if v.is_zero() && coeff.is_one() && er.is_integer() {
                    let e: i32 = er
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Unsupported(format!("exponent {r}")))?;
                    return Ok(QTorusElem::scalar(&self.ring, QScalar::q_pow(e)));
                }
            }
        }
        a.monomial_pow(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::ex;

    fn markoff() -> QTorusAlgebra {
        let b = ExchangeMatrix::new(vec![vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]]).unwrap();
        QTorusAlgebra {
            ring: QRing::new(&b, &VarSet::numbered("Y", 3)).unwrap(),
        }
    }

    fn q(a: &QTorusAlgebra, s: &str) -> QTorusElem {
        ex(s).eval(a).unwrap()
    }

    #[test]
    fn defining_relation() {
        let a = markoff();
        assert_eq!(q(&a, "Y3*Y1"), q(&a, "q^4*Y1*Y3"));
        assert_eq!(q(&a, "Y3*Y1").to_string(), "q^4*Y1*Y3");
        assert_eq!(q(&a, "Y2*Y1"), q(&a, "q^(-4)*Y1*Y2"));
    }

    #[test]
    fn half_exponent_reordering() {
        let a = markoff();
        let lhs = q(&a, "Y3^(1/2)*Y1^(1/2)");
        assert_eq!(lhs, q(&a, "q*Y1^(1/2)*Y3^(1/2)"));
        assert_eq!(q(&a, "Y1^(1/2)*Y1^(1/2)"), q(&a, "Y1"));
        assert_eq!(q(&a, "Y3^(1/2)*Y3^(1/2)*Y1^(1/2)*Y1^(1/2)"), q(&a, "Y3*Y1"));
    }

    #[test]
    fn monomial_powers_and_inverses() {
        let a = markoff();
        let x = q(&a, "q^(1/2)*Y1*Y3");
        let r = x.monomial_pow(&Rational::new(1.into(), 2.into())).unwrap();
        assert_eq!(r.pow(2).unwrap(), x);
        let inv = x.monomial_inverse().unwrap();
        assert_eq!(inv.try_mul(&x).unwrap(), QTorusElem::one(&a.ring));
        assert_eq!(x.try_mul(&inv).unwrap(), QTorusElem::one(&a.ring));
        assert!(q(&a, "Y1 + Y2").monomial_inverse().is_err());
        assert_eq!(q(&a, "q^(-1/4)*q^(1/4)"), QTorusElem::one(&a.ring));
        assert_eq!(q(&a, "(q^(-1/4))^4"), q(&a, "q^(-1)"));
    }

    #[test]
    fn classical_limit_drops_q() {
        let a = markoff();
        let x = q(&a, "q*Y1 - Y1");
        assert!(x.classical_limit(&VarSet::numbered("y", 3)).unwrap().is_zero());
        let y = q(&a, "q^(-1/2)*Y3^(1/2)*Y1^(1/2) + q^(1/2)*Y3^(-1/2)*Y1^(1/2)");
        assert_eq!(
            y.classical_limit(&VarSet::numbered("y", 3)).unwrap().to_string(),
            "y1^(1/2)*y3^(-1/2) + y1^(1/2)*y3^(1/2)"
        );
    }
}
