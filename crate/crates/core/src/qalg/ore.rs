//! Fractions `N · F_1^{-1} ⋯ F_m^{-1}` with pairwise commuting affine
//! denominators `F = 1 + q^a Y^v`, and the factored monomials
//! `c q^e Y^m Π F^k` that quantum mutation produces.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::laurent::render_monomial;
use crate::exact::rational::sqrt_exact;
use crate::exact::{HalfVec, QScalar, Rational};

use super::torus::{QRing, QTorusElem};

/// The affine element `1 + q^{a/4} Y^v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OreFactor {
    pub a: i32,
    pub v: HalfVec,
}

impl OreFactor {
    pub fn new(a: i32, v: HalfVec) -> Self {
        debug_assert!(!v.is_zero());
        Self { a, v }
    }

    pub fn to_elem(&self, ring: &Arc<QRing>) -> QTorusElem {
        QTorusElem::one(ring)
            .try_add(&QTorusElem::monomial(ring, self.v.clone(), QScalar::q_pow(self.a)))
            .expect("same ring")
    }

    /// `f'` with `Y^m · f' = f · Y^m`, i.e. the factor moved to the right of `Y^m`.
    pub fn push_right(&self, ring: &QRing, m: &HalfVec) -> Self {
        Self {
            a: self.a + ring.lambda(&self.v, m),
            v: self.v.clone(),
        }
    }

    /// `f'` with `Y^m · f = f' · Y^m`, the transport across a monomial on the left.
    pub fn push_left(&self, ring: &QRing, m: &HalfVec) -> Self {
        Self {
            a: self.a - ring.lambda(&self.v, m),
            v: self.v.clone(),
        }
    }

    pub fn render(&self, ring: &QRing) -> String {
        let mono = render_monomial(&ring.vars, &self.v);
        match self.a {
            0 => format!("(1 + {mono})"),
            a => format!("(1 + {}*{mono})", QScalar::q_pow(a)),
        }
    }
}

fn push(list: &mut Vec<(OreFactor, i32)>, f: OreFactor, k: i32) {
    if k == 0 {
        return;
    }
    if let Some(p) = list.iter().position(|(g, _)| g == &f) {
        list[p].1 += k;
        if list[p].1 == 0 {
            list.remove(p);
        }
    } else {
        list.push((f, k));
    }
}

fn check_commuting(ring: &QRing, list: &[(OreFactor, i32)]) -> Result<()> {
    for (i, (f, _)) in list.iter().enumerate() {
        for (g, _) in &list[i + 1..] {
            if ring.lambda(&f.v, &g.v) != 0 {
                return Err(Error::Unsupported(format!(
                    "affine factors {} and {} do not commute",
                    f.render(ring),
                    g.render(ring)
                )));
            }
        }
    }
    Ok(())
}

/// `c · q^{e/4} · Y^m · Π F_j^{k_j}` with commuting factors on the right.
#[derive(Clone, Debug)]
pub struct FactoredMono {
    ring: Arc<QRing>,
    pub coeff: Rational,
    pub q: i32,
    pub mono: HalfVec,
    pub factors: Vec<(OreFactor, i32)>,
}

impl FactoredMono {
    pub fn monomial(ring: &Arc<QRing>, coeff: Rational, q: i32, mono: HalfVec) -> Self {
        Self {
            ring: ring.clone(),
            coeff,
            q,
            mono,
            factors: Vec::new(),
        }
    }

    pub fn generator(ring: &Arc<QRing>, i: usize) -> Self {
        Self::monomial(ring, Rational::one(), 0, HalfVec::unit(ring.n(), i))
    }

    pub fn one(ring: &Arc<QRing>) -> Self {
        Self::monomial(ring, Rational::one(), 0, HalfVec::zero(ring.n()))
    }

    pub fn ring(&self) -> &Arc<QRing> {
        &self.ring
    }

    pub fn is_monomial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Right-multiplies by `f^k`.
    pub fn with_factor(mut self, f: OreFactor, k: i32) -> Result<Self> {
        push(&mut self.factors, f, k);
        check_commuting(&self.ring, &self.factors)?;
        self.fold_opposite()
    }

    /// Rewrites a factor along `-v` when one along `v` is already present, using
    /// `1 + q^a Y^v = q^a Y^v (1 + q^{θ(v,v)-a} Y^{-v})`.
    fn fold_opposite(mut self) -> Result<Self> {
        loop {
            let hit = (1..self.factors.len())
                .find(|&j| self.factors[..j].iter().any(|(g, _)| g.v == self.factors[j].0.v.neg()));
            let Some(j) = hit else { return Ok(self) };
            let (f, k) = self.factors.remove(j);
            // every other factor commutes with Y^v, so the monomial moves left freely
            let m = Self::monomial(&self.ring, Rational::one(), f.a, f.v.clone()).pow(k as i64)?;
            let mut out = self.mul(&m)?;
            let t = out.ring.theta(&f.v, &f.v);
            push(&mut out.factors, OreFactor::new(t - f.a, f.v.neg()), k);
            self = out;
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let ring = &self.ring;
        let mut factors: Vec<(OreFactor, i32)> = Vec::new();
        for (f, k) in &self.factors {
            push(&mut factors, f.push_right(ring, &other.mono), *k);
        }
        for (f, k) in &other.factors {
            push(&mut factors, f.clone(), *k);
        }
        check_commuting(ring, &factors)?;
        Self {
            ring: ring.clone(),
            coeff: &self.coeff * &other.coeff,
            q: self.q + other.q + ring.theta(&self.mono, &other.mono),
            mono: self.mono.add(&other.mono),
            factors,
        }
        .fold_opposite()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.coeff.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = &self.ring;
        let neg = self.mono.neg();
        // (Y^m)^{-1} = q^{θ(m,m)} Y^{-m}; the factors then move right of Y^{-m}
        let mut factors = Vec::new();
        for (f, k) in &self.factors {
            push(&mut factors, f.push_right(ring, &neg), -k);
        }
        Ok(Self {
            ring: ring.clone(),
            coeff: self.coeff.recip(),
            q: -self.q + ring.theta(&self.mono, &self.mono),
            mono: neg,
            factors,
        })
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(&self.ring);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// The square root `R = c' q^{e'} Y^{m/2} Π G` with `R² = self`.
    ///
    /// `R²` carries the factors `G ∪ shift(G)`, where `shift` transports a
    /// factor right across `Y^{m/2}`; along each direction `v` the shift is a
    /// constant `δ`, so `G` is recovered by peeling chains `a, a+δ, a+2δ, …`.
    pub fn sqrt(&self) -> Result<Self> {
        let ring = &self.ring;
        let not_square = || Error::NotASquare(self.to_string());
        let coeff = sqrt_exact(&self.coeff).ok_or_else(not_square)?;
        let half = self.mono.halve().ok_or_else(not_square)?;
        let t = ring.theta(&half, &half);
        if (self.q - t) % 2 != 0 {
            return Err(not_square());
        }
        let mut dirs: Vec<HalfVec> = Vec::new();
        for (f, _) in &self.factors {
            if !dirs.contains(&f.v) {
                dirs.push(f.v.clone());
            }
        }
        let mut g: Vec<(OreFactor, i32)> = Vec::new();
        for v in dirs {
            let delta = ring.lambda(&v, &half);
            let s: Vec<(i32, i32)> = self
                .factors
                .iter()
                .filter(|(f, _)| f.v == v)
                .map(|(f, k)| (f.a, *k))
                .collect();
            if delta == 0 {
                for (a, k) in s {
                    if k % 2 != 0 {
                        return Err(not_square());
                    }
                    push(&mut g, OreFactor::new(a, v.clone()), k / 2);
                }
                continue;
            }
            // S(a) = G(a) + G(a - δ); solve from the end the chains start at
            let count = |a: i32| s.iter().find(|x| x.0 == a).map_or(0, |x| x.1);
            let lo = s.iter().map(|x| x.0).min().unwrap_or(0);
            let hi = s.iter().map(|x| x.0).max().unwrap_or(0);
            let mut sol: std::collections::BTreeMap<i32, i32> = Default::default();
            let order: Vec<i32> = if delta > 0 {
                (lo..=hi + delta).collect()
            } else {
                (lo + delta..=hi).rev().collect()
            };
            for a in order {
                let prev = sol.get(&(a - delta)).copied().unwrap_or(0);
                let k = count(a) - prev;
                if k != 0 {
                    if a < lo || a > hi {
                        return Err(not_square());
                    }
                    sol.insert(a, k);
                }
            }
            for (a, k) in sol {
                push(&mut g, OreFactor::new(a, v.clone()), k);
            }
        }
        let root = Self {
            ring: ring.clone(),
            coeff,
            q: (self.q - t) / 2,
            mono: half,
            factors: g,
        };
        // the chain bookkeeping is easy to get wrong; confirm exactly
        let sq = root.mul(&root)?;
        if !sq.to_ore().equals(&self.to_ore())? {
            return Err(not_square());
        }
        Ok(root)
    }

    /// Numerator gets the positive factors, denominators the negative ones.
    pub fn to_ore(&self) -> OreFraction {
        let ring = &self.ring;
        let mut num = QTorusElem::monomial(
            ring,
            self.mono.clone(),
            QScalar::monomial(self.coeff.clone(), self.q),
        );
        let mut dens = Vec::new();
        for (f, k) in &self.factors {
            if *k > 0 {
                for _ in 0..*k {
                    num = num.try_mul(&f.to_elem(ring)).expect("same ring");
                }
            } else {
                dens.push((f.clone(), -k));
            }
        }
        OreFraction {
            num,
            dens,
        }
    }

    pub fn scale(&self, c: &Rational, q: i32) -> Self {
        let mut out = self.clone();
        out.coeff *= c;
        out.q += q;
        out
    }
}

impl fmt::Display for FactoredMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = QTorusElem::monomial(
            &self.ring,
            self.mono.clone(),
            QScalar::monomial(self.coeff.clone(), self.q),
        );
        write!(f, "{head}")?;
        for (g, k) in &self.factors {
            if *k == 1 {
                write!(f, "*{}", g.render(&self.ring))?;
            } else {
                write!(f, "*{}^({k})", g.render(&self.ring))?;
            }
        }
        Ok(())
    }
}

/// `num · Π dens^{-1}` with pairwise commuting affine denominators.
#[derive(Clone, Debug)]
pub struct OreFraction {
    pub num: QTorusElem,
    pub dens: Vec<(OreFactor, i32)>,
}

impl OreFraction {
    pub fn from_elem(x: QTorusElem) -> Self {
        Self {
            num: x,
            dens: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<QRing> {
        self.num.ring()
    }

    /// `num · dens^{-1}` rewritten over `target ⊇ dens`.
    fn over(&self, target: &[(OreFactor, i32)]) -> Result<QTorusElem> {
        let ring = self.ring();
        let mut num = self.num.clone();
        for (f, k) in target {
            let have = self.dens.iter().find(|(g, _)| g == f).map_or(0, |x| x.1);
            for _ in have..*k {
                num = num.try_mul(&f.to_elem(ring))?;
            }
        }
        Ok(num)
    }

    fn common(&self, other: &Self) -> Result<Vec<(OreFactor, i32)>> {
        let mut all = self.dens.clone();
        for (f, k) in &other.dens {
            match all.iter_mut().find(|(g, _)| g == f) {
                Some(slot) => slot.1 = slot.1.max(*k),
                None => all.push((f.clone(), *k)),
            }
        }
        check_commuting(self.ring(), &all)?;
        Ok(all)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let dens = self.common(other)?;
        let num = self.over(&dens)?.try_add(&other.over(&dens)?)?;
        Ok(Self { num, dens })
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            dens: self.dens.clone(),
        }
    }

    /// `(N₁ D₁^{-1})(N₂ D₂^{-1})`: every term `Y^m` of `N₂` is moved left of
    /// `D₁^{-1}`, transporting the factors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let ring = self.ring().clone();
        let mut acc: Option<Self> = None;
        for (m, c) in other.num.terms() {
            let mut dens = Vec::new();
            for (f, k) in &self.dens {
                push(&mut dens, f.push_right(&ring, m), *k);
            }
            for (f, k) in &other.dens {
                push(&mut dens, f.clone(), *k);
            }
            check_commuting(&ring, &dens)?;
            let num = self
                .num
                .try_mul(&QTorusElem::monomial(&ring, m.clone(), c.clone()))?;
            let t = Self { num, dens };
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::from_elem(QTorusElem::zero(&ring))))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality after clearing both denominators on the right.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        let dens = self.common(other)?;
        Ok(self.over(&dens)? == other.over(&dens)?)
    }

    /// `self - x` cleared of denominators; zero iff the two agree.
    pub fn residual(&self, x: &Self) -> Result<QTorusElem> {
        let dens = self.common(x)?;
        self.over(&dens)?.try_sub(&x.over(&dens)?)
    }
}

impl fmt::Display for OreFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.num)?;
        for (g, k) in &self.dens {
            write!(f, "*{}^({})", g.render(self.ring()), -k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::ExchangeMatrix;
    use crate::exact::VarSet;
    use crate::expr::ex;
    use crate::qalg::torus::QTorusAlgebra;

    fn ring() -> Arc<QRing> {
        let b = ExchangeMatrix::new(vec![vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]]).unwrap();
        QRing::new(&b, &VarSet::numbered("Y", 3)).unwrap()
    }

    fn e(r: &Arc<QRing>, s: &str) -> QTorusElem {
        ex(s).eval(&QTorusAlgebra { ring: r.clone() }).unwrap()
    }

    #[test]
    fn push_through_generator() {
        let r = ring();
        // Y2 (1 + q Y1) = (1 + q^{-3} Y1) Y2
        let f = OreFactor::new(4, HalfVec::unit(3, 0));
        let g = f.push_left(&r, &HalfVec::unit(3, 1));
        assert_eq!(g, OreFactor::new(-12, HalfVec::unit(3, 0)));
        let lhs = e(&r, "Y2").try_mul(&f.to_elem(&r)).unwrap();
        let rhs = g.to_elem(&r).try_mul(&e(&r, "Y2")).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(f.push_left(&r, &HalfVec::zero(3)), f);
    }

    #[test]
    fn cancellation_after_push() {
        let r = ring();
        let f = OreFactor::new(4, HalfVec::unit(3, 0));
        let inv = OreFraction {
            num: QTorusElem::one(&r),
            dens: vec![(f.clone(), 1)],
        };
        let prod = inv.mul(&OreFraction::from_elem(f.to_elem(&r))).unwrap();
        assert!(prod.equals(&OreFraction::from_elem(QTorusElem::one(&r))).unwrap());
        let one = OreFraction::from_elem(QTorusElem::one(&r));
        assert!(!one.equals(&OreFraction::from_elem(e(&r, "Y1"))).unwrap());
    }

    #[test]
    fn factored_square_roots() {
        let r = ring();
        let x = FactoredMono::generator(&r, 2)
            .with_factor(OreFactor::new(4, HalfVec::unit(3, 0).neg()), -1)
            .unwrap()
            .with_factor(OreFactor::new(12, HalfVec::unit(3, 0).neg()), -1)
            .unwrap();
        let y = x.mul(&FactoredMono::generator(&r, 0)).unwrap();
        let root = y.sqrt().unwrap();
        assert!(root.mul(&root).unwrap().to_ore().equals(&y.to_ore()).unwrap());
        let rx = x.sqrt().unwrap();
        assert!(rx.mul(&rx).unwrap().to_ore().equals(&x.to_ore()).unwrap());
        let lone = FactoredMono::generator(&r, 2)
            .with_factor(OreFactor::new(4, HalfVec::unit(3, 0).neg()), -1)
            .unwrap();
        assert!(lone.sqrt().is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let r = ring();
        let x = FactoredMono::generator(&r, 1)
            .with_factor(OreFactor::new(4, HalfVec::unit(3, 0)), 1)
            .unwrap()
            .with_factor(OreFactor::new(12, HalfVec::unit(3, 0)), 1)
            .unwrap();
        let one = FactoredMono::one(&r).to_ore();
        assert!(x.mul(&x.inv().unwrap()).unwrap().to_ore().equals(&one).unwrap());
        assert!(x.inv().unwrap().mul(&x).unwrap().to_ore().equals(&one).unwrap());
    }

    #[test]
    fn opposite_factors_fold_into_one_direction() {
        let r = ring();
        // (1 + q Y1^{-1}) (1 + q^{-1} Y1)^{-1} = q Y1^{-1}
        let x = FactoredMono::one(&r)
            .with_factor(OreFactor::new(4, HalfVec::unit(3, 0).neg()), 1)
            .unwrap()
            .with_factor(OreFactor::new(-4, HalfVec::unit(3, 0)), -1)
            .unwrap();
        assert!(x.is_monomial());
        assert!(x.to_ore().equals(&OreFraction::from_elem(e(&r, "q*Y1^-1"))).unwrap());
    }
}
