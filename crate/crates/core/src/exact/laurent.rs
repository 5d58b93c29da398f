//! Sparse multivariate Laurent polynomials with half-integer exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{pow_int, render, render_frac, sqrt_exact, Rational};
use crate::error::{Error, Result};

/// Exponent vector stored doubled: entry `d` means exponent `d/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfVec(Vec<i32>);

impl HalfVec {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// Exponent vector of the generator `i` (doubled entry 2).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 2;
        Self(v)
    }

    pub fn from_doubled(v: Vec<i32>) -> Self {
        Self(v)
    }

    /// From actual integer exponents.
    pub fn from_integers(v: &[i32]) -> Self {
        Self(v.iter().map(|e| 2 * e).collect())
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, doubled: i32) {
        self.0[i] = doubled;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when all actual exponents are integers.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    /// Halves the doubled entries; `None` if some entry is odd.
    pub fn halve(&self) -> Option<Self> {
        if self.0.iter().all(|a| a % 2 == 0) {
            Some(Self(self.0.iter().map(|a| a / 2).collect()))
        } else {
            None
        }
    }

    /// Scales actual exponents by a rational `r`, if the result stays in the half lattice.
    pub fn scale_rational(&self, r: &Rational) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for &a in &self.0 {
            let v = r * Rational::from_integer(a.into());
            if !v.is_integer() {
                return None;
            }
            out.push(i32::try_from(v.to_integer()).ok()?);
        }
        Some(Self(out))
    }
}

/// Ordered list of variable names shared by all polynomials of one ring.
#[derive(Clone, Debug)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Self(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// `prefix1 … prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A new set with `extra` appended (names already present are skipped).
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Self {
        let mut v: Vec<String> = self.0.to_vec();
        for e in extra {
            if !v.iter().any(|n| n == e.as_ref()) {
                v.push(e.as_ref().to_string());
            }
        }
        Self(v.into())
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

/// Limit direction for [`LaurentPoly::leading`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// The variable grows without bound: keep the top-degree part.
    Infinity,
    /// The variable tends to zero: keep the degree-zero part.
    Zero,
}

/// Result of a leading-term extraction.
#[derive(Clone, Debug, PartialEq)]
pub struct Leading {
    pub poly: LaurentPoly,
    /// Power of the limit variable that was stripped.
    pub power: Rational,
}

/// A Laurent polynomial `Σ c_v y^v` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<HalfVec, Rational>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::monomial(vars, HalfVec::zero(vars.len()), c)
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Self::monomial(vars, HalfVec::unit(vars.len(), i), Rational::one())
    }

    pub fn monomial(vars: &VarSet, exp: HalfVec, c: Rational) -> Self {
        debug_assert_eq!(exp.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (HalfVec, Rational)>>(vars: &VarSet, it: I) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HalfVec, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &HalfVec) -> Option<&Rational> {
        self.terms.get(e)
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

    pub fn is_one(&self) -> bool {
        self.as_monomial()
            .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn as_monomial(&self) -> Option<(&HalfVec, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Lexicographically largest exponent and its coefficient.
    pub fn leading_term(&self) -> Option<(&HalfVec, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, e: HalfVec, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarSetMismatch {
                left: self.vars.names().join(","),
                right: other.vars.names().join(","),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `y^m`.
    pub fn shift(&self, m: &HalfVec) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.add(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `(c y^v)^r` for a single-term polynomial; requires `c^r` rational and
    /// `r v` in the half lattice.
    pub fn monomial_pow(&self, r: &Rational) -> Result<Self> {
        let (e, c) = self
            .as_monomial()
            .ok_or_else(|| Error::NonMonomial(self.to_string()))?;
        let exp = e
            .scale_rational(r)
            .ok_or_else(|| Error::NotASquare(self.to_string()))?;
        let coeff = rational_power(c, r).ok_or_else(|| Error::NotASquare(self.to_string()))?;
        Ok(Self::monomial(&self.vars, exp, coeff))
    }

    pub fn monomial_inverse(&self) -> Result<Self> {
        self.monomial_pow(&-Rational::one())
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Result<Self> {
        if i >= self.vars.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.vars.len(),
            });
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let d = e.get(i);
            if d == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.set(i, d - 2);
            out.add_term(ne, c * Rational::new(d.into(), 2.into()));
        }
        Ok(out)
    }

    /// Replaces every `y_i^e` by `image^e`, where `image` is a single-term
    /// polynomial over the same variables. The image may itself involve `y_i`
    /// (renormalisations such as `y2 -> y2/e`).
    pub fn subst_mono(&self, i: usize, image: &Self) -> Result<Self> {
        self.check(image)?;
        if i >= self.vars.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.vars.len(),
            });
        }
        let (m, c) = image
            .as_monomial()
            .ok_or_else(|| Error::NonMonomial(image.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (e, coeff) in &self.terms {
            let d = e.get(i);
            let mut ne = e.clone();
            ne.set(i, 0);
            // y_i^(d/2) -> m^(d/2)
            let ne = ne.add(&m.scale(d).halve().ok_or_else(|| {
                Error::NotASquare(format!("{image} raised to {}", render_frac(d as i64, 2)))
            })?);
            let k = rational_power(c, &Rational::new(d.into(), 2.into()))
                .ok_or_else(|| Error::NotASquare(image.to_string()))?;
            out.add_term(ne, coeff * k);
        }
        Ok(out)
    }

    /// Top-degree (or degree-zero) part in the variable `v`, with that power stripped.
    pub fn leading(&self, v: usize, dir: Direction) -> Result<Leading> {
        if v >= self.vars.len() {
            return Err(Error::IndexOutOfRange {
                index: v,
                len: self.vars.len(),
            });
        }
        if self.is_zero() {
            return Err(Error::Unsupported("leading part of the zero polynomial".into()));
        }
        let target = match dir {
            Direction::Infinity => self.terms.keys().map(|e| e.get(v)).max().unwrap_or(0),
            Direction::Zero => {
                if self.terms.keys().any(|e| e.get(v) < 0) {
                    return Err(Error::DivergentLimit {
                        var: self.vars.name(v).to_string(),
                        poly: self.to_string(),
                    });
                }
                0
            }
        };
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e.get(v) == target {
                let mut ne = e.clone();
                ne.set(v, 0);
                out.add_term(ne, c.clone());
            }
        }
        Ok(Leading {
            poly: out,
            power: Rational::new(target.into(), 2.into()),
        })
    }

    /// Exact evaluation. Variables raised to half-integer powers must be
    /// assigned perfect squares.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                found: point.len(),
            });
        }
        let roots: Vec<Option<Rational>> = point.iter().map(sqrt_exact).collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &d) in e.doubled().iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let f = if d % 2 == 0 {
                    pow_int(&point[i], (d / 2) as i64)
                } else {
                    let r = roots[i].as_ref().ok_or_else(|| {
                        Error::NotASquare(format!("{} = {}", self.vars.name(i), render(&point[i])))
                    })?;
                    pow_int(r, d as i64)
                };
                t *= f.ok_or(Error::DivisionByZero)?;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Moves the polynomial into another variable set, matching names.
    /// Variables missing from `target` must not occur.
    pub fn reindex(&self, target: &VarSet) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = HalfVec::zero(target.len());
            for (i, &d) in e.doubled().iter().enumerate() {
                if d == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => ne.set(j, ne.get(j) + d),
                    None => {
                        return Err(Error::UnknownVariable(format!(
                            "{} (still present in {})",
                            self.vars.name(i),
                            self
                        )))
                    }
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Applies a linear map to every exponent vector.
    pub fn map_exponents<F>(&self, target: &VarSet, f: F) -> Result<Self>
    where
        F: Fn(&HalfVec) -> Result<HalfVec>,
    {
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            out.add_term(f(e)?, c.clone());
        }
        Ok(out)
    }

    /// Componentwise minimum and maximum exponents over all terms.
    pub fn exponent_box(&self) -> Option<(HalfVec, HalfVec)> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        let (mut lo, mut hi) = (first.clone(), first);
        for e in it {
            for i in 0..e.len() {
                lo.set(i, lo.get(i).min(e.get(i)));
                hi.set(i, hi.get(i).max(e.get(i)));
            }
        }
        Some((lo, hi))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Lex-leading-term division; every quotient term must lie in the box
    /// `[min(self) - min(d), max(self) - max(d)]`, which bounds the loop.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || self.vars != d.vars {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(&self.vars));
        }
        let (alo, ahi) = self.exponent_box()?;
        let (dlo, dhi) = d.exponent_box()?;
        let lo = alo.sub(&dlo);
        let hi = ahi.sub(&dhi);
        if (0..lo.len()).any(|i| lo.get(i) > hi.get(i)) {
            return None;
        }
        let (dlead, dc) = d.leading_term()?;
        let (dlead, dc) = (dlead.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(&self.vars);
        while let Some((rl, rc)) = r.leading_term() {
            let t = rl.sub(&dlead);
            if (0..t.len()).any(|i| t.get(i) < lo.get(i) || t.get(i) > hi.get(i)) {
                return None;
            }
            let c = rc / &dc;
            for (e, v) in &d.terms {
                r.add_term(e.add(&t), -(v * &c));
            }
            q.add_term(t, c);
        }
        Some(q)
    }

    /// Exact square root with positive leading coefficient, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lo, hi) = self.exponent_box()?;
        let (lead, lc) = self.leading_term()?;
        let top = lead.halve()?;
        let two = Rational::from_integer(2.into());
        let mut root = Self::monomial(&self.vars, top.clone(), sqrt_exact(lc)?);
        let mut r = self - &(&root * &root);
        let lead_c = root.coeff(&top)?.clone();
        while let Some((rl, rc)) = r.leading_term() {
            // the next root term t satisfies 2 * top * t = leading(r)
            let t = rl.sub(&top);
            if (0..t.len()).any(|i| 2 * t.get(i) < lo.get(i) || 2 * t.get(i) > hi.get(i)) {
                return None;
            }
            let c = rc / (&two * &lead_c);
            let term = Self::monomial(&self.vars, t, c);
            let twice_root = root.scale(&two);
            r = &(&r - &(&twice_root * &term)) - &(&term * &term);
            root = &root + &term;
        }
        Some(root)
    }

    /// Substitutes `q = 1`-style constants: the sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }
}

/// `c^r` for a rational `r` with denominator 1 or 2.
pub(crate) fn rational_power(c: &Rational, r: &Rational) -> Option<Rational> {
    if c.is_one() {
        return Some(Rational::one());
    }
    let two = Rational::from_integer(2.into());
    if r.is_integer() {
        let k: i64 = r.to_integer().try_into().ok()?;
        return pow_int(c, k);
    }
    let r2 = r * &two;
    if !r2.is_integer() {
        return None;
    }
    let k: i64 = r2.to_integer().try_into().ok()?;
    let root = sqrt_exact(c)?;
    pow_int(&root, k)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("Laurent addition over mismatched variables")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("Laurent subtraction over mismatched variables")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("Laurent product over mismatched variables")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

/// Renders `name^(e)` for a doubled exponent; empty for zero.
pub(crate) fn render_power(name: &str, doubled: i32) -> String {
    match doubled {
        0 => String::new(),
        2 => name.to_string(),
        d if d % 2 == 0 && d > 0 => format!("{name}^{}", d / 2),
        d if d % 2 == 0 => format!("{name}^({})", d / 2),
        d => format!("{name}^({})", render_frac(d as i64, 2)),
    }
}

/// Renders a monomial as `y1^(1/2)*y3^(-1)`, or `1` for the empty monomial.
pub fn render_monomial(vars: &VarSet, e: &HalfVec) -> String {
    let parts: Vec<String> = e
        .doubled()
        .iter()
        .enumerate()
        .filter(|(_, d)| **d != 0)
        .map(|(i, d)| render_power(vars.name(i), *d))
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Shared term renderer: `coefficient*monomial` joined by ` + ` / ` - `.
pub(crate) fn render_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if mono == "1" {
            write!(f, "{}", render(&abs))?;
        } else if abs.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{}*{mono}", render(&abs))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    /// Terms in ascending lexicographic order of exponent vectors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.terms
                .iter()
                .map(|(e, c)| (render_monomial(&self.vars, e), c)),
        )
    }
}
