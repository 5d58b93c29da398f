//! Commutative rational functions in the initial y-variables.
//!
//! Values are kept as `c * y^m * Π f_j^{e_j}` with each `f_j` a Laurent
//! polynomial normalised to have no monomial content and leading coefficient 1.
//! Mutated y-variables factor through F-polynomials, and keeping the product
//! unexpanded stops long mutation words from growing without bound. New
//! factors are split against the known ones by exact trial division, so
//! cancellations such as `μ_k ∘ μ_k = id` happen structurally.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::laurent::render_monomial;
use crate::exact::rational::{pow_int, sqrt_exact};
use crate::exact::{HalfVec, LaurentPoly, Rational, VarSet};
use crate::expr::Algebra;

#[derive(Clone, Debug)]
pub struct RatFun {
    vars: VarSet,
    coeff: Rational,
    mono: HalfVec,
    factors: Vec<(LaurentPoly, i32)>,
}

impl RatFun {
    pub fn zero(vars: &VarSet) -> Self {
        Self {
            vars: vars.clone(),
            coeff: Rational::zero(),
            mono: HalfVec::zero(vars.len()),
            factors: Vec::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self {
            vars: vars.clone(),
            coeff: c,
            mono: HalfVec::zero(vars.len()),
            factors: Vec::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Self::monomial(vars, HalfVec::unit(vars.len(), i), Rational::one())
    }

    pub fn monomial(vars: &VarSet, m: HalfVec, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(vars);
        }
        Self {
            vars: vars.clone(),
            coeff: c,
            mono: m,
            factors: Vec::new(),
        }
    }

    /// Wraps a Laurent polynomial, splitting off monomial content.
    pub fn from_poly(p: &LaurentPoly) -> Self {
        Self::from_poly_with_base(p, &[])
    }

    /// Like [`RatFun::from_poly`], but first divides out every polynomial of
    /// `base` as often as it goes.
    pub fn from_poly_with_base(p: &LaurentPoly, base: &[&LaurentPoly]) -> Self {
        let vars = p.vars().clone();
        let Some((lo, _)) = p.exponent_box() else {
            return Self::zero(&vars);
        };
        let mut rest = p.shift(&lo.neg());
        let mut factors: Vec<(LaurentPoly, i32)> = Vec::new();
        for f in base {
            if f.len() < 2 || f.vars() != &vars {
                continue;
            }
            let mut k = 0;
            while rest.len() >= f.len() {
                match rest.exact_div(f) {
                    Some(q) => {
                        rest = q;
                        k += 1;
                    }
                    None => break,
                }
            }
            if k > 0 {
                push_factor(&mut factors, (*f).clone(), k);
            }
        }
        // division by content-free factors can leave monomial content behind
        let (lo2, _) = rest.exponent_box().expect("nonzero quotient");
        let rest = rest.shift(&lo2.neg());
        let mono = lo.add(&lo2);
        let (_, lc) = rest.leading_term().expect("nonzero quotient");
        let coeff = lc.clone();
        if rest.len() > 1 {
            let f = rest.scale(&coeff.recip());
            push_factor(&mut factors, f, 1);
        }
        Self {
            vars,
            coeff,
            mono,
            factors,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coeff
    }

    pub fn monomial_part(&self) -> &HalfVec {
        &self.mono
    }

    /// Normalised polynomial factors with their (nonzero) exponents.
    pub fn factors(&self) -> &[(LaurentPoly, i32)] {
        &self.factors
    }

    pub fn is_monomial(&self) -> bool {
        self.factors.is_empty()
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

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let mut factors = self.factors.clone();
        for (f, e) in &other.factors {
            push_factor(&mut factors, f.clone(), *e);
        }
        Ok(Self {
            vars: self.vars.clone(),
            coeff: &self.coeff * &other.coeff,
            mono: self.mono.add(&other.mono),
            factors,
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            vars: self.vars.clone(),
            coeff: self.coeff.recip(),
            mono: self.mono.neg(),
            factors: self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect(),
        })
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if n == 0 {
            return Ok(Self::one(&self.vars));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let k = i32::try_from(n).map_err(|_| Error::Unsupported(format!("exponent {n}")))?;
        Ok(Self {
            vars: self.vars.clone(),
            coeff: pow_int(&self.coeff, n).expect("nonzero base"),
            mono: self.mono.scale(k),
            factors: self.factors.iter().map(|(f, e)| (f.clone(), e * k)).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.coeff = -out.coeff;
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        out.coeff *= c;
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Self::sum(&self.vars, &[self.clone(), other.clone()], &[])
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    /// Sum of several fractions over their common part, with the new
    /// numerator split against `extra_base` and the summands' own factors.
    pub fn sum(vars: &VarSet, items: &[Self], extra_base: &[&LaurentPoly]) -> Result<Self> {
        for it in items {
            if &it.vars != vars {
                return Err(Error::VarSetMismatch {
                    left: vars.names().join(","),
                    right: it.vars.names().join(","),
                });
            }
        }
        let live: Vec<&Self> = items.iter().filter(|x| !x.is_zero()).collect();
        if live.is_empty() {
            return Ok(Self::zero(vars));
        }
        if live.len() == 1 {
            return Ok(live[0].clone());
        }
        // common part: minimal monomial and minimal exponent of every factor
        let n = vars.len();
        let mut mono = live[0].mono.clone();
        for x in &live[1..] {
            for i in 0..n {
                mono.set(i, mono.get(i).min(x.mono.get(i)));
            }
        }
        let mut common: Vec<(LaurentPoly, i32)> = Vec::new();
        for x in &live {
            for (f, _) in &x.factors {
                if !common.iter().any(|(g, _)| g == f) {
                    let e = live.iter().map(|y| y.exponent_of(f)).min().unwrap_or(0);
                    common.push((f.clone(), e));
                }
            }
        }
        let mut total = LaurentPoly::zero(vars);
        for x in &live {
            let mut p = LaurentPoly::monomial(vars, x.mono.sub(&mono), x.coeff.clone());
            for (f, emin) in &common {
                let k = x.exponent_of(f) - emin;
                debug_assert!(k >= 0);
                for _ in 0..k {
                    p = &p * f;
                }
            }
            total = &total + &p;
        }
        if total.is_zero() {
            return Ok(Self::zero(vars));
        }
        let mut base: Vec<&LaurentPoly> = common.iter().map(|(f, _)| f).collect();
        base.extend_from_slice(extra_base);
        let split = Self::from_poly_with_base(&total, &base);
        let mut factors: Vec<(LaurentPoly, i32)> = Vec::new();
        for (f, e) in common.into_iter().chain(split.factors) {
            push_factor(&mut factors, f, e);
        }
        Ok(Self {
            vars: vars.clone(),
            coeff: split.coeff,
            mono: mono.add(&split.mono),
            factors,
        })
    }

    fn exponent_of(&self, f: &LaurentPoly) -> i32 {
        self.factors
            .iter()
            .find(|(g, _)| g == f)
            .map_or(0, |(_, e)| *e)
    }

    /// Representation-independent equality.
    pub fn equals(&self, other: &Self) -> bool {
        if self.vars != other.vars {
            return false;
        }
        if self.structurally_equal(other) {
            return true;
        }
        self.try_sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    fn structurally_equal(&self, other: &Self) -> bool {
        self.coeff == other.coeff
            && self.mono == other.mono
            && self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .all(|(f, e)| other.exponent_of(f) == *e)
    }

    /// Expanded numerator: coefficient, positive monomial part and factors.
    pub fn num(&self) -> LaurentPoly {
        self.expand(1)
    }

    /// Expanded denominator.
    pub fn den(&self) -> LaurentPoly {
        self.expand(-1)
    }

    fn expand(&self, sign: i32) -> LaurentPoly {
        let n = self.vars.len();
        let m = HalfVec::from_doubled(
            (0..n)
                .map(|i| (sign * self.mono.get(i)).max(0))
                .collect(),
        );
        let c = if sign > 0 {
            self.coeff.clone()
        } else {
            Rational::one()
        };
        let mut p = LaurentPoly::monomial(&self.vars, m, c);
        for (f, e) in &self.factors {
            let k = sign * e;
            if k > 0 {
                p = &p * &f.pow(k as u32);
            }
        }
        p
    }

    /// Square root: coefficient and factor exponents must be even squares,
    /// monomial exponents must stay in the half lattice.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let not_square = || Error::NotASquare(self.to_string());
        let coeff = sqrt_exact(&self.coeff).ok_or_else(not_square)?;
        let mono = self.mono.halve().ok_or_else(not_square)?;
        let mut out = Self::monomial(&self.vars, mono, coeff);
        for (f, e) in &self.factors {
            if e % 2 == 0 {
                push_factor(&mut out.factors, f.clone(), e / 2);
            } else {
                let root = f.sqrt().ok_or_else(not_square)?;
                let r = Self::from_poly(&root).pow(*e as i64)?;
                out = out.try_mul(&r)?;
            }
        }
        Ok(out)
    }

    /// Image of the monomial `y^v` when `y_i ↦ images[i]`.
    pub fn monomial_image(v: &HalfVec, images: &[Self], vars: &VarSet) -> Result<Self> {
        let all_even = v.is_integral();
        let mut acc = Self::one(vars);
        for (i, &d) in v.doubled().iter().enumerate() {
            if d != 0 {
                let k = if all_even { d / 2 } else { d };
                acc = acc.try_mul(&images[i].pow(k as i64)?)?;
            }
        }
        if all_even {
            Ok(acc)
        } else {
            acc.sqrt()
        }
    }

    /// Substitutes `y_i ↦ images[i]` into a Laurent polynomial.
    pub fn subst_poly(p: &LaurentPoly, images: &[Self]) -> Result<Self> {
        if images.len() != p.vars().len() {
            return Err(Error::DimensionMismatch {
                expected: p.vars().len(),
                found: images.len(),
            });
        }
        let vars = images
            .first()
            .map(|x| x.vars.clone())
            .unwrap_or_else(|| p.vars().clone());
        let mut terms = Vec::with_capacity(p.len());
        for (e, c) in p.terms() {
            terms.push(Self::monomial_image(e, images, &vars)?.scale(c));
        }
        let base: Vec<&LaurentPoly> = images
            .iter()
            .flat_map(|x| x.factors.iter().map(|(f, _)| f))
            .collect();
        Self::sum(&vars, &terms, &base)
    }

    /// Simultaneous substitution `y_i ↦ images[i]`.
    pub fn subst(&self, images: &[Self]) -> Result<Self> {
        let vars = images
            .first()
            .map(|x| x.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        if self.is_zero() {
            return Ok(Self::zero(&vars));
        }
        let mut out = Self::monomial_image(&self.mono, images, &vars)?.scale(&self.coeff);
        for (f, e) in &self.factors {
            let fi = Self::subst_poly(f, images)?;
            out = out.try_mul(&fi.pow(*e as i64)?)?;
        }
        Ok(out)
    }

    /// Exact value at a point; half exponents need square coordinates.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let m = LaurentPoly::monomial(&self.vars, self.mono.clone(), self.coeff.clone());
        let mut acc = m.eval(point)?;
        for (f, e) in &self.factors {
            let v = f.eval(point)?;
            acc *= pow_int(&v, *e as i64).ok_or(Error::DivisionByZero)?;
        }
        Ok(acc)
    }

    /// Factored rendering, e.g. `y1^2*y3*(1 + y1)^(-2)`.
    pub fn factored(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        let mono = render_monomial(&self.vars, &self.mono);
        let c = crate::exact::rational::render(&self.coeff);
        match (self.coeff.is_one(), mono == "1") {
            (true, true) if !self.factors.is_empty() => {}
            (true, _) => parts.push(mono),
            (false, true) => parts.push(c),
            (false, false) if self.coeff == -Rational::one() => parts.push(format!("-{mono}")),
            (false, false) => parts.push(format!("{c}*{mono}")),
        }
        for (f, e) in &self.factors {
            if *e == 1 {
                parts.push(format!("({f})"));
            } else if *e > 0 {
                parts.push(format!("({f})^{e}"));
            } else {
                parts.push(format!("({f})^({e})"));
            }
        }
        parts.join("*")
    }
}

fn push_factor(factors: &mut Vec<(LaurentPoly, i32)>, f: LaurentPoly, e: i32) {
    if e == 0 {
        return;
    }
    if let Some(pos) = factors.iter().position(|(g, _)| g == &f) {
        factors[pos].1 += e;
        if factors[pos].1 == 0 {
            factors.remove(pos);
        }
    } else {
        factors.push((f, e));
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RatFun {
    /// `num / den` in the Laurent grammar; the denominator is omitted when 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.den();
        if den.is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({}) / ({})", self.num(), den)
        }
    }
}

/// Field of rational functions over a fixed variable set, for [`crate::expr::Expr`].
#[derive(Clone, Debug)]
pub struct RatFunField {
    pub vars: VarSet,
}

impl Algebra for RatFunField {
    type Elem = RatFun;
    fn constant(&self, c: &Rational) -> Result<RatFun> {
        Ok(RatFun::constant(&self.vars, c.clone()))
    }
    fn var(&self, name: &str) -> Result<RatFun> {
        Ok(RatFun::var(&self.vars, self.vars.require(name)?))
    }
    fn add(&self, a: &RatFun, b: &RatFun) -> Result<RatFun> {
        a.try_add(b)
    }
    fn neg(&self, a: &RatFun) -> Result<RatFun> {
        Ok(a.neg())
    }
    fn mul(&self, a: &RatFun, b: &RatFun) -> Result<RatFun> {
        a.try_mul(b)
    }
    fn pow(&self, a: &RatFun, r: &Rational) -> Result<RatFun> {
        if r.is_integer() {
            let n: i64 = r
                .to_integer()
                .try_into()
                .map_err(|_| Error::Unsupported(format!("exponent {r}")))?;
            return a.pow(n);
        }
        let twice = r * Rational::from_integer(2.into());
        if !twice.is_integer() {
            return Err(Error::Unsupported(format!("exponent {r}")));
        }
        let n: i64 = twice
            .to_integer()
            .try_into()
            .map_err(|_| Error::Unsupported(format!("exponent {r}")))?;
        a.pow(n)?.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::expr::ex;

    fn field() -> RatFunField {
        RatFunField {
            vars: VarSet::numbered("y", 3),
        }
    }

    fn rf(s: &str) -> RatFun {
        ex(s).eval(&field()).unwrap()
    }

    #[test]
    fn reciprocal_product_is_one() {
        assert_eq!(rf("y1 * (1/y1)"), rf("1"));
        assert!(rf("y1 * (1/y1)").is_monomial());
    }

    #[test]
    fn negative_power_of_binomial() {
        let a = rf("(1 + y1)^-2");
        assert!(a.num().is_one());
        assert_eq!(a.den(), rf("(1+y1)^2").num());
        assert_eq!(a.factored(), "(1 + y1)^(-2)");
    }

    #[test]
    fn adding_zero() {
        let a = rf("y2/(1+y1)");
        assert_eq!(a.try_add(&RatFun::zero(&field().vars)).unwrap(), a);
    }

    #[test]
    fn cross_multiplied_equality() {
        assert_eq!(rf("y1/y2"), rf("(y1*y3)/(y2*y3)"));
        assert_ne!(rf("y1"), rf("y2"));
        assert_eq!(rf("(y1^2 - 1)/(y1 - 1)"), rf("y1 + 1"));
        assert_eq!(rf("1/(1+y1) + y1/(1+y1)"), rf("1"));
    }

    #[test]
    fn known_factors_are_split_off() {
        let base = rf("1 + y1").num();
        let p = rf("(1 + y1)^2*(1 + y2)").num();
        let s = RatFun::from_poly_with_base(&p, &[&base]);
        assert_eq!(s.factors().len(), 2);
        assert!(s.factors().contains(&(base, 2)));
        let t = rf("(1 + y1)^-1").try_mul(&rf("(1+y1)*(1+y2)")).unwrap();
        assert_eq!(t.factors().len(), 1);
    }

    #[test]
    fn square_roots() {
        let a = rf("y3*y1*(1+y1)^-2");
        assert_eq!(a.sqrt().unwrap(), rf("sqrt(y1*y3)/(1+y1)"));
        assert!(rf("y1*(1+y1)").sqrt().is_err());
        let b = RatFun::from_poly(&rf("(1 + 2*y1 + y1^2)").num());
        assert_eq!(b.sqrt().unwrap(), rf("1 + y1"));
    }

    #[test]
    fn substitution() {
        let id: Vec<RatFun> = (0..3).map(|i| RatFun::var(&field().vars, i)).collect();
        let a = rf("y3*(1 + 1/y1)^-2 + y2");
        assert_eq!(a.subst(&id).unwrap(), a);
        let ones = vec![rf("1"), rf("1"), rf("1")];
        assert_eq!(a.subst(&ones).unwrap(), RatFun::constant(&field().vars, rat(5, 4)));
        assert_eq!(a.eval(&[int(1), int(1), int(1)]).unwrap(), rat(5, 4));
    }
}
