//! A small expression language shared by preset data and CLI input.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exp)?
//! exp    := int | '-' int | '(' ['-'] int ['/' int] ')'
//! atom   := number | ident | ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! Products are kept in the written order, so the same tree evaluates
//! correctly in noncommutative targets.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{pow_int, render, sqrt_exact};
use crate::exact::{LaurentPoly, Rational, VarSet};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    /// Variables referenced by the expression, in first-occurrence order.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn eval<A: Algebra>(&self, alg: &A) -> Result<A::Elem> {
        match self {
            Expr::Num(c) => alg.constant(c),
            Expr::Var(v) => alg.var(v),
            Expr::Neg(a) => alg.neg(&a.eval(alg)?),
            Expr::Add(a, b) => alg.add(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Sub(a, b) => {
                let nb = alg.neg(&b.eval(alg)?)?;
                alg.add(&a.eval(alg)?, &nb)
            }
            Expr::Mul(a, b) => alg.mul(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Div(a, b) => {
                let inv = alg.pow(&b.eval(alg)?, &-Rational::one())?;
                alg.mul(&a.eval(alg)?, &inv)
            }
            Expr::Pow(a, r) => alg.pow(&a.eval(alg)?, r),
        }
    }
}

/// Parses, panicking on malformed input. Only for built-in data tables.
pub fn ex(src: &str) -> Expr {
    Expr::parse(src).unwrap_or_else(|e| panic!("bad built-in expression {src:?}: {e}"))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(c) => write!(f, "{}", crate::exact::rational::render(c)),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/({b})"),
            Expr::Pow(a, r) => write!(f, "({a})^({})", crate::exact::rational::render(r)),
        }
    }
}

/// An evaluation target for [`Expr`].
pub trait Algebra {
    type Elem: Clone;
    fn constant(&self, c: &Rational) -> Result<Self::Elem>;
    fn var(&self, name: &str) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn neg(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    /// `a^r`; targets decide which rational exponents they support.
    fn pow(&self, a: &Self::Elem, r: &Rational) -> Result<Self::Elem>;
}

/// Wraps an algebra, resolving some names to fixed elements first.
pub struct Bound<'a, A: Algebra> {
    pub inner: &'a A,
    pub bindings: HashMap<String, A::Elem>,
}

impl<'a, A: Algebra> Bound<'a, A> {
    pub fn new(inner: &'a A) -> Self {
        Self {
            inner,
            bindings: HashMap::new(),
        }
    }

    pub fn bind(mut self, name: &str, value: A::Elem) -> Self {
        self.bindings.insert(name.to_string(), value);
        self
    }

    pub fn with<I: IntoIterator<Item = (String, A::Elem)>>(mut self, it: I) -> Self {
        self.bindings.extend(it);
        self
    }
}

impl<A: Algebra> Algebra for Bound<'_, A> {
    type Elem = A::Elem;
    fn constant(&self, c: &Rational) -> Result<A::Elem> {
        self.inner.constant(c)
    }
    fn var(&self, name: &str) -> Result<A::Elem> {
        match self.bindings.get(name) {
            Some(v) => Ok(v.clone()),
            None => self.inner.var(name),
        }
    }
    fn add(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        self.inner.add(a, b)
    }
    fn neg(&self, a: &A::Elem) -> Result<A::Elem> {
        self.inner.neg(a)
    }
    fn mul(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        self.inner.mul(a, b)
    }
    fn pow(&self, a: &A::Elem, r: &Rational) -> Result<A::Elem> {
        self.inner.pow(a, r)
    }
}

/// Commutative Laurent polynomials over a fixed variable set.
#[derive(Clone, Debug)]
pub struct LaurentRing {
    pub vars: VarSet,
}

impl LaurentRing {
    pub fn new(vars: &VarSet) -> Self {
        Self { vars: vars.clone() }
    }

    pub fn eval(&self, e: &Expr) -> Result<LaurentPoly> {
        e.eval(self)
    }
}

impl Algebra for LaurentRing {
    type Elem = LaurentPoly;
    fn constant(&self, c: &Rational) -> Result<LaurentPoly> {
        Ok(LaurentPoly::constant(&self.vars, c.clone()))
    }
    fn var(&self, name: &str) -> Result<LaurentPoly> {
        Ok(LaurentPoly::var(&self.vars, self.vars.require(name)?))
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        a.try_add(b)
    }
    fn neg(&self, a: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(-a)
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        a.try_mul(b)
    }
    fn pow(&self, a: &LaurentPoly, r: &Rational) -> Result<LaurentPoly> {
        if r.is_integer() && !r.is_negative() {
            let k: u32 = r
                .to_integer()
                .try_into()
                .map_err(|_| Error::Unsupported(format!("exponent {r}")))?;
            return Ok(a.pow(k));
        }
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        a.monomial_pow(r)
    }
}

/// Exact rational numbers; every name must be bound. Used as a numeric oracle.
#[derive(Clone, Copy, Debug, Default)]
pub struct Numbers;

impl Algebra for Numbers {
    type Elem = Rational;
    fn constant(&self, c: &Rational) -> Result<Rational> {
        Ok(c.clone())
    }
    fn var(&self, name: &str) -> Result<Rational> {
        Err(Error::UnknownVariable(name.to_string()))
    }
    fn add(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        Ok(a + b)
    }
    fn neg(&self, a: &Rational) -> Result<Rational> {
        Ok(-a)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        Ok(a * b)
    }
    fn pow(&self, a: &Rational, r: &Rational) -> Result<Rational> {
        let two = Rational::from_integer(2.into());
        let (base, k) = if r.is_integer() {
            (a.clone(), r.to_integer())
        } else if (r * &two).is_integer() {
            let root = sqrt_exact(a).ok_or_else(|| Error::NotASquare(render(a)))?;
            (root, (r * &two).to_integer())
        } else {
            return Err(Error::Unsupported(format!("exponent {r}")));
        };
        let k: i64 = k
            .try_into()
            .map_err(|_| Error::Unsupported(format!("exponent {r}")))?;
        pow_int(&base, k).ok_or(Error::DivisionByZero)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let r = if self.eat(b'(') {
            let neg = self.eat(b'-');
            let n = self.integer()?;
            let d = if self.eat(b'/') {
                self.integer()?
            } else {
                BigInt::one()
            };
            self.expect(b')')?;
            if d.is_zero() {
                return Err(self.error("zero denominator in exponent"));
            }
            let r = Rational::new(n, d);
            if neg {
                -r
            } else {
                r
            }
        } else {
            let neg = self.eat(b'-');
            let n = Rational::from_integer(self.integer()?);
            if neg {
                -n
            } else {
                n
            }
        };
        Ok(Expr::Pow(Box::new(base), r))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(Rational::from_integer(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos])
                    .expect("ascii identifier")
                    .to_string();
                if self.peek() == Some(b'(') {
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.expect(b')')?;
                    return match name.as_str() {
                        "sqrt" => Ok(Expr::Pow(Box::new(arg), Rational::new(1.into(), 2.into()))),
                        _ => Err(self.error(&format!("unknown function `{name}`"))),
                    };
                }
                Ok(Expr::Var(name))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
