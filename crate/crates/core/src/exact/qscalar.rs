//! Laurent polynomials in `q^(1/4)` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{render, render_frac, Rational};

/// A finite sum `Σ c_e q^(e/4)`. Keys are quadrupled exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QScalar {
    terms: BTreeMap<i32, Rational>,
}

impl QScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · q^(quarters/4)`.
    pub fn monomial(c: Rational, quarters: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(quarters, c);
        }
        Self { terms }
    }

    /// `q^(quarters/4)`.
    pub fn q_pow(quarters: i32) -> Self {
        Self::monomial(Rational::one(), quarters)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial()
            .is_some_and(|(e, c)| e == 0 && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The single term `(quarters, coefficient)` if this is a monomial.
    pub fn as_monomial(&self) -> Option<(i32, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Multiplies by `q^(quarters/4)`.
    pub fn shift(&self, quarters: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + quarters, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Inverse of a monomial scalar.
    pub fn inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        Some(Self::monomial(c.recip(), -e))
    }

    fn add_term(&mut self, e: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        let mut out = QScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for QScalar {
            type Output = QScalar;
            fn $f(self, rhs: QScalar) -> QScalar { (&self).$f(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

fn q_factor(quarters: i32) -> String {
    match quarters {
        0 => String::new(),
        4 => "q".to_string(),
        _ if quarters % 4 == 0 && quarters > 0 => format!("q^{}", quarters / 4),
        _ => format!("q^({})", render_frac(quarters as i64, 4)),
    }
}

impl fmt::Display for QScalar {
    /// Terms in ascending q-degree, e.g. `q^(-1/4) + 2*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let qf = q_factor(*e);
            match (abs.is_one(), qf.is_empty()) {
                (_, true) => write!(f, "{}", render(&abs))?,
                (true, false) => write!(f, "{qf}")?,
                (false, false) => write!(f, "{}*{qf}", render(&abs))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn q(e: i32) -> QScalar {
        QScalar::q_pow(4 * e)
    }

    #[test]
    fn quarter_powers_cancel() {
        let p = &QScalar::q_pow(1) * &QScalar::q_pow(-1);
        assert!(p.is_one());
    }

    #[test]
    fn difference_of_squares() {
        let a = &q(1) - &q(-1);
        let b = &q(1) + &q(-1);
        assert_eq!(&a * &b, &q(2) - &q(-2));
    }

    #[test]
    fn adding_zero() {
        assert_eq!(&q(1) + &QScalar::zero(), q(1));
    }

    #[test]
    fn rendering() {
        let s = &(&QScalar::q_pow(-1) + &QScalar::monomial(int(-2), 4)) + &QScalar::one();
        assert_eq!(s.to_string(), "q^(-1/4) + 1 - 2*q");
        assert_eq!(q(2).to_string(), "q^2");
        assert_eq!(QScalar::q_pow(2).to_string(), "q^(1/2)");
    }
}
