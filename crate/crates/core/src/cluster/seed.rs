use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, VarSet};
use crate::ratfun::RatFun;

use super::matrix::ExchangeMatrix;
use super::word::{Step, Word};

/// A y-seed whose variables are rational functions of the initial ones.
#[derive(Clone, Debug)]
pub struct Seed {
    pub ys: Vec<RatFun>,
    pub b: ExchangeMatrix,
}

impl Seed {
    pub fn initial(b: &ExchangeMatrix, vars: &VarSet) -> Result<Self> {
        if vars.len() != b.n() {
            return Err(Error::DimensionMismatch {
                expected: b.n(),
                found: vars.len(),
            });
        }
        Ok(Self {
            ys: (0..b.n()).map(|i| RatFun::var(vars, i)).collect(),
            b: b.clone(),
        })
    }

    pub fn vars(&self) -> &VarSet {
        self.ys[0].vars()
    }

    fn factor_base(&self) -> Vec<&LaurentPoly> {
        let mut base: Vec<&LaurentPoly> = Vec::new();
        for y in &self.ys {
            for (f, _) in y.factors() {
                if !base.contains(&f) {
                    base.push(f);
                }
            }
        }
        base
    }

    /// y-seed mutation at `k` (0-based).
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let b = self.b.mutate(k)?;
        let yk = &self.ys[k];
        let vars = self.vars().clone();
        let base = self.factor_base();
        // 1 + y_k, and 1 + y_k^{-1} = (1 + y_k) / y_k
        let plus = RatFun::sum(&vars, &[RatFun::one(&vars), yk.clone()], &base)?;
        let plus_inv = plus.try_mul(&yk.inv()?)?;
        let mut ys = Vec::with_capacity(self.ys.len());
        for (i, yi) in self.ys.iter().enumerate() {
            let bki = self.b.get(k, i);
            let y = if i == k {
                yk.inv()?
            } else if bki >= 0 {
                yi.try_mul(&plus_inv.pow(-bki)?)?
            } else {
                yi.try_mul(&plus.pow(-bki)?)?
            };
            ys.push(y);
        }
        Ok(Self { ys, b })
    }

    pub fn permute(&self, i: usize, j: usize) -> Result<Self> {
        let b = self.b.permute(i, j)?;
        let mut ys = self.ys.clone();
        ys.swap(i, j);
        Ok(Self { ys, b })
    }

    pub fn invert(&self) -> Result<Self> {
        Ok(Self {
            ys: self.ys.iter().map(|y| y.inv()).collect::<Result<_>>()?,
            b: self.b.clone(),
        })
    }

    pub fn apply_step(&self, s: &Step) -> Result<Self> {
        match *s {
            Step::Mutate(k) => self.mutate(k),
            Step::Permute(i, j) => self.permute(i, j),
            Step::Invert => self.invert(),
        }
    }

    /// Applies a word, right-most step first.
    pub fn apply(&self, w: &Word) -> Result<Self> {
        let mut s = self.clone();
        for step in w.application_order() {
            s = s.apply_step(step)?;
        }
        Ok(s)
    }

    /// Equality of y-values under cross-multiplication, and of matrices.
    pub fn equals(&self, other: &Self) -> bool {
        self.b == other.b
            && self.ys.len() == other.ys.len()
            && self.ys.iter().zip(&other.ys).all(|(a, b)| a.equals(b))
    }

    /// Indices where the y-values differ.
    pub fn differing(&self, ys: &[RatFun]) -> Vec<usize> {
        (0..self.ys.len())
            .filter(|&i| !self.ys[i].equals(&ys[i]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::ex;
    use crate::ratfun::RatFunField;

    fn markoff() -> (ExchangeMatrix, VarSet) {
        (
            ExchangeMatrix::new(vec![vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]]).unwrap(),
            VarSet::numbered("y", 3),
        )
    }

    fn rf(vars: &VarSet, s: &str) -> RatFun {
        ex(s).eval(&RatFunField { vars: vars.clone() }).unwrap()
    }

    #[test]
    fn r_generator_matches_hand_formula() {
        let (b, v) = markoff();
        let s = Seed::initial(&b, &v).unwrap();
        let r = s.apply(&Word::parse("s13 m1").unwrap()).unwrap();
        let expect = ["y3*(1 + 1/y1)^-2", "y2*(1 + y1)^2", "1/y1"];
        for (y, e) in r.ys.iter().zip(expect) {
            assert_eq!(y, &rf(&v, e));
        }
        assert_eq!(r.b, b);
    }

    #[test]
    fn mutation_is_involutive() {
        let (b, v) = markoff();
        let s = Seed::initial(&b, &v).unwrap();
        for k in 0..3 {
            let t = s.mutate(k).unwrap().mutate(k).unwrap();
            assert!(t.equals(&s));
            assert!(t.ys.iter().all(|y| y.is_monomial()));
        }
    }

    #[test]
    fn inversion_and_permutation_are_involutions() {
        let (b, v) = markoff();
        let s = Seed::initial(&b, &v).unwrap();
        assert!(s.invert().unwrap().invert().unwrap().equals(&s));
        assert!(s.permute(0, 2).unwrap().permute(0, 2).unwrap().equals(&s));
        assert_eq!(s.invert().unwrap().ys[1], rf(&v, "1/y2"));
        assert!(s.apply(&Word::identity()).unwrap().equals(&s));
    }
}
