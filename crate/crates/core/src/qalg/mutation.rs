//! Quantum y-seed mutation on factored monomial values.

use std::sync::Arc;

use num_traits::One;

use crate::cluster::{ExchangeMatrix, Step, Word};
use crate::error::{Error, Result};
use crate::exact::{HalfVec, Rational, VarSet};

use super::ore::{FactoredMono, OreFactor, OreFraction};
use super::torus::{QRing, QTorusElem};

/// Current quantum y-values, expressed in the initial quantum torus.
#[derive(Clone, Debug)]
pub struct QSeed {
    pub ys: Vec<FactoredMono>,
    pub b: ExchangeMatrix,
}

impl QSeed {
    pub fn initial(ring: &Arc<QRing>) -> Self {
        Self {
            ys: (0..ring.n()).map(|i| FactoredMono::generator(ring, i)).collect(),
            b: ring.b.clone(),
        }
    }

    /// `Ỹ_k = Y_k^{-1}`, `Ỹ_i = Y_i Π_{m=1}^{b_ki} (1 + q^{2m-1} Y_k^{-1})^{-1}` for
    /// `b_ki > 0`, and `Ỹ_i = Y_i Π_{m=1}^{-b_ki} (1 + q^{2m-1} Y_k)` for `b_ki < 0`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let b = self.b.mutate(k)?;
        let yk = &self.ys[k];
        if !yk.is_monomial() || !yk.coeff.is_one() {
            return Err(Error::Unsupported(format!(
                "quantum mutation at vertex {} whose value {yk} is not a monomial",
                k + 1
            )));
        }
        let yk_inv = yk.inv()?;
        let mut ys = Vec::with_capacity(self.ys.len());
        for (i, yi) in self.ys.iter().enumerate() {
            let bki = self.b.get(k, i);
            let y = if i == k {
                yk_inv.clone()
            } else if bki > 0 {
                let mut y = yi.clone();
                for m in 1..=bki as i32 {
                    y = y.with_factor(OreFactor::new(4 * (2 * m - 1) + yk_inv.q, yk_inv.mono.clone()), -1)?;
                }
                y
            } else if bki < 0 {
                let mut y = yi.clone();
                for m in 1..=(-bki) as i32 {
                    y = y.with_factor(OreFactor::new(4 * (2 * m - 1) + yk.q, yk.mono.clone()), 1)?;
                }
                y
            } else {
                yi.clone()
            };
            ys.push(y);
        }
        Ok(Self { ys, b })
    }

    pub fn apply_step(&self, s: &Step) -> Result<Self> {
        match *s {
            Step::Mutate(k) => self.mutate(k),
            Step::Permute(i, j) => {
                let mut ys = self.ys.clone();
                ys.swap(i, j);
                Ok(Self {
                    ys,
                    b: self.b.permute(i, j)?,
                })
            }
            Step::Invert => Ok(Self {
                ys: self.ys.iter().map(|y| y.inv()).collect::<Result<_>>()?,
                b: self.b.clone(),
            }),
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Self> {
        let mut s = self.clone();
        for step in w.application_order() {
            s = s.apply_step(step)?;
        }
        Ok(s)
    }

    /// Checks `Ỹ_k Ỹ_j = q^{2 b̃_jk} Ỹ_j Ỹ_k` for every pair.
    pub fn q_commutation_defects(&self) -> Result<Vec<(usize, usize)>> {
        let mut bad = Vec::new();
        let n = self.ys.len();
        for j in 0..n {
            for k in j + 1..n {
                let lhs = self.ys[k].mul(&self.ys[j])?;
                let rhs = self.ys[j]
                    .mul(&self.ys[k])?
                    .scale(&Rational::one(), 8 * self.b.get(j, k) as i32);
                if !lhs.to_ore().equals(&rhs.to_ore())? {
                    bad.push((j, k));
                }
            }
        }
        Ok(bad)
    }

    /// Image of `Y^v` (normal-ordered, `v ∈ ½ℤⁿ`) under `Y_i ↦ ys[i]`.
    ///
    /// For half-integral `v` the image is the square root of the image of
    /// `(Y^v)² = q^{θ(v,v)} Y^{2v}`, following `(Y^{1/2})² = Y`.
    pub fn monomial_image(&self, v: &HalfVec) -> Result<FactoredMono> {
        let ring = self.ys[0].ring().clone();
        let doubled = v.doubled();
        let integral = v.is_integral();
        let mut acc = FactoredMono::one(&ring);
        for (i, &d) in doubled.iter().enumerate() {
            let k = if integral { d / 2 } else { d };
            if k != 0 {
                acc = acc.mul(&self.ys[i].pow(k as i64)?)?;
            }
        }
        if integral {
            Ok(acc)
        } else {
            acc.scale(&Rational::one(), ring.theta(v, v)).sqrt()
        }
    }

    /// Image of a torus element as an Ore fraction.
    pub fn image(&self, x: &QTorusElem) -> Result<OreFraction> {
        let ring = self.ys[0].ring().clone();
        let mut acc = OreFraction::from_elem(QTorusElem::zero(&ring));
        for (v, c) in x.terms() {
            let m = self.monomial_image(v)?;
            for (e, r) in c.terms() {
                acc = acc.add(&m.scale(r, e).to_ore())?;
            }
        }
        Ok(acc)
    }
}

/// Images of the initial generators under a word.
pub fn q_mutate_word(b: &ExchangeMatrix, vars: &VarSet, w: &Word) -> Result<QSeed> {
    let ring = QRing::new(b, vars)?;
    QSeed::initial(&ring).apply(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::ex;
    use crate::qalg::torus::QTorusAlgebra;

    fn markoff() -> ExchangeMatrix {
        ExchangeMatrix::new(vec![vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]]).unwrap()
    }

    #[test]
    fn torus_r_generator() {
        let s = q_mutate_word(&markoff(), &VarSet::numbered("Y", 3), &Word::parse("s13 m1").unwrap()).unwrap();
        let ring = s.ys[0].ring().clone();
        let alg = QTorusAlgebra { ring: ring.clone() };
        let e = |x: &str| ex(x).eval(&alg).unwrap();
        let cleared = s.ys[0]
            .to_ore()
            .mul(&OreFraction::from_elem(e("(1 + q*Y1^-1)*(1 + q^3*Y1^-1)")))
            .unwrap();
        assert!(cleared.equals(&OreFraction::from_elem(e("Y3"))).unwrap());
        assert_eq!(s.ys[0].to_string(), "Y3*(1 + q*Y1^(-1))^(-1)*(1 + q^3*Y1^(-1))^(-1)");
        assert!(s.ys[1]
            .to_ore()
            .equals(&OreFraction::from_elem(e("Y2*(1 + q*Y1)*(1 + q^3*Y1)")))
            .unwrap());
        assert!(s.ys[2]
            .to_ore()
            .equals(&OreFraction::from_elem(e("Y1^-1")))
            .unwrap());
        assert!(s.q_commutation_defects().unwrap().is_empty());
    }

    #[test]
    fn images_of_half_monomials() {
        let b = markoff();
        let ring = QRing::new(&b, &VarSet::numbered("Y", 3)).unwrap();
        let alg = QTorusAlgebra { ring: ring.clone() };
        let e = |x: &str| ex(x).eval(&alg).unwrap();
        let s = QSeed::initial(&ring).apply(&Word::parse("s13 m1").unwrap()).unwrap();
        // Y1^(1/2) Y3^(1/2) maps to a root whose square is the image of Y1 Y3
        let x = e("Y1^(1/2)*Y3^(1/2)");
        let img = s.image(&x).unwrap();
        let sq = img.mul(&img).unwrap();
        let direct = s.image(&x.try_mul(&x).unwrap()).unwrap();
        assert!(sq.equals(&direct).unwrap());
        let id = QSeed::initial(&ring);
        assert!(id.image(&e("q*Y2^(-1/2)*Y3 + Y1")).unwrap().equals(&OreFraction::from_elem(e("q*Y2^(-1/2)*Y3 + Y1"))).unwrap());
    }

    #[test]
    fn empty_word_is_identity() {
        let s = q_mutate_word(&markoff(), &VarSet::numbered("Y", 3), &Word::identity()).unwrap();
        let ring = s.ys[0].ring().clone();
        for (i, y) in s.ys.iter().enumerate() {
            assert!(y.to_ore().equals(&OreFraction::from_elem(QTorusElem::generator(&ring, i))).unwrap());
        }
    }

    #[test]
    fn non_monomial_vertex_is_rejected() {
        let r = q_mutate_word(&markoff(), &VarSet::numbered("Y", 3), &Word::parse("m2 m1").unwrap());
        assert!(matches!(r, Err(Error::Unsupported(_))));
    }
}
