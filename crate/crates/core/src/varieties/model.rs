//! Trace coordinates realized in a cluster seed, with the checks shared by
//! the surface presets and the degenerate families.

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use crate::cluster::poisson::bracket;
use crate::cluster::{ExchangeMatrix, Seed, Word};
use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, QScalar, Rational, VarSet};
use crate::expr::{Bound, Expr, LaurentRing, Numbers};
use crate::qalg::{OreFraction, QRing, QSeed, QTorusAlgebra, QTorusElem};
use crate::ratfun::{RatFun, RatFunField};
use crate::report::Outcome;

/// `{a, b} = rhs`, optionally also `rhs = factor · ∂W/∂wrt`.
#[derive(Clone, Debug)]
pub struct BracketRule {
    pub a: String,
    pub b: String,
    pub rhs: Expr,
    pub gradient: Option<(Rational, String)>,
}

/// An automorphism given by a word on the seed and its action on trace symbols.
#[derive(Clone, Debug)]
pub struct Action {
    pub name: String,
    pub word: Word,
    pub rules: Vec<(String, Expr)>,
}

/// Trace functions as Laurent polynomials in a seed (and optionally its quantization).
#[derive(Clone, Debug)]
pub struct TraceModel {
    pub name: String,
    pub b: ExchangeMatrix,
    pub vars: VarSet,
    pub qvars: VarSet,
    /// Non-central trace symbols, e.g. `x, y, z` or `p12, p31, p23`.
    pub generators: Vec<String>,
    /// Central trace symbols, e.g. `b` or `p1 … p4`.
    pub params: Vec<String>,
    pub classical: Vec<(String, Expr)>,
    pub quantum: Vec<(String, Expr)>,
    pub w: Expr,
    pub wq: Option<Expr>,
    pub brackets: Vec<BracketRule>,
    /// Relations `lhs = rhs` among the quantum trace symbols (ordered products).
    pub q_relations: Vec<(Expr, Expr)>,
}

fn residual_outcome(what: &str, r: &LaurentPoly) -> Outcome {
    if r.is_zero() {
        Outcome::pass(format!("{what} vanishes"))
    } else {
        Outcome::fail(r.len(), format!("{what} leaves {} terms", r.len()))
    }
}

fn q_residual_outcome(what: &str, r: &QTorusElem) -> Outcome {
    if r.is_zero() {
        Outcome::pass(format!("{what} vanishes"))
    } else {
        Outcome::fail(r.len(), format!("{what} leaves {} terms", r.len()))
    }
}

impl TraceModel {
    pub fn symbols(&self) -> impl Iterator<Item = &String> {
        self.generators.iter().chain(&self.params)
    }

    pub fn has_quantum(&self) -> bool {
        !self.quantum.is_empty()
    }

    fn image_expr(&self, t: &str) -> Result<&Expr> {
        self.classical
            .iter()
            .find(|(n, _)| n == t)
            .map(|(_, e)| e)
            .ok_or_else(|| Error::UnknownVariable(t.to_string()))
    }

    pub fn classical_images(&self) -> Result<Vec<(String, LaurentPoly)>> {
        let ring = LaurentRing::new(&self.vars);
        self.classical
            .iter()
            .map(|(n, e)| Ok((n.clone(), e.eval(&ring)?)))
            .collect()
    }

    pub fn classical_image(&self, t: &str) -> Result<LaurentPoly> {
        self.image_expr(t)?.eval(&LaurentRing::new(&self.vars))
    }

    /// Evaluates an expression in the trace symbols after substituting `ι`.
    pub fn eval_classical(&self, images: &[(String, LaurentPoly)], e: &Expr) -> Result<LaurentPoly> {
        let ring = LaurentRing::new(&self.vars);
        e.eval(&Bound::new(&ring).with(images.iter().cloned()))
    }

    /// Same, over rational functions (needed when an action divides).
    pub fn eval_rational(&self, images: &[(String, LaurentPoly)], e: &Expr) -> Result<RatFun> {
        let field = RatFunField {
            vars: self.vars.clone(),
        };
        let bound = images
            .iter()
            .map(|(n, p)| (n.clone(), RatFun::from_poly(p)));
        e.eval(&Bound::new(&field).with(bound))
    }

    pub fn quantum_ring(&self) -> Result<Arc<QRing>> {
        QRing::new(&self.b, &self.qvars)
    }

    pub fn quantum_images(&self, ring: &Arc<QRing>) -> Result<Vec<(String, QTorusElem)>> {
        let alg = QTorusAlgebra { ring: ring.clone() };
        self.quantum
            .iter()
            .map(|(n, e)| Ok((n.clone(), e.eval(&alg)?)))
            .collect()
    }

    pub fn eval_quantum(
        &self,
        ring: &Arc<QRing>,
        images: &[(String, QTorusElem)],
        e: &Expr,
    ) -> Result<QTorusElem> {
        let alg = QTorusAlgebra { ring: ring.clone() };
        let q = QTorusElem::scalar(ring, QScalar::q_pow(4));
        let bound = Bound::new(&alg)
            .with(images.iter().cloned())
            .bind("q", q);
        e.eval(&bound)
    }

    /// `W(ι(…)) = 0`.
    pub fn check_w(&self) -> Result<Outcome> {
        let images = self.classical_images()?;
        let r = self.eval_classical(&images, &self.w)?;
        Ok(residual_outcome("W(ι)", &r))
    }

    /// Stated brackets, vanishing brackets with central symbols, and the
    /// gradient forms `{a, b} = c ∂W/∂t` where given.
    pub fn check_brackets(&self) -> Result<Outcome> {
        let images = self.classical_images()?;
        let get = |t: &str| -> Result<&LaurentPoly> {
            images
                .iter()
                .find(|(n, _)| n == t)
                .map(|(_, p)| p)
                .ok_or_else(|| Error::UnknownVariable(t.to_string()))
        };
        let mut parts = Vec::new();
        for r in &self.brackets {
            let lhs = bracket(get(&r.a)?, get(&r.b)?, &self.b)?;
            let rhs = self.eval_classical(&images, &r.rhs)?;
            let res = lhs.try_sub(&rhs)?;
            parts.push((format!("{{{},{}}}", r.a, r.b), residual_outcome("difference", &res)));
            if let Some((c, t)) = &r.gradient {
                let names: Vec<String> = self.symbols().cloned().collect();
                let tv = VarSet::new(&names);
                let ring = LaurentRing::new(&tv);
                let w = self.w.eval(&ring)?;
                let dw = w.partial(tv.require(t)?)?.scale(c);
                let rhs_t = r.rhs.eval(&ring)?;
                let res = dw.try_sub(&rhs_t)?;
                parts.push((format!("{{{},{}}} gradient", r.a, r.b), residual_outcome("difference", &res)));
            }
        }
        let symbols: Vec<&String> = self.symbols().collect();
        for p in &self.params {
            for t in &symbols {
                if *t == p {
                    continue;
                }
                let lhs = bracket(get(p)?, get(t)?, &self.b)?;
                parts.push((format!("{{{p},{t}}}"), residual_outcome("bracket", &lhs)));
            }
        }
        Ok(Outcome::all(parts))
    }

    /// `W(ι)` at random points `y_i = s_i²`, evaluated with plain rationals.
    pub fn check_w_numeric<R: Rng>(&self, rng: &mut R, points: usize) -> Result<Outcome> {
        let mut bad = 0;
        for _ in 0..points {
            let pt = random_square_point(rng, &self.vars);
            let at = Bound::new(&Numbers).with(pt);
            let mut values = Vec::new();
            for (n, e) in &self.classical {
                values.push((n.clone(), e.eval(&at)?));
            }
            let v = self.w.eval(&Bound::new(&Numbers).with(values))?;
            if !v.is_zero() {
                bad += 1;
            }
        }
        Ok(if bad == 0 {
            Outcome::pass(format!("W(ι) = 0 at {points} random points"))
        } else {
            Outcome::fail(bad, format!("W(ι) ≠ 0 at {bad} of {points} points"))
        })
    }

    /// The action of a word on the seed against the stated substitution,
    /// and `W` on the transformed symbols.
    pub fn check_action(&self, action: &Action) -> Result<Outcome> {
        let images = self.classical_images()?;
        let seed = Seed::initial(&self.b, &self.vars)?.apply(&action.word)?;
        let mut parts = Vec::new();
        let mut moved = Vec::new();
        for (t, rule) in &action.rules {
            let lhs = RatFun::subst_poly(&self.classical_image(t)?, &seed.ys)?;
            let rhs = self.eval_rational(&images, rule)?;
            let ok = lhs.equals(&rhs);
            let o = if ok {
                Outcome::pass("")
            } else {
                let diff = lhs.try_sub(&rhs)?.num();
                Outcome::fail(diff.len(), format!("{t} ↦ {rule} fails"))
            };
            parts.push((format!("{}: {t}", action.name), o));
            moved.push((t.clone(), rhs));
        }
        // W is preserved: substitute the transformed symbols
        let field = RatFunField {
            vars: self.vars.clone(),
        };
        let mut bound: Vec<(String, RatFun)> = images
            .iter()
            .map(|(n, p)| (n.clone(), RatFun::from_poly(p)))
            .collect();
        for (t, v) in moved {
            if let Some(slot) = bound.iter_mut().find(|(n, _)| *n == t) {
                slot.1 = v;
            }
        }
        let w = self.w.eval(&Bound::new(&field).with(bound))?;
        let o = if w.is_zero() {
            Outcome::pass("")
        } else {
            Outcome::fail(w.num().len(), "W not preserved")
        };
        parts.push((format!("{}: W", action.name), o));
        Ok(Outcome::all(parts))
    }

    /// Quantum action via Ore fractions: `ι(t)` transported by the quantum
    /// word against the stated ordered polynomial.
    pub fn check_quantum_action(&self, action: &Action) -> Result<Outcome> {
        let ring = self.quantum_ring()?;
        let images = self.quantum_images(&ring)?;
        let seed = QSeed::initial(&ring).apply(&action.word)?;
        let mut parts = Vec::new();
        for (t, rule) in &action.rules {
            let src = images
                .iter()
                .find(|(n, _)| n == t)
                .map(|(_, x)| x)
                .ok_or_else(|| Error::UnknownVariable(t.clone()))?;
            let lhs = seed.image(src)?;
            let rhs = OreFraction::from_elem(self.eval_quantum(&ring, &images, rule)?);
            let res = lhs.residual(&rhs)?;
            parts.push((format!("{}: {t}", action.name), q_residual_outcome("difference", &res)));
        }
        Ok(Outcome::all(parts))
    }

    /// `W^q(ι(…)) = 0` in the quantum torus.
    pub fn check_wq(&self) -> Result<Outcome> {
        let Some(wq) = &self.wq else {
            return Err(Error::Unsupported(format!("{} has no quantum surface", self.name)));
        };
        let ring = self.quantum_ring()?;
        let images = self.quantum_images(&ring)?;
        let r = self.eval_quantum(&ring, &images, wq)?;
        Ok(q_residual_outcome("W^q(ι)", &r))
    }

    pub fn check_q_relations(&self) -> Result<Outcome> {
        let ring = self.quantum_ring()?;
        let images = self.quantum_images(&ring)?;
        let mut parts = Vec::new();
        for (lhs, rhs) in &self.q_relations {
            let l = self.eval_quantum(&ring, &images, lhs)?;
            let r = self.eval_quantum(&ring, &images, rhs)?;
            parts.push((format!("{lhs} = {rhs}"), q_residual_outcome("difference", &l.try_sub(&r)?)));
        }
        Ok(Outcome::all(parts))
    }

    /// Central symbols commute with every trace symbol.
    pub fn check_centrality(&self) -> Result<Outcome> {
        let ring = self.quantum_ring()?;
        let images = self.quantum_images(&ring)?;
        let mut parts = Vec::new();
        for p in &self.params {
            let pi = &images.iter().find(|(n, _)| n == p).ok_or_else(|| Error::UnknownVariable(p.clone()))?.1;
            for (t, ti) in &images {
                if t == p {
                    continue;
                }
                let c = pi.try_mul(ti)?.try_sub(&ti.try_mul(pi)?)?;
                parts.push((format!("[{p},{t}]"), q_residual_outcome("commutator", &c)));
            }
        }
        Ok(Outcome::all(parts))
    }

    /// Quantum images at `q = 1` agree with the classical ones.
    pub fn check_classical_limit(&self) -> Result<Outcome> {
        let ring = self.quantum_ring()?;
        let images = self.quantum_images(&ring)?;
        let mut parts = Vec::new();
        for (t, x) in &images {
            let lim = x.classical_limit(&self.vars)?;
            let cl = self.classical_image(t)?;
            parts.push((t.clone(), residual_outcome("difference", &lim.try_sub(&cl)?)));
        }
        Ok(Outcome::all(parts))
    }
}

/// `y_i = s_i²` with `s_i` a random positive rational of small height.
pub fn random_square_point<R: Rng>(rng: &mut R, vars: &VarSet) -> Vec<(String, Rational)> {
    vars.names()
        .iter()
        .map(|n| {
            let s = Rational::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=9).into());
            (n.clone(), &s * &s)
        })
        .collect()
}

/// Seeds under two words agree (values and matrix).
/// A word's seed image against a printed list of rational functions.
pub fn matches_printed(b: &ExchangeMatrix, vars: &VarSet, w: &Word, printed: &[Expr]) -> Result<Outcome> {
    let s = Seed::initial(b, vars)?.apply(w)?;
    let field = RatFunField { vars: vars.clone() };
    let expected: Vec<RatFun> = printed.iter().map(|e| e.eval(&field)).collect::<Result<_>>()?;
    if expected.len() != s.ys.len() {
        return Err(Error::DimensionMismatch {
            expected: s.ys.len(),
            found: expected.len(),
        });
    }
    let bad = s.differing(&expected);
    Ok(if bad.is_empty() {
        Outcome::pass("matches")
    } else {
        let which: Vec<String> = bad.iter().map(|i| format!("y{}", i + 1)).collect();
        Outcome::fail(bad.len(), format!("differs at {}", which.join(", ")))
    })
}
