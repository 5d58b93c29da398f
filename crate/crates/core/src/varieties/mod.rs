//! The once-punctured torus and the 4-punctured sphere: trace embeddings,
//! cubic surfaces, brackets, and the mapping-class actions, classical and
//! quantum.

pub mod model;
mod sphere;
mod torus;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::cluster::{ExchangeMatrix, Seed, Word};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::qalg::QSeed;
use crate::report::{Check, Outcome};

pub use model::{Action, BracketRule, TraceModel};
pub use sphere::{check_singularity_factorization, SingularityReport};

/// A seed image stated in closed form.
#[derive(Clone, Debug)]
pub struct PrintedImage {
    pub label: String,
    pub word: Word,
    pub images: Vec<Expr>,
}

/// Two products of generators (operator order, names from `words`) whose
/// actions must agree.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct VarietyPreset {
    pub model: TraceModel,
    /// `R`, `L`, `M` as mutation words.
    pub words: Vec<(String, Word)>,
    pub relations: Vec<Relation>,
    pub printed: Vec<PrintedImage>,
    /// `(word name, expected B)`.
    pub matrix_images: Vec<(String, ExchangeMatrix)>,
    pub actions: Vec<Action>,
    pub q_actions: Vec<Action>,
}

pub fn preset(name: &str) -> Result<VarietyPreset> {
    match name {
        "torus" | "markoff" => Ok(torus::preset()),
        "sphere" | "oct" => Ok(sphere::preset()),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

impl VarietyPreset {
    pub fn word(&self, name: &str) -> Result<&Word> {
        self.words
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| w)
            .ok_or_else(|| Error::UnknownPreset(name.to_string()))
    }

    pub fn action(&self, name: &str) -> Option<&Action> {
        self.actions.iter().find(|a| a.name == name)
    }

    pub fn q_action(&self, name: &str) -> Option<&Action> {
        self.q_actions.iter().find(|a| a.name == name)
    }

    /// The action of a product of generators: each generator's y-map is
    /// computed on the initial seed and the maps are composed by substitution,
    /// the right-most acting first. The matrix is tracked as `±B`.
    pub fn compose(&self, names: &[String]) -> Result<Seed> {
        let m = &self.model;
        let mut acc = Seed::initial(&m.b, &m.vars)?;
        for name in names.iter().rev() {
            let g = Seed::initial(&m.b, &m.vars)?.apply(self.word(name)?)?;
            let ys = g.ys.iter().map(|y| y.subst(&acc.ys)).collect::<Result<_>>()?;
            let b = if g.b == m.b {
                acc.b
            } else if g.b == m.b.negate() {
                acc.b.negate()
            } else {
                return Err(Error::Unsupported(format!("{name} does not send B to ±B")));
            };
            acc = Seed { ys, b };
        }
        Ok(acc)
    }

    /// The group relations, the stated closed-form images, and the matrices.
    pub fn check_group_relations(&self) -> Result<Outcome> {
        let m = &self.model;
        let mut parts = Vec::new();
        for r in &self.relations {
            let ok = self.compose(&r.lhs)?.equals(&self.compose(&r.rhs)?);
            let o = if ok {
                Outcome::pass("")
            } else {
                Outcome::fail(1, format!("{} fails", r.label))
            };
            parts.push((r.label.clone(), o));
        }
        for p in &self.printed {
            parts.push((p.label.clone(), model::matches_printed(&m.b, &m.vars, &p.word, &p.images)?));
        }
        let seed = Seed::initial(&m.b, &m.vars)?;
        for (w, expected) in &self.matrix_images {
            let got = seed.apply(self.word(w)?)?.b;
            let o = if &got == expected {
                Outcome::pass("")
            } else {
                Outcome::fail(1, format!("{w}(B) = {got}"))
            };
            parts.push((format!("{w}(B)"), o));
        }
        Ok(Outcome::all(parts))
    }

    /// Quantum mutation keeps `Ỹ_k Ỹ_j = q^{2 b̃_jk} Ỹ_j Ỹ_k` for each generator word.
    pub fn check_q_commutation(&self) -> Result<Outcome> {
        let ring = self.model.quantum_ring()?;
        let mut parts = Vec::new();
        for (name, w) in &self.words {
            let s = QSeed::initial(&ring).apply(w)?;
            let bad = s.q_commutation_defects()?;
            let o = if bad.is_empty() {
                Outcome::pass("")
            } else {
                Outcome::fail(bad.len(), format!("{} pairs fail", bad.len()))
            };
            parts.push((name.clone(), o));
        }
        Ok(Outcome::all(parts))
    }

    /// Every check for this preset, with stable ids.
    pub fn checks(&self) -> Vec<Check> {
        let name = self.model.name.clone();
        let mut out = Vec::new();
        let p = self.clone();
        out.push(Check::new(format!("{name}.w_classical"), move || p.model.check_w()));
        let p = self.clone();
        out.push(Check::new(format!("{name}.w_numeric"), move || {
            p.model.check_w_numeric(&mut StdRng::seed_from_u64(7), 20)
        }));
        let p = self.clone();
        out.push(Check::new(format!("{name}.brackets"), move || p.model.check_brackets()));
        let p = self.clone();
        out.push(Check::new(format!("{name}.group_relations"), move || p.check_group_relations()));
        for a in &self.actions {
            let p = self.clone();
            let a = a.clone();
            out.push(Check::new(format!("{name}.action.{}", a.name), move || p.model.check_action(&a)));
        }
        let p = self.clone();
        out.push(Check::new(format!("{name}.quantum.w"), move || p.model.check_wq()));
        let p = self.clone();
        out.push(Check::new(format!("{name}.quantum.relations"), move || p.model.check_q_relations()));
        let p = self.clone();
        out.push(Check::new(format!("{name}.quantum.centrality"), move || p.model.check_centrality()));
        let p = self.clone();
        out.push(Check::new(format!("{name}.quantum.classical_limit"), move || {
            p.model.check_classical_limit()
        }));
        let p = self.clone();
        out.push(Check::new(format!("{name}.quantum.q_commutation"), move || p.check_q_commutation()));
        for a in &self.q_actions {
            let p = self.clone();
            let a = a.clone();
            out.push(Check::new(format!("{name}.quantum.action.{}", a.name), move || {
                p.model.check_quantum_action(&a)
            }));
        }
        if name == "sphere" {
            out.push(Check::new("sphere.singularity", || {
                Ok(check_singularity_factorization()?.outcome())
            }));
        }
        out
    }
}

pub(crate) fn words(src: &[(&str, &str)]) -> Vec<(String, Word)> {
    src.iter()
        .map(|(n, w)| (n.to_string(), Word::parse(w).expect("built-in word")))
        .collect()
}

pub(crate) fn exprs(src: &[&str]) -> Vec<Expr> {
    src.iter().map(|e| crate::expr::ex(e)).collect()
}

pub(crate) fn rules(src: &[(&str, &str)]) -> Vec<(String, Expr)> {
    src.iter()
        .map(|(n, e)| (n.to_string(), crate::expr::ex(e)))
        .collect()
}

/// Adds `L^-1` to the generator words.
pub(crate) fn with_inverse(mut ws: Vec<(String, Word)>) -> Vec<(String, Word)> {
    let li = ws.iter().find(|(k, _)| k == "L").map(|(_, w)| w.inverse()).expect("L");
    ws.push(("L^-1".into(), li));
    ws
}

/// `S = R∘L⁻¹∘R`; the relations `S² = (S∘R)³ = M² = (M∘R)² = (M∘L)² = id`
/// and the braid relation.
pub(crate) fn pgl_relations() -> Vec<Relation> {
    let seq = |src: &str| -> Vec<String> {
        src.split_whitespace()
            .flat_map(|t| match t {
                "S" => vec!["R", "L^-1", "R"],
                t => vec![t],
            })
            .map(String::from)
            .collect()
    };
    let rel = |label: &str, lhs: &str, rhs: &str| Relation {
        label: label.to_string(),
        lhs: seq(lhs),
        rhs: seq(rhs),
    };
    vec![
        rel("S^2 = id", "S S", ""),
        rel("(S R)^3 = id", "S R S R S R", ""),
        rel("M^2 = id", "M M", ""),
        rel("(M R)^2 = id", "M R M R", ""),
        rel("(M L)^2 = id", "M L M L", ""),
        rel("R L^-1 R = L^-1 R L^-1", "S", "L^-1 R L^-1"),
    ]
}

#[cfg(test)]
mod tests;
