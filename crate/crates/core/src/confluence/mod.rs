//! Degenerations of the four-punctured sphere: the eleven families, the
//! limits between them, their automorphisms and quantizations, and the
//! polynomial equivalences among the resulting cubic surfaces.

mod equivalences;
pub mod families;
mod limits;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::cluster::classes::{canonical, mutation_class, mutation_equivalent};
use crate::cluster::{ExchangeMatrix, Seed, Step, Word};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::ratfun::RatFun;
use crate::report::{Check, Outcome};
use crate::varieties::model::matches_printed;
use crate::varieties::{Action, TraceModel};

pub use equivalences::{equivalences, Equivalence, EquivalenceReport};
pub use limits::{edge, edges, LimitEdge, LimitKind, LimitReport, LimitRow};

/// A quiver automorphism word, its printed seed image and induced actions.
#[derive(Clone, Debug)]
pub struct Automorphism {
    /// The word in vertex-label notation, e.g. `s1,2p s1,4 m1`.
    pub word: String,
    pub printed: Vec<Expr>,
    pub action: Action,
    pub q_action: Option<Action>,
}

#[derive(Clone, Debug)]
pub struct Family {
    pub slug: String,
    pub label: String,
    pub painleve: Option<String>,
    /// Vertex labels in seed order (`1`, `2p`, …).
    pub labels: Vec<String>,
    pub model: TraceModel,
    /// Alternative normalizations of the cubic, e.g. `W'`.
    pub variant_ws: Vec<(String, Expr)>,
    pub automorphism: Option<Automorphism>,
    /// Words claimed to act trivially on the trace functions.
    pub trivial_words: Vec<Word>,
    /// Words claimed to act as the inverse of the automorphism.
    pub inverse_words: Vec<Word>,
}

/// The eleven families in diagram order.
pub const FAMILIES: [&str; 11] = ["1111", "211", "31", "22", "211deg", "4A", "4B", "31B", "22deg", "22deg2", "4C"];

/// Alternative embeddings reached along other arrows.
pub const VARIANTS: [&str; 3] = ["4Bp", "4Bpp", "31Bp"];

fn normalize(id: &str) -> String {
    id.chars()
        .filter(|c| !matches!(c, '(' | ')' | ',' | ' ' | '^'))
        .collect::<String>()
        .replace("deg²", "deg2")
        .to_ascii_lowercase()
}

pub fn family(id: &str) -> Result<Family> {
    let key = normalize(id);
    let f = match key.as_str() {
        "1111" | "sphere" | "oct" => families::sphere(),
        "211" => families::f211(),
        "31" => families::f31(),
        "22" => families::f22(),
        "211deg" => families::f211deg(),
        "4a" => families::f4a(),
        "4b" => families::f4b(),
        "4bp" | "4b'" => families::f4b_prime(),
        "4bpp" | "4b''" => families::f4b_second(),
        "31b" => families::f31b(),
        "31bp" | "31b'" => families::f31b_prime(),
        "22deg" => families::f22deg(),
        "22deg2" => families::f22deg2(),
        "4c" => families::f4c(),
        _ => return Err(Error::UnknownPreset(id.to_string())),
    };
    Ok(f)
}

pub fn all_families() -> Vec<Family> {
    FAMILIES
        .iter()
        .chain(VARIANTS.iter())
        .map(|id| family(id).expect("built-in family"))
        .collect()
}

/// Parses a word whose vertices are given by label: `mK`, `sI,J`, `inv`.
pub fn label_word(labels: &[String], src: &str) -> Result<Word> {
    let at = |l: &str| -> Result<usize> {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::UnknownVariable(format!("vertex {l}")))
    };
    let mut steps = Vec::new();
    for tok in src.split_whitespace() {
        let step = if tok == "inv" {
            Step::Invert
        } else if let Some(rest) = tok.strip_prefix('m') {
            Step::Mutate(at(rest)?)
        } else if let Some(rest) = tok.strip_prefix('s') {
            let (a, b) = rest.split_once(',').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("write sI,J: `{tok}`"),
            })?;
            Step::Permute(at(a)?, at(b)?)
        } else {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("unknown step `{tok}`"),
            });
        };
        steps.push(step);
    }
    Ok(Word::new(steps))
}

impl Family {
    pub fn variant_w(&self, name: &str) -> Result<&Expr> {
        if name == "W" {
            return Ok(&self.model.w);
        }
        self.variant_ws
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e)
            .ok_or_else(|| Error::UnknownVariable(format!("{name} of {}", self.label)))
    }

    /// Printed seed image, induced action, and `W` preserved.
    pub fn check_automorphism(&self) -> Result<Outcome> {
        let Some(a) = &self.automorphism else {
            return Err(Error::Unsupported(format!("{} has no automorphism", self.label)));
        };
        let m = &self.model;
        Ok(Outcome::all(vec![
            ("G(y)".into(), matches_printed(&m.b, &m.vars, &a.action.word, &a.printed)?),
            ("G(B) = B".into(), {
                let b = Seed::initial(&m.b, &m.vars)?.apply(&a.action.word)?.b;
                if b == m.b {
                    Outcome::pass("")
                } else {
                    Outcome::fail(1, format!("G(B) = {b}"))
                }
            }),
            ("action".into(), m.check_action(&a.action)?),
        ]))
    }

    /// `y ↦` the composite of the given words (right-most first), by substitution.
    fn compose(&self, words: &[&Word]) -> Result<Vec<RatFun>> {
        let m = &self.model;
        let mut acc = Seed::initial(&m.b, &m.vars)?.ys;
        for w in words.iter().rev() {
            let g = Seed::initial(&m.b, &m.vars)?.apply(w)?;
            acc = g.ys.iter().map(|y| y.subst(&acc)).collect::<Result<_>>()?;
        }
        Ok(acc)
    }

    /// Every trace function is fixed by the composite map.
    fn fixes_traces(&self, ys: &[RatFun]) -> Result<Outcome> {
        let mut parts = Vec::new();
        for (t, p) in self.model.classical_images()? {
            let moved = match RatFun::subst_poly(&p, ys) {
                Ok(m) => m,
                Err(Error::NotASquare(_)) => {
                    parts.push((t, Outcome::fail(1, "a square-root monomial maps to a non-square")));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let o = if moved.equals(&RatFun::from_poly(&p)) {
                Outcome::pass("")
            } else {
                Outcome::fail(moved.try_sub(&RatFun::from_poly(&p))?.num().len(), "moved")
            };
            parts.push((t, o));
        }
        Ok(Outcome::all(parts))
    }

    /// The extra words: trivial action, and the inverse of `G`.
    pub fn check_extra_words(&self) -> Result<Outcome> {
        let mut parts = Vec::new();
        for w in &self.trivial_words {
            parts.push((format!("{w} acts trivially"), self.fixes_traces(&self.compose(&[w])?)?));
        }
        if let Some(a) = &self.automorphism {
            for w in &self.inverse_words {
                let ys = self.compose(&[&a.action.word, w])?;
                parts.push((format!("G ∘ {w} acts trivially"), self.fixes_traces(&ys)?));
                let ys = self.compose(&[w, &a.action.word])?;
                parts.push((format!("{w} ∘ G acts trivially"), self.fixes_traces(&ys)?));
            }
        }
        Ok(Outcome::all(parts))
    }

    pub fn check_quantum_automorphism(&self) -> Result<Outcome> {
        match self.automorphism.as_ref().and_then(|a| a.q_action.as_ref()) {
            Some(qa) => self.model.check_quantum_action(qa),
            None => Err(Error::Unsupported(format!("{} has no quantum automorphism", self.label))),
        }
    }

    pub fn export(&self) -> FamilyDoc {
        let m = &self.model;
        let show = |v: &[(String, Expr)]| v.iter().map(|(n, e)| (n.clone(), e.to_string())).collect();
        FamilyDoc {
            id: self.slug.clone(),
            label: self.label.clone(),
            painleve: self.painleve.clone(),
            vertices: self.labels.clone(),
            exchange_matrix: m.b.rows().to_vec(),
            parameters: m.params.clone(),
            images: show(&m.classical),
            w: m.w.to_string(),
            quantum_images: show(&m.quantum),
            wq: m.wq.as_ref().map(|e| e.to_string()),
            automorphism: self.automorphism.as_ref().map(|a| a.word.clone()),
        }
    }

    pub fn checks(&self) -> Vec<Check> {
        let id = format!("confluence.{}", self.slug);
        let mut out = Vec::new();
        let f = self.clone();
        out.push(Check::new(format!("{id}.w"), move || f.model.check_w()));
        let f = self.clone();
        out.push(Check::new(format!("{id}.w_numeric"), move || {
            f.model.check_w_numeric(&mut StdRng::seed_from_u64(7), 20)
        }));
        let f = self.clone();
        out.push(Check::new(format!("{id}.brackets"), move || f.model.check_brackets()));
        if self.automorphism.is_some() {
            let f = self.clone();
            out.push(Check::new(format!("{id}.automorphism"), move || f.check_automorphism()));
        }
        if !self.trivial_words.is_empty() || !self.inverse_words.is_empty() {
            let f = self.clone();
            out.push(Check::new(format!("{id}.extra_words"), move || f.check_extra_words()));
        }
        // the sphere's quantum checks live in its own suite
        if self.model.has_quantum() && self.slug != "1111" {
            let f = self.clone();
            out.push(Check::new(format!("{id}.quantum.w"), move || f.model.check_wq()));
            let f = self.clone();
            out.push(Check::new(format!("{id}.quantum.relations"), move || f.model.check_q_relations()));
            let f = self.clone();
            out.push(Check::new(format!("{id}.quantum.centrality"), move || f.model.check_centrality()));
            let f = self.clone();
            out.push(Check::new(format!("{id}.quantum.classical_limit"), move || {
                f.model.check_classical_limit()
            }));
            if self.automorphism.as_ref().is_some_and(|a| a.q_action.is_some()) {
                let f = self.clone();
                out.push(Check::new(format!("{id}.quantum.automorphism"), move || {
                    f.check_quantum_automorphism()
                }));
            }
        }
        out
    }
}

/// Family data as a structured document.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyDoc {
    pub id: String,
    pub label: String,
    pub painleve: Option<String>,
    pub vertices: Vec<String>,
    pub exchange_matrix: Vec<Vec<i64>>,
    pub parameters: Vec<String>,
    pub images: Vec<(String, String)>,
    pub w: String,
    pub quantum_images: Vec<(String, String)>,
    pub wq: Option<String>,
    pub automorphism: Option<String>,
}

pub fn export_all() -> Vec<FamilyDoc> {
    all_families().iter().map(Family::export).collect()
}

const CLASS_DEPTH: usize = 6;

fn b_of(id: &str) -> Result<ExchangeMatrix> {
    Ok(family(id)?.model.b)
}

/// Mutation-class claims and class sizes.
pub fn class_checks() -> Vec<Check> {
    let same = |a: &'static str, b: &'static str| {
        move || -> Result<Outcome> {
            Ok(if canonical(&b_of(a)?) == canonical(&b_of(b)?) {
                Outcome::pass(format!("{a} ≅ {b}"))
            } else {
                Outcome::fail(1, format!("{a} and {b} differ up to relabelling"))
            })
        }
    };
    let equiv = |a: &'static str, b: &'static str| {
        move || -> Result<Outcome> {
            Ok(if mutation_equivalent(&b_of(a)?, &b_of(b)?, CLASS_DEPTH) {
                Outcome::pass(format!("{a} ~ {b} within {CLASS_DEPTH} mutations"))
            } else {
                Outcome::fail(1, format!("{a} and {b} not connected within {CLASS_DEPTH} mutations"))
            })
        }
    };
    vec![
        Check::new("classes.4A_31B", same("4A", "31B")),
        Check::new("classes.4A_4B", equiv("4A", "4B")),
        Check::new("classes.211deg_22", equiv("211deg", "22")),
        Check::new("classes.4Bpp_mu2_4B", || {
            let mu = b_of("4B")?.mutate(0)?;
            Ok(if canonical(&mu) == canonical(&b_of("4Bpp")?) {
                Outcome::pass("μ_2(Q_(4)B) ≅ Q_(4)B''")
            } else {
                Outcome::fail(1, "μ_2(Q_(4)B) differs from Q_(4)B''")
            })
        }),
        Check::new("classes.sizes", || {
            let mut parts = Vec::new();
            for id in FAMILIES {
                let c = mutation_class(&b_of(id)?, CLASS_DEPTH);
                let o = if c.open_frontier {
                    Outcome::fail(1, format!("still growing at depth {CLASS_DEPTH} ({} members)", c.len()))
                } else {
                    Outcome::pass(format!("{} members", c.len()))
                };
                parts.push((id.to_string(), o));
            }
            let sizes: Vec<String> = parts.iter().map(|(n, o)| format!("{n}: {}", o.detail)).collect();
            let mut o = Outcome::all(parts);
            if o.passed {
                o.detail = sizes.join(", ");
            }
            Ok(o)
        }),
    ]
}

/// Family checks, limits, bracket compatibility and equivalences.
pub fn checks() -> Vec<Check> {
    let mut out = Vec::new();
    for f in all_families() {
        if f.slug == "1111" {
            // the sphere's own suite covers everything but W
            let g = f.clone();
            out.push(Check::new("confluence.1111.w", move || g.model.check_w()));
            continue;
        }
        out.extend(f.checks());
    }
    for e in edges() {
        let id = format!("confluence.limit.{}-{}", e.from, e.to);
        let g = e.clone();
        out.push(Check::new(id.clone(), move || Ok(g.classical()?.outcome())));
        let g = e.clone();
        out.push(Check::new(format!("confluence.compat.{}-{}", e.from, e.to), move || {
            g.bracket_compatibility()
        }));
        if e.has_quantum() {
            let g = e.clone();
            out.push(Check::new(format!("confluence.quantum.limit.{}-{}", e.from, e.to), move || {
                let mut o = g.quantum()?.outcome();
                if !o.passed {
                    let cs = g.merge_prefactors()?;
                    if !cs.is_empty() {
                        let cs: Vec<String> = cs
                            .iter()
                            .map(|c| if c.is_zero() { "1".to_string() } else { format!("q^({c})") })
                            .collect();
                        o.detail += &format!("; the merge reproduces all images with prefactor {}", cs.join(" or "));
                    }
                }
                Ok(o)
            }));
        }
    }
    for q in equivalences() {
        let id = format!("confluence.equivalence.{}", q.id);
        out.push(Check::new(id, move || Ok(q.check()?.outcome())));
    }
    out
}

#[cfg(test)]
mod tests;
