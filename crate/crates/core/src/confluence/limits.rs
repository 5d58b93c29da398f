//! Limits along the arrows of the confluence diagram.
//!
//! A κ-arrow substitutes `y_d = κ y^w` and keeps the top κ-degree of every
//! image; an ε-arrow rescales two variables by `ε^{∓1}`, keeps the
//! `ε⁰` part, and merges their product into a new variable. Both are
//! evaluated in the parent's (quantum) torus extended by a central
//! parameter, and compared there with the child's tabulated images.

use std::sync::Arc;

use num_traits::Zero;

use crate::cluster::ExchangeMatrix;
use crate::error::{Error, Result};
use crate::exact::{Direction, HalfVec, LaurentPoly, QScalar, Rational};
use crate::expr::{ex, Bound, Expr, LaurentRing};
use crate::qalg::{QRing, QTorusAlgebra, QTorusElem};
use crate::report::Outcome;

use super::{family, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitKind {
    Kappa,
    Epsilon,
}

impl LimitKind {
    fn param(self) -> &'static str {
        match self {
            LimitKind::Kappa => "kappa",
            LimitKind::Epsilon => "eps",
        }
    }

    fn direction(self) -> Direction {
        match self {
            LimitKind::Kappa => Direction::Infinity,
            LimitKind::Epsilon => Direction::Zero,
        }
    }
}

/// An arrow of the diagram with its substitution recipe.
#[derive(Clone, Debug)]
pub struct LimitEdge {
    pub from: String,
    pub to: String,
    pub kind: LimitKind,
    /// Parent variable ↦ expression in the parent variables and `kappa`/`eps`.
    pub subs: Vec<(String, Expr)>,
    pub q_subs: Vec<(String, Expr)>,
    /// Child variable ↦ its expression in parent variables (classical, quantum).
    pub merges: Vec<(String, Expr, Option<Expr>)>,
    /// Parent generator ↦ the child generator it becomes, when they differ.
    pub relabel: Vec<(String, String)>,
}

/// One generator through a limit.
#[derive(Clone, Debug)]
pub struct LimitRow {
    /// Child generator name.
    pub generator: String,
    /// Parent generator it comes from.
    pub source: String,
    pub derived: String,
    pub tabulated: Option<String>,
    /// Power of the parameter that was stripped (κ-arrows).
    pub power: Rational,
    pub matches: bool,
}

#[derive(Clone, Debug)]
pub struct LimitReport {
    pub from: String,
    pub to: String,
    pub quantum: bool,
    pub rows: Vec<LimitRow>,
}

impl LimitReport {
    pub fn outcome(&self) -> Outcome {
        let bad: Vec<&str> = self
            .rows
            .iter()
            .filter(|r| r.tabulated.is_some() && !r.matches)
            .map(|r| r.generator.as_str())
            .collect();
        let dropped: Vec<&str> = self
            .rows
            .iter()
            .filter(|r| r.tabulated.is_none())
            .map(|r| r.generator.as_str())
            .collect();
        let kept = self.rows.len() - dropped.len();
        if bad.is_empty() {
            let mut d = format!("{kept} images reproduced");
            if !dropped.is_empty() {
                d += &format!("; dropped {}", dropped.join(", "));
            }
            Outcome::pass(d)
        } else {
            Outcome::fail(bad.len(), format!("mismatch at {}", bad.join(", ")))
        }
    }
}

impl std::fmt::Display for LimitReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = if self.quantum { "quantum" } else { "classical" };
        writeln!(f, "{} -> {} ({kind})", self.from, self.to)?;
        for r in &self.rows {
            let verdict = match (&r.tabulated, r.matches) {
                (None, _) => "dropped",
                (Some(_), true) => "ok",
                (Some(_), false) => "MISMATCH",
            };
            if r.source == r.generator {
                writeln!(f, "  {} [{verdict}]", r.generator)?;
            } else {
                writeln!(f, "  {} <- {} [{verdict}]", r.generator, r.source)?;
            }
            writeln!(f, "    derived:   {}", r.derived)?;
            if let Some(t) = &r.tabulated {
                writeln!(f, "    tabulated: {t}")?;
            }
            if !r.power.is_zero() {
                writeln!(f, "    stripped:  power {}", r.power)?;
            }
        }
        Ok(())
    }
}

fn pairs(src: &[(&str, &str)]) -> Vec<(String, Expr)> {
    src.iter().map(|(n, e)| (n.to_string(), ex(e))).collect()
}

fn kappa(from: &str, to: &str, var: &str, classical: &str, quantum: Option<&str>) -> LimitEdge {
    LimitEdge {
        from: from.into(),
        to: to.into(),
        kind: LimitKind::Kappa,
        subs: pairs(&[(var, classical)]),
        q_subs: match quantum {
            Some(q) => pairs(&[(&quantum_name(var), q)]),
            None => Vec::new(),
        },
        merges: Vec::new(),
        relabel: Vec::new(),
    }
}

/// `a ↦ a/ε`, `b ↦ ε b`, and `new = a b` (with a quantum prefactor).
fn epsilon(from: &str, to: &str, a: &str, b: &str, new: &str, q_merge: &str) -> LimitEdge {
    let (qa, qb) = (quantum_name(a), quantum_name(b));
    LimitEdge {
        from: from.into(),
        to: to.into(),
        kind: LimitKind::Epsilon,
        subs: pairs(&[(a, &format!("{a}/eps")), (b, &format!("eps*{b}"))]),
        q_subs: pairs(&[(&qa, &format!("eps^(-1)*{qa}")), (&qb, &format!("eps*{qb}"))]),
        merges: vec![(new.into(), ex(&format!("{a}*{b}")), Some(ex(q_merge)))],
        relabel: Vec::new(),
    }
}

/// The arrows of the diagram with a stated recipe.
pub fn edges() -> Vec<LimitEdge> {
    vec![
        kappa("1111", "211", "y6", "kappa/(y2*y4)", Some("kappa*q*(Y2*Y4)^(-1)")),
        kappa("211", "31", "y1", "kappa/(y4*y5)", Some("kappa*q*(Y4*Y5)^(-1)")),
        kappa("211", "22", "y5", "kappa/(y1*y4)", Some("kappa*q*(Y1*Y4)^(-1)")),
        epsilon("211", "211deg", "y2", "y3", "y2p", "Y2*Y3"),
        kappa("31", "4A", "y3", "kappa/(y2*y5)", Some("kappa*q*(Y5*Y2)^(-1)")),
        kappa("31", "4B", "y5", "kappa/(y2*y3)", Some("kappa*q*(Y2*Y3)^(-1)")),
        kappa("31", "31B", "y4", "kappa/(y2*y5)", Some("kappa*q*(Y5*Y2)^(-1)")),
        kappa("22", "4Bp", "y1", "kappa*y2", None),
        kappa("22", "4Bpp", "y3", "kappa*y4", None),
        epsilon("22", "22deg", "y2", "y3", "y2p", "q^(-1)*Y2*Y3"),
        kappa("211deg", "22deg", "y5", "kappa/(y1*y4)", None),
        kappa("211deg", "31Bp", "y2p", "kappa*y1*y4", None),
        epsilon("22deg", "22deg2", "y1", "y2p", "y2pp", "q^(-1)*Y1*Y2p"),
        kappa("4A", "4C", "y4", "kappa/(y2*y5)", Some("kappa*q*(Y5*Y2)^(-1)")),
        LimitEdge {
            merges: vec![("y2".into(), ex("y3"), None), ("y5".into(), ex("y2"), None)],
            relabel: [("p12", "p31"), ("p31", "p23"), ("p23", "p12")]
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            ..kappa("4B", "4C", "y4", "kappa*y3", None)
        },
        kappa("31B", "4C", "y3", "kappa/(y2*y5)", None),
    ]
}

pub fn edge(from: &str, to: &str) -> Result<LimitEdge> {
    let (a, b) = (family(from)?.slug, family(to)?.slug);
    edges()
        .into_iter()
        .find(|e| e.from == a && e.to == b)
        .ok_or_else(|| Error::Unsupported(format!("no recipe for {from} -> {to}")))
}

fn extend_matrix(b: &ExchangeMatrix) -> Result<ExchangeMatrix> {
    let n = b.n();
    let mut rows: Vec<Vec<i64>> = b.rows().iter().map(|r| {
        let mut r = r.clone();
        r.push(0);
        r
    }).collect();
    rows.push(vec![0; n + 1]);
    ExchangeMatrix::new(rows)
}

impl LimitEdge {
    pub fn has_quantum(&self) -> bool {
        !self.q_subs.is_empty()
    }

    fn child_name<'a>(&'a self, t: &'a str) -> &'a str {
        self.relabel
            .iter()
            .find(|(a, _)| a == t)
            .map_or(t, |(_, b)| b.as_str())
    }

    fn families(&self) -> Result<(Family, Family)> {
        Ok((family(&self.from)?, family(&self.to)?))
    }

    pub fn classical(&self) -> Result<LimitReport> {
        let (parent, child) = self.families()?;
        let param = self.kind.param();
        let vars = parent.model.vars.extend(&[param]);
        let pi = vars.require(param)?;
        let ring = LaurentRing::new(&vars);
        let subs: Vec<(String, LaurentPoly)> = self
            .subs
            .iter()
            .map(|(n, e)| Ok((n.clone(), e.eval(&ring)?)))
            .collect::<Result<_>>()?;
        let merges: Vec<(String, LaurentPoly)> = self
            .merges
            .iter()
            .map(|(n, e, _)| Ok((n.clone(), e.eval(&ring)?)))
            .collect::<Result<_>>()?;
        let at_parent = Bound::new(&ring).with(subs);
        let at_child = Bound::new(&ring).with(merges);
        let mut rows = Vec::new();
        for (t, e) in &parent.model.classical {
            let lead = e.eval(&at_parent)?.leading(pi, self.kind.direction())?;
            let name = self.child_name(t);
            let tab = child.model.classical.iter().find(|(n, _)| n == name);
            let matches = match tab {
                Some((_, c)) => c.eval(&at_child)? == lead.poly,
                None => false,
            };
            rows.push(LimitRow {
                generator: name.to_string(),
                source: t.clone(),
                derived: lead.poly.to_string(),
                tabulated: tab.map(|(_, c)| c.to_string()),
                power: lead.power,
                matches,
            });
        }
        self.missing(&child, &mut rows, false);
        Ok(LimitReport {
            from: parent.label,
            to: child.label,
            quantum: false,
            rows,
        })
    }

    /// Child generators with no parent counterpart are failures.
    fn missing(&self, child: &Family, rows: &mut Vec<LimitRow>, quantum: bool) {
        let images = if quantum { &child.model.quantum } else { &child.model.classical };
        for (t, c) in images {
            if !rows.iter().any(|r| &r.generator == t) {
                rows.push(LimitRow {
                    generator: t.clone(),
                    source: String::new(),
                    derived: "(absent in parent)".into(),
                    tabulated: Some(c.to_string()),
                    power: Rational::from_integer(0.into()),
                    matches: false,
                });
            }
        }
    }

    pub fn quantum(&self) -> Result<LimitReport> {
        if !self.has_quantum() {
            return Err(Error::Unsupported(format!("no quantum recipe for {} -> {}", self.from, self.to)));
        }
        let (parent, child) = self.families()?;
        let param = self.kind.param();
        let vars = parent.model.qvars.extend(&[param]);
        let pi = vars.require(param)?;
        let ring: Arc<QRing> = QRing::new(&extend_matrix(&parent.model.b)?, &vars)?;
        let alg = QTorusAlgebra { ring: ring.clone() };
        let q = QTorusElem::scalar(&ring, QScalar::q_pow(4));
        let base = Bound::new(&alg).bind("q", q.clone());
        let subs: Vec<(String, QTorusElem)> = self
            .q_subs
            .iter()
            .map(|(n, e)| Ok((n.clone(), e.eval(&base)?)))
            .collect::<Result<_>>()?;
        let merges: Vec<(String, QTorusElem)> = self
            .merges
            .iter()
            .filter_map(|(n, _, e)| e.as_ref().map(|e| (n, e)))
            .map(|(n, e)| Ok((quantum_name(n), e.eval(&base)?)))
            .collect::<Result<_>>()?;
        let at_parent = Bound::new(&alg).bind("q", q.clone()).with(subs);
        let at_child = Bound::new(&alg).bind("q", q).with(merges);
        let mut rows = Vec::new();
        for (t, e) in &parent.model.quantum {
            let (lead, power) = e.eval(&at_parent)?.leading(pi, self.kind.direction())?;
            let name = self.child_name(t);
            let tab = child.model.quantum.iter().find(|(n, _)| n == name);
            let matches = match tab {
                Some((_, c)) => c.eval(&at_child)?.equals(&lead),
                None => false,
            };
            rows.push(LimitRow {
                generator: name.to_string(),
                source: t.clone(),
                derived: lead.to_string(),
                tabulated: tab.map(|(_, c)| c.to_string()),
                power,
                matches,
            });
        }
        self.missing(&child, &mut rows, true);
        Ok(LimitReport {
            from: parent.label,
            to: child.label,
            quantum: true,
            rows,
        })
    }

    /// Exponent vector of each child variable in the parent variables.
    fn child_embedding(&self, parent: &Family, child: &Family) -> Result<Vec<HalfVec>> {
        let ring = LaurentRing::new(&parent.model.vars);
        child
            .model
            .vars
            .names()
            .iter()
            .map(|n| {
                let p = match self.merges.iter().find(|(m, _, _)| m == n) {
                    Some((_, e, _)) => e.eval(&ring)?,
                    None => LaurentPoly::var(&parent.model.vars, parent.model.vars.require(n)?),
                };
                let (v, _) = p.as_monomial().ok_or_else(|| Error::NonMonomial(p.to_string()))?;
                Ok(v.clone())
            })
            .collect()
    }

    /// The child matrix is the parent bracket restricted to the surviving
    /// (merged) variables, and a κ-substitution `y_d = κ y^w` is Poisson:
    /// `{y_i, y_d} = {y_i, y^w}` for every surviving `y_i`.
    pub fn bracket_compatibility(&self) -> Result<Outcome> {
        let (parent, child) = self.families()?;
        let b = &parent.model.b;
        let us = self.child_embedding(&parent, &child)?;
        let pair = |u: &HalfVec, v: &HalfVec| -> Rational {
            let (a, c): (Vec<i64>, Vec<i64>) = (u.doubled().iter().map(|&x| x as i64).collect(), v.doubled().iter().map(|&x| x as i64).collect());
            Rational::new(b.pair(&a, &c).into(), 4.into())
        };
        let mut parts = Vec::new();
        let n = us.len();
        let mut derived = vec![vec![0i64; n]; n];
        let mut integral = true;
        for i in 0..n {
            for j in 0..n {
                let x = pair(&us[i], &us[j]);
                if !x.is_integer() {
                    integral = false;
                }
                derived[i][j] = x.to_integer().try_into().unwrap_or(i64::MAX);
            }
        }
        let o = if integral && derived.as_slice() == child.model.b.rows() {
            Outcome::pass("")
        } else {
            Outcome::fail(1, format!("derived {derived:?} vs transcribed {:?}", child.model.b.rows()))
        };
        parts.push(("B_child".to_string(), o));
        if self.kind == LimitKind::Kappa {
            let vars = parent.model.vars.extend(&[self.kind.param()]);
            let ring = LaurentRing::new(&vars);
            for (d, e) in &self.subs {
                let di = parent.model.vars.require(d)?;
                let img = e.eval(&ring)?;
                let (w, _) = img.as_monomial().ok_or_else(|| Error::NonMonomial(img.to_string()))?;
                let mut wd = HalfVec::zero(parent.model.vars.len());
                for k in 0..wd.len() {
                    wd.set(k, w.get(k));
                }
                let ed = HalfVec::unit(parent.model.vars.len(), di);
                for (i, u) in us.iter().enumerate() {
                    let o = if pair(u, &ed) == pair(u, &wd) {
                        Outcome::pass("")
                    } else {
                        Outcome::fail(1, "bracket changes")
                    };
                    parts.push((format!("{{{}, {d}}}", child.model.vars.name(i)), o));
                }
            }
        }
        Ok(Outcome::all(parts))
    }
}

impl LimitEdge {
    /// For an ε-arrow whose quantum limit fails with the printed merge,
    /// the q-prefactors `q^c` (c in half steps, |c| ≤ 2) for which the
    /// merge `Y' = q^c Y_a Y_b` reproduces every child image.
    pub fn merge_prefactors(&self) -> Result<Vec<Rational>> {
        let mut found = Vec::new();
        if self.kind != LimitKind::Epsilon || !self.has_quantum() {
            return Ok(found);
        }
        for k in -4..=4i64 {
            let c = Rational::new(k.into(), 2.into());
            let mut e = self.clone();
            for (_, classical, quantum) in e.merges.iter_mut() {
                let prod = quantum_product(classical);
                *quantum = Some(ex(&format!("q^({k}/2)*{prod}")));
            }
            if e.quantum()?.outcome().passed {
                found.push(c);
            }
        }
        Ok(found)
    }
}

/// `y1*y2p` ↦ `Y1*Y2p`.
fn quantum_product(e: &Expr) -> String {
    e.to_string()
        .split('*')
        .map(|f| quantum_name(f.trim_matches(|c| c == '(' || c == ')')))
        .collect::<Vec<_>>()
        .join("*")
}

/// `y2p` ↦ `Y2p`.
fn quantum_name(v: &str) -> String {
    let mut c = v.chars();
    match c.next() {
        Some(f) => f.to_uppercase().chain(c).collect(),
        None => String::new(),
    }
}
