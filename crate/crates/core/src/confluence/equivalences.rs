//! Polynomial equivalences between the cubic surfaces of different families.

use crate::error::Result;
use crate::exact::{LaurentPoly, VarSet};
use crate::expr::{ex, Bound, Expr, LaurentRing};
use crate::report::Outcome;

use super::family;

/// `lhs(subs) = unit · rhs(subs')` for two (variant) cubics.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub id: String,
    /// `(family, polynomial name)`, e.g. `("31", "W'")`.
    pub lhs: (String, String),
    pub lhs_subs: Vec<(String, Expr)>,
    pub rhs: (String, String),
    pub rhs_subs: Vec<(String, Expr)>,
    pub unit: Expr,
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub id: String,
    pub residual: LaurentPoly,
    pub unit: String,
    /// The unit involves only parameters, not `p12`, `p31`, `p23`.
    pub unit_in_parameters: bool,
}

impl EquivalenceReport {
    pub fn outcome(&self) -> Outcome {
        if self.residual.is_zero() {
            let scope = if self.unit_in_parameters { "parameters only" } else { "involves a generator" };
            Outcome::pass(format!("unit {} ({scope})", self.unit))
        } else {
            Outcome::fail(self.residual.len(), format!("residual has {} terms", self.residual.len()))
        }
    }
}

const GENERATORS: [&str; 3] = ["p12", "p31", "p23"];

fn symbols() -> VarSet {
    VarSet::new(&["p12", "p31", "p23", "p1", "p2", "p3"])
}

fn subs(src: &[(&str, &str)]) -> Vec<(String, Expr)> {
    src.iter().map(|(n, e)| (n.to_string(), ex(e))).collect()
}

#[allow(clippy::too_many_arguments)]
fn eq(id: &str, lf: &str, lw: &str, ls: &[(&str, &str)], rf: &str, rw: &str, rs: &[(&str, &str)], unit: &str) -> Equivalence {
    Equivalence {
        id: id.into(),
        lhs: (lf.into(), lw.into()),
        lhs_subs: subs(ls),
        rhs: (rf.into(), rw.into()),
        rhs_subs: subs(rs),
        unit: ex(unit),
    }
}

pub fn equivalences() -> Vec<Equivalence> {
    vec![
        eq(
            "31_W'",
            "31", "W", &[("p12", "p1^2*p12"), ("p31", "p1*p31"), ("p23", "p1*p23")],
            "31", "W'", &[],
            "p1^4",
        ),
        eq("4A_W'", "4A", "W", &[("p12", "p1*p12")], "4A", "W'", &[], "p1"),
        eq(
            "4Bp_4B",
            "4Bp", "W", &[("p31", "p1*p31"), ("p23", "p23/p1")],
            "4B", "W", &[("p1", "p1^2")],
            "1",
        ),
        // the printed substitution matches once p12 and p31 trade places
        eq(
            "4Bpp_4Bp",
            "4Bp", "W", &[("p12", "p1*p12"), ("p31", "p1*p31")],
            "4Bpp", "W", &[("p12", "p31"), ("p31", "p12")],
            "p1^2",
        ),
        eq(
            "31B_4A",
            "31B", "W", &[("p31", "p31/p1"), ("p23", "p23/p1")],
            "4A", "W", &[("p1", "p1^2")],
            "p1^(-2)",
        ),
        eq(
            "31Bp_4Bpp",
            "31Bp", "W", &[("p31", "p31/p2"), ("p23", "p2*p23")],
            "4Bpp", "W", &[("p12", "p31"), ("p31", "p12"), ("p1", "p2")],
            "1",
        ),
        eq(
            "31Bp_31B",
            "31Bp", "W", &[("p12", "p12/p2"), ("p31", "(p12*p31 - p2)/p2^2"), ("p23", "p2*p23")],
            "31B", "W", &[("p1", "p2")],
            "p12/p2^2",
        ),
        eq(
            "22_211deg",
            "22", "W", &[("p12", "sqrt(p1*p2)*p12"), ("p31", "sqrt(p1*p2)*p31")],
            "211deg", "W", &[("p3", "sqrt(p1*p2) + 1/sqrt(p1*p2)"), ("p2", "sqrt(p1/p2) + sqrt(p2/p1)")],
            "p1*p2",
        ),
    ]
}

impl Equivalence {
    pub fn check(&self) -> Result<EquivalenceReport> {
        let vars = symbols();
        let ring = LaurentRing::new(&vars);
        let side = |(f, w): &(String, String), s: &[(String, Expr)]| -> Result<LaurentPoly> {
            let fam = family(f)?;
            let bound: Vec<(String, LaurentPoly)> =
                s.iter().map(|(n, e)| Ok((n.clone(), e.eval(&ring)?))).collect::<Result<_>>()?;
            fam.variant_w(w)?.eval(&Bound::new(&ring).with(bound))
        };
        let lhs = side(&self.lhs, &self.lhs_subs)?;
        let rhs = side(&self.rhs, &self.rhs_subs)?;
        let unit = self.unit.eval(&ring)?;
        let residual = lhs.try_sub(&unit.try_mul(&rhs)?)?;
        let vs = self.unit.variables();
        Ok(EquivalenceReport {
            id: self.id.clone(),
            residual,
            unit: self.unit.to_string(),
            unit_in_parameters: !vs.iter().any(|v| GENERATORS.contains(&v.as_str())),
        })
    }
}
