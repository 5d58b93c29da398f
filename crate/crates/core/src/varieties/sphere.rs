//! Four-punctured sphere on the octahedral quiver.

use crate::cluster::{ExchangeMatrix, Word};
use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, VarSet};
use crate::expr::{ex, Bound, LaurentRing};
use crate::report::Outcome;

use super::model::{Action, BracketRule, TraceModel};
use super::{exprs, pgl_relations, rules, with_inverse, words, PrintedImage, VarietyPreset};

pub fn oct_matrix() -> ExchangeMatrix {
    ExchangeMatrix::new(vec![
        vec![0, 0, -1, -1, 1, 1],
        vec![0, 0, -1, -1, 1, 1],
        vec![1, 1, 0, 0, -1, -1],
        vec![1, 1, 0, 0, -1, -1],
        vec![-1, -1, 1, 1, 0, 0],
        vec![-1, -1, 1, 1, 0, 0],
    ])
    .expect("skew-symmetric")
}

/// `q^{-1/4} Σ_ε (Y_a Y_b Y_c)^{ε/2}` as ordered half powers.
fn q_puncture(a: usize, b: usize, c: usize) -> String {
    format!("q^(-1/4)*(Y{a}^(1/2)*Y{b}^(1/2)*Y{c}^(1/2) + Y{a}^(-1/2)*Y{b}^(-1/2)*Y{c}^(-1/2))")
}

/// `Σ_{(e_a,e_b,e_c,e_d) ∈ E} q^{-(e_a+e_b)(e_c+e_d)/4} Y_a^{e_a/2} Y_b^{e_b/2} Y_c^{e_c/2} Y_d^{e_d/2}`
/// with `E = {(ε,η,+,+)} ∪ {(-,-,ε,η)}`; `prefactor_pairs` names the two
/// index pairs whose sums multiply in the exponent.
fn q_loop(idx: [usize; 4], prefactor_pairs: ([usize; 2], [usize; 2])) -> String {
    let mut tuples: Vec<[i32; 4]> = Vec::new();
    for e in [1, -1] {
        for h in [1, -1] {
            tuples.push([e, h, 1, 1]);
        }
    }
    for e in [1, -1] {
        for h in [1, -1] {
            let t = [-1, -1, e, h];
            if !tuples.contains(&t) {
                tuples.push(t);
            }
        }
    }
    let mut terms = Vec::new();
    for t in tuples {
        let s1: i32 = prefactor_pairs.0.iter().map(|&i| t[i]).sum();
        let s2: i32 = prefactor_pairs.1.iter().map(|&i| t[i]).sum();
        let quarters = -s1 * s2;
        let mono: Vec<String> = idx
            .iter()
            .zip(t)
            .map(|(v, e)| format!("Y{v}^({}/2)", e))
            .collect();
        terms.push(format!("q^({quarters}/4)*{}", mono.join("*")));
    }
    terms.join(" + ")
}

fn bracket(a: &str, b: &str, rhs: &str, wrt: &str) -> BracketRule {
    BracketRule {
        a: a.into(),
        b: b.into(),
        rhs: ex(rhs),
        gradient: Some((crate::exact::int(1), wrt.into())),
    }
}

const W: &str = "p12*p23*p31 - (p12^2 + p23^2 + p31^2 + (p1*p2 + p3*p4)*p12 + (p1*p3 + p2*p4)*p31 \
                 + (p1*p4 + p2*p3)*p23 + p1^2 + p2^2 + p3^2 + p4^2 + p1*p2*p3*p4 - 4)";

const WQ: &str = "q^(-1)*p12*p23*p31 - (q^(-2)*p12^2 + q^(-2)*p31^2 + q^2*p23^2 \
                  + q^(-1)*(p1*p2 + p3*p4)*p12 + q^(-1)*(p1*p3 + p2*p4)*p31 + q*(p1*p4 + p2*p3)*p23 \
                  + p1^2 + p2^2 + p3^2 + p4^2 + p1*p2*p3*p4 - (q + q^(-1))^2)";

pub fn model() -> TraceModel {
    let punct = |i: &str, a: usize, b: usize, c: usize| -> (String, String) {
        (i.to_string(), q_puncture(a, b, c))
    };
    let quantum = vec![
        ("p12".to_string(), q_loop([5, 6, 1, 2], ([0, 1], [2, 3]))),
        ("p31".to_string(), q_loop([3, 4, 5, 6], ([2, 3], [0, 1]))),
        ("p23".to_string(), q_loop([1, 2, 3, 4], ([2, 3], [0, 1]))),
        punct("p1", 1, 3, 6),
        punct("p2", 2, 3, 5),
        punct("p3", 1, 4, 5),
        punct("p4", 2, 4, 6),
    ];
    TraceModel {
        name: "sphere".into(),
        b: oct_matrix(),
        vars: VarSet::numbered("y", 6),
        qvars: VarSet::numbered("Y", 6),
        generators: vec!["p12".into(), "p31".into(), "p23".into()],
        params: vec!["p1".into(), "p2".into(), "p3".into(), "p4".into()],
        classical: rules(&[
            (
                "p12",
                "sqrt(y1*y2*y5*y6) + sqrt(y1*y2*y6/y5) + sqrt(y1*y2*y5/y6) + sqrt(y1*y2/(y5*y6)) \
                 + sqrt(y2/(y1*y5*y6)) + sqrt(y1/(y2*y5*y6)) + 1/sqrt(y1*y2*y5*y6)",
            ),
            (
                "p31",
                "sqrt(y3*y4*y5*y6) + sqrt(y4*y5*y6/y3) + sqrt(y3*y5*y6/y4) + sqrt(y5*y6/(y3*y4)) \
                 + sqrt(y6/(y3*y4*y5)) + sqrt(y5/(y3*y4*y6)) + 1/sqrt(y3*y4*y5*y6)",
            ),
            (
                "p23",
                "sqrt(y1*y2*y3*y4) + sqrt(y2*y3*y4/y1) + sqrt(y1*y3*y4/y2) + sqrt(y3*y4/(y1*y2)) \
                 + sqrt(y4/(y1*y2*y3)) + sqrt(y3/(y1*y2*y4)) + 1/sqrt(y1*y2*y3*y4)",
            ),
            ("p1", "sqrt(y1*y3*y6) + 1/sqrt(y1*y3*y6)"),
            ("p2", "sqrt(y2*y3*y5) + 1/sqrt(y2*y3*y5)"),
            ("p3", "sqrt(y1*y4*y5) + 1/sqrt(y1*y4*y5)"),
            ("p4", "sqrt(y2*y4*y6) + 1/sqrt(y2*y4*y6)"),
        ]),
        quantum: quantum.into_iter().map(|(n, s)| (n, ex(&s))).collect(),
        w: ex(W),
        wq: Some(ex(WQ)),
        brackets: vec![
            bracket("p12", "p31", "p12*p31 - 2*p23 - (p1*p4 + p2*p3)", "p23"),
            bracket("p31", "p23", "p31*p23 - 2*p12 - (p1*p2 + p3*p4)", "p12"),
            bracket("p23", "p12", "p12*p23 - 2*p31 - (p1*p3 + p2*p4)", "p31"),
        ],
        q_relations: vec![
            (
                ex("q*p12*p31 - q^(-1)*p31*p12"),
                ex("(q^2 - q^(-2))*p23 + (q - q^(-1))*(p1*p4 + p2*p3)"),
            ),
            (
                ex("q*p31*p23 - q^(-1)*p23*p31"),
                ex("(q^2 - q^(-2))*p12 + (q - q^(-1))*(p1*p2 + p3*p4)"),
            ),
            (
                ex("q*p23*p12 - q^(-1)*p12*p23"),
                ex("(q^2 - q^(-2))*p31 + (q - q^(-1))*(p1*p3 + p2*p4)"),
            ),
        ],
    }
}

pub fn preset() -> VarietyPreset {
    let ws = with_inverse(words(&[
        ("R", "s56 s15 s26 m1 m2"),
        ("L", "s56 s35 s46 m3 m4"),
        ("M", "inv s56 m5 m6"),
    ]));
    let get = |n: &str| ws.iter().find(|(k, _)| k == n).map(|(_, w)| w.clone()).expect("generator");
    let (r, l, m) = (get("R"), get("L"), get("M"));
    let li = l.inverse();
    let printed = vec![
        PrintedImage {
            label: "R(y)".into(),
            word: r.clone(),
            images: exprs(&[
                "y5*(1 + y1^-1)^-1*(1 + y2^-1)^-1",
                "y6*(1 + y1^-1)^-1*(1 + y2^-1)^-1",
                "y3*(1 + y1)*(1 + y2)",
                "y4*(1 + y1)*(1 + y2)",
                "y2^-1",
                "y1^-1",
            ]),
        },
        PrintedImage {
            label: "L(y)".into(),
            word: l.clone(),
            images: exprs(&[
                "y1*(1 + y3^-1)^-1*(1 + y4^-1)^-1",
                "y2*(1 + y3^-1)^-1*(1 + y4^-1)^-1",
                "y5*(1 + y3)*(1 + y4)",
                "y6*(1 + y3)*(1 + y4)",
                "y4^-1",
                "y3^-1",
            ]),
        },
        PrintedImage {
            label: "M(y)".into(),
            word: m.clone(),
            images: exprs(&[
                "y1^-1*(1 + y5)^-1*(1 + y6)^-1",
                "y2^-1*(1 + y5)^-1*(1 + y6)^-1",
                "y3^-1*(1 + y5^-1)*(1 + y6^-1)",
                "y4^-1*(1 + y5^-1)*(1 + y6^-1)",
                "y6",
                "y5",
            ]),
        },
        PrintedImage {
            label: "R L^-1 R (y)".into(),
            word: r.compose(&li).compose(&r),
            images: exprs(&[
                "y3*(1 + y5^-1)^-1*(1 + y6^-1)^-1",
                "y4*(1 + y5^-1)^-1*(1 + y6^-1)^-1",
                "y1*(1 + y5)*(1 + y6)",
                "y2*(1 + y5)*(1 + y6)",
                "y6^-1",
                "y5^-1",
            ]),
        },
        PrintedImage {
            label: "L^-1 R (y)".into(),
            word: li.compose(&r),
            images: exprs(&["y5", "y6", "y1", "y2", "y3", "y4"]),
        },
    ];
    let b = oct_matrix();
    let matrix_images = vec![
        ("R".to_string(), b.clone()),
        ("L".to_string(), b.clone()),
        ("M".to_string(), b.negate()),
    ];
    let action = |name: &str, w: &Word, src: &[(&str, &str)]| Action {
        name: name.into(),
        word: w.clone(),
        rules: rules(src),
    };
    let actions = vec![
        action(
            "R",
            &r,
            &[
                ("p1", "p2"),
                ("p2", "p1"),
                ("p3", "p3"),
                ("p4", "p4"),
                ("p12", "p12"),
                ("p31", "p23"),
                ("p23", "p23*p12 - p31 - p1*p3 - p2*p4"),
            ],
        ),
        action(
            "L",
            &l,
            &[
                ("p1", "p3"),
                ("p2", "p2"),
                ("p3", "p1"),
                ("p4", "p4"),
                ("p12", "p23"),
                ("p31", "p31"),
                ("p23", "p31*p23 - p12 - p1*p2 - p3*p4"),
            ],
        ),
        action(
            "M",
            &m,
            &[
                ("p1", "p1"),
                ("p2", "p2"),
                ("p3", "p3"),
                ("p4", "p4"),
                ("p12", "p12"),
                ("p31", "p31"),
                ("p23", "p12*p31 - p23 - p1*p4 - p2*p3"),
            ],
        ),
    ];
    let q_actions = vec![
        action(
            "R",
            &r,
            &[
                ("p1", "p2"),
                ("p2", "p1"),
                ("p3", "p3"),
                ("p4", "p4"),
                ("p12", "p12"),
                ("p31", "p23"),
                ("p23", "q*p23*p12 - q^2*p31 - q*(p1*p3 + p2*p4)"),
            ],
        ),
        action(
            "L",
            &l,
            &[
                ("p1", "p3"),
                ("p2", "p2"),
                ("p3", "p1"),
                ("p4", "p4"),
                ("p12", "p23"),
                ("p31", "p31"),
                ("p23", "q*p31*p23 - q^2*p12 - q*(p1*p2 + p3*p4)"),
            ],
        ),
    ];
    VarietyPreset {
        model: model(),
        relations: pgl_relations(),
        words: ws,
        printed,
        matrix_images,
        actions,
        q_actions,
    }
}

/// Singular-fibre condition in the puncture traces.
pub const SINGULARITY: &str = "(p1^2 - 4)*(p2^2 - 4)*(p3^2 - 4)*(p4^2 - 4)*(\
    (p1 + p2 + p3 + p4)*(p1 - p2 - p3 + p4)*(-p1 + p2 - p3 + p4)*(-p1 - p2 + p3 + p4) \
    - (p1*p4 - p2*p3)*(p2*p4 - p1*p3)*(p3*p4 - p1*p2))";

/// The eight faces of the octahedron.
pub const FACES: [[usize; 3]; 8] = [
    [1, 3, 5],
    [2, 3, 5],
    [1, 4, 5],
    [2, 4, 5],
    [1, 3, 6],
    [1, 4, 6],
    [2, 3, 6],
    [2, 4, 6],
];

/// The faces `y_a y_b y_c` whose traces are the puncture loops `p_1 … p_4`.
pub const PUNCTURE_FACES: [[usize; 3]; 4] = [[1, 3, 6], [2, 3, 5], [1, 4, 5], [2, 4, 6]];

fn face_product(faces: &[[usize; 3]]) -> String {
    faces
        .iter()
        .map(|[a, b, c]| format!("(1 - y{a}*y{b}*y{c})"))
        .collect::<Vec<_>>()
        .join("*")
}

pub fn singularity_target() -> String {
    format!(
        "(y1 - y2)*(y3 - y4)*(y5 - y6)*(1 - y1*y2*y3*y4*y5*y6)*{}",
        face_product(&FACES)
    )
}

/// Result of dividing the singularity expression by the face product.
#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub expression_terms: usize,
    pub target_terms: usize,
    /// `expression / target`, when the division is exact.
    pub quotient: Option<LaurentPoly>,
    /// Set when the quotient is `c · y^m`.
    pub unit: Option<LaurentPoly>,
    /// Set when the quotient is `c · y^m · Π_{puncture faces} (1 - y_a y_b y_c)`.
    pub puncture_excess_unit: Option<LaurentPoly>,
}

impl SingularityReport {
    pub fn outcome(&self) -> Outcome {
        match (&self.quotient, &self.unit, &self.puncture_excess_unit) {
            (_, Some(u), _) => Outcome::pass(format!("quotient is the unit {u}")),
            (Some(q), None, Some(u)) => Outcome::fail(
                q.len(),
                format!(
                    "quotient is not a unit: it equals ({u})*{}; the expression has the same zero set \
                     as the face product, with the four puncture faces doubled",
                    face_product(&PUNCTURE_FACES)
                ),
            ),
            (Some(q), None, None) => Outcome::fail(q.len(), format!("quotient is not a unit: {q}")),
            (None, _, _) => Outcome::fail(self.expression_terms, "face product does not divide the expression"),
        }
    }
}

pub fn check_singularity_factorization() -> Result<SingularityReport> {
    let m = model();
    let images = m.classical_images()?;
    let ring = LaurentRing::new(&m.vars);
    let expr = ex(SINGULARITY).eval(&Bound::new(&ring).with(images))?;
    let target = ring.eval(&ex(&singularity_target()))?;
    let quotient = expr.exact_div(&target);
    let unit = quotient.as_ref().filter(|q| q.as_monomial().is_some()).cloned();
    let puncture_excess_unit = match (&quotient, &unit) {
        (Some(q), None) => {
            let extra = ring.eval(&ex(&face_product(&PUNCTURE_FACES)))?;
            q.exact_div(&extra).filter(|u| u.as_monomial().is_some())
        }
        _ => None,
    };
    if expr.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(SingularityReport {
        expression_terms: expr.len(),
        target_terms: target.len(),
        quotient,
        unit,
        puncture_excess_unit,
    })
}
