//! Data of the degenerate families: quivers, embeddings, cubic polynomials,
//! automorphisms, and their quantizations.

use crate::cluster::ExchangeMatrix;
use crate::exact::VarSet;
use crate::expr::{ex, Expr};
use crate::varieties::{self, Action, TraceModel};

use super::{label_word, Automorphism, Family};

const R12_31: &str = "q*p12*p31 - q^(-1)*p31*p12";
const R31_23: &str = "q*p31*p23 - q^(-1)*p23*p31";
const R23_12: &str = "q*p23*p12 - q^(-1)*p12*p23";

/// Shared (2,1,1) images, reused by its descendants.
const P31_211: &str = "sqrt(y3*y5/y2) + sqrt(y5/(y2*y3)) + (1/y4)*(sqrt(y3*y5/y2) + sqrt(y5/(y2*y3)) + 1/sqrt(y2*y3*y5))";
const P23_OCT: &str = "sqrt(y1*y2*y3*y4) + sqrt(y2*y3*y4/y1) + sqrt(y1*y3*y4/y2) + sqrt(y3*y4/(y1*y2)) \
                       + sqrt(y4/(y1*y2*y3)) + sqrt(y3/(y1*y2*y4)) + 1/sqrt(y1*y2*y3*y4)";
const Q_P12_211: &str = "q^(-1/4)*Y1^(1/2)*Y4^(-1/2)*(1 + q*Y5)*Y5^(-1/2)";
const Q_P31_211: &str =
    "q^(-1/4)*Y2^(-1/2)*Y3^(-1/2)*((1 + Y3)*(1 + Y4^(-1)) + q^(-1)*Y4^(-1)*Y5^(-1))*Y5^(1/2)";
const Q_P23_211: &str = "(Y1*Y2)^(-1/2)*(q*(1 + q^(-1)*Y3^(-1))*(1 + q^(-1)*Y4^(-1)) \
                         + (Y1 + Y2 + q^(-1)*Y1*Y2))*(Y3*Y4)^(1/2)";

fn q_puncture(a: &str, b: &str, c: &str) -> String {
    format!("q^(-1/4)*(Y{a}^(1/2)*Y{b}^(1/2)*Y{c}^(1/2) + Y{a}^(-1/2)*Y{b}^(-1/2)*Y{c}^(-1/2))")
}

/// `b_ij = #(i → j) − #(j → i)` over vertex labels.
pub fn quiver(labels: &[&str], arrows: &[(&str, &str)]) -> ExchangeMatrix {
    let at = |l: &str| labels.iter().position(|x| *x == l).expect("vertex label");
    let idx: Vec<(usize, usize)> = arrows.iter().map(|(a, b)| (at(a), at(b))).collect();
    ExchangeMatrix::from_arrows(labels.len(), &idx)
}

struct Data<'a> {
    slug: &'a str,
    label: &'a str,
    painleve: Option<&'a str>,
    labels: &'a [&'a str],
    arrows: &'a [(&'a str, &'a str)],
    params: &'a [&'a str],
    classical: Vec<(&'a str, String)>,
    w: &'a str,
    quantum: Vec<(&'a str, String)>,
    wq: Option<&'a str>,
    /// Right-hand sides of `(12,31)`, `(31,23)`, `(23,12)`.
    q_rel: Option<[&'a str; 3]>,
}

fn build(d: Data) -> Family {
    let vars: Vec<String> = d.labels.iter().map(|l| format!("y{l}")).collect();
    let qvars: Vec<String> = d.labels.iter().map(|l| format!("Y{l}")).collect();
    let pairs = |v: Vec<(&str, String)>| -> Vec<(String, Expr)> {
        v.into_iter().map(|(n, e)| (n.to_string(), ex(&e))).collect()
    };
    let q_relations = match d.q_rel {
        Some([a, b, c]) => vec![(ex(R12_31), ex(a)), (ex(R31_23), ex(b)), (ex(R23_12), ex(c))],
        None => Vec::new(),
    };
    Family {
        slug: d.slug.into(),
        label: d.label.into(),
        painleve: d.painleve.map(String::from),
        labels: d.labels.iter().map(|s| s.to_string()).collect(),
        model: TraceModel {
            name: d.slug.into(),
            b: quiver(d.labels, d.arrows),
            vars: VarSet::new(&vars),
            qvars: VarSet::new(&qvars),
            generators: vec!["p12".into(), "p31".into(), "p23".into()],
            params: d.params.iter().map(|s| s.to_string()).collect(),
            classical: pairs(d.classical),
            quantum: pairs(d.quantum),
            w: ex(d.w),
            wq: d.wq.map(ex),
            brackets: Vec::new(),
            q_relations,
        },
        variant_ws: Vec::new(),
        automorphism: None,
        trivial_words: Vec::new(),
        inverse_words: Vec::new(),
    }
}

fn s(x: &str) -> String {
    x.to_string()
}

fn automorphism(f: &Family, word: &str, printed: &[&str], rules: &[(&str, &str)], q_rules: &[(&str, &str)]) -> Automorphism {
    let w = label_word(&f.labels, word).expect("built-in word");
    let action = |r: &[(&str, &str)]| Action {
        name: "G".into(),
        word: w.clone(),
        rules: varieties::rules(r),
    };
    Automorphism {
        word: word.into(),
        printed: varieties::exprs(printed),
        action: action(rules),
        q_action: (!q_rules.is_empty()).then(|| action(q_rules)),
    }
}

pub fn sphere() -> Family {
    let p = varieties::preset("sphere").expect("built-in");
    Family {
        slug: "1111".into(),
        label: "(1,1,1,1)".into(),
        painleve: Some("VI".into()),
        labels: (1..=6).map(|i| i.to_string()).collect(),
        model: p.model,
        variant_ws: Vec::new(),
        automorphism: None,
        trivial_words: Vec::new(),
        inverse_words: Vec::new(),
    }
}

pub fn f211() -> Family {
    let mut f = build(Data {
        slug: "211",
        label: "(2,1,1)",
        painleve: Some("V"),
        labels: &["1", "2", "3", "4", "5"],
        arrows: &[("4", "2"), ("4", "1"), ("3", "2"), ("3", "1"), ("2", "5"), ("1", "5"), ("5", "4"), ("5", "3")],
        params: &["p1", "p2", "p3"],
        classical: vec![
            ("p12", s("sqrt(y1*y5/y4) + sqrt(y1/(y4*y5))")),
            ("p31", s(P31_211)),
            ("p23", s(P23_OCT)),
            ("p1", s("sqrt(y1*y3/(y2*y4))")),
            ("p2", s("sqrt(y2*y3*y5) + 1/sqrt(y2*y3*y5)")),
            ("p3", s("sqrt(y1*y4*y5) + 1/sqrt(y1*y4*y5)")),
        ],
        w: "p12*p23*p31 - (p12^2 + p31^2 + (p1*p2 + p3)*p12 + (p1*p3 + p2)*p31 + p1*p23 + p1*p2*p3 + p1^2 + 1)",
        quantum: vec![
            ("p12", s(Q_P12_211)),
            ("p31", s(Q_P31_211)),
            ("p23", s(Q_P23_211)),
            ("p1", s("(Y1*Y2^(-1))^(1/2)*(Y3*Y4^(-1))^(1/2)")),
            ("p2", q_puncture("2", "3", "5")),
            ("p3", q_puncture("1", "4", "5")),
        ],
        wq: Some(
            "q^(-1)*p12*p23*p31 - (q^(-2)*p12^2 + q^(-2)*p31^2 + q^(-1)*(p1*p2 + p3)*p12 \
             + q^(-1)*(p1*p3 + p2)*p31 + q*p1*p23 + p1^2 + p1*p2*p3 + 1)",
        ),
        q_rel: Some([
            "(q - q^(-1))*p1",
            "(q^2 - q^(-2))*p12 + (q - q^(-1))*(p1*p2 + p3)",
            "(q^2 - q^(-2))*p31 + (q - q^(-1))*(p1*p3 + p2)",
        ]),
    });
    f.automorphism = Some(automorphism(
        &f,
        "s1,2 s1,4 s2,3 m1 m2",
        &[
            "y3*(1 + y1)*(1 + y2)",
            "y4*(1 + y1)*(1 + y2)",
            "y2^(-1)",
            "y1^(-1)",
            "y5*(1 + y1^(-1))^(-1)*(1 + y2^(-1))^(-1)",
        ],
        &[
            ("p1", "p1"),
            ("p2", "p3"),
            ("p3", "p2"),
            ("p12", "p12*p23 - p31 - p1*p3 - p2"),
            ("p31", "p12"),
            ("p23", "p23"),
        ],
        &[
            ("p2", "p3"),
            ("p3", "p2"),
            ("p12", "q^(-1)*p12*p23 - q^(-2)*p31 - q^(-1)*(p1*p3 + p2)"),
            ("p31", "p12"),
            ("p23", "p23"),
        ],
    ));
    f.trivial_words = vec![label_word(&f.labels, "s2,3 m2 m3 m5").expect("built-in word")];
    f.inverse_words = vec![label_word(&f.labels, "s1,4 s2,3 m3 m4").expect("built-in word")];
    f
}

pub fn f31() -> Family {
    let mut f = build(Data {
        slug: "31",
        label: "(3,1)",
        painleve: Some("IV"),
        labels: &["2", "3", "4", "5"],
        arrows: &[("4", "2"), ("5", "4"), ("3", "2"), ("5", "3"), ("2", "5")],
        params: &["p1", "p2"],
        classical: vec![
            ("p12", s("y4^(-1)*(1 + y5^(-1))")),
            ("p31", s(P31_211)),
            ("p23", s("sqrt(y3/(y2*y5)) + sqrt(y2*y3/y5)")),
            ("p1", s("sqrt(y3/(y2*y5))/y4")),
            ("p2", s("sqrt(y2*y3*y5) + 1/sqrt(y2*y3*y5)")),
        ],
        w: "p12*p23*p31 - (p12^2 + (p1*p2 + 1)*p12 + p1*p31 + p1*p23 + p1*(p1 + p2))",
        quantum: vec![
            ("p12", s("Y4^(-1)*(1 + q^(-1)*Y5^(-1))")),
            ("p31", s(Q_P31_211)),
            ("p23", s("q^(3/4)*Y2^(-1/2)*(1 + q^(-1)*Y2)*Y3^(1/2)*Y5^(-1/2)")),
            ("p1", s("q^(-1/4)*Y2^(-1/2)*Y3^(1/2)*Y4^(-1)*Y5^(-1/2)")),
            ("p2", q_puncture("2", "3", "5")),
        ],
        wq: Some(
            "q^(-1)*p12*p23*p31 - (q^(-2)*p12^2 + q^(-1)*(p1*p2 + 1)*p12 + q^(-1)*p1*p31 \
             + q*p1*p23 + p1*(p1 + p2))",
        ),
        q_rel: Some([
            "(q - q^(-1))*p1",
            "(q^2 - q^(-2))*p12 + (q - q^(-1))*(p1*p2 + 1)",
            "(q - q^(-1))*p1",
        ]),
    });
    f.variant_ws = vec![(
        "W'".into(),
        ex("p12*p23*p31 - (p12^2 + (p1^(-1)*p2 + p1^(-2))*p12 + p1^(-2)*p31 + p1^(-2)*p23 + p1^(-2) + p1^(-3)*p2)"),
    )];
    f.automorphism = Some(automorphism(
        &f,
        "s2,5 s3,4 m3 m4",
        &[
            "y5*(1 + y3)*(1 + y4)",
            "y4^(-1)",
            "y3^(-1)",
            "y2*(1 + y3^(-1))^(-1)*(1 + y4^(-1))^(-1)",
        ],
        &[
            ("p1", "p1"),
            ("p2", "p2"),
            ("p12", "p23*p31 - p12 - p1*p2 - 1"),
            ("p31", "p23"),
            ("p23", "p31"),
        ],
        &[
            ("p12", "q^(-1)*(p23*p31 - q^(-1)*p12 - p1*p2 - 1)"),
            ("p31", "p23"),
            ("p23", "p31"),
        ],
    ));
    f
}

pub fn f22() -> Family {
    let mut f = build(Data {
        slug: "22",
        label: "(2,2)",
        painleve: Some("III(D6)"),
        labels: &["1", "2", "3", "4"],
        arrows: &[("4", "2"), ("4", "1"), ("3", "2"), ("3", "1")],
        params: &["p1", "p2"],
        classical: vec![
            ("p12", s("y4^(-1)")),
            ("p31", s("(1/sqrt(y1*y2*y3*y4))*(1 + y3)*(1 + y4^(-1))")),
            ("p23", s(P23_OCT)),
            ("p1", s("sqrt(y1*y3/(y2*y4))")),
            ("p2", s("sqrt(y2*y3/(y1*y4))")),
        ],
        w: "p12*p23*p31 - (p12^2 + p31^2 + (p1*p2 + 1)*p12 + (p1 + p2)*p31 + p1*p2)",
        quantum: vec![
            ("p12", s("Y4^(-1)")),
            ("p31", s("q^(-1)*(Y1*Y2)^(-1/2)*(Y3*Y4)^(-1/2)*(1 + q*Y3)*(1 + q^(-1)*Y4^(-1))")),
            ("p23", s(Q_P23_211)),
            ("p1", s("(Y1*Y2^(-1))^(1/2)*(Y3*Y4^(-1))^(1/2)")),
            ("p2", s("(Y1^(-1)*Y2)^(1/2)*(Y3*Y4^(-1))^(1/2)")),
        ],
        wq: Some(
            "q^(-1)*p12*p23*p31 - (q^(-2)*p12^2 + q^(-2)*p31^2 + q^(-1)*(p1*p2 + 1)*p12 \
             + q^(-1)*(p1 + p2)*p31 + p1*p2)",
        ),
        q_rel: Some([
            "0",
            "(q^2 - q^(-2))*p12 + (q - q^(-1))*(p1*p2 + 1)",
            "(q^2 - q^(-2))*p31 + (q - q^(-1))*(p1 + p2)",
        ]),
    });
    f.automorphism = Some(automorphism(
        &f,
        "s1,3 s2,4 m1 m2",
        &[
            "y3*(1 + y1)*(1 + y2)",
            "y4*(1 + y1)*(1 + y2)",
            "y1^(-1)",
            "y2^(-1)",
        ],
        &[
            ("p1", "p2"),
            ("p2", "p1^(-1)"),
            ("p12", "p1^(-1)*(p12*p23 - p31 - p1 - p2)"),
            ("p31", "p1^(-1)*p12"),
            ("p23", "p23"),
        ],
        &[
            ("p1", "p2"),
            ("p2", "p1^(-1)"),
            ("p12", "q^(-1)*p1^(-1)*(p12*p23 - q^(-1)*p31 - p1 - p2)"),
            ("p31", "p1^(-1)*p12"),
            ("p23", "p23"),
        ],
    ));
    f
}

pub fn f211deg() -> Family {
    let mut f = build(Data {
        slug: "211deg",
        label: "(2,1,1)deg",
        painleve: Some("V(deg)"),
        labels: &["1", "2p", "4", "5"],
        arrows: &[("5", "4"), ("1", "5"), ("4", "2p"), ("2p", "1"), ("4", "1")],
        params: &["p2", "p3"],
        classical: vec![
            ("p12", s("sqrt(y1/(y4*y5))*(1 + y5)")),
            ("p31", s("sqrt(y5/y2p) + y4^(-1)*(1/sqrt(y2p*y5))*(1 + y5)")),
            (
                "p23",
                s("sqrt(y1*y2p*y4) + sqrt(y2p*y4/y1) + sqrt(y4/(y1*y2p)) + 1/sqrt(y1*y2p*y4)"),
            ),
            ("p2", s("sqrt(y2p*y5) + 1/sqrt(y2p*y5)")),
            ("p3", s("sqrt(y1*y4*y5) + 1/sqrt(y1*y4*y5)")),
        ],
        w: "p12*p23*p31 - (p12^2 + p31^2 + p3*p12 + p2*p31 + 1)",
        quantum: vec![
            ("p12", s(Q_P12_211)),
            ("p31", s("Y2p^(-1/2)*(1 + Y4^(-1) + q^(-1)*Y4^(-1)*Y5^(-1))*Y5^(1/2)")),
            (
                "p23",
                s("q^(1/4)*Y1^(-1/2)*(Y2p^(-1/2)*(1 + q^(-1)*Y4^(-1)) + (1 + q^(-1)*Y1)*Y2p^(1/2))*Y4^(1/2)"),
            ),
            ("p2", s("(Y2p*Y5)^(1/2) + (Y2p*Y5)^(-1/2)")),
            ("p3", q_puncture("1", "4", "5")),
        ],
        wq: Some(
            "q^(-1)*p12*p23*p31 - (q^(-2)*p12^2 + q^(-2)*p31^2 + q^(-1)*p3*p12 + q^(-1)*p2*p31 + 1)",
        ),
        q_rel: Some(["0", "(q^2 - q^(-2))*p12 + (q - q^(-1))*p3", "(q^2 - q^(-2))*p31 + (q - q^(-1))*p2"]),
    });
    f.automorphism = Some(automorphism(
        &f,
        "s1,2p s1,4 m1",
        &["y2p*(1 + y1)", "y4*(1 + y1)", "y1^(-1)", "y5*(1 + y1^(-1))^(-1)"],
        &[
            ("p2", "p3"),
            ("p3", "p2"),
            ("p12", "p12*p23 - p31 - p2"),
            ("p31", "p12"),
            ("p23", "p23"),
        ],
        &[
            ("p2", "p3"),
            ("p3", "p2"),
            ("p12", "q*(p23*p12 - q*p31 - p2)"),
            ("p31", "p12"),
            ("p23", "p23"),
        ],
    ));
    f
}

pub fn f4a() -> Family {
    let mut f = build(Data {
        slug: "4A",
        label: "(4)A",
        painleve: Some("II(JM)"),
        labels: &["2", "4", "5"],
        arrows: &[("4", "2"), ("2", "5"), ("5", "4")],
        params: &["p1"],
        classical: vec![
            ("p12", s("y4^(-1)*(1 + y5^(-1))")),
            ("p31", s("y2^(-1)*(1 + y4^(-1))")),
            ("p23", s("y5^(-1)*(1 + y2^(-1))")),
            ("p1", s("1/(y2*y4*y5)")),
        ],
        w: "p12*p23*p31 - (p1*(p12 + p23 + p31) + p1*(p1 + 1))",
        quantum: vec![
            ("p12", s("Y4^(-1)*(1 + q^(-1)*Y5^(-1))")),
            ("p31", s("Y2^(-1)*(1 + q^(-1)*Y4^(-1))")),
            ("p23", s("(1 + q*Y2^(-1))*Y5^(-1)")),
            ("p1", s("q^(-1)*Y2^(-1)*Y4^(-1)*Y5^(-1)")),
        ],
        wq: Some("q^(-1)*p12*p23*p31 - (q^(-1)*p1*p12 + q^(-1)*p1*p31 + q*p1*p23 + p1*(p1 + 1))"),
        q_rel: Some(["(q - q^(-1))*p1", "(q - q^(-1))*p1", "(q - q^(-1))*p1"]),
    });
    f.variant_ws = vec![("W'".into(), ex("p12*p23*p31 - (p1*p12 + p31 + p23 + p1 + 1)"))];
    f
}

pub fn f4b() -> Family {
    build(Data {
        slug: "4B",
        label: "(4)B",
        painleve: None,
        labels: &["2", "3", "4"],
        arrows: &[("4", "2"), ("3", "2")],
        params: &["p1"],
        classical: vec![
            ("p12", s("y4^(-1)")),
            ("p31", s("y2^(-1)*(1 + y3^(-1))*(1 + y4^(-1))")),
            ("p23", s("(1 + y2)*y3")),
            ("p1", s("y3*y4^(-1)")),
        ],
        w: "p12*p23*p31 - (p12^2 + (p1 + 1)*p12 + p1*p31 + p1)",
        quantum: vec![
            ("p12", s("Y4^(-1)")),
            ("p31", s("Y2^(-1)*(1 + q^(-1)*Y3^(-1))*(1 + q^(-1)*Y4^(-1))")),
            ("p23", s("(1 + q^(-1)*Y2)*Y3")),
            ("p1", s("Y3*Y4^(-1)")),
        ],
        wq: Some("q^(-1)*p12*p23*p31 - (q^(-2)*p12^2 + q^(-1)*(p1 + 1)*p12 + q^(-1)*p1*p31 + p1)"),
        q_rel: Some(["0", "(q^2 - q^(-2))*p12 + (q - q^(-1))*(p1 + 1)", "(q - q^(-1))*p1"]),
    })
}

/// `(4)B` reached from `(2,2)` with `y1 = κ y2`.
pub fn f4b_prime() -> Family {
    build(Data {
        slug: "4Bp",
        label: "(4)B'",
        painleve: None,
        labels: &["2", "3", "4"],
        arrows: &[("4", "2"), ("3", "2")],
        params: &["p1"],
        classical: vec![
            ("p12", s("y4^(-1)")),
            ("p31", s("(1/(y2*sqrt(y3*y4)))*(1 + y3)*(1 + y4^(-1))")),
            ("p23", s("(1 + y2)*sqrt(y3*y4)")),
            ("p1", s("sqrt(y3/y4)")),
        ],
        w: "p12*p23*p31 - (p12^2 + (p1^2 + 1)*p12 + p1*p31 + p1^2)",
        quantum: Vec::new(),
        wq: None,
        q_rel: None,
    })
}

/// `(4)B` reached from `(2,2)` with `y3 = κ y4`, on the mutated quiver `μ_2(Q_(4)B)`.
pub fn f4b_second() -> Family {
    build(Data {
        slug: "4Bpp",
        label: "(4)B''",
        painleve: None,
        labels: &["1", "2", "4"],
        arrows: &[("4", "2"), ("4", "1")],
        params: &["p1"],
        classical: vec![
            ("p12", s("y4^(-1)")),
            ("p31", s("(1/sqrt(y1*y2))*(1 + y4^(-1))")),
            ("p23", s("1/sqrt(y1*y2) + (1/sqrt(y1*y2))*(1 + y1)*(1 + y2)*y4")),
            ("p1", s("sqrt(y1/y2)")),
        ],
        w: "p12*p23*p31 - (p12 + p31^2 + (p1 + p1^(-1))*p31 + 1)",
        quantum: Vec::new(),
        wq: None,
        q_rel: None,
    })
}

pub fn f31b() -> Family {
    build(Data {
        slug: "31B",
        label: "(3,1)B",
        painleve: None,
        labels: &["2", "3", "5"],
        arrows: &[("3", "2"), ("5", "3"), ("2", "5")],
        params: &["p1"],
        classical: vec![
            ("p12", s("y2*(1 + y5)")),
            ("p31", s("sqrt(y5/(y2*y3))*(1 + y3)")),
            ("p23", s("sqrt(y3/(y2*y5))*(1 + y2)")),
            ("p1", s("sqrt(y2*y3*y5)")),
        ],
        w: "p12*p23*p31 - (p12 + p1*p31 + p1*p23 + p1^2 + 1)",
        quantum: vec![
            ("p12", s("Y2*(1 + q*Y5)")),
            ("p31", s("q^(-1/4)*Y2^(-1/2)*Y3^(-1/2)*(1 + Y3)*Y5^(1/2)")),
            ("p23", s("q^(3/4)*Y2^(-1/2)*(1 + q^(-1)*Y2)*Y3^(1/2)*Y5^(-1/2)")),
            ("p1", s("q^(-1/4)*Y2^(1/2)*Y3^(1/2)*Y5^(1/2)")),
        ],
        wq: Some("q^(-1)*p12*p23*p31 - (q^(-1)*p12 + q^(-1)*p1*p31 + q*p1*p23 + p1^2 + 1)"),
        q_rel: Some(["(q - q^(-1))*p1", "q - q^(-1)", "(q - q^(-1))*p1"]),
    })
}

/// `(3,1)B` reached from `(2,1,1)deg` with `y2' = κ y1 y4`.
pub fn f31b_prime() -> Family {
    build(Data {
        slug: "31Bp",
        label: "(3,1)B'",
        painleve: None,
        labels: &["1", "4", "5"],
        arrows: &[("1", "5"), ("5", "4"), ("4", "1")],
        params: &["p2"],
        classical: vec![
            ("p12", s("sqrt(y1/(y4*y5))*(1 + y5)")),
            ("p31", s("sqrt(y5/(y1*y4)) + (1/sqrt(y1*y4*y5))*y4^(-1)*(1 + y5)")),
            ("p23", s("(1 + y1)*y4")),
            ("p2", s("sqrt(y1*y4*y5)")),
        ],
        w: "p12*p23*p31 - (p12^2 + (p2 + p2^(-1))*p12 + p2*p31 + 1)",
        quantum: Vec::new(),
        wq: None,
        q_rel: None,
    })
}

pub fn f22deg() -> Family {
    let mut f = build(Data {
        slug: "22deg",
        label: "(2,2)deg",
        painleve: Some("III(D7)"),
        labels: &["1", "2p", "4"],
        arrows: &[("4", "2p"), ("4", "1"), ("2p", "1")],
        params: &["p2"],
        classical: vec![
            ("p12", s("y4^(-1)")),
            ("p31", s("(1/sqrt(y1*y2p*y4))*(1 + y4^(-1))")),
            (
                "p23",
                s("(1 + y1^(-1))*sqrt(y1*y2p*y4) + (1/sqrt(y1*y2p*y4))*(1 + y4)"),
            ),
            ("p2", s("sqrt(y2p/(y1*y4))")),
        ],
        w: "p12*p23*p31 - (p12^2 + p31^2 + p12 + p2*p31)",
        quantum: vec![
            ("p12", s("Y4^(-1)")),
            ("p31", s("q^(-3/4)*Y1^(-1/2)*Y2p^(-1/2)*Y4^(-1/2)*(1 + q^(-1)*Y4^(-1))")),
            (
                "p23",
                s("q^(1/4)*Y1^(-1/2)*(Y2p^(-1/2)*(1 + q^(-1)*Y4^(-1)) + (1 + q^(-1)*Y1)*Y2p^(1/2))*Y4^(1/2)"),
            ),
            ("p2", s("q^(1/4)*Y1^(-1/2)*Y2p^(1/2)*Y4^(-1/2)")),
        ],
        wq: Some("q^(-1)*p12*p23*p31 - (q^(-2)*p12^2 + q^(-2)*p31^2 + q^(-1)*p12 + q^(-1)*p2*p31)"),
        q_rel: Some(["0", "(q^2 - q^(-2))*p12 + q - q^(-1)", "(q^2 - q^(-2))*p31 + (q - q^(-1))*p2"]),
    });
    f.automorphism = Some(automorphism(
        &f,
        "s1,2p s1,4 m1",
        &["y2p*(1 + y1)", "y4*(1 + y1)", "y1^(-1)"],
        &[
            ("p2", "p2^(-1)"),
            ("p12", "p2^(-1)*p12*p23 - p2^(-1)*p31 - 1"),
            ("p31", "p2^(-1)*p12"),
            ("p23", "p23"),
        ],
        &[],
    ));
    f
}

pub fn f22deg2() -> Family {
    build(Data {
        slug: "22deg2",
        label: "(2,2)deg2",
        painleve: Some("III(D8)"),
        labels: &["2pp", "4"],
        arrows: &[("4", "2pp"), ("4", "2pp")],
        params: &[],
        classical: vec![
            ("p12", s("y4^(-1)")),
            ("p31", s("(1/sqrt(y2pp*y4))*(1 + y4^(-1))")),
            ("p23", s("sqrt(y2pp*y4) + (1/sqrt(y2pp*y4))*(1 + y4)")),
        ],
        w: "p12*p23*p31 - (p12^2 + p31^2 + p12)",
        quantum: vec![
            ("p12", s("Y4^(-1)")),
            ("p31", s("Y2pp^(-1/2)*Y4^(-1/2)*(1 + q^(-1)*Y4^(-1))")),
            ("p23", s("Y2pp^(-1/2)*(1 + q*Y4 + q^(-1)*Y2pp*Y4)*Y4^(-1/2)")),
        ],
        wq: Some("q^(-1)*p12*p23*p31 - (q^(-2)*p12^2 + q^(-2)*p31^2 + q^(-1)*p12)"),
        q_rel: Some(["0", "(q^2 - q^(-2))*p12 + q - q^(-1)", "(q^2 - q^(-2))*p31"]),
    })
}

pub fn f4c() -> Family {
    build(Data {
        slug: "4C",
        label: "(4)C",
        painleve: Some("I"),
        labels: &["2", "5"],
        arrows: &[("2", "5")],
        params: &[],
        classical: vec![
            ("p12", s("y2*(1 + y5)")),
            ("p31", s("y2^(-1)")),
            ("p23", s("(1 + y2^(-1))*y5^(-1)")),
        ],
        w: "p12*p23*p31 - (p31 + p23 + 1)",
        quantum: vec![
            ("p12", s("Y2*(1 + q*Y5)")),
            ("p31", s("Y2^(-1)")),
            ("p23", s("(1 + q*Y2^(-1))*Y5^(-1)")),
        ],
        wq: Some("q^(-1)*p12*p23*p31 - (q^(-1)*p31 + q*p23 + 1)"),
        q_rel: Some(["q - q^(-1)", "0", "q - q^(-1)"]),
    })
}
