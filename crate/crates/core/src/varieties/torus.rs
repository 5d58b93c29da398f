//! Once-punctured torus on the Markoff quiver.

use crate::cluster::{ExchangeMatrix, Word};
use crate::exact::{rat, VarSet};
use crate::expr::ex;

use super::model::{Action, BracketRule, TraceModel};
use super::{pgl_relations, rules, with_inverse, words, PrintedImage, VarietyPreset};

pub fn markoff_matrix() -> ExchangeMatrix {
    ExchangeMatrix::new(vec![vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]]).expect("skew-symmetric")
}

fn bracket(a: &str, b: &str, rhs: &str, wrt: &str) -> BracketRule {
    BracketRule {
        a: a.into(),
        b: b.into(),
        rhs: ex(rhs),
        gradient: Some((rat(1, 2), wrt.into())),
    }
}

pub fn model() -> TraceModel {
    TraceModel {
        name: "torus".into(),
        b: markoff_matrix(),
        vars: VarSet::numbered("y", 3),
        qvars: VarSet::numbered("Y", 3),
        generators: vec!["x".into(), "y".into(), "z".into()],
        params: vec!["b".into()],
        classical: rules(&[
            ("x", "sqrt(y1*y3) + sqrt(y1/y3) + 1/sqrt(y1*y3)"),
            ("y", "sqrt(y2*y3) + sqrt(y3/y2) + 1/sqrt(y2*y3)"),
            ("z", "sqrt(y1*y2) + sqrt(y2/y1) + 1/sqrt(y1*y2)"),
            ("b", "y1*y2*y3 + 1/(y1*y2*y3)"),
        ]),
        quantum: rules(&[
            (
                "x",
                "q^(-1/2)*Y3^(1/2)*Y1^(1/2) + q^(1/2)*Y3^(-1/2)*Y1^(1/2) + q^(-1/2)*Y3^(-1/2)*Y1^(-1/2)",
            ),
            (
                "y",
                "q^(-1/2)*Y2^(1/2)*Y3^(1/2) + q^(1/2)*Y2^(-1/2)*Y3^(1/2) + q^(-1/2)*Y2^(-1/2)*Y3^(-1/2)",
            ),
            (
                "z",
                "q^(-1/2)*Y1^(1/2)*Y2^(1/2) + q^(1/2)*Y1^(-1/2)*Y2^(1/2) + q^(-1/2)*Y1^(-1/2)*Y2^(-1/2)",
            ),
            ("b", "q^(-2)*Y1*Y2*Y3 + q^2*(Y1*Y2*Y3)^(-1)"),
        ]),
        w: ex("x*y*z - (x^2 + y^2 + z^2) + 2 - b"),
        wq: Some(ex("q^(1/2)*x*y*z - q*x^2 - q^(-1)*y^2 - q*z^2 + q + q^(-1) - b")),
        brackets: vec![
            bracket("x", "y", "x*y/2 - z", "z"),
            bracket("y", "z", "y*z/2 - x", "x"),
            bracket("z", "x", "z*x/2 - y", "y"),
        ],
        q_relations: vec![
            (ex("q^(1/2)*x*y - q^(-1/2)*y*x"), ex("(q - q^(-1))*z")),
            (ex("q^(1/2)*y*z - q^(-1/2)*z*y"), ex("(q - q^(-1))*x")),
            (ex("q^(1/2)*z*x - q^(-1/2)*x*z"), ex("(q - q^(-1))*y")),
        ],
    }
}

pub fn preset() -> VarietyPreset {
    let ws = with_inverse(words(&[("R", "s13 m1"), ("L", "s23 m2"), ("M", "inv m3")]));
    let get = |n: &str| ws.iter().find(|(k, _)| k == n).map(|(_, w)| w.clone()).expect("generator");
    let (r, l) = (get("R"), get("L"));
    let li = l.inverse();
    let printed = vec![
        PrintedImage {
            label: "R(y)".into(),
            word: r.clone(),
            images: vec![ex("y3*(1 + y1^-1)^-2"), ex("y2*(1 + y1)^2"), ex("y1^-1")],
        },
        PrintedImage {
            label: "L(y)".into(),
            word: l.clone(),
            images: vec![ex("y1*(1 + y2^-1)^-2"), ex("y3*(1 + y2)^2"), ex("y2^-1")],
        },
        PrintedImage {
            // the displayed first entry reads (1+y3t)^(-2); t is a stray token
            label: "M(y)".into(),
            word: get("M"),
            images: vec![ex("y1^-1*(1 + y3)^-2"), ex("y2^-1*(1 + y3^-1)^2"), ex("y3")],
        },
        PrintedImage {
            label: "R L^-1 R (y)".into(),
            word: r.compose(&li).compose(&r),
            images: vec![ex("y2*(1 + y3^-1)^-2"), ex("y1*(1 + y3)^2"), ex("y3^-1")],
        },
        PrintedImage {
            label: "L^-1 R (y)".into(),
            word: li.compose(&r),
            images: vec![ex("y3"), ex("y1"), ex("y2")],
        },
    ];
    let b = markoff_matrix();
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
        action("R", &r, &[("x", "x"), ("y", "z"), ("z", "x*z - y"), ("b", "b")]),
        action("L", &l, &[("x", "z"), ("y", "y"), ("z", "y*z - x"), ("b", "b")]),
        action("M", &get("M"), &[("x", "x"), ("y", "y"), ("z", "x*y - z"), ("b", "b")]),
    ];
    let q_actions = vec![
        action("R", &r, &[("x", "x"), ("y", "z"), ("z", "q^(1/2)*z*x - q*y"), ("b", "b")]),
        action("L", &l, &[("x", "z"), ("y", "y"), ("z", "q^(1/2)*y*z - q*x"), ("b", "b")]),
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
