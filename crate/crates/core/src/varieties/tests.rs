use rand::rngs::StdRng;
use rand::SeedableRng;

use super::*;
use crate::exact::{int, Rational};
use crate::expr::{ex, Bound, LaurentRing, Numbers};

fn all_pass(p: &VarietyPreset, skip: &[&str]) {
    let report = crate::report::run(&p.model.name, &p.checks());
    for c in &report.checks {
        if skip.contains(&c.check_id.as_str()) {
            continue;
        }
        assert_eq!(c.status, crate::report::Status::Pass, "{}: {}", c.check_id, c.detail);
    }
}

#[test]
fn torus_checks_pass() {
    let p = preset("markoff").unwrap();
    all_pass(&p, &[]);
    assert_eq!(p.checks().len(), 14);
}

#[test]
fn sphere_checks_pass_except_singularity() {
    let p = preset("oct").unwrap();
    all_pass(&p, &["sphere.singularity"]);
}

#[test]
fn unknown_preset() {
    assert!(matches!(preset("klein"), Err(Error::UnknownPreset(_))));
}

#[test]
fn markoff_triple_at_a_point() {
    // y = (1,1,1): x = y = z = 3, b = 2, and 27 - 27 + 2 - 2 = 0
    let m = torus::model();
    let ring = LaurentRing::new(&m.vars);
    let one = vec![Rational::from_integer(1.into()); 3];
    for (name, img) in m.classical_images().unwrap() {
        let want = if name == "b" { int(2) } else { int(3) };
        assert_eq!(img.eval(&one).unwrap(), want, "{name}");
    }
    let w = m.w.eval(&Bound::new(&ring).with(m.classical_images().unwrap())).unwrap();
    assert!(w.is_zero());
}

#[test]
fn numeric_oracle_agrees_on_sphere() {
    let m = sphere::model();
    let mut rng = StdRng::seed_from_u64(11);
    let pt = model::random_square_point(&mut rng, &m.vars);
    let numbers = Bound::new(&Numbers).with(pt.clone());
    let vals: Vec<(String, Rational)> = m
        .classical
        .iter()
        .map(|(n, e)| (n.clone(), e.eval(&numbers).unwrap()))
        .collect();
    let w = m.w.eval(&Bound::new(&Numbers).with(vals)).unwrap();
    assert_eq!(w, int(0));
}

#[test]
fn broken_bracket_is_caught() {
    let mut m = torus::model();
    m.brackets[0].rhs = ex("x*y/2 + z");
    assert!(!m.check_brackets().unwrap().passed);
}

#[test]
fn broken_action_is_caught() {
    let p = torus::preset();
    let mut a = p.action("R").unwrap().clone();
    a.rules[2].1 = ex("x*z + y");
    assert!(!p.model.check_action(&a).unwrap().passed);
    let mut qa = p.q_action("R").unwrap().clone();
    qa.rules[2].1 = ex("q*z*x - q*y");
    assert!(!p.model.check_quantum_action(&qa).unwrap().passed);
}

#[test]
fn word_replay_differs_from_composition_for_m() {
    // replaying M from the seed it produces starts at -B, so the result is
    // not the identity; composing the y-maps is
    let p = torus::preset();
    let m = p.word("M").unwrap();
    let s = Seed::initial(&p.model.b, &p.model.vars).unwrap();
    assert!(!s.apply(&m.power(2)).unwrap().equals(&s));
    assert!(p.compose(&["M".into(), "M".into()]).unwrap().equals(&s));
}

#[test]
fn sphere_cyclic_shift() {
    let p = sphere::preset();
    let s = p.compose(&["L^-1".into(), "R".into()]).unwrap();
    let names: Vec<String> = s.ys.iter().map(|y| y.to_string()).collect();
    assert_eq!(names, ["y5", "y6", "y1", "y2", "y3", "y4"]);
}

#[test]
fn singularity_quotient_is_the_puncture_faces() {
    let r = check_singularity_factorization().unwrap();
    assert!(r.quotient.is_some());
    assert!(r.unit.is_none());
    let u = r.puncture_excess_unit.as_ref().unwrap();
    let (m, c) = u.as_monomial().unwrap();
    assert_eq!(*c, int(-1));
    assert!(m.doubled().iter().all(|&d| d == -8));
    assert!(!r.outcome().passed);
}
