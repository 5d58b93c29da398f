use super::*;
use crate::exact::Rational;
use crate::expr::ex;

fn set_image(images: &mut [(String, Expr)], t: &str, e: &str) {
    let slot = images.iter_mut().find(|(n, _)| n == t).expect("generator");
    slot.1 = ex(e);
}

#[test]
fn every_potential_vanishes() {
    for f in all_families() {
        let o = f.model.check_w().unwrap();
        assert!(o.passed, "{}: {}", f.slug, o.detail);
    }
}

#[test]
fn ids_and_aliases() {
    assert_eq!(family("(2,2)^deg").unwrap().slug, "22deg");
    assert_eq!(family("(2,2)deg²").unwrap().slug, "22deg2");
    assert_eq!(family("oct").unwrap().slug, "1111");
    assert_eq!(family("(4)B'").unwrap().slug, "4Bp");
    assert!(matches!(family("(5)"), Err(Error::UnknownPreset(_))));
    assert_eq!(FAMILIES.len(), 11);
    assert_eq!(export_all().len(), FAMILIES.len() + VARIANTS.len());
}

#[test]
fn words_use_vertex_labels() {
    let labels: Vec<String> = ["1", "2p", "4"].iter().map(|s| s.to_string()).collect();
    let w = label_word(&labels, "s1,2p s1,4 m1").unwrap();
    assert_eq!(w.steps().len(), 3);
    assert!(label_word(&labels, "s12 m1").is_err());
    assert!(label_word(&labels, "m3").is_err());
    assert!(label_word(&labels, "x1").is_err());
}

#[test]
fn sphere_to_211_reproduces_the_images() {
    let r = edge("1111", "211").unwrap().classical().unwrap();
    assert!(r.outcome().passed, "{r}");
    let p4 = r.rows.iter().find(|r| r.generator == "p4").unwrap();
    assert!(p4.tabulated.is_none());
    let q = edge("1111", "211").unwrap().quantum().unwrap();
    assert!(q.outcome().passed, "{q}");
}

#[test]
fn epsilon_limit_merges_two_vertices() {
    let e = edge("211", "211deg").unwrap();
    let r = e.classical().unwrap();
    assert!(r.outcome().passed, "{r}");
    assert!(r.rows.iter().all(|r| r.power.is_zero()));
    assert!(e.bracket_compatibility().unwrap().passed);
}

#[test]
fn printed_quantum_merges_are_off_by_a_q_power() {
    let e = edge("211", "211deg").unwrap();
    assert!(!e.quantum().unwrap().outcome().passed);
    assert_eq!(e.merge_prefactors().unwrap(), vec![Rational::from_integer((-1).into())]);
    let e = edge("22deg", "22deg2").unwrap();
    assert!(!e.quantum().unwrap().outcome().passed);
    assert_eq!(e.merge_prefactors().unwrap(), vec![Rational::zero()]);
    assert!(edge("22", "22deg").unwrap().quantum().unwrap().outcome().passed);
}

#[test]
fn four_b_to_four_c_needs_the_relabel() {
    let mut e = edge("4B", "4C").unwrap();
    assert!(e.classical().unwrap().outcome().passed);
    e.relabel.clear();
    assert!(!e.classical().unwrap().outcome().passed);
}

#[test]
fn printed_four_b_quantum_image_has_the_wrong_limit() {
    let mut f = family("4B").unwrap();
    assert!(f.model.check_classical_limit().unwrap().passed);
    set_image(&mut f.model.quantum, "p23", "(1 + q*Y2^(-1))*Y3");
    assert!(!f.model.check_classical_limit().unwrap().passed);
    assert!(!f.model.check_wq().unwrap().passed);
}

#[test]
fn printed_22deg_word_order_misses_the_image() {
    let f = family("22deg").unwrap();
    let a = f.automorphism.as_ref().unwrap();
    let w = label_word(&f.labels, "s1,4 s1,2p m1").unwrap();
    assert!(!matches_printed(&f.model.b, &f.model.vars, &w, &a.printed).unwrap().passed);
    assert!(f.check_automorphism().unwrap().passed);
}

#[test]
fn extra_words_of_211() {
    let f = family("211").unwrap();
    let g = &f.automorphism.as_ref().unwrap().action.word;
    assert!(!f.fixes_traces(&f.compose(&[&f.trivial_words[0]]).unwrap()).unwrap().passed);
    let inv = &f.inverse_words[0];
    assert!(!f.fixes_traces(&f.compose(&[g, inv]).unwrap()).unwrap().passed);
    let fixed = label_word(&f.labels, "s1,4 s2,3 m3 m4 s1,2").unwrap();
    assert!(f.fixes_traces(&f.compose(&[g, &fixed]).unwrap()).unwrap().passed);
    assert!(f.fixes_traces(&f.compose(&[&fixed, g]).unwrap()).unwrap().passed);
}

#[test]
fn equivalences_hold() {
    for q in equivalences() {
        let r = q.check().unwrap();
        assert!(r.outcome().passed, "{}: {}", q.id, r.residual);
    }
}

#[test]
fn broken_image_is_caught() {
    let mut f = family("4C").unwrap();
    set_image(&mut f.model.classical, "p12", "y2*(1 + 2*y5)");
    assert!(!f.model.check_w().unwrap().passed);
    let mut f = family("4C").unwrap();
    set_image(&mut f.model.quantum, "p23", "(1 + Y2^(-1))*Y5^(-1)");
    assert!(!f.model.check_wq().unwrap().passed);
}

#[test]
fn classes_agree() {
    for c in class_checks() {
        let r = c.run();
        assert_eq!(r.status, crate::report::Status::Pass, "{}: {}", r.check_id, r.detail);
    }
}
