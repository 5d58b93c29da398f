mod common;

use charvar::confluence::all_families;
use charvar::qalg::QRing;
use charvar::exact::{HalfVec, VarSet};
use charvar::varieties;
use common::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in square_point()) {
        eval_homomorphism(&a, &b, &p)?;
    }

    #[test]
    fn partial_derivatives_obey_leibniz(a in poly(), b in poly(), i in 0..N) {
        leibniz(&a, &b, i)?;
    }

    #[test]
    fn leading_parts_multiply(a in nonzero_poly(), b in nonzero_poly(), v in 0..N) {
        leading_multiplicative(&a, &b, v)?;
    }

    #[test]
    fn ratfun_equality_is_by_cross_multiplication(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        rf_equality(&a, &b, &c)?;
    }

    #[test]
    fn quantum_torus_is_associative((x, y, z) in skew(N).prop_flat_map(|b| {
        let ring = QRing::new(&b, &VarSet::numbered("Y", N)).unwrap();
        (qelem(ring.clone()), qelem(ring.clone()), qelem(ring))
    })) {
        q_associative(&x, &y, &z)?;
    }

    #[test]
    fn ore_factors_push_across_monomials(
        b in skew(N),
        a in -8i32..=8,
        v in prop::collection::vec(-1i32..=1, N).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0)),
        m in prop::collection::vec(-4i32..=4, N),
    ) {
        let ring = QRing::new(&b, &VarSet::numbered("Y", N)).unwrap();
        ore_push(&ring, a, &HalfVec::from_integers(&v), &HalfVec::from_doubled(m))?;
    }

    #[test]
    fn ore_denominators_commute_in_any_order((ring, num, v, a, b) in skew(N).prop_flat_map(|b| {
        let ring = QRing::new(&b, &VarSet::numbered("Y", N)).unwrap();
        (Just(ring.clone()), qelem(ring), direction(), -8i32..=8, -8i32..=8)
    })) {
        ore_order_independent(&ring, &num, &v, a, b)?;
    }

    #[test]
    fn mutation_is_involutive(b in skew(4), k in 0..4usize) {
        mutation_involutive(&b, k)?;
    }

    #[test]
    fn words_preserve_the_bracket(b in skew(4), w in prop::collection::vec(step(4), 0..4)) {
        poisson_preserved(&b, &w)?;
    }
}

#[test]
fn every_suite_passes_under_a_fixed_budget() {
    for (name, failure) in run_all(16) {
        assert!(failure.is_none(), "{name}: {failure:?}");
    }
}

#[test]
fn symbolic_zeros_vanish_numerically() {
    let mut rng = StdRng::seed_from_u64(2024);
    for name in ["torus", "sphere"] {
        let m = varieties::preset(name).unwrap().model;
        assert!(m.check_w_numeric(&mut rng, 20).unwrap().passed, "{name}");
    }
    for f in all_families() {
        assert!(f.model.check_w_numeric(&mut rng, 20).unwrap().passed, "{}", f.slug);
    }
}
