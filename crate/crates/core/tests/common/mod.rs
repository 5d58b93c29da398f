//! Strategies and invariants shared by the property tests and the acceptance run.

#![allow(dead_code)]

use std::sync::Arc;

use charvar::cluster::poisson::log_bracket;
use charvar::cluster::{ExchangeMatrix, Seed, Step, Word};
use charvar::exact::{int, rat, Direction, HalfVec, LaurentPoly, QScalar, Rational, VarSet};
use charvar::qalg::{OreFactor, OreFraction, QRing, QTorusElem};
use charvar::ratfun::RatFun;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const N: usize = 3;

pub fn vars() -> VarSet {
    VarSet::numbered("y", N)
}

/// Terms with doubled exponents in `-4..=4` and small integer coefficients.
pub fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-4i32..=4, N), -3i64..=3), 1..5).prop_map(|ts| {
        LaurentPoly::from_terms(&vars(), ts.into_iter().map(|(e, c)| (HalfVec::from_doubled(e), int(c))))
    })
}

pub fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Positive rational squares, so half-integer exponents evaluate exactly.
pub fn square_point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((1i64..=7, 1i64..=7), N).prop_map(|v| {
        v.into_iter().map(|(n, d)| rat(n * n, d * d)).collect()
    })
}

/// A skew-symmetric matrix with entries in `-2..=2`.
pub fn skew(n: usize) -> impl Strategy<Value = ExchangeMatrix> {
    prop::collection::vec(-2i64..=2, n * (n - 1) / 2).prop_map(move |upper| {
        let mut rows = vec![vec![0; n]; n];
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let x = it.next().unwrap();
                rows[i][j] = x;
                rows[j][i] = -x;
            }
        }
        ExchangeMatrix::new(rows).unwrap()
    })
}

pub fn qelem(ring: Arc<QRing>) -> impl Strategy<Value = QTorusElem> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, N), -2i64..=2, -4i32..=4), 1..4).prop_map(
        move |ts| {
            let mut x = QTorusElem::zero(&ring);
            for (e, c, q) in ts {
                let m = QTorusElem::monomial(&ring, HalfVec::from_integers(&e), QScalar::monomial(int(c), q));
                x = x.try_add(&m).unwrap();
            }
            x
        },
    )
}

pub fn direction() -> impl Strategy<Value = HalfVec> {
    prop::collection::vec(-1i32..=1, N)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| HalfVec::from_integers(&v))
}

fn ensure(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

pub fn ring_axioms(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> Result<(), TestCaseError> {
    ensure(&(a * b) * c == a * &(b * c), "associativity")?;
    ensure(a * &(b + c) == &(a * b) + &(a * c), "distributivity")?;
    ensure(a * b == b * a, "commutativity")?;
    ensure((a - a).is_zero(), "a - a = 0")?;
    ensure(a * &LaurentPoly::one(&vars()) == *a, "unit")
}

pub fn eval_homomorphism(a: &LaurentPoly, b: &LaurentPoly, pt: &[Rational]) -> Result<(), TestCaseError> {
    let (x, y) = (a.eval(pt).unwrap(), b.eval(pt).unwrap());
    ensure((a * b).eval(pt).unwrap() == &x * &y, "product")?;
    ensure((a + b).eval(pt).unwrap() == x + y, "sum")
}

pub fn leibniz(a: &LaurentPoly, b: &LaurentPoly, i: usize) -> Result<(), TestCaseError> {
    let lhs = (a * b).partial(i).unwrap();
    let rhs = &(&a.partial(i).unwrap() * b) + &(a * &b.partial(i).unwrap());
    ensure(lhs == rhs, "Leibniz rule")
}

pub fn leading_multiplicative(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> Result<(), TestCaseError> {
    let (la, lb) = (a.leading(v, Direction::Infinity).unwrap(), b.leading(v, Direction::Infinity).unwrap());
    let lab = (a * b).leading(v, Direction::Infinity).unwrap();
    ensure(lab.poly == &la.poly * &lb.poly, "leading part of a product")?;
    ensure(lab.power == la.power + lb.power, "leading power of a product")
}

pub fn q_associative(x: &QTorusElem, y: &QTorusElem, z: &QTorusElem) -> Result<(), TestCaseError> {
    let l = x.try_mul(y).unwrap().try_mul(z).unwrap();
    let r = x.try_mul(&y.try_mul(z).unwrap()).unwrap();
    ensure(l == r, "quantum torus associativity")
}

/// `Y^m f' = f Y^m` for the right push, `Y^m f = f' Y^m` for the left one.
pub fn ore_push(ring: &Arc<QRing>, a: i32, v: &HalfVec, m: &HalfVec) -> Result<(), TestCaseError> {
    let f = OreFactor::new(a, v.clone());
    let ym = QTorusElem::monomial(ring, m.clone(), QScalar::one());
    let right = f.push_right(ring, m);
    ensure(
        ym.try_mul(&right.to_elem(ring)).unwrap() == f.to_elem(ring).try_mul(&ym).unwrap(),
        "push_right",
    )?;
    let left = f.push_left(ring, m);
    ensure(
        ym.try_mul(&f.to_elem(ring)).unwrap() == left.to_elem(ring).try_mul(&ym).unwrap(),
        "push_left",
    )
}

/// Commuting denominators may be listed in any order, and multiplying back
/// by them recovers the numerator.
pub fn ore_order_independent(ring: &Arc<QRing>, num: &QTorusElem, v: &HalfVec, a: i32, b: i32) -> Result<(), TestCaseError> {
    let (f, g) = (OreFactor::new(a, v.clone()), OreFactor::new(b, v.scale(2)));
    let x = OreFraction { num: num.clone(), dens: vec![(f.clone(), 1), (g.clone(), 1)] };
    let y = OreFraction { num: num.clone(), dens: vec![(g.clone(), 1), (f.clone(), 1)] };
    ensure(x.equals(&y).unwrap(), "order of denominators")?;
    let fg = f.to_elem(ring).try_mul(&g.to_elem(ring)).unwrap();
    let back = x.mul(&OreFraction::from_elem(fg)).unwrap();
    ensure(back.equals(&OreFraction::from_elem(num.clone())).unwrap(), "clearing denominators")
}

pub fn rf_equality(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> Result<(), TestCaseError> {
    let (ra, rb, rc) = (RatFun::from_poly(a), RatFun::from_poly(b), RatFun::from_poly(c));
    let x = ra.try_mul(&rb.inv().unwrap()).unwrap();
    let y = ra.try_mul(&rc).unwrap().try_mul(&rb.try_mul(&rc).unwrap().inv().unwrap()).unwrap();
    ensure(x.equals(&y), "a/b = ac/bc")?;
    let one = x.try_mul(&x.inv().unwrap()).unwrap();
    ensure(one.equals(&RatFun::one(&vars())), "x x^-1 = 1")?;
    let twice = x.try_add(&x).unwrap();
    ensure(twice.equals(&x.scale(&int(2))), "x + x = 2x")
}

pub fn mutation_involutive(b: &ExchangeMatrix, k: usize) -> Result<(), TestCaseError> {
    let s = Seed::initial(b, &VarSet::numbered("y", b.n())).unwrap();
    ensure(s.mutate(k).unwrap().mutate(k).unwrap().equals(&s), "μ_k μ_k = id")
}

/// After the word, `{y'_i, y'_j} = b'_ij y'_i y'_j` in the initial bracket.
pub fn poisson_preserved(b: &ExchangeMatrix, steps: &[Step]) -> Result<(), TestCaseError> {
    let s = Seed::initial(b, &VarSet::numbered("y", b.n()))
        .unwrap()
        .apply(&Word::new(steps.to_vec()))
        .unwrap();
    for i in 0..b.n() {
        for j in 0..b.n() {
            let lb = log_bracket(&s.ys[i], &s.ys[j], b).unwrap();
            let want = RatFun::constant(s.ys[0].vars(), int(s.b.get(i, j)));
            ensure(lb.equals(&want), "log-canonical bracket after the word")?;
        }
    }
    Ok(())
}

pub fn step(n: usize) -> impl Strategy<Value = Step> {
    prop_oneof![
        4 => (0..n).prop_map(Step::Mutate),
        1 => Just(Step::Invert),
        1 => (0..n, 0..n).prop_filter("distinct", |(i, j)| i != j).prop_map(|(i, j)| Step::Permute(i, j)),
    ]
}

/// Runs every property with a fixed case budget; `(name, failure)` per suite.
pub fn run_all(cases: u32) -> Vec<(&'static str, Option<String>)> {
    let config = || Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut out = Vec::new();
    let mut record = |name: &'static str, r: Result<(), String>| out.push((name, r.err()));
    let mut runner = TestRunner::new(config());
    record(
        "ring axioms",
        runner
            .run(&(poly(), poly(), poly()), |(a, b, c)| ring_axioms(&a, &b, &c))
            .map_err(|e| e.to_string()),
    );
    record(
        "evaluation is a homomorphism",
        runner
            .run(&(poly(), poly(), square_point()), |(a, b, p)| eval_homomorphism(&a, &b, &p))
            .map_err(|e| e.to_string()),
    );
    record(
        "Leibniz rule",
        runner
            .run(&(poly(), poly(), 0..N), |(a, b, i)| leibniz(&a, &b, i))
            .map_err(|e| e.to_string()),
    );
    record(
        "leading parts multiply",
        runner
            .run(&(nonzero_poly(), nonzero_poly(), 0..N), |(a, b, v)| leading_multiplicative(&a, &b, v))
            .map_err(|e| e.to_string()),
    );
    record(
        "a/b equality",
        runner
            .run(&(nonzero_poly(), nonzero_poly(), nonzero_poly()), |(a, b, c)| rf_equality(&a, &b, &c))
            .map_err(|e| e.to_string()),
    );
    let q = skew(N).prop_flat_map(|b| {
        let ring = QRing::new(&b, &VarSet::numbered("Y", N)).unwrap();
        (qelem(ring.clone()), qelem(ring.clone()), qelem(ring))
    });
    record(
        "quantum torus associativity",
        runner.run(&q, |(x, y, z)| q_associative(&x, &y, &z)).map_err(|e| e.to_string()),
    );
    let push = (skew(N), -8i32..=8, direction(), prop::collection::vec(-4i32..=4, N));
    record(
        "Ore push across monomials",
        runner
            .run(&push, |(b, a, v, m)| {
                let ring = QRing::new(&b, &VarSet::numbered("Y", N)).unwrap();
                ore_push(&ring, a, &v, &HalfVec::from_doubled(m))
            })
            .map_err(|e| e.to_string()),
    );
    let ore = skew(N).prop_flat_map(|b| {
        let ring = QRing::new(&b, &VarSet::numbered("Y", N)).unwrap();
        (Just(ring.clone()), qelem(ring), direction(), -8i32..=8, -8i32..=8)
    });
    record(
        "Ore fractions ignore denominator order",
        runner
            .run(&ore, |(ring, num, v, a, b)| ore_order_independent(&ring, &num, &v, a, b))
            .map_err(|e| e.to_string()),
    );
    record(
        "mutation is involutive",
        runner
            .run(&(skew(4), 0..4usize), |(b, k)| mutation_involutive(&b, k))
            .map_err(|e| e.to_string()),
    );
    let words = (skew(4), prop::collection::vec(step(4), 0..4));
    record(
        "mutation and inversion preserve the bracket",
        runner
            .run(&words, |(b, w)| poisson_preserved(&b, &w))
            .map_err(|e| e.to_string()),
    );
    out
}
