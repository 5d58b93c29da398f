//! One PASS/FAIL line per acceptance criterion.
//!
//! A criterion is PASS only when every check behind it passes. Criteria 5 and
//! 8 fail on findings in the source data. For those the test asserts that
//! the failure is exactly the known finding, so any other regression still
//! breaks the build.

mod common;

use std::collections::BTreeSet;
use std::io::Write;

use charvar::confluence::{self, all_families};
use charvar::exact::int;
use charvar::report::{self, CheckRecord, Status};
use charvar::varieties::{self, check_singularity_factorization};
use rand::rngs::StdRng;
use rand::SeedableRng;

struct Criterion {
    number: u32,
    title: &'static str,
    ids: fn(&str) -> bool,
}

fn quantum_family_check(id: &str) -> bool {
    id.starts_with("confluence.") && id.contains(".quantum.") && !id.starts_with("confluence.quantum.limit.")
}

const CRITERIA: [Criterion; 13] = [
    Criterion { number: 1, title: "Markoff identity", ids: |id| matches!(id, "torus.w_classical" | "torus.w_numeric") },
    Criterion { number: 2, title: "torus Poisson relations", ids: |id| id == "torus.brackets" },
    Criterion { number: 3, title: "sphere identity", ids: |id| matches!(id, "sphere.w_classical" | "sphere.w_numeric") },
    Criterion { number: 4, title: "Goldman algebra", ids: |id| id == "sphere.brackets" },
    Criterion { number: 5, title: "singularity factorization", ids: |id| id == "sphere.singularity" },
    Criterion {
        number: 6,
        title: "group relations and printed images",
        ids: |id| matches!(id, "torus.group_relations" | "sphere.group_relations"),
    },
    Criterion {
        number: 7,
        title: "induced classical actions",
        ids: |id| id.starts_with("torus.action.") || id.starts_with("sphere.action."),
    },
    Criterion {
        number: 8,
        title: "confluence: potentials, limits, brackets, automorphisms",
        ids: |id| {
            id.starts_with("confluence.")
                && !id.contains(".quantum.")
                && !id.starts_with("confluence.equivalence.")
        },
    },
    Criterion { number: 9, title: "polynomial equivalences", ids: |id| id.starts_with("confluence.equivalence.") },
    Criterion { number: 10, title: "mutation classes", ids: |id| id.starts_with("classes.") },
    Criterion {
        number: 11,
        title: "quantum torus and sphere",
        ids: |id| {
            ["torus", "sphere"].iter().any(|p| {
                [".quantum.w", ".quantum.relations", ".quantum.centrality"]
                    .iter()
                    .any(|s| id == format!("{p}{s}"))
            })
        },
    },
    Criterion {
        number: 12,
        title: "quantum actions",
        ids: |id| {
            (id.starts_with("torus.quantum.") || id.starts_with("sphere.quantum."))
                && (id.contains(".quantum.action.") || id.ends_with(".q_commutation"))
        },
    },
    Criterion { number: 13, title: "quantum confluence", ids: quantum_family_check },
];

fn all_checks() -> Vec<CheckRecord> {
    let checks: Vec<_> = ["torus", "sphere"]
        .iter()
        .flat_map(|p| varieties::preset(p).unwrap().checks())
        .chain(confluence::checks())
        .chain(confluence::class_checks())
        .collect();
    report::run("acceptance", &checks).checks
}

fn failing(records: &[&CheckRecord]) -> BTreeSet<String> {
    records
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.check_id.clone())
        .collect()
}

/// Criterion 5: the excess over the face product is exactly the four
/// puncture faces, up to a monomial.
fn singularity_finding_reproduces() -> bool {
    let r = check_singularity_factorization().unwrap();
    r.unit.is_none()
        && r.puncture_excess_unit
            .as_ref()
            .and_then(|u| u.as_monomial().map(|(_, c)| c.clone()))
            == Some(int(-1))
}

/// Criterion 8: only the extra words of (2,1,1) fail, and the claimed
/// inverse of `G` works once `σ_{1,2}` is appended.
fn extra_words_finding_reproduces(detail: &str) -> bool {
    let f = confluence::family("211").unwrap();
    let g = f.automorphism.as_ref().unwrap().action.word.clone();
    let fixed = confluence::label_word(&f.labels, "s1,4 s2,3 m3 m4 s1,2").unwrap();
    let seed = charvar::cluster::Seed::initial(&f.model.b, &f.model.vars).unwrap();
    let both = seed.apply(&g.compose(&fixed)).unwrap();
    detail.contains("acts trivially") && both.equals(&seed)
}

#[test]
fn acceptance() {
    let records = all_checks();
    let mut lines = Vec::new();
    let mut unexpected = Vec::new();
    for c in &CRITERIA {
        let mine: Vec<&CheckRecord> = records.iter().filter(|r| (c.ids)(&r.check_id)).collect();
        assert!(!mine.is_empty(), "criterion {} selects no checks", c.number);
        let bad = failing(&mine);
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        lines.push(format!("criterion {:>2}: {status} {} ({} checks)", c.number, c.title, mine.len()));
        let expected_ok = match c.number {
            5 => bad == BTreeSet::from(["sphere.singularity".to_string()]) && singularity_finding_reproduces(),
            8 => {
                let detail = &mine.iter().find(|r| r.check_id == "confluence.211.extra_words").unwrap().detail;
                bad == BTreeSet::from(["confluence.211.extra_words".to_string()])
                    && extra_words_finding_reproduces(detail)
            }
            _ => bad.is_empty(),
        };
        if !expected_ok {
            unexpected.push(format!("criterion {}: failing {bad:?}", c.number));
        }
    }

    let mut suites = common::run_all(64);
    let mut rng = StdRng::seed_from_u64(11);
    let numeric_ok = ["torus", "sphere"]
        .iter()
        .map(|p| varieties::preset(p).unwrap().model)
        .chain(all_families().into_iter().map(|f| f.model))
        .all(|m| m.check_w_numeric(&mut rng, 20).map(|o| o.passed).unwrap_or(false));
    suites.push(("numeric oracle", (!numeric_ok).then(|| "a symbolic zero is nonzero at a sample".to_string())));
    let bad: Vec<String> = suites
        .iter()
        .filter_map(|(n, f)| f.as_ref().map(|f| format!("{n}: {f}")))
        .collect();
    let status = if bad.is_empty() { "PASS" } else { "FAIL" };
    lines.push(format!("criterion 14: {status} property suites ({} suites)", suites.len()));
    if !bad.is_empty() {
        unexpected.push(format!("criterion 14: {bad:?}"));
    }

    // written past the harness capture so the lines show in every run
    let mut err = std::io::stderr().lock();
    for l in &lines {
        writeln!(err, "{l}").unwrap();
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}
