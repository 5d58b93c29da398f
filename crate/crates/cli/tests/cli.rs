use std::process::{Command, Output};

fn charvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn torus_suite_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("torus.json");
    let o = charvar(&["verify", "--suite", "torus", "--json", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["suite"], "torus");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(v["summary"]["total"].as_u64().unwrap() as usize, checks.len());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    for id in ["torus.w_classical", "torus.brackets", "torus.group_relations", "torus.action.R", "torus.quantum.w"] {
        assert!(checks.iter().any(|c| c["check_id"] == id), "{id}");
    }
}

#[test]
fn reports_are_stable_apart_from_timings() {
    let dir = tempfile::tempdir().unwrap();
    let read = |name: &str| {
        let path = dir.path().join(name);
        charvar(&["verify", "--suite", "classes", "--json", path.to_str().unwrap()]);
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        for c in v["checks"].as_array_mut().unwrap() {
            c["elapsed_ms"] = 0.into();
        }
        v
    };
    assert_eq!(read("a.json"), read("b.json"));
}

#[test]
fn full_run_fails_exactly_on_the_known_findings() {
    let o = charvar(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(1));
    let failed: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with("FAIL"))
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(
        failed,
        [
            "confluence.211.extra_words",
            "confluence.quantum.limit.211-211deg",
            "confluence.quantum.limit.22deg-22deg2",
            "sphere.singularity",
        ]
    );
}

#[test]
fn quantum_suite_selects_quantum_checks() {
    let o = charvar(&["verify", "--suite", "quantum"]);
    let out = stdout(&o);
    let ids: Vec<&str> = out.lines().filter_map(|l| l.split_whitespace().nth(1)).filter(|s| s.contains('.')).collect();
    assert!(!ids.is_empty());
    assert!(ids.iter().all(|id| id.contains(".quantum.")), "{ids:?}");
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(charvar(&["verify", "--suite", "knots"]).status.code(), Some(2));
}

#[test]
fn mutate_prints_the_seed() {
    let o = charvar(&["mutate", "--preset", "markoff", "--word", "s13 m1", "--show", "y"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("y3 -> (1) / (y1)"), "{out}");
    assert!(!out.contains("B ="));

    let o = charvar(&["mutate", "--preset", "markoff"]);
    let out = stdout(&o);
    assert!(out.contains("y1 -> y1") && out.contains("y3 -> y3"), "{out}");
    assert!(out.contains("[  0 -2  2]"), "{out}");
}

#[test]
fn mutate_rejects_bad_words() {
    let o = charvar(&["mutate", "--preset", "markoff", "--word", "m9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = charvar(&["mutate", "--preset", "markoff", "--word", "x1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mutate_accepts_family_labels() {
    let o = charvar(&["mutate", "--preset", "(2,1,1)deg", "--word", "s1,2p s1,4 m1", "--show", "y"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("y4 -> (1) / (y1)"), "{}", stdout(&o));
}

#[test]
fn quivers() {
    let dir = tempfile::tempdir().unwrap();
    let arrows = |id: &str| {
        let path = dir.path().join("q.dot");
        assert!(charvar(&["quiver", id, "--dot", path.to_str().unwrap()]).status.success());
        let text = std::fs::read_to_string(&path).unwrap();
        let nodes = text.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count();
        (nodes, text.matches("->").count())
    };
    assert_eq!(arrows("markoff"), (3, 6));
    assert_eq!(arrows("oct"), (6, 12));
    assert_eq!(arrows("(2,2)deg2"), (2, 2));
}

#[test]
fn limit_comparison() {
    let o = charvar(&["limit", "--from", "sphere", "--to", "(2,1,1)"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("[ok]") && !out.contains("MISMATCH"), "{out}");
    assert!(out.contains("(quantum)"));

    let o = charvar(&["limit", "--from", "(2,2)deg", "--to", "(2,2)deg2"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let classical = out.split("(quantum)").next().unwrap();
    assert!(!classical.contains("MISMATCH"), "{out}");

    assert_eq!(charvar(&["limit", "--from", "4C", "--to", "sphere"]).status.code(), Some(2));
}

#[test]
fn export_lists_every_family() {
    let o = charvar(&["export"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let docs = v.as_array().unwrap();
    assert_eq!(docs.len(), 14);
    let kron = docs.iter().find(|d| d["id"] == "22deg2").unwrap();
    assert_eq!(kron["exchange_matrix"], serde_json::json!([[0, -2], [2, 0]]));
}
