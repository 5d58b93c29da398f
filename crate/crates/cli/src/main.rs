use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use charvar::cluster::dot::to_dot;
use charvar::cluster::{ExchangeMatrix, Seed, Word};
use charvar::confluence;
use charvar::exact::VarSet;
use charvar::report::{self, Check};
use charvar::varieties;

#[derive(Parser)]
#[command(name = "charvar", version, about = "Verify cluster coordinates of character varieties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite: all, torus, sphere, confluence, quantum or classes.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Apply a word (right-most step first) to a preset or family seed.
    Mutate {
        #[arg(long)]
        preset: String,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, value_enum, default_value = "both")]
        show: Show,
    },
    /// Write the quiver of a preset or family as Graphviz DOT.
    Quiver {
        family: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compare the limit along an arrow with the child's images.
    Limit {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Print every family's data as JSON.
    Export {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Show {
    Y,
    B,
    Both,
}

const SUITES: [&str; 6] = ["all", "torus", "sphere", "confluence", "quantum", "classes"];

fn suite_checks(suite: &str) -> Result<Vec<Check>> {
    let torus = || varieties::preset("torus").map(|p| p.checks());
    let sphere = || varieties::preset("sphere").map(|p| p.checks());
    Ok(match suite {
        "torus" => torus()?,
        "sphere" => sphere()?,
        "confluence" => confluence::checks(),
        "classes" => confluence::class_checks(),
        "quantum" => torus()?
            .into_iter()
            .chain(sphere()?)
            .chain(confluence::checks())
            .filter(|c| c.id.contains(".quantum."))
            .collect(),
        "all" => torus()?
            .into_iter()
            .chain(sphere()?)
            .chain(confluence::checks())
            .chain(confluence::class_checks())
            .collect(),
        _ => unreachable!("suite names are validated first"),
    })
}

fn verify(suite: &str, json: Option<PathBuf>) -> Result<ExitCode> {
    if !SUITES.contains(&suite) {
        eprintln!("unknown suite `{suite}`; expected one of {}", SUITES.join(", "));
        return Ok(ExitCode::from(2));
    }
    let r = report::run(suite, &suite_checks(suite)?);
    for c in &r.checks {
        let status = format!("{:?}", c.status).to_uppercase();
        println!("{status:<5} {} ({} ms) {}", c.check_id, c.elapsed_ms, c.detail);
    }
    let s = &r.summary;
    println!("{} checks: {} passed, {} failed, {} skipped", s.total, s.passed, s.failed, s.skipped);
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&r)?;
        std::fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if r.all_passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

/// `(B, variables, vertex labels, word)` for a preset or a family.
fn seed_data(id: &str, word: &str) -> Result<(ExchangeMatrix, VarSet, Vec<String>, Word)> {
    if let Ok(p) = varieties::preset(id) {
        let m = p.model;
        let labels = m.vars.names().to_vec();
        return Ok((m.b, m.vars, labels, Word::parse(word)?));
    }
    let f = confluence::family(id)?;
    let w = confluence::label_word(&f.labels, word)?;
    let labels = f.model.vars.names().to_vec();
    Ok((f.model.b, f.model.vars, labels, w))
}

fn mutate(preset: &str, word: &str, show: Show) -> Result<()> {
    let (b, vars, _, w) = seed_data(preset, word)?;
    let s = Seed::initial(&b, &vars)?.apply(&w)?;
    if matches!(show, Show::Y | Show::Both) {
        for (i, y) in s.ys.iter().enumerate() {
            println!("{} -> {y}", vars.name(i));
        }
    }
    if matches!(show, Show::B | Show::Both) {
        println!("B =\n{}", s.b);
    }
    Ok(())
}

fn quiver(id: &str, dot: Option<PathBuf>) -> Result<()> {
    let (b, _, labels, _) = seed_data(id, "")?;
    let text = to_dot(id, &b, &labels);
    match dot {
        Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn limit(from: &str, to: &str) -> Result<ExitCode> {
    let e = confluence::edge(from, to)?;
    let classical = e.classical()?;
    print!("{classical}");
    let compat = e.bracket_compatibility()?;
    println!("bracket compatibility: {}", if compat.passed { "ok" } else { &compat.detail });
    let mut ok = classical.outcome().passed && compat.passed;
    if e.has_quantum() {
        let quantum = e.quantum()?;
        print!("{quantum}");
        ok &= quantum.outcome().passed;
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Verify { suite, json } => verify(&suite, json),
        Cmd::Mutate { preset, word, show } => mutate(&preset, &word, show).map(|_| ExitCode::SUCCESS),
        Cmd::Quiver { family, dot } => quiver(&family, dot).map(|_| ExitCode::SUCCESS),
        Cmd::Limit { from, to } => limit(&from, &to),
        Cmd::Export { out } => {
            let text = serde_json::to_string_pretty(&confluence::export_all())? + "\n";
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            // bad input (unknown id, unparsable word) is a usage error
            if e.downcast_ref::<charvar::Error>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

