//! Golden cases shared by the CLI tests and the acceptance suite.
//!
//! Each case runs the built binary from the crate root with relative paths,
//! so echoed inputs are stable. Set `UPDATE_GOLDEN=1` to rewrite expected
//! files.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
    /// Expected stdout file under `tests/golden`, compared after dropping
    /// the volatile field from JSON reports.
    pub golden: Option<&'static str>,
}

pub const CASES: &[Case] = &[
    Case { name: "check quad t11", args: &["--json", "check", "tests/golden/t11.txt"], exit: 0, golden: Some("check_t11.json") },
    Case { name: "check quad u5", args: &["--json", "check", "tests/golden/u5.txt"], exit: 1, golden: Some("check_u5.json") },
    Case { name: "check out u5", args: &["--json", "check", "tests/golden/u5.txt", "--what", "out"], exit: 1, golden: Some("check_out_u5.json") },
    Case { name: "check in qr7_tr", args: &["--json", "check", "tests/golden/qr7_tr.txt", "--what", "in"], exit: 0, golden: Some("check_in_qr7_tr.json") },
    Case { name: "check orth t11", args: &["--json", "check", "tests/golden/t11.txt", "--what", "orth"], exit: 0, golden: Some("check_orth_t11.json") },
    Case { name: "check orth nonsquare", args: &["check", "tests/golden/nonsquare.txt", "--what", "orth"], exit: 2, golden: None },
    Case { name: "check not a tournament", args: &["check", "tests/golden/not_tournament.txt"], exit: 2, golden: None },
    Case { name: "check missing file", args: &["check", "tests/golden/absent.txt"], exit: 2, golden: None },
    Case { name: "dom number qr7", args: &["--json", "dom", "tests/golden/qr7.txt"], exit: 0, golden: Some("dom_number_qr7.json") },
    Case { name: "dom graph u5", args: &["--json", "dom", "tests/golden/u5.txt", "--what", "graph"], exit: 0, golden: Some("dom_graph_u5.json") },
    Case { name: "dom competition c3", args: &["--json", "dom", "tests/golden/c3.txt", "--what", "competition"], exit: 0, golden: Some("dom_competition_c3.json") },
    Case { name: "search 9 first", args: &["--json", "search", "--n", "9", "--first"], exit: 1, golden: Some("search_9_first.json") },
    Case { name: "search 11 all", args: &["--json", "search", "--n", "11", "--all"], exit: 0, golden: Some("search_11_all.json") },
    Case { name: "search 11 first", args: &["--json", "search", "--n", "11", "--first"], exit: 0, golden: Some("search_11_first.json") },
    Case { name: "search 15 family", args: &["--json", "search", "--n", "15", "--family"], exit: 0, golden: Some("search_15_family.json") },
    Case { name: "search even", args: &["search", "--n", "10"], exit: 2, golden: None },
    Case { name: "search too large", args: &["search", "--n", "33"], exit: 2, golden: None },
    Case { name: "family wrong class", args: &["search", "--n", "13", "--family"], exit: 2, golden: None },
    Case { name: "verify exhaustive 5", args: &["--json", "verify", "--suite", "exhaustive", "--n-max", "5"], exit: 0, golden: Some("verify_exhaustive_5.json") },
    Case { name: "verify theorems qr7_tr", args: &["--json", "verify", "--suite", "theorems", "--input", "tests/golden/qr7_tr.txt"], exit: 0, golden: Some("verify_theorems_qr7_tr.json") },
    Case { name: "verify exhaustive 9", args: &["verify", "--suite", "exhaustive", "--n-max", "9"], exit: 2, golden: None },
    Case { name: "export dot c3", args: &["export", "tests/golden/c3.txt"], exit: 0, golden: Some("c3.dot") },
    Case { name: "export dot arc", args: &["export", "tests/golden/arc.txt", "--format", "dot"], exit: 0, golden: Some("arc.dot") },
    Case { name: "export json qr7", args: &["export", "tests/golden/qr7.txt", "--format", "json"], exit: 0, golden: Some("qr7.json") },
    Case { name: "gen un 3", args: &["gen", "un", "--n", "3"], exit: 0, golden: Some("c3.txt") },
    Case { name: "gen rotational 11", args: &["gen", "rotational", "--n", "11", "--symbol", "1,3,4,5,9"], exit: 0, golden: Some("t11.txt") },
    Case { name: "gen bad symbol", args: &["gen", "rotational", "--n", "11", "--symbol", "1,10,4,5,9"], exit: 2, golden: None },
    Case { name: "gen random without seed", args: &["gen", "random", "--n", "8"], exit: 2, golden: None },
    Case { name: "unknown subcommand", args: &["frobnicate"], exit: 2, golden: None },
];

pub fn crate_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_quadtour"));
    c.current_dir(crate_root()).env_remove("QL_THREADS");
    c
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Run {
    let out = bin().args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

/// JSON reports lose their volatile field; anything else is compared as is.
pub fn stable(stdout: &str) -> String {
    match serde_json::from_str::<quadtour::JsonReport>(stdout) {
        Ok(r) if stdout.trim_start().starts_with('{') && stdout.contains("schema_version") => {
            r.to_stable_json()
        }
        _ => stdout.to_owned(),
    }
}

fn golden_path(name: &str) -> PathBuf {
    crate_root().join("tests/golden").join(name)
}

/// `Err` describes the first mismatch.
pub fn check_case(case: &Case) -> Result<(), String> {
    let r = run(case.args);
    if r.code != case.exit {
        return Err(format!(
            "{}: exit {} (expected {}), stderr {:?}",
            case.name, r.code, case.exit, r.stderr
        ));
    }
    // clap prints its own multi-line usage; our diagnostics are one line
    let diagnostic_ok = r.stderr.starts_with("quadtour: ") && r.stderr.lines().count() == 1
        || r.stderr.starts_with("error: ");
    if case.exit == 2 && !diagnostic_ok {
        return Err(format!("{}: unexpected diagnostic {:?}", case.name, r.stderr));
    }
    if let Some(g) = case.golden {
        let got = stable(&r.stdout);
        let path = golden_path(g);
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            std::fs::write(&path, &got).map_err(|e| e.to_string())?;
        }
        let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        if got != want {
            return Err(format!("{}: output differs from {}\n{got}", case.name, g));
        }
    }
    Ok(())
}

pub fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name)).unwrap()
}
