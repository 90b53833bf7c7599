//! Shared CLI golden-file machinery for the integration test targets.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub const KNOTS: &[&str] = &[
    "unknot",
    "trefoil-right",
    "trefoil-left",
    "figure-eight",
    "wh-surface-plus",
    "wh-surface-minus",
];

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn data(name: &str) -> String {
    root().join("data").join(name).to_string_lossy().into_owned()
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_whitehead"))
        .args(args)
        .output()
        .expect("binary runs");
    Outcome {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Transcript of several invocations: `$ args`, then stdout, then `[exit N]`.
pub fn transcript(cases: &[Vec<String>]) -> String {
    let mut s = String::new();
    for args in cases {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = run(&argv);
        // file paths differ between checkouts; keep only the file name
        let shown: Vec<String> = args
            .iter()
            .map(|a| match Path::new(a).file_name() {
                Some(f) if Path::new(a).is_absolute() => f.to_string_lossy().into_owned(),
                _ if a.contains(' ') || a.is_empty() => format!("'{a}'"),
                _ => a.clone(),
            })
            .collect();
        s += &format!("$ whitehead {}\n{}[exit {}]\n", shown.join(" "), o.stdout, o.code);
    }
    s
}

/// Compares `actual` with the committed golden file, or rewrites it when
/// `UPDATE_GOLDEN` is set.
pub fn compare_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = root().join("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("missing golden file {}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "golden mismatch for {name}\n--- expected\n{expected}\n--- actual\n{actual}"
        ))
    }
}

pub fn args(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}

fn per_knot(subcommand: &str, extra: &[&str]) -> Vec<Vec<String>> {
    KNOTS
        .iter()
        .map(|k| {
            let mut a = args(&[subcommand, "--knot", k]);
            a.extend(extra.iter().map(|s| s.to_string()));
            a
        })
        .collect()
}

fn with_file(parts: &[&str], file: &str, rest: &[&str]) -> Vec<String> {
    let mut a = args(parts);
    a.push(data(file));
    a.extend(rest.iter().map(|s| s.to_string()));
    a
}

/// Invocations recorded in each transcript golden file.
pub fn transcript_cases(name: &str) -> Vec<Vec<String>> {
    let mut cases = Vec::new();
    match name {
        "alexander.txt" => {
            cases.extend(per_knot("alexander", &[]));
            cases.extend(per_knot("alexander", &["--format", "json"]));
            cases.push(with_file(&["alexander", "--seifert"], "trefoil_figure_eight.seifert", &[]));
        }
        "a2.txt" => {
            cases.extend(per_knot("a2", &[]));
            cases.extend(per_knot("a2", &["--format", "json"]));
            cases.push(with_file(&["a2", "--seifert"], "trefoil_figure_eight.seifert", &[]));
        }
        "a-cor.txt" => {
            cases.extend(per_knot("a-cor", &[]));
            cases.extend(per_knot("a-cor", &["--format", "json"]));
        }
        "levine.txt" => {
            cases.extend(per_knot("levine", &[]));
            cases.extend(per_knot("levine", &["--format", "json"]));
            cases.push(with_file(&["levine", "--seifert"], "wh_plus.seifert", &[]));
        }
        "q1-wh.txt" => {
            cases.extend(per_knot("q1-wh", &["--eps", "+1"]));
            cases.extend(per_knot("q1-wh", &["--eps", "-1"]));
            cases.extend(per_knot("q1-wh", &["--eps", "+1", "--format", "json"]));
            cases.push(with_file(&["q1-wh", "--seifert"], "trefoil.seifert", &["--eps=-1"]));
        }
        "canon.txt" => {
            cases.push(args(&["canon", "--slot", "t + t^-1 - 2", "--slot", "1", "--slot", "1"]));
            cases.push(args(&["canon", "--slot", "1", "--slot", "1", "--slot", "t + t^-1 - 2"]));
            cases.push(args(&["canon", "--slot", "t", "--slot", "t", "--slot", "t"]));
            cases.push(args(&["canon", "--slot", "0", "--slot", "t^3", "--slot", "1"]));
            cases.push(args(&["canon", "--slot", "-t + 1", "--slot", "3/2*t^2 - t^-3", "--slot", "t^-1 + 2"]));
            cases.push(args(&["canon", "--format", "json", "--slot", "1", "--slot", "1", "--slot", "t + t^-1 - 2"]));
        }
        "contract.txt" => {
            for f in ["whitehead_plus.lk", "whitehead_minus.lk", "ones.lk", "generic.lk"] {
                cases.push(with_file(&["contract", "--linking"], f, &[]));
                cases.push(with_file(&["contract", "--linking"], f, &["--format", "json"]));
            }
        }
        other => panic!("no transcript named {other}"),
    }
    cases
}

pub const TRANSCRIPTS: &[&str] = &[
    "alexander.txt",
    "a2.txt",
    "a-cor.txt",
    "levine.txt",
    "q1-wh.txt",
    "canon.txt",
    "contract.txt",
];

pub fn check_transcript(name: &str) -> Result<(), String> {
    compare_golden(name, &transcript(&transcript_cases(name)))
}

pub fn check_catalog() -> Result<(), String> {
    for (fmt, file) in [(None, "catalog.txt"), (Some("json"), "catalog.json")] {
        let mut a = vec!["catalog"];
        if let Some(f) = fmt {
            a.extend(["--format", f]);
        }
        let o = run(&a);
        if o.code != 0 {
            return Err(format!("catalog exited with {}", o.code));
        }
        compare_golden(file, &o.stdout)?;
    }
    Ok(())
}

/// Malformed or invalid invocations and their required exit codes.
pub fn exit_code_cases() -> Vec<(Vec<String>, i32)> {
    vec![
        (args(&[]), 2),
        (args(&["frobnicate"]), 2),
        (args(&["alexander"]), 2),
        (args(&["alexander", "--knot", "trefoil-right", "--seifert", "x"]), 2),
        (args(&["alexander", "--knot", "granny"]), 2),
        (args(&["q1-wh", "--knot", "trefoil-right"]), 2),
        (args(&["q1-wh", "--knot", "trefoil-right", "--eps", "0"]), 2),
        (args(&["canon", "--slot", "1", "--slot", "1"]), 2),
        (args(&["canon", "--slot", "t^1/2", "--slot", "1", "--slot", "1"]), 3),
        (args(&["canon", "--slot", "", "--slot", "1", "--slot", "1"]), 3),
        (with_file(&["alexander", "--seifert"], "bad_row.seifert", &[]), 3),
        (with_file(&["alexander", "--seifert"], "singular.seifert", &[]), 3),
        (with_file(&["a2", "--seifert"], "odd.seifert", &[]), 3),
        (with_file(&["alexander", "--seifert"], "does-not-exist.seifert", &[]), 3),
        (with_file(&["contract", "--linking"], "bad_expr.lk", &[]), 3),
        (with_file(&["contract", "--linking"], "short.lk", &[]), 3),
        (args(&["levine", "--knot", "unknot"]), 4),
        (with_file(&["levine", "--seifert"], "unknot.seifert", &[]), 4),
        (args(&["--help"]), 0),
    ]
}

pub fn check_exit_codes() -> Result<(), String> {
    for (a, code) in exit_code_cases() {
        let argv: Vec<&str> = a.iter().map(String::as_str).collect();
        let o = run(&argv);
        if o.code != code {
            return Err(format!("args {a:?}: exit {} expected {code}; stderr {}", o.code, o.stderr));
        }
        if code != 0 && (!o.stdout.is_empty() || o.stderr.is_empty()) {
            return Err(format!("args {a:?}: diagnostics must go to stderr only"));
        }
    }
    Ok(())
}
