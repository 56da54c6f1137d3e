use std::process::{Command, Output};

use plethyst::Limits;
use plethyst_cli::{
    cmd_expand, cmd_first_term, cmd_verify_sweep, exit, Format, OutputBasis, SweepConfig,
};

fn plethyst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethyst"))
        .args(args)
        .env_remove("PLETHYST_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim_end().to_string()
}

fn sweep(max_product: usize, oracle: bool) -> SweepConfig {
    SweepConfig {
        max_product,
        oracle,
        output_path: None,
        format: Format::Text,
        parallelism: 2,
    }
}

#[test]
fn expand_schur_examples() {
    let out = plethyst(&["expand", "--lambda", "2", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "s[4] + s[2,2]");

    let out = plethyst(&["expand", "--lambda", "1", "--mu", "3,1", "--basis", "schur"]);
    assert_eq!(stdout(&out), "s[3,1]");
}

#[test]
fn expand_monomial_has_revlex_order() {
    let out = cmd_expand(
        "2",
        "2",
        OutputBasis::Monomial,
        Format::Text,
        &Limits::default(),
    )
    .unwrap();
    assert_eq!(
        out.text,
        "m[4] + m[3,1] + 2·m[2,2] + 2·m[2,1,1] + 3·m[1,1,1,1]"
    );
}

#[test]
fn expand_json_is_parseable() {
    let out = cmd_expand(
        "2",
        "2",
        OutputBasis::Schur,
        Format::Json,
        &Limits::default(),
    )
    .unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    assert_eq!(v["basis"], "s");
    assert_eq!(v["degree"], 4);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn first_term_examples() {
    let out = plethyst(&["first-term", "--lambda", "3,1", "--mu", "3,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "12,7,1");

    let out = cmd_first_term("1", "2", false, false, Format::Text, &Limits::default()).unwrap();
    assert_eq!(out.text, "2");
}

#[test]
fn first_term_verify_lists_checks() {
    let out = plethyst(&[
        "first-term",
        "--lambda",
        "2,1",
        "--mu",
        "2",
        "--verify",
        "--oracle",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("5,1"));
    let checks: Vec<_> = lines.collect();
    assert!(checks.len() >= 6);
    assert!(checks.iter().all(|l| l.ends_with(": pass")), "{text}");
    assert!(checks.iter().any(|l| l.starts_with("oracle_agreement")));
}

#[test]
fn sweep_small_products_all_pass() {
    let limits = Limits::default();
    let out = cmd_verify_sweep(&sweep(6, false), &limits).unwrap();
    assert_eq!(out.code, exit::OK);
    assert!(out.text.contains("failed: 0"), "{}", out.text);

    let out = cmd_verify_sweep(&sweep(4, true), &limits).unwrap();
    assert_eq!(out.code, exit::OK);
    assert!(out.text.contains("oracle: on"));
}

#[test]
fn sweep_of_nothing_passes_vacuously() {
    let out = plethyst(&["verify", "--max-product", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pairs: 0"));
}

#[test]
fn sweep_is_deterministic_across_thread_counts() {
    let limits = Limits::default();
    let one = SweepConfig {
        parallelism: 1,
        format: Format::Json,
        ..sweep(6, false)
    };
    let many = SweepConfig {
        parallelism: 3,
        ..one.clone()
    };
    let a = cmd_verify_sweep(&one, &limits).unwrap();
    let b = cmd_verify_sweep(&many, &limits).unwrap();
    assert_eq!(a.text, b.text);
}

#[test]
fn sweep_json_report_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = plethyst(&[
        "verify",
        "--max-product",
        "4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["failures"], 0);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), v["pairs"].as_u64().unwrap() as usize);
    assert!(!reports.is_empty());
}

#[test]
fn exit_codes() {
    let out = plethyst(&["expand", "--lambda", "3,x", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(exit::PARSE));

    let out = plethyst(&["first-term", "--lambda", "1,2", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(exit::PARSE));

    let out = plethyst(&["verify", "--max-product", "40"]);
    assert_eq!(out.status.code(), Some(exit::BOUNDS));

    let out = plethyst(&["expand", "--lambda", "5,4", "--mu", "5,4"]);
    assert_eq!(out.status.code(), Some(exit::BOUNDS));

    let out = plethyst(&[
        "verify",
        "--max-product",
        "2",
        "--out",
        "/nonexistent/dir/report.txt",
    ]);
    assert_eq!(out.status.code(), Some(exit::IO));
}

#[test]
fn env_var_overrides_the_cap() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_plethyst"))
            .args(["expand", "--lambda", "2", "--mu", "2"])
            .env("PLETHYST_MAX_N", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("3").status.code(), Some(exit::BOUNDS));
    assert_eq!(run("4").status.code(), Some(0));
}
