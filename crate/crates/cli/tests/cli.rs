//! End-to-end checks of the command-line surface: output fields, word
//! round trips against a library-built context, and the exit-code
//! contract (0 pass, 1 counterexample, 2 usage, 3 resource cap,
//! 4 fingerprint mismatch).

use amalgam_core::{AmalgamContext, AmalgamParams, CElem, Side};
use std::path::PathBuf;
use std::process::{Command, Output};

fn cache_dir() -> PathBuf {
    let dir = std::env::temp_dir().join("amalgam-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    let cache = cache_dir();
    let mut all: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let has_cache = args.iter().any(|a| *a == "--cache-dir");
    let needs_ctx = matches!(
        args.first(),
        Some(&"construct") | Some(&"verify") | Some(&"word")
    );
    if !has_cache && needs_ctx {
        // parent flags must precede the word subcommand, so insert early
        all.insert(1, "--cache-dir".into());
        all.insert(2, cache.to_str().unwrap().into());
    }
    Command::new(env!("CARGO_BIN_EXE_amalgam"))
        .args(&all)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn construct_reports_derived_data() {
    let out = run(&["construct", "--p", "3", "--q", "5", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["m"], 1);
    assert_eq!(v["n"], 2);
    assert_eq!(v["order_a"], "375");
    assert_eq!(v["order_b"], "1215");
    assert_eq!(v["order_c"], 15);
    assert_eq!(v["transversal_a"], 25);
    assert_eq!(v["transversal_b"], 81);
    assert_eq!(v["context_fingerprint"].as_str().unwrap().len(), 16);
}

#[test]
fn construct_usage_and_cap_exit_codes() {
    let out = run(&["construct", "--p", "3", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["construct", "--p", "11", "--q", "13"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(
        err.contains("19713764334407"),
        "offending order reported: {err}"
    );
}

#[test]
fn verify_unknown_claim_is_usage_error() {
    let out = run(&["verify", "--p", "3", "--q", "5", "--claim", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_perfect_exits_zero() {
    let out = run(&["verify", "--p", "3", "--q", "7", "--claim", "perfect"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS perfect"));
}

#[test]
fn verify_small_sampled_claim_exits_zero() {
    let out = run(&[
        "verify",
        "--p",
        "3",
        "--q",
        "5",
        "--claim",
        "isolated",
        "--samples",
        "200",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["claim"], "isolated");
    assert_eq!(v[0]["mode"], "SAMPLED");
    assert_eq!(v[0]["fail_count"], 0);
    assert_eq!(v[0]["seed"], 42);
    assert_eq!(v[0]["params"]["p"], 3);
}

#[test]
fn word_commands_round_trip() {
    // a context built with the same parameters, seed and cache as the CLI
    let params = AmalgamParams::new(3, 5).unwrap();
    let ctx = AmalgamContext::build(&params, 42, Some(&cache_dir()), 1_000_000).unwrap();

    // order of the embedded Carter generator
    let d = ctx.word_to_json(&ctx.word_from_c(CElem { ep: 1, eq: 1 }));
    let out = run(&["word", "--p", "3", "--q", "5", "order", &d]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "15");

    // mul of a word and its inverse gives the identity word
    let w = ctx.multiply(
        &ctx.embed(Side::A, 200),
        &ctx.multiply(&ctx.embed(Side::B, 500), &ctx.embed(Side::A, 30)),
    );
    let wi = ctx.inverse(&w);
    let out = run(&[
        "word",
        "--p",
        "3",
        "--q",
        "5",
        "mul",
        &ctx.word_to_json(&w),
        &ctx.word_to_json(&wi),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let id: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(id["c"], serde_json::json!([0, 0]));
    assert_eq!(id["letters"].as_array().unwrap().len(), 0);

    // reduce is the identity on canonical words
    let canon = ctx.word_to_json(&w);
    let out = run(&["word", "--p", "3", "--q", "5", "reduce", &canon]);
    assert_eq!(stdout(&out).trim(), canon);

    // infinite order prints "infinite"
    let uv = ctx.multiply(&ctx.embed(Side::A, 15), &ctx.embed(Side::B, 15));
    let out = run(&[
        "word",
        "--p",
        "3",
        "--q",
        "5",
        "order",
        &ctx.word_to_json(&uv),
    ]);
    assert_eq!(stdout(&out).trim(), "infinite");
}

#[test]
fn word_fingerprint_mismatch_exits_four() {
    let out = run(&[
        "word",
        "--p",
        "3",
        "--q",
        "5",
        "order",
        r#"{"c":[1,1],"letters":[],"fingerprint":"0000000000000000"}"#,
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn malformed_word_is_usage_error() {
    let out = run(&["word", "--p", "3", "--q", "5", "order", "{broken"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chi_and_rank_outputs() {
    let out = run(&["chi", "--p", "3", "--q", "5"]);
    assert_eq!(stdout(&out).trim(), "-1919/30375");

    let out = run(&["rank", "--p", "3", "--q", "5", "--index", "30375"]);
    let text = stdout(&out);
    assert!(text.contains("rank = 1920"));
    assert!(text.contains("28786"));
    assert!(text.contains("DISAGREES"));

    let out = run(&["rank", "--p", "3", "--q", "5", "--index", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn counting_grid_and_instance() {
    let out = run(&["counting", "--grid", "23", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("p,q,sizeP,sizeQ,excess_num,excess_den,verdict"));
    assert!(text.contains("3,5,27,125,191,3375,TRUE"));

    let out = run(&[
        "counting", "--p", "3", "--q", "5", "--size-p", "243", "--size-q", "125",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1919/30375"));
}
