//! Runs the `trigrid` binary end to end.

use std::process::{Command, Output};

use proptest::prelude::*;

fn trigrid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigrid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_prints_decimal() {
    let out = trigrid(&["count", "--n", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "495\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn count_methods_agree() {
    for n in 2..=12u64 {
        let n = n.to_string();
        let closed = stdout(&trigrid(&["count", "--n", &n]));
        for method in ["sum", "brute"] {
            assert_eq!(
                stdout(&trigrid(&["count", "--n", &n, "--method", method])),
                closed
            );
        }
    }
}

#[test]
fn enumerate_line_count_matches_count() {
    for n in 2..=12u64 {
        let n = n.to_string();
        let count: usize = stdout(&trigrid(&["count", "--n", &n]))
            .trim()
            .parse()
            .unwrap();
        let listing = stdout(&trigrid(&["enumerate", "--n", &n]));
        assert_eq!(listing.lines().count(), count);
        for (k, line) in listing.lines().enumerate() {
            let rec: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(rec["rank"], k);
            assert_eq!(rec["vertices"].as_array().unwrap().len(), 3);
        }
    }
}

#[test]
fn encode_worked_example() {
    let out = trigrid(&["encode", "--n", "10", "--subset", "4,5,8,11"]);
    assert_eq!(out.status.code(), Some(0));
    let rec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec["vertices"], serde_json::json!([[5, 0], [3, 2], [5, 2]]));
    assert_eq!(
        rec["params"],
        serde_json::json!({"s": 4, "t": 2, "p": 3, "q": 0, "r": 2})
    );
}

#[test]
fn verify_exit_codes() {
    let out = trigrid(&["verify", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS")));
    assert_eq!(trigrid(&["verify", "--n", "40"]).status.code(), Some(2));
}

#[test]
fn bad_arguments_exit_two_with_diagnostics_on_stderr() {
    for args in [
        &["encode", "--n", "10", "--subset", "4,5,8"][..],
        &["decode", "--n", "10", "--triangle", "0,0 2,0 0,1"],
        &["rank", "--n", "3", "--subset", "1,2,3,9"],
        &["count", "--n", "abc"],
        &["render", "--n", "3"],
    ] {
        let out = trigrid(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn render_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fig.svg");
    let tex = dir.path().join("fig.tex");
    let out = trigrid(&[
        "render",
        "--n",
        "6",
        "--subset",
        "1,3,4,8",
        "--out",
        svg.to_str().unwrap(),
        "--show-gaps",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    roxmltree::Document::parse(&std::fs::read_to_string(&svg).unwrap()).unwrap();
    let out = trigrid(&[
        "render",
        "--n",
        "6",
        "--out",
        tex.to_str().unwrap(),
        "--format",
        "tikz",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&tex)
        .unwrap()
        .starts_with("\\begin{tikzpicture}"));
}

fn subset_strategy() -> impl Strategy<Value = (u64, Vec<u64>)> {
    (2u64..=12).prop_flat_map(|n| {
        let universe: Vec<u64> = (1..=n + 2).collect();
        (Just(n), proptest::sample::subsequence(universe, 4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decode_of_encode_output(case in subset_strategy()) {
        let (n, elems) = case;
        let n = n.to_string();
        let subset = elems.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let rec: serde_json::Value =
            serde_json::from_str(stdout(&trigrid(&["encode", "--n", &n, "--subset", &subset])).trim()).unwrap();
        let triangle = rec["vertices"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| format!("{},{}", v[0], v[1]))
            .collect::<Vec<_>>()
            .join(" ");
        let back = stdout(&trigrid(&["decode", "--n", &n, "--triangle", &triangle]));
        prop_assert_eq!(back.trim(), subset);
    }
}
