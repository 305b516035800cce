mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::languages_dir;

fn lang(file: &str) -> PathBuf {
    languages_dir().join(file)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subword-trees")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_prints_class_and_predictions() {
    let o = run(&["classify", path(&lang("L1.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("class=1, hom=inf"), "{text}");
    assert!(text.contains("predictions: rd=LINEAR ra=LINEAR md=LINEAR ma=LINEAR"), "{text}");

    let text = stdout(&run(&["classify", path(&lang("L3.json"))]));
    assert!(text.contains("class=3"), "{text}");
    assert!(text.contains("rd=LOG ra=CONSTANT md=LINEAR ma=LINEAR"), "{text}");

    let json = stdout(&run(&["classify", path(&lang("L4.json")), "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["class"], 4);
    assert_eq!(v["hom"], 0);
}

#[test]
fn invalid_language_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"name": "x", "forbidden": ["012"]}"#).unwrap();
    assert_eq!(run(&["classify", path(&bad)]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["enumerate", path(&missing), "-n", "2"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["depths", path(&lang("L3.json")), "--n", "4..2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let o = run(&["depths", path(&lang("L3.json")), "--n", "1..3", "--algorithm", "paper"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_lists_and_counts() {
    let o = run(&["enumerate", path(&lang("L3.json")), "-n", "3"]);
    assert_eq!(stdout(&o), "000\n001\n011\n111\n");
    let o = run(&["enumerate", path(&lang("L5.json")), "-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
    let o = run(&["enumerate", path(&lang("L2.json")), "-n", "2", "--count-only"]);
    assert_eq!(stdout(&o), "4\n");
    let o = run(&["enumerate", path(&lang("L2.json")), "-n", "200", "--count-only"]);
    assert_eq!(stdout(&o).trim(), "1606938044258990275541962092341162602522202993782792835301376");
}

/// Parses the depths CSV into (n, column) pairs for one column.
fn column(csv: &str, name: &str) -> Vec<String> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(i).unwrap().to_string()).collect()
}

#[test]
fn depths_csv() {
    let csv = stdout(&run(&["depths", path(&lang("L3.json")), "--n", "1..6"]));
    assert!(csv.starts_with(
        "language,n,h_rd,h_ra,h_md,h_ma,class,source_rd,source_ra,source_md,source_ma\n"
    ));
    assert_eq!(column(&csv, "h_rd"), ["1", "2", "2", "3", "3", "3"]);
    assert!(column(&csv, "class").iter().all(|c| c == "3"));

    let csv = stdout(&run(&["depths", path(&lang("L1.json")), "--n-range", "1..6"]));
    let ns = column(&csv, "n");
    assert_eq!(column(&csv, "h_rd"), ns);
    assert_eq!(column(&csv, "h_ra"), ns);

    let csv = stdout(&run(&["depths", path(&lang("L2.json")), "--n", "1..6"]));
    assert!(column(&csv, "h_md").iter().all(|c| c == "0"));
    assert!(column(&csv, "h_ma").iter().all(|c| c == "0"));
}

#[test]
fn depths_skips_past_caps_and_is_deterministic() {
    let l2 = lang("L2.json");
    let args = ["depths", path(&l2), "--n", "12..13", "--measures", "rd,md"];
    let first = stdout(&run(&args));
    assert_eq!(first, stdout(&run(&args)));
    assert_eq!(column(&first, "h_rd"), ["12", ""]);
    assert_eq!(column(&first, "source_rd"), ["EXACT", "SKIPPED"]);
    assert_eq!(column(&first, "source_ra"), ["SKIPPED", "SKIPPED"]);

    let csv = stdout(&run(&[
        "depths",
        path(&lang("L3.json")),
        "--n",
        "40",
        "--measures",
        "rd",
        "--allow-constructed",
        "--max-n",
        "12",
    ]));
    assert_eq!(column(&csv, "source_rd"), ["CONSTRUCTED"]);
}

#[test]
fn build_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("tree.json");
    let dot = dir.path().join("tree.dot");
    let l3 = lang("L3.json");
    let o = run(&[
        "build-tree",
        path(&l3),
        "-n",
        "3",
        "--problem",
        "recognition",
        "--mode",
        "det",
        "--algorithm",
        "exact",
        "--out",
        path(&tree),
        "--dot",
        path(&dot),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&dot).unwrap().starts_with("digraph"));
    let o = run(&["validate", path(&tree), path(&l3), "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("depth=2"));

    let swapped = fs::read_to_string(&tree).unwrap().replace("\"000\"", "\"tmp\"").replace("\"001\"", "\"000\"").replace("\"tmp\"", "\"001\"");
    let bad = dir.path().join("swapped.json");
    fs::write(&bad, swapped).unwrap();
    let o = run(&["validate", path(&bad), path(&l3), "-n", "3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("witness: 000"), "{}", stdout(&o));

    let wide = dir.path().join("n4.json");
    run(&["build-tree", path(&l3), "-n", "4", "--out", path(&wide)]);
    assert_eq!(run(&["validate", path(&wide), path(&l3), "-n", "3"]).status.code(), Some(2));
}

#[test]
fn membership_leaf_and_builder_precondition() {
    let o = run(&["build-tree", path(&lang("L2.json")), "-n", "5", "--problem", "membership"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["children"], serde_json::json!([{"leaf": "1"}]));
    let o = run(&["build-tree", path(&lang("L1.json")), "-n", "20", "--algorithm", "paper"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["build-tree", path(&lang("L3.json")), "-n", "5", "--algorithm", "paper"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn large_strategy_emits_a_bound_report() {
    let o = run(&["build-tree", path(&lang("L3.json")), "-n", "1000", "--algorithm", "paper"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["query_bound"], 17);
    assert!(v["max_queries"].as_u64().unwrap() <= 17);
}

#[test]
fn every_combination_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for entry in fs::read_dir(languages_dir()).unwrap() {
        let file = entry.unwrap().path();
        for n in ["6", "10"] {
            for problem in ["recognition", "membership"] {
                for mode in ["det", "nondet"] {
                    for algorithm in ["exact", "paper"] {
                        let out = dir.path().join("t.json");
                        let built = run(&[
                            "build-tree", path(&file), "-n", n, "--problem", problem, "--mode", mode,
                            "--algorithm", algorithm, "--out", path(&out),
                        ]);
                        let what = format!("{} n={n} {problem} {mode} {algorithm}", file.display());
                        match built.status.code() {
                            Some(0) => {}
                            Some(3) if algorithm == "paper" && problem == "recognition" => continue,
                            other => panic!("{what}: build exited {other:?}"),
                        }
                        let checked = run(&[
                            "validate", path(&out), path(&file), "-n", n, "--problem", problem,
                            "--mode", mode,
                        ]);
                        assert_eq!(checked.status.code(), Some(0), "{what}: {}", stdout(&checked));
                    }
                }
            }
        }
    }
}
