mod common;

use std::path::Path;

use serde_json::Value;
use symbreak::coloring::{
    self, aq3_distinguishing_coloring, aqn_last_bit_coloring, is_color_preserving, Coloring,
};
use symbreak::graphs::io::{read_graph, write_graph, GraphFormat};
use symbreak::graphs::{complete_graph, Graph};
use symbreak::perm::{is_automorphism, Permutation};

use common::*;

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = symbreak(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path.to_str().unwrap().to_string()
}

fn write_coloring(dir: &Path, name: &str, g: &Graph, c: &Coloring) -> String {
    let path = dir.join(name);
    coloring::io::write_coloring(g, c, &path).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(out: &std::process::Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

/// Parses `(000 011)(001 010)` back into a permutation of the graph's vertices.
fn parse_cycles(g: &Graph, text: &str) -> Permutation {
    let mut images: Vec<usize> = (0..g.n_vertices()).collect();
    for cycle in text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(")(")
    {
        let vs: Vec<usize> = cycle
            .split_whitespace()
            .map(|name| g.vertex_by_name(name).unwrap())
            .collect();
        for (i, &v) in vs.iter().enumerate() {
            images[v] = vs[(i + 1) % vs.len()];
        }
    }
    Permutation::new(images).unwrap()
}

#[test]
fn gen_reports_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = symbreak(&[
        "gen",
        "--family",
        "augmented-cube",
        "--n",
        "3",
        "--out",
        dir.path().join("aq3.json").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "8 vertices, 20 edges");

    let path = dir.path().join("q53.dimacs");
    let out = symbreak(&[
        "gen",
        "--family",
        "hypercube-power",
        "--n",
        "5",
        "--p",
        "3",
        "--format",
        "dimacs",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&out).trim(), "32 vertices, 400 edges");
    let g = read_graph(&path).unwrap();
    assert_eq!(g.regular_degree(), Some(25));

    let out = symbreak(&[
        "gen",
        "--family",
        "complete",
        "--n",
        "2",
        "--out",
        dir.path().join("k2.json").to_str().unwrap(),
    ]);
    assert_eq!(stdout(&out).trim(), "2 vertices, 1 edges");
    let k2 = read_graph(dir.path().join("k2.json")).unwrap();
    let q1 = read_graph(gen(
        dir.path(),
        "q1.json",
        &["--family", "hypercube", "--n", "1"],
    ))
    .unwrap();
    assert!(k2.same_edges(&q1));
}

#[test]
fn gen_rejects_bad_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("x.json");
    let out = out_path.to_str().unwrap();
    for args in [
        vec![
            "gen",
            "--family",
            "hypercube-power",
            "--n",
            "5",
            "--out",
            out,
        ],
        vec![
            "gen",
            "--family",
            "hypercube",
            "--n",
            "5",
            "--p",
            "2",
            "--out",
            out,
        ],
        vec!["gen", "--family", "hypercube", "--n", "0", "--out", out],
        vec![
            "gen",
            "--family",
            "matching-complement",
            "--n",
            "7",
            "--out",
            out,
        ],
        vec!["gen", "--family", "moebius", "--n", "3", "--out", out],
        vec!["gen", "--family", "hypercube", "--out", out],
    ] {
        assert_eq!(symbreak(&args).status.code(), Some(2), "{args:?}");
    }
    assert!(!out_path.exists());
}

#[test]
fn aut_reports_orders() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = gen(dir.path(), "k4.json", &["--family", "complete", "--n", "4"]);
    let v = json(&symbreak(&["aut", &k4]));
    assert_eq!(v["order"], "24");
    assert_eq!(v["orbit_count"], 1);

    let q5 = gen(
        dir.path(),
        "q5.json",
        &["--family", "hypercube", "--n", "5"],
    );
    let v = json(&symbreak(&["aut", &q5, "--order-only"]));
    assert_eq!(v["order"], "3840");
    assert!(v.get("generators").is_none());

    let aq3_path = gen(
        dir.path(),
        "aq3.json",
        &["--family", "augmented-cube", "--n", "3"],
    );
    let aq3 = read_graph(&aq3_path).unwrap();
    let c = write_coloring(dir.path(), "c3.json", &aq3, &aq3_distinguishing_coloring());
    let v = json(&symbreak(&["aut", &aq3_path, "--coloring", &c]));
    assert_eq!(v["order"], "1");
    assert_eq!(v["orbit_count"], 8);
    assert_eq!(v["colored"], true);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let aq4_path = gen(
        dir.path(),
        "aq4.json",
        &["--family", "augmented-cube", "--n", "4"],
    );
    let aq4 = read_graph(&aq4_path).unwrap();
    let c = write_coloring(
        dir.path(),
        "c4.json",
        &aq4,
        &aqn_last_bit_coloring(4).unwrap(),
    );
    let out = symbreak(&["verify", &aq4_path, "--coloring", &c]);
    assert_eq!(out.status.code(), Some(0));

    let aq3_path = gen(
        dir.path(),
        "aq3.json",
        &["--family", "augmented-cube", "--n", "3"],
    );
    let aq3 = read_graph(&aq3_path).unwrap();
    let constant = Coloring::constant(8);
    let c = write_coloring(dir.path(), "const.json", &aq3, &constant);
    let out = symbreak(&["verify", &aq3_path, "--coloring", &c]);
    assert_eq!(out.status.code(), Some(1));
    let line = stdout(&out);
    let cycles = line.trim().rsplit("by ").next().unwrap();
    let p = parse_cycles(&aq3, cycles);
    assert!(!p.is_identity());
    assert!(is_automorphism(&aq3, &p).unwrap());
    assert!(is_color_preserving(&p, &constant).unwrap());

    // dimension mismatch is a usage error
    let out = symbreak(&["verify", &aq4_path, "--coloring", &c]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_names_the_twin_swap() {
    let dir = tempfile::tempdir().unwrap();
    let aq3_path = gen(
        dir.path(),
        "aq3.json",
        &["--family", "augmented-cube", "--n", "3"],
    );
    let aq3 = read_graph(&aq3_path).unwrap();
    for x in 0..8usize {
        let star = x ^ 0b011;
        // only x and its twin share a colour
        let colors: Vec<u32> = (0..8)
            .map(|v| {
                if v == star {
                    x as u32 + 1
                } else {
                    v as u32 + 1
                }
            })
            .collect();
        let c = Coloring::from_colors(colors).unwrap();
        let file = write_coloring(dir.path(), &format!("twin{x}.json"), &aq3, &c);
        let out = symbreak(&["verify", &aq3_path, "--coloring", &file]);
        assert_eq!(out.status.code(), Some(1));
        let (a, b) = (aq3.vertex_name(x.min(star)), aq3.vertex_name(x.max(star)));
        assert!(
            stdout(&out).contains(&format!("({a} {b})")),
            "{}",
            stdout(&out)
        );
    }
}

#[test]
fn distnum_values() {
    let dir = tempfile::tempdir().unwrap();
    let aq3 = gen(
        dir.path(),
        "aq3.json",
        &["--family", "augmented-cube", "--n", "3"],
    );
    let v = json(&symbreak(&[
        "distnum",
        &aq3,
        "--max-colors",
        "4",
        "--strategy",
        "exhaustive",
    ]));
    assert_eq!(v["value"], 3);
    assert_eq!(v["exact"], true);
    assert_eq!(v["method"], "exhaustive");

    let q4 = gen(
        dir.path(),
        "q4.json",
        &["--family", "hypercube", "--n", "4"],
    );
    let v = json(&symbreak(&[
        "distnum",
        &q4,
        "--max-colors",
        "3",
        "--strategy",
        "exhaustive",
    ]));
    assert_eq!(v["value"], 2);

    let q53 = gen(
        dir.path(),
        "q53.json",
        &["--family", "hypercube-power", "--n", "5", "--p", "3"],
    );
    let args = [
        "distnum",
        &q53,
        "--max-colors",
        "3",
        "--strategy",
        "random",
        "--seed",
        "1",
    ];
    let first = json(&symbreak(&args));
    assert_eq!(
        (first["lower"].as_u64(), first["upper"].as_u64()),
        (Some(2), Some(2))
    );
    assert_eq!(first["value"], 2);
    assert_eq!(first["seed"], 1);
    let again = json(&symbreak(&args));
    assert_eq!(first["witness"], again["witness"]);

    // the printed witness re-verifies
    let witness_path = dir.path().join("w.json");
    std::fs::write(&witness_path, first["witness"].to_string()).unwrap();
    let out = symbreak(&["verify", &q53, "--coloring", witness_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn budget_abort_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let q4 = gen(
        dir.path(),
        "q4.json",
        &["--family", "hypercube", "--n", "4"],
    );
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_symbreak"))
        .env("SYMBREAK_BUDGET", "10")
        .args([
            "distnum",
            &q4,
            "--max-colors",
            "3",
            "--strategy",
            "exhaustive",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = symbreak(&[
        "distnum",
        &q4,
        "--max-colors",
        "3",
        "--strategy",
        "exhaustive",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reproduce_tables() {
    let dir = tempfile::tempdir().unwrap();
    let report_dir = dir.path().join("aqn");
    let out = symbreak(&[
        "reproduce",
        "--table",
        "aqn",
        "--max-n",
        "5",
        "--out",
        report_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(report_dir.join("report.json")).unwrap())
            .unwrap();
    assert_eq!(report["aq_sequence"], serde_json::json!([2, 4, 3, 2, 2]));
    assert!(report_dir.join("report.md").exists());
    for row in report["rows"].as_array().unwrap() {
        if let Some(path) = row["witness_path"].as_str() {
            assert!(report_dir.join(path).exists());
        }
    }

    let report_dir = dir.path().join("qn");
    let out = symbreak(&[
        "reproduce",
        "--table",
        "qn",
        "--max-n",
        "3",
        "--out",
        report_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for needle in [
        "D(Q_2) | published | 3 | 3",
        "D(Q_3) | published | 3 | 3",
        "D(Q_2^2) | published | 4 | 4",
        "D(Q_3^2) | published | 4 | 4",
    ] {
        assert!(text.contains(needle), "missing {needle} in\n{text}");
    }

    let report_dir = dir.path().join("qpowers");
    let out = symbreak(&[
        "reproduce",
        "--table",
        "qpowers",
        "--out",
        report_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(report_dir.join("report.json")).unwrap())
            .unwrap();
    let equal_rows: Vec<&Value> = report["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["outcome"]["kind"] == "groups_equal")
        .collect();
    assert_eq!(equal_rows.len(), 2);
    assert!(equal_rows.iter().all(|r| r["outcome"]["equal"] == true));
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["--family", "hypercube", "--n", "4"],
        vec!["--family", "hypercube-power", "--n", "4", "--p", "2"],
        vec!["--family", "augmented-cube", "--n", "5"],
        vec!["--family", "complete", "--n", "6"],
        vec!["--family", "matching-complement", "--n", "8"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let source = gen(dir.path(), &format!("g{i}.json"), args);
        let dimacs = dir.path().join(format!("g{i}.dimacs"));
        let out = symbreak(&[
            "export",
            &source,
            "--format",
            "dimacs",
            "--out",
            dimacs.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let back = dir.path().join(format!("g{i}.back.json"));
        let out = symbreak(&[
            "export",
            dimacs.to_str().unwrap(),
            "--format",
            "json",
            "--out",
            back.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let (a, b) = (read_graph(&source).unwrap(), read_graph(&back).unwrap());
        assert!(a.same_edges(&b));
        assert_eq!(a.labels(), b.labels());
        assert_eq!(a.family(), b.family());
    }
}

#[test]
fn unlabelled_graphs_use_indices() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = complete_graph(3).unwrap();
    let path = dir.path().join("k3.json");
    write_graph(&k3, &path, GraphFormat::Json).unwrap();
    let c = write_coloring(
        dir.path(),
        "c.json",
        &k3,
        &Coloring::from_colors(vec![1, 1, 2]).unwrap(),
    );
    let out = symbreak(&["verify", path.to_str().unwrap(), "--coloring", &c]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("(0 1)"));
}
