use std::path::Path;
use std::process::{Command, Output};

use snark_core::io::{graph_from_json, labeling_from_json, report_from_json};

fn cli(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snark-cordial"))
        .args(args)
        .current_dir(dir)
        .env_remove("SNARK_CORDIAL_SEED")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn construct_writes_canonical_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = cli(
        dir.path(),
        &[
            "construct",
            "--family",
            "goldberg",
            "-n",
            "5",
            "--out",
            "g.json",
        ],
    );
    assert_eq!(code(&out), 0);
    let g = graph_from_json(&std::fs::read_to_string(dir.path().join("g.json")).unwrap()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (40, 60));

    let out = cli(
        dir.path(),
        &["construct", "--family", "petersen", "--format", "graphml"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout)
            .matches("<edge ")
            .count(),
        15
    );
}

#[test]
fn invalid_parameters_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["construct", "--family", "goldberg", "-n", "4"][..],
        &["construct", "--family", "goldberg"],
        &["construct", "--family", "path-union", "-n", "5"],
        &["construct", "--family", "path-union", "-n", "3", "-m", "2"],
        &[
            "construct",
            "--family",
            "open-star",
            "-n",
            "5",
            "-t",
            "3",
            "-m",
            "2",
        ],
        &[
            "construct",
            "--family",
            "goldberg",
            "-n",
            "5",
            "--attach-slot",
            "9",
        ],
        &[
            "construct",
            "--family",
            "path-union",
            "-n",
            "5",
            "-m",
            "2",
            "--attach-slot",
            "9",
        ],
        &["label", "--family", "petersen", "--pattern", "p1"],
        &["construct", "--input", "missing.json"],
        &["construct"],
    ] {
        let out = cli(dir.path(), args);
        assert_eq!(
            code(&out),
            2,
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn label_exit_codes_follow_cordiality() {
    let dir = tempfile::tempdir().unwrap();
    let out = cli(
        dir.path(),
        &["label", "--family", "open-star", "-n", "5", "-t", "3"],
    );
    assert_eq!(code(&out), 0);
    let r = report_from_json(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!((r.vertex_diff, r.edge_diff), (1, 1));

    let out = cli(
        dir.path(),
        &[
            "label",
            "--family",
            "goldberg",
            "-n",
            "5",
            "--pattern",
            "constant1",
        ],
    );
    assert_eq!(code(&out), 1);

    let bad = [
        "label",
        "--family",
        "path-union",
        "-n",
        "5",
        "-m",
        "3",
        "--attach-slot",
        "8",
    ];
    let out = cli(dir.path(), &bad);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not cordial"));
    let mut repaired = bad.to_vec();
    repaired.extend(["--repair", "--out", "l.json"]);
    let out = cli(dir.path(), &repaired);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("repaired"));
    assert!(
        report_from_json(&String::from_utf8_lossy(&out.stdout))
            .unwrap()
            .is_cordial
    );
}

#[test]
fn verify_round_trips_a_stored_labeling() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        code(&cli(
            d,
            &[
                "construct",
                "--family",
                "path-union",
                "-n",
                "5",
                "-m",
                "2",
                "--out",
                "g.json"
            ]
        )),
        0
    );
    assert_eq!(
        code(&cli(
            d,
            &[
                "label",
                "--family",
                "path-union",
                "-n",
                "5",
                "-m",
                "2",
                "--out",
                "l.json",
                "--report",
                "r.json"
            ]
        )),
        0
    );
    let out = cli(d, &["verify", "--input", "g.json", "--labeling", "l.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(out.stdout, std::fs::read(d.join("r.json")).unwrap());

    // Same labeling against a graph of another size is invalid input.
    let out = cli(
        d,
        &[
            "verify",
            "--family",
            "goldberg",
            "-n",
            "5",
            "--labeling",
            "l.json",
        ],
    );
    assert_eq!(code(&out), 2);

    let mut l = labeling_from_json(&std::fs::read_to_string(d.join("l.json")).unwrap()).unwrap();
    l.edge_labels[0] ^= 1;
    std::fs::write(
        d.join("tampered.json"),
        snark_core::io::labeling_to_json(&l),
    )
    .unwrap();
    assert_eq!(
        code(&cli(
            d,
            &["verify", "--input", "g.json", "--labeling", "tampered.json"]
        )),
        2
    );
}

#[test]
fn check_snark_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = cli(d, &["check-snark", "--family", "goldberg", "-n", "5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"verdict\": \"snark\"") && !text.contains("elapsed_ms"));

    assert_eq!(
        code(&cli(d, &["check-snark", "--family", "goldberg", "-n", "3"])),
        1
    );

    let out = cli(
        d,
        &[
            "check-snark",
            "--family",
            "goldberg",
            "-n",
            "7",
            "--max-nodes",
            "10",
        ],
    );
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"verdict\": \"undetermined\""));

    let out = cli(d, &["check-snark", "--family", "petersen", "--timings"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("elapsed_ms"));
}

#[test]
fn search_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("k4.json"),
        "{\"vertex_count\":4,\"edges\":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}\n",
    )
    .unwrap();
    let out = cli(d, &["search", "--input", "k4.json"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"status\":\"absent\""));

    let out = cli(
        d,
        &[
            "search",
            "--family",
            "goldberg",
            "-n",
            "9",
            "--max-nodes",
            "0",
        ],
    );
    assert_eq!(code(&out), 3);

    let out = cli(
        d,
        &[
            "search", "--family", "goldberg", "-n", "7", "--out", "l.json",
        ],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(
        code(&cli(
            d,
            &[
                "verify",
                "--family",
                "goldberg",
                "-n",
                "7",
                "--labeling",
                "l.json"
            ]
        )),
        0
    );
}

#[test]
fn seed_falls_back_to_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_snark-cordial"));
        c.args([
            "search", "--family", "goldberg", "-n", "9", "--out", "l.json",
        ])
        .current_dir(dir.path());
        if let Some(s) = flag {
            c.args(["--seed", s]);
        }
        match env {
            Some(s) => c.env("SNARK_CORDIAL_SEED", s),
            None => c.env_remove("SNARK_CORDIAL_SEED"),
        };
        assert_eq!(c.output().unwrap().status.code(), Some(0));
        std::fs::read(dir.path().join("l.json")).unwrap()
    };
    assert_eq!(run(Some("5"), None), run(None, Some("5")));
    assert_eq!(run(Some("5"), Some("0")), run(None, None));
}

#[test]
fn export_with_labeling() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    cli(
        d,
        &[
            "construct",
            "--family",
            "open-star",
            "-n",
            "5",
            "-t",
            "2",
            "--out",
            "g.json",
        ],
    );
    cli(
        d,
        &[
            "label",
            "--family",
            "open-star",
            "-n",
            "5",
            "-t",
            "2",
            "--out",
            "l.json",
            "--report",
            "r.json",
        ],
    );
    let out = cli(d, &["export", "--input", "g.json", "--labeling", "l.json"]);
    assert_eq!(code(&out), 0);
    let dot = String::from_utf8_lossy(&out.stdout);
    assert_eq!(dot.matches("subgraph cluster_copy_").count(), 2);
    assert_eq!(dot.matches("fillcolor=black").count(), 40);
    assert!(dot.contains("apex=true"));
}
