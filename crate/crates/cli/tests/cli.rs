use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bbrack"))
        .args(args)
        .env("BBRACK_THREADS", "2")
        .output()
        .unwrap()
}

/// Stdout of a run expected to exit with `code`.
fn expect(code: i32, args: &[&str]) -> String {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}\nstdout: {stdout}\nstderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn verify_biquandle() {
    assert_eq!(
        expect(0, &["verify-biquandle", "ca2"]).trim(),
        "valid biquandle of order 2"
    );
    assert_eq!(
        expect(0, &["verify-biquandle", &data("dihedral3.bq")]).trim(),
        "valid quandle of order 3"
    );
    let v = json(&expect(
        0,
        &[
            "verify-biquandle",
            &data("alexander-z5-t2-r4.bq"),
            "--format",
            "json",
        ],
    ));
    assert_eq!(v["order"], 5);
    let v = json(&expect(
        1,
        &[
            "verify-biquandle",
            &data("not-a-biquandle.bq"),
            "--format",
            "json",
        ],
    ));
    assert_eq!(v["valid"], false);
    expect(2, &["verify-biquandle", "no-such-file.bq"]);
}

#[test]
fn verify_bracket() {
    assert_eq!(
        expect(0, &["verify-bracket", "--bracket", &data("ex1.br")]).trim(),
        "valid bracket over Z5: delta = 2, w = 1"
    );
    let v = json(&expect(
        0,
        &[
            "verify-bracket",
            "--bracket",
            &data("f8.br"),
            "--format",
            "json",
        ],
    ));
    assert_eq!(v["delta"], "1+t+t^2");
    assert_eq!(v["w"], "1+t^2");
    let v = json(&expect(
        0,
        &[
            "verify-bracket",
            "--bracket",
            &data("z11.br"),
            "--format",
            "json",
        ],
    ));
    assert_eq!(
        (v["delta"].as_str(), v["w"].as_str()),
        (Some("7"), Some("3"))
    );

    let out = run(&["verify-bracket", "--bracket", &data("z3-counterexample.br")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("axiom (i) fails at x = 2"));
    let all = expect(
        1,
        &[
            "verify-bracket",
            "--bracket",
            &data("z3-counterexample.br"),
            "--all",
        ],
    );
    assert!(all.contains("axiom (i) fails at x = 2"));

    expect(
        1,
        &[
            "verify-bracket",
            "--bracket",
            "ex1",
            "--biquandle",
            "dihedral3",
        ],
    );
    expect(2, &["verify-bracket", "--bracket", "nope"]);
}

#[test]
fn colorings() {
    assert_eq!(
        expect(
            0,
            &[
                "colorings",
                "--knot",
                "4_1",
                "--biquandle",
                "alexander-z5-t2-r4"
            ]
        )
        .trim(),
        "5"
    );
    assert_eq!(
        expect(
            0,
            &["colorings", "--knot", "3_1", "--biquandle", "dihedral3"]
        )
        .trim(),
        "9"
    );
    let listed = expect(
        0,
        &[
            "colorings",
            "--pd-file",
            &data("hopf-positive.pd"),
            "--biquandle",
            &data("ca2.bq"),
            "--list",
        ],
    );
    let lines: Vec<&str> = listed.lines().collect();
    assert_eq!(lines[0], "4");
    assert_eq!(lines.len(), 5);
    let v = json(&expect(
        0,
        &[
            "colorings",
            "--pd",
            "U U",
            "--biquandle",
            "dihedral3",
            "--format",
            "json",
            "--list",
        ],
    ));
    assert_eq!(v["count"], 9);
    expect(1, &["colorings", "--pd", "X[1,2,3", "--biquandle", "ca2"]);
    expect(2, &["colorings", "--knot", "9_1", "--biquandle", "ca2"]);
}

#[test]
fn invariant() {
    let hopf = [
        "invariant",
        "--knot",
        "L2a1",
        "--bracket",
        "ex1",
        "--mirror",
    ];
    assert_eq!(expect(0, &hopf).trim(), "2u^3+2u^4");
    let pd = data("hopf-positive.pd");
    assert_eq!(
        expect(
            0,
            &[
                "invariant",
                "--pd-file",
                &pd,
                "--bracket",
                "ex1",
                "--format",
                "multiset"
            ]
        )
        .trim(),
        "{2×3, 2×4}"
    );
    assert_eq!(
        expect(
            0,
            &["invariant", "--pd", "U U", "--bracket", &data("ex1.br")]
        )
        .trim(),
        "4u^4"
    );

    let per = expect(
        0,
        &[
            "invariant",
            "--pd-file",
            &pd,
            "--bracket",
            "ex1",
            "--per-coloring",
        ],
    );
    let values: Vec<&str> = per
        .lines()
        .take(4)
        .map(|l| l.rsplit(" : ").next().unwrap())
        .collect();
    let mut sorted = values.clone();
    sorted.sort();
    assert_eq!(sorted, ["3", "3", "4", "4"]);

    let v = json(&expect(
        0,
        &[
            "invariant",
            "--knot",
            "4_1",
            "--bracket",
            "f8",
            "--format",
            "json",
        ],
    ));
    assert_eq!(v["count"], 2);
    assert_eq!(v["values"][0]["exponent"], "1+t");
    assert_eq!(
        expect(
            0,
            &[
                "invariant",
                "--knot",
                "8_18",
                "--bracket",
                "z11-dihedral",
                "--mirror"
            ]
        )
        .trim(),
        "27u^2"
    );
    expect(2, &["invariant", "--knot", "L2a1"]);
}

#[test]
fn search() {
    let out = expect(0, &["search", "--biquandle", "ca2", "--ring", "Z5"]);
    assert!(out.lines().any(|l| l == "[1 3 | 4 2; 4 1 | 1 4]"), "{out}");

    let file = std::env::temp_dir().join(format!("bbrack-search-{}.json", std::process::id()));
    let path = file.to_string_lossy().into_owned();
    let stdout = expect(
        0,
        &[
            "search",
            "--biquandle",
            "ca2",
            "--ring",
            "Z5",
            "--dedup",
            "--format",
            "json",
            "--out",
            &path,
        ],
    );
    let written = std::fs::read_to_string(&file).unwrap();
    std::fs::remove_file(&file).unwrap();
    assert_eq!(json(&stdout), json(&written));

    let v = json(&expect(
        0,
        &[
            "search",
            "--biquandle",
            "ca2",
            "--ring",
            "GF(2^3;1+t+t^3)",
            "--format",
            "json",
            "--limit",
            "3",
        ],
    ));
    assert_eq!(v["brackets"].as_array().unwrap().len(), 3);
    expect(2, &["search", "--biquandle", "ca2", "--ring", "Z0"]);
    expect(2, &["search", "--biquandle", "ca2", "--ring", "Laurent"]);
}

#[test]
fn tables() {
    let f8 = expect(0, &["tables", "f8-knots"]);
    assert!(f8.lines().any(|l| l == "{2×t} : 3_1, 6_2, 8_9"), "{f8}");
    let links = expect(0, &["tables", "f8-links"]);
    assert!(
        links
            .lines()
            .any(|l| l.starts_with("{2×(1+t^2), 2×(t+t^2)} : ") && l.contains("L2a1")),
        "{links}"
    );
    let z11 = expect(0, &["tables", "z11-knots"]);
    assert!(z11.lines().any(|l| l == "27u^2 : 8_18"), "{z11}");
    let given = expect(0, &["tables", "f8-knots", "--as-given"]);
    assert_ne!(f8, given);
}

#[test]
fn rmatrix() {
    let text = expect(0, &["rmatrix", "--bracket", "ex1"]);
    assert!(
        text.contains("X_{1,1} (classical)\n1 0 0 0\n0 0 4 0\n0 4 0 0\n0 0 0 1"),
        "{text}"
    );
    let v = json(&expect(
        0,
        &["rmatrix", "--bracket", &data("ex1.br"), "--format", "json"],
    ));
    assert_eq!(v["X"].as_array().unwrap().len(), 4);
    assert_eq!(v["X"][2]["matrix"][0][0], "4");
    assert_eq!(v["N"][0], serde_json::json!(["0", "1", "1", "0"]));
}

#[test]
fn usage_errors() {
    expect(2, &[]);
    expect(2, &["bogus"]);
    expect(
        2,
        &[
            "colorings",
            "--knot",
            "3_1",
            "--pd",
            "U",
            "--biquandle",
            "ca2",
        ],
    );
    expect(0, &["--help"]);
}
