//! End-to-end checks of the `hexmul` binary: golden outputs for the worked
//! examples, format stability, and error exits.

use std::process::{Command, Output};

fn hexmul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexmul"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = hexmul(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn product_prints_all_routes() {
    let out = stdout_of(&["product", "2", "3", "4"]);
    assert_eq!(
        out,
        "<2,3,4> = 18\nsymmetric: 18\nstrip: 18\ninclusion: 18\n"
    );
    assert_eq!(stdout_of(&["product", "1", "1", "9"]).lines().next(), Some("<1,1,9> = 9"));
    assert_eq!(stdout_of(&["product", "3", "3", "3"]).lines().next(), Some("<3,3,3> = 19"));
}

#[test]
fn sieve3_lists_survivors() {
    assert_eq!(stdout_of(&["sieve3", "100"]), "2 3 5 11 17 41\n");
    assert_eq!(stdout_of(&["sieve3", "4"]), "2 3\n");
    assert_eq!(
        stdout_of(&["sieve3", "100", "--augmented"]),
        "1 2 3 5 11 17 41\n"
    );
}

#[test]
fn factor3_lists_triples() {
    assert_eq!(
        stdout_of(&["factor3", "19"]),
        "(1,1,19) (2,2,6) (3,3,3)\n"
    );
    assert_eq!(stdout_of(&["factor3", "2"]), "(1,1,2)\n");
    let twenty = stdout_of(&["factor3", "20"]);
    assert_eq!(twenty.split_whitespace().count(), 3);
}

#[test]
fn table_prints_count_row() {
    assert_eq!(
        stdout_of(&["table", "1", "20"]),
        "1 1 1 2 1 2 2 2 2 3 1 3 2 3 2 4 1 4 3 3\n"
    );
    assert_eq!(stdout_of(&["table", "5", "5"]), "1\n");
    assert_eq!(stdout_of(&["table", "16", "16"]), "4\n");
}

#[test]
fn factor2_reports() {
    let out = stdout_of(&["factor2", "15"]);
    assert!(out.contains("repetition: k=0 l=5"), "{out}");
    assert!(out.contains("divisor: 5"), "{out}");
    assert!(out.contains("factors: 3 * 5"), "{out}");

    let out = stdout_of(&["factor2", "13"]);
    assert!(out.contains("2-prime"), "{out}");

    let out = stdout_of(&["factor2", "2"]);
    assert!(out.contains("factors: 2"), "{out}");
}

#[test]
fn lucky_and_rabinowitsch_rows() {
    assert_eq!(stdout_of(&["lucky", "100"]), "1 2 3 5 11 17 41\n");
    assert_eq!(stdout_of(&["lucky", "2"]), "1 2\n");
    assert_eq!(
        stdout_of(&["rabinowitsch", "200"]),
        "-3 -7 -11 -19 -43 -67 -163\n"
    );
}

#[test]
fn hexsvg_writes_markers() {
    let dir = tempfile::tempdir().unwrap();
    for (sides, expect) in [(["2", "3", "4"], 18), (["1", "1", "1"], 1), (["3", "3", "3"], 19)] {
        let path = dir.path().join(format!("fig-{}.svg", sides.join("-")));
        let args = [
            "hexsvg",
            sides[0],
            sides[1],
            sides[2],
            path.to_str().unwrap(),
        ];
        let out = hexmul(&args);
        assert!(out.status.success());
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.matches(r#"class="pt""#).count(), expect);
        assert!(text.starts_with("<?xml"));
    }
}

#[test]
fn hexsvg_to_stdout() {
    let out = stdout_of(&["hexsvg", "2", "2", "2", "-"]);
    assert_eq!(out.matches(r#"class="pt""#).count(), 7);
}

#[test]
fn json_lines_round_trip_byte_identically() {
    let commands: [&[&str]; 6] = [
        &["--format", "json", "product", "2", "3", "4"],
        &["--format", "json", "sieve3", "100", "--augmented"],
        &["--format", "json", "factor3", "19"],
        &["--format", "json", "table", "1", "20"],
        &["--format", "json", "factor2", "15"],
        &["--format", "json", "rabinowitsch", "200"],
    ];
    for args in commands {
        let out = stdout_of(args);
        for line in out.lines() {
            let value: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(
                serde_json::to_string(&value).unwrap(),
                line,
                "round trip changed bytes for {args:?}"
            );
        }
    }
}

#[test]
fn csv_has_stable_headers() {
    let out = stdout_of(&["--format", "csv", "sieve3", "100"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("p"));
    assert_eq!(lines.next(), Some("2"));

    let out = stdout_of(&["--format", "csv", "factor2", "15"]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("n,prime,divisor,cofactor,rep_first,rep_second,factors")
    );
    assert_eq!(lines.next(), Some("15,false,5,3,0,5,3:1;5:1"));

    let out = stdout_of(&["--format", "csv", "product", "2", "3", "4"]);
    assert_eq!(out, "x,y,z,product,symmetric,strip,inclusion\n2,3,4,18,18,18,18\n");
}

#[test]
fn errors_exit_nonzero_with_one_line() {
    for args in [
        &["product", "0", "3", "4"] as &[&str],
        &["sieve3", "1"],
        &["factor2", "1"],
        &["table", "9", "3"],
        &["hexsvg", "200", "2", "2", "-"],
    ] {
        let out = hexmul(args);
        assert!(!out.status.success(), "{args:?} unexpectedly succeeded");
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert_eq!(stderr.lines().count(), 1, "stderr for {args:?}: {stderr}");
        assert!(stderr.starts_with("error: "), "{stderr}");
    }
}
