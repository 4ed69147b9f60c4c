//! Black-box tests of the binary: golden outputs, exit codes, formats.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_kleene-tables"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("stdout is utf-8"),
        String::from_utf8(output.stderr).expect("stderr is utf-8"),
        output.status.code().expect("no signal"),
    )
}

#[test]
fn seq_t_nine_ends_with_published_value() {
    let (stdout, _, code) = run(&["seq", "t", "--n", "9"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "n,value");
    assert_eq!(lines.last(), Some(&"9,16242474"));
    assert_eq!(lines.len(), 10);
}

#[test]
fn seq_u3_four_terms() {
    let (stdout, _, code) = run(&["seq", "u3", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n,value\n1,0\n2,1\n3,6\n4,45\n");
}

#[test]
fn seq_g_single_term() {
    let (stdout, _, code) = run(&["seq", "g", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n,value\n1,3\n");
}

#[test]
fn seq_json_records_carry_source() {
    let (stdout, _, code) = run(&["seq", "f", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let records: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let records = records.as_array().unwrap();
    assert_eq!(records.len(), 3);
    assert_eq!(records[2]["n"], 3);
    assert_eq!(records[2]["value"], "6");
    assert_eq!(records[2]["source"], "recurrence");
    assert_eq!(records[2]["sequence"], "f");

    let (stdout, _, _) = run(&["seq", "g", "--n", "2", "--format", "json"]);
    let records: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(records[0]["source"], "closed-form");
}

#[test]
fn seq_exit_codes() {
    let (_, stderr, code) = run(&["seq", "t", "--n", "0"]);
    assert_eq!(code, 2, "{stderr}");
    let (_, stderr, code) = run(&["seq", "t", "--n", "1001"]);
    assert_eq!(code, 3, "{stderr}");
    let (_, _, code) = run(&["seq", "nonsense", "--n", "3"]);
    assert_eq!(code, 2);
    // Closed forms reach much further than convolutions.
    let (stdout, _, code) = run(&["seq", "g", "--n", "2000"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 2001);
}

#[test]
fn table_nine_matches_published_cells() {
    let (stdout, _, code) = run(&["table", "--n", "9"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = stdout
        .lines()
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows.len(), 5);
    let expect = |label: &str, values: &[&str]| {
        let row = rows.iter().find(|r| r[0] == label).unwrap();
        assert_eq!(&row[1..], values, "{label}");
    };
    expect("n", &["1", "2", "3", "4", "5", "6", "7", "8", "9"]);
    expect(
        "t",
        &[
            "1", "5", "30", "229", "1938", "17530", "165852", "1621133", "16242474",
        ],
    );
    expect(
        "f",
        &[
            "1", "1", "6", "41", "330", "2882", "26604", "255313", "2521986",
        ],
    );
    expect(
        "u",
        &[
            "1", "3", "18", "135", "1134", "10206", "96228", "938223", "9382230",
        ],
    );
    expect(
        "g",
        &[
            "3", "9", "54", "405", "3402", "30618", "288684", "2814669", "28146690",
        ],
    );
}

#[test]
fn table_one_is_the_first_column() {
    let (stdout, _, code) = run(&["table", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n  1\nt  1\nf  1\nu  1\ng  3\n");
}

#[test]
fn truthtable_row_counts_follow_g() {
    let (stdout, _, code) = run(&["truthtable", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 4, "3 rows plus header");

    let (stdout, _, code) = run(&["truthtable", "--n", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 10, "9 rows plus header");
    assert_eq!(lines[0], "formula,assignment,value");
    assert!(lines.contains(&"(p1>p2),10,0"));
    assert!(lines.contains(&"(p1>p2),21,1"));
    assert!(lines.contains(&"(p1>p2),22,2"));

    let (stdout, _, code) = run(&["truthtable", "--n", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().skip(1).collect();
    assert_eq!(lines.len(), 54, "g_3 rows");
    let formulas: std::collections::BTreeSet<&str> =
        lines.iter().map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(formulas.len(), 2, "two bracketings of three variables");
    // Both bracketings send (1,0,2) to 1.
    assert!(lines.contains(&"((p1>p2)>p3),102,1"));
    assert!(lines.contains(&"(p1>(p2>p3)),102,1"));
}

#[test]
fn truthtable_json_is_valid() {
    let (stdout, _, code) = run(&["truthtable", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[0]["formula"], "(p1>p2)");
    assert_eq!(rows[0]["assignment"], "00");
    assert_eq!(rows[0]["value"], 1);
}

#[test]
fn truthtable_capacity() {
    let (_, stderr, code) = run(&["truthtable", "--n", "6"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("--limit"), "{stderr}");
    let (stdout, _, code) = run(&["truthtable", "--n", "6", "--limit", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 30_619, "g_6 rows plus header");
    let (_, _, code) = run(&["truthtable", "--n", "10", "--limit", "10"]);
    assert_eq!(code, 3);
}

#[test]
fn verify_reduced_run_passes() {
    let (stdout, _, code) = run(&[
        "verify",
        "--exhaustive",
        "2",
        "--identities",
        "10",
        "--asympt",
        "300",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert_eq!(stdout.matches("PASS ").count(), 12);
    assert_eq!(stdout.matches("FAIL ").count(), 0);
    assert!(stdout.trim_end().ends_with("all 12 checks passed"));
}

#[test]
fn verify_option_exit_codes() {
    let (_, _, code) = run(&["verify", "--exhaustive", "0"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["verify", "--exhaustive", "13"]);
    assert_eq!(code, 3);
}

#[test]
fn asympt_shows_exact_value_and_ratio() {
    let (stdout, _, code) = run(&["asympt", "g", "--n", "9"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("exact = 28146690"), "{stdout}");
    assert!(stdout.contains("ratio = 1.044"), "{stdout}");

    let (stdout, _, code) = run(&["asympt", "f", "--n", "500"]);
    assert_eq!(code, 0);
    let ratio: f64 = stdout
        .lines()
        .find_map(|l| l.split("ratio = ").nth(1))
        .unwrap()
        .parse()
        .unwrap();
    assert!((ratio - 1.0).abs() <= 0.01, "ratio {ratio}");
}

#[test]
fn asympt_compare2v_lists_the_three_drops() {
    let (stdout, _, code) = run(&["asympt", "compare2v"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("47.156%"));
    assert!(stdout.contains("61.501%"));
    assert!(stdout.contains("77.360%"));
}

#[test]
fn asympt_unknown_label() {
    let (_, stderr, code) = run(&["asympt", "nope"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown label"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["seq", "t", "--n", "100"][..],
        &["table", "--n", "12"][..],
        &["asympt", "u", "--n", "50,100"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn out_flag_matches_stdout() {
    let path = std::env::temp_dir().join("kleene-tables-out-flag-test.csv");
    let (stdout, _, code) = run(&["seq", "catalan", "--n", "12"]);
    assert_eq!(code, 0);
    let (_, _, code) = run(&[
        "seq",
        "catalan",
        "--n",
        "12",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, stdout);
    assert!(written.ends_with("12,58786\n"));
}
