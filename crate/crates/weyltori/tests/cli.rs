//! End-to-end tests of the weyltori binary: documented invocations,
//! output schemas, byte determinism, exit codes, and the on-disk
//! character-table cache.

use std::path::Path;
use std::process::{Command, Output};

use weyltori::charpoly::CharacterPolynomial;
use weyltori::rational::{int_pow, render_rational, Integer, Rational};
use weyltori::tori::lehrer_graded_coefficients;
use weyltori::weyl::GroupKind;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weyltori"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf-8 output")
}

/// Parses the uniform JSON table: {schema_version, title, columns, rows}.
fn parse_table(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(stdout_of(out)).expect("valid JSON table")
}

fn rows(table: &serde_json::Value) -> &Vec<serde_json::Value> {
    table["rows"].as_array().expect("rows array")
}

fn cell<'a>(table: &'a serde_json::Value, row: usize, col: usize) -> &'a str {
    rows(table)[row][col].as_str().expect("string cell")
}

#[test]
fn classes_of_rank_two_sum_to_group_order() {
    let table = parse_table(&run(&["classes", "--n", "2", "--kind", "bc"]));
    assert_eq!(table["schema_version"], 1);
    assert_eq!(
        table["columns"],
        serde_json::json!(["index", "label", "size", "centralizer_order"])
    );
    assert_eq!(rows(&table).len(), 5);
    let total: i64 = (0..5)
        .map(|r| cell(&table, r, 2).parse::<i64>().unwrap())
        .sum();
    assert_eq!(total, 8);

    // Rank zero is the trivial group: exactly one class.
    let empty = parse_table(&run(&["classes", "--n", "0"]));
    assert_eq!(rows(&empty).len(), 1);
}

#[test]
fn classes_csv_uses_header_and_line_feeds() {
    let out = run(&["classes", "--n", "3", "--kind", "a", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("index,label,size,centralizer_order\n"));
    assert!(!text.contains('\r'), "CSV must use bare LF line endings");
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let records: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(records.len(), 3, "three partitions of 3");
    let sizes: i64 = records.iter().map(|r| r[2].parse::<i64>().unwrap()).sum();
    assert_eq!(sizes, 6);
}

#[test]
fn coinv_multiplicities_match_the_library() {
    let table = parse_table(&run(&["coinv", "--label", "(2),(1)", "--n", "3"]));
    // Default dmax is the top degree n² = 9.
    assert_eq!(rows(&table).len(), 10);
    let multiplicities: Vec<&str> = (0..10).map(|d| cell(&table, d, 1)).collect();
    assert_eq!(
        multiplicities,
        ["0", "1", "0", "1", "0", "1", "0", "0", "0", "0"]
    );
}

#[test]
fn stable_multiplicity_rows_match_reference_families() {
    let odd = parse_table(&run(&["stable-mult", "--family", "(n-1),(1)", "--dmax", "15"]));
    assert_eq!(rows(&odd).len(), 16);
    for d in 0..16 {
        let want = if d % 2 == 1 { "1" } else { "0" };
        assert_eq!(cell(&odd, d, 1), want, "degree {d}");
    }

    let pairs = parse_table(&run(&[
        "stable-mult",
        "--family",
        "(n-2),(1,1)",
        "--dmax",
        "8",
    ]));
    let values: Vec<&str> = (0..9).map(|d| cell(&pairs, d, 1)).collect();
    assert_eq!(values, ["0", "0", "0", "0", "1", "0", "1", "0", "2"]);
}

#[test]
fn torus_statistics_match_known_values() {
    let total = parse_table(&run(&["tori", "--p", "1", "--n", "3", "--q", "2"]));
    assert_eq!(
        total["columns"],
        serde_json::json!(["n", "kind", "q", "polynomial", "value", "total", "expectation"])
    );
    assert_eq!(cell(&total, 0, 4), "262144");

    let split = parse_table(&run(&[
        "tori",
        "--p",
        "X1",
        "--n",
        "2",
        "--q",
        "2",
        "--normalized",
    ]));
    assert_eq!(cell(&split, 0, 4), "15/16");
    assert_eq!(cell(&split, 0, 5), "240");

    let gl = parse_table(&run(&[
        "tori", "--p", "X1", "--n", "2", "--q", "3", "--kind", "a", "--normalized",
    ]));
    assert_eq!(cell(&gl, 0, 4), "4/3");
}

#[test]
fn formal_q_mode_prints_the_graded_coefficients() {
    let table = parse_table(&run(&["tori", "--p", "X1 + Y1", "--n", "2", "--q", "formal"]));
    let p = CharacterPolynomial::parse("X1 + Y1").unwrap();
    let series = lehrer_graded_coefficients(&p, 2, GroupKind::Bc).unwrap();
    for (d, row) in rows(&table).iter().enumerate() {
        assert_eq!(
            row[1].as_str().unwrap(),
            render_rational(&series.coefficient(d)),
            "coefficient of q^-{d}"
        );
    }
}

#[test]
fn limit_partial_sum_is_exact_after_forty_degrees() {
    let table = parse_table(&run(&[
        "tori-limit",
        "--p",
        "X2 - Y2",
        "--dmax",
        "40",
        "--q",
        "3",
    ]));
    assert_eq!(rows(&table).len(), 41);
    // Σ_{k=0}^{9} (1/2)·3^{-(2+4k)} = 9(3^40 − 1) / (160·3^40).
    let p40 = int_pow(&Integer::from(3), 40);
    let expected = Rational::new(
        Integer::from(9) * (&p40 - Integer::from(1)),
        Integer::from(160) * &p40,
    );
    assert_eq!(cell(&table, 40, 4), render_rational(&expected));
    // Every coefficient was confirmed at a higher rank.
    for d in 0..=40 {
        assert_eq!(cell(&table, d, 3), "true", "stabilized flag at degree {d}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["chartable", "--n", "3", "--format", "json"],
        vec!["classes", "--n", "4", "--format", "csv"],
        vec!["paper-tables", "--which", "2", "--format", "markdown"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}

#[test]
fn exit_codes_separate_usage_consistency_and_budget() {
    // Unknown flag: usage error.
    assert_eq!(run(&["classes", "--n", "2", "--nope"]).status.code(), Some(1));
    // Malformed character polynomial: validation error.
    assert_eq!(
        run(&["tori", "--p", "X1 +", "--n", "2", "--q", "2"]).status.code(),
        Some(1)
    );
    // Label size inconsistent with rank: validation error.
    assert_eq!(
        run(&["coinv", "--label", "(2),(1)", "--n", "4"]).status.code(),
        Some(1)
    );
    // Unknown reference table: validation error.
    assert_eq!(run(&["paper-tables", "--which", "3"]).status.code(), Some(1));
    // q below 2 is rejected.
    assert_eq!(
        run(&["tori", "--p", "1", "--n", "2", "--q", "1"]).status.code(),
        Some(1)
    );
    // Explicit budget cap: exit 3.
    assert_eq!(
        run(&["chartable", "--n", "4", "--budget", "7"]).status.code(),
        Some(3)
    );
    // Default ceiling on giant tables: exit 3.
    assert_eq!(run(&["chartable", "--n", "11"]).status.code(), Some(3));
    // Help is a success.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn cache_directory_round_trips_and_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache_flag = dir.path().to_str().unwrap();

    let first = run(&["chartable", "--n", "3", "--cache-dir", cache_flag]);
    assert!(first.status.success());
    let cache_file = dir.path().join("chartable-v1-bc-3.json");
    assert!(cache_file.exists(), "cache file written on first run");

    // A warm cache must serve the identical bytes.
    let warm = run(&["chartable", "--n", "3", "--cache-dir", cache_flag]);
    assert_eq!(first.stdout, warm.stdout);

    // Corruption is detected and silently repaired by recomputation.
    std::fs::write(&cache_file, "{this is not json").unwrap();
    let repaired = run(&["chartable", "--n", "3", "--cache-dir", cache_flag]);
    assert!(repaired.status.success());
    assert_eq!(first.stdout, repaired.stdout);
    let rewritten = std::fs::read_to_string(&cache_file).unwrap();
    assert!(rewritten.starts_with('{') && rewritten.contains("\"values\""));
}

#[test]
fn cache_environment_variable_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["chartable", "--n", "2"])
        .env("WEYLTORI_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(
        Path::new(&dir.path().join("chartable-v1-bc-2.json")).exists(),
        "cache file written under $WEYLTORI_CACHE"
    );
}

#[test]
fn reference_tables_rederive_cleanly() {
    let one = parse_table(&run(&["paper-tables", "--which", "1"]));
    assert_eq!(rows(&one).len(), 75, "5 statistics x 5 ranks x 3 prime powers");
    let two = parse_table(&run(&["paper-tables", "--which", "2"]));
    assert_eq!(rows(&two).len(), 7, "seven stable families");
    let all = parse_table(&run(&["paper-tables"]));
    assert_eq!(rows(&all).len(), 82);
    for row in rows(&all) {
        assert_eq!(row.as_array().unwrap().last().unwrap(), "ok");
    }
}
