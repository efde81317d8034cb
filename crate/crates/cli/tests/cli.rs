use std::process::{Command, Output};

use qstirling::qpoly::LaurentPoly;
use qstirling::stirling::{stirling_b, stirling_d};

fn qstirling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstirling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qstirling(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn table_csv_rows() {
    let csv = stdout(&["table", "stirling-b", "--n", "2", "--format", "csv"]);
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines[0], "n,k,poly");
    assert!(lines.contains(&"2,1,2 + q + q^2"));
    assert_eq!(
        stdout(&["table", "stirling-a", "--n", "0", "--format", "csv"]),
        "n,k,poly\n0,0,1\n"
    );
}

#[test]
fn table_json_rows() {
    let json = stdout(&["table", "eulerian-b", "--n", "1", "--from", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{"n": 1, "k": 0, "poly": "1"}, {"n": 1, "k": 1, "poly": "q"}])
    );
}

#[test]
fn csv_and_json_parse_back_to_the_engine_values() {
    for family in ["stirling-b", "stirling-d"] {
        let csv = stdout(&["table", family, "--n", "6", "--format", "csv"]);
        let json = stdout(&["table", family, "--n", "6", "--format", "json"]);
        let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
        let csv_rows: Vec<_> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), csv_rows.len());
        for (line, row) in csv_rows.iter().zip(&rows) {
            let mut it = line.splitn(3, ',');
            let n: i64 = it.next().unwrap().parse().unwrap();
            let k: i64 = it.next().unwrap().parse().unwrap();
            let from_csv: LaurentPoly = it.next().unwrap().parse().unwrap();
            let from_json: LaurentPoly = row["poly"].as_str().unwrap().parse().unwrap();
            let expected = if family == "stirling-b" {
                stirling_b(n, k)
            } else {
                stirling_d(n, k)
            };
            assert_eq!(from_csv, expected);
            assert_eq!(from_json, expected);
            assert_eq!((row["n"].as_i64(), row["k"].as_i64()), (Some(n), Some(k)));
        }
    }
}

#[test]
fn table_families_with_colors() {
    let text = stdout(&["table", "stirling-r", "--n", "1", "--r", "3"]);
    assert_eq!(text, "n=0 k=0  1\nn=1 k=0  1\nn=1 k=1  1\n");
    let csv = stdout(&["table", "eulerian-r", "--n", "1", "--r", "3", "--format", "csv"]);
    assert_eq!(csv, "n,k,poly\n0,0,1\n1,0,1\n1,1,q + q^2\n");
    assert_eq!(qstirling(&["table", "stirling-r", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        qstirling(&["table", "stirling-a", "--n", "2", "--r", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qstirling(&["table", "eulerian-b", "--n", "12"]).status.code(), Some(2));
    assert_eq!(qstirling(&["table", "bogus", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn stats_records() {
    let text = stdout(&["stats", "b", "--n", "1", "--format", "csv"]);
    assert_eq!(text, "element,des,fmaj,neg\n1,0,0,0\n-1,1,1,1\n");
    let text = stdout(&["stats", "a", "--n", "2", "--stats", "des,maj", "--format", "csv"]);
    assert_eq!(text, "element,des,maj\n1 2,0,0\n2 1,1,1\n");
    let json = stdout(&["stats", "colored", "--n", "1", "--r", "3", "--format", "json"]);
    let v: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    let fmaj: Vec<_> = v.iter().map(|r| r["fmaj_r"].as_u64().unwrap()).collect();
    assert_eq!(fmaj, [0, 1, 2]);
    assert_eq!(
        qstirling(&["stats", "a", "--n", "2", "--stats", "fmaj"]).status.code(),
        Some(2)
    );
    assert_eq!(qstirling(&["stats", "colored", "--n", "2"]).status.code(), Some(2));
    assert_eq!(qstirling(&["stats", "b", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = qstirling(&["verify", "thm-main-B", "--max-n", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).ends_with("4 checks, 0 failed\n"));
    let bad = qstirling(&["verify", "thm-main-B-corrupted", "--n", "2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("FAIL thm-main-B-corrupted n=2"));
    assert_eq!(qstirling(&["verify", "no-such-id"]).status.code(), Some(2));
    assert_eq!(qstirling(&["verify"]).status.code(), Some(2));
    assert_eq!(
        qstirling(&["verify", "thm-main-r", "--max-n", "9", "--r", "3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(qstirling(&["verify", "a-q", "--order", "0"]).status.code(), Some(2));
}

#[test]
fn verify_ids_flag_and_json_reports() {
    let json = stdout(&[
        "verify",
        "--ids",
        "cg-relation,basis-B-q",
        "--max-n",
        "2",
        "--format",
        "json",
    ]);
    let reports: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(reports.len(), 6);
    for r in &reports {
        let keys: Vec<_> = r.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["equal", "id", "lhs", "params", "rhs", "witness"]);
        assert_eq!(r["equal"], true);
        assert!(r["witness"].is_null());
    }
    assert_eq!(reports[0]["id"], "cg-relation");
    assert_eq!(reports[5]["id"], "basis-B-q");
}

#[test]
fn verify_all_small_grid() {
    let out = qstirling(&["verify", "all", "--max-n", "4", "--r", "1,2,3", "--order", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let with_controls = qstirling(&[
        "verify",
        "all",
        "--max-n",
        "2",
        "--include-controls",
        "--format",
        "json",
    ]);
    assert_eq!(with_controls.status.code(), Some(1));
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&with_controls.stdout).unwrap();
    for r in reports {
        let id = r["id"].as_str().unwrap();
        assert_eq!(r["equal"].as_bool().unwrap(), !id.ends_with("-corrupted"), "{id}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "all", "--max-n", "3", "--format", "csv"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["table", "bfmaj", "--n", "5", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn list_names_every_entry() {
    let text = stdout(&["list"]);
    for e in qstirling::identities::entries() {
        assert!(text.contains(e.id), "{}", e.id);
    }
}
