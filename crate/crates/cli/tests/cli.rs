use std::process::{Command, Output};

fn censym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_censym"))
        .args(args)
        .env_remove("CENSYM_MAX_ORACLE_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn phi_worked_example() {
    let out = censym(&["phi", "11 16 15 9 7 14 13 12 5 4 3 10 8 2 1 6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "UUUUUUDDDUUDUDDD\n");
}

#[test]
fn phi_inverse_worked_example() {
    let out = censym(&["phi-inv", "UUUDDUUUUUUDDUUD"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "14 16 8 15 13 7 6 12 5 11 10 4 2 9 1 3\n");
}

#[test]
fn output_round_trips_through_text_forms() {
    let path = stdout(&censym(&["phi", "3,4,1,2"]));
    let back = stdout(&censym(&["phi-inv", path.trim()]));
    assert_eq!(back.trim(), "3 4 1 2");
}

#[test]
fn invalid_data_exits_three() {
    let out = censym(&["phi", "1 3 2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("not centrosymmetric of even length"));
    assert_eq!(censym(&["phi", "1 2 2"]).status.code(), Some(3));
    assert_eq!(censym(&["phi", "1 2 3 4"]).status.code(), Some(3));
    assert_eq!(censym(&["phi-inv", "UDDU"]).status.code(), Some(3));
    assert_eq!(censym(&["perm-stats", "x y"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(censym(&["nonsense"]).status.code(), Some(2));
    assert_eq!(censym(&["table", "--family", "z", "--max-n", "2"]).status.code(), Some(2));
    assert_eq!(censym(&["enumerate", "--len", "20", "--centro"]).status.code(), Some(2));
    assert_eq!(censym(&["enumerate", "--len", "4", "--subclass", "k"]).status.code(), Some(2));
    assert_eq!(censym(&["verify", "--max-n", "8"]).status.code(), Some(2));
}

#[test]
fn t_table_csv() {
    let out = censym(&["table", "--family", "t", "--max-n", "5", "--source", "recurrence", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n\\d,0,1,2,3,4,5,6,7,8,9");
    assert_eq!(lines[6], "5,0,0,0,0,10,50,85,75,31,1");
    assert_eq!(lines[4], "3,0,0,3,9,7,1,0,0,0,0");
}

#[test]
fn table_sources_agree() {
    let args = |source| ["table", "--family", "k", "--max-n", "5", "--source", source, "--format", "json"];
    let recurrence = stdout(&censym(&args("recurrence")));
    let series = stdout(&censym(&args("series")));
    let oracle = stdout(&censym(&args("oracle")));
    let rows = |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap()["rows"].clone();
    assert_eq!(rows(&recurrence), rows(&series));
    assert_eq!(rows(&recurrence), rows(&oracle));
}

#[test]
fn series_json_uses_decimal_strings() {
    let out = censym(&["series", "--name", "T", "--order", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["name"], "T");
    assert_eq!(value["order"], 2);
    assert_eq!(value["coeffs"], serde_json::json!([["1"], ["1", "1"], ["0", "2", "3", "1"]]));
}

#[test]
fn perm_stats_json() {
    let out = censym(&["perm-stats", "11 16 15 9 7 14 13 12 5 4 3 10 8 2 1 6", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["n"], 16);
    assert_eq!(value["centrosymmetric"], true);
    assert_eq!(value["des"], 11);
    assert_eq!(value["tiny_minima"], serde_json::json!([7]));
    assert_eq!(value["ltr_minima"], serde_json::json!([11, 9, 7, 5, 4, 3, 2, 1]));
}

#[test]
fn enumerate_formats() {
    let lines = stdout(&censym(&["enumerate", "--len", "4", "--centro", "--avoid", "123"]));
    assert_eq!(lines, "2 1 4 3\n2 4 1 3\n3 1 4 2\n3 4 1 2\n4 2 3 1\n4 3 2 1\n");
    let csv = stdout(&censym(&["enumerate", "--len", "3", "--avoid", "132", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 5);
    assert!(csv.starts_with("1,2,3\n"));
    let json = stdout(&censym(&["enumerate", "--len", "4", "--centro", "--avoid", "123", "--subclass", "k", "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["members"], serde_json::json!([[3, 4, 1, 2], [4, 3, 2, 1]]));
}

#[test]
fn verify_suites() {
    let trivial = censym(&["verify", "--suite", "all", "--max-n", "0"]);
    assert_eq!(trivial.status.code(), Some(0));
    let series = censym(&["verify", "--suite", "series", "--max-n", "5"]);
    assert_eq!(series.status.code(), Some(0));
    let text = stdout(&series);
    assert!(text.contains("ok    [series] t table"));
    assert!(text.contains("known discrepancies"));
    let bijection = censym(&["verify", "--suite", "bijection", "--max-n", "7"]);
    assert_eq!(bijection.status.code(), Some(0), "{}", stdout(&bijection));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--len", "8", "--centro", "--avoid", "123", "--format", "json"];
    assert_eq!(censym(&args).stdout, censym(&args).stdout);
}
