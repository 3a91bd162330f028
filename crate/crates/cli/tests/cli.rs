use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn klsf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klsf"))
        .args(args)
        .env_remove("KLSF_ORACLE_MAX")
        .output()
        .expect("binary runs")
}

fn klsf_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klsf"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "schema", name]
        .iter()
        .collect();
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn json_output(args: &[&str], schema_name: &str) -> Value {
    let o = klsf(args);
    assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let validator = schema(schema_name);
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    v
}

#[test]
fn mu_reports() {
    let o = klsf(&["mu", "9", "5", "2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("mu = 2"));
    assert!(text.contains("best divisor 9"));
    assert!(text.contains("1 <= mu <= 3"));

    let v = json_output(&["mu", "10", "2", "1", "--json"], "mu.schema.json");
    assert_eq!(v["mu"], 5);
    assert_eq!(v["best_divisor"], 2);

    let v = json_output(&["mu", "12", "13", "1", "--json"], "mu.schema.json");
    assert_eq!(v["mu"], 0);

    assert_eq!(code(&klsf(&["mu", "9", "2", "5"])), 2);
    assert_eq!(code(&klsf(&["mu", "0", "2", "1"])), 2);
    assert_eq!(code(&klsf(&["mu", "9", "x", "1"])), 2);
}

#[test]
fn construct_outputs() {
    let v = json_output(&["construct", "9", "5", "2", "--json"], "witness.schema.json");
    assert_eq!(v["set"], serde_json::json!([1, 2]));
    assert_eq!(v["certificate"]["C"], 1);
    assert_eq!(v["certificate"]["a"], 1);

    let v = json_output(&["construct", "10", "2", "1", "--json"], "witness.schema.json");
    assert_eq!(v["size"], 5);

    let o = klsf(&["construct", "12", "13", "1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("mu = 0"));
}

#[test]
fn verify_verdicts() {
    let o = klsf(&["verify", "9", "5", "2", "[1,2]", "--complete"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "SUMFREE COMPLETE"));
    let o = klsf(&["verify", "5", "2", "1", "[1]", "--complete"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "SUMFREE INCOMPLETE"));
    let o = klsf(&["verify", "9", "5", "2", "[0]"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains(" 0 "));
    let o = klsf(&["verify", "13", "2", "1", "[4, 6, 7, 9]"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "SUMFREE"));
    assert_eq!(code(&klsf(&["verify", "9", "5", "2", "1,2"])), 2);
    assert_eq!(code(&klsf(&["verify", "9", "5", "2", "[1,9]"])), 2);
}

#[test]
fn construct_then_verify_round_trip() {
    for n in 1..=40u64 {
        for (k, l) in [(2u64, 1u64), (3, 1), (3, 2), (4, 1), (4, 3), (5, 2), (6, 1)] {
            let args = [n.to_string(), k.to_string(), l.to_string()];
            let mut c = vec!["construct"];
            c.extend(args.iter().map(String::as_str));
            c.push("--json");
            let o = klsf(&c);
            if (k - l) % n == 0 {
                assert_eq!(code(&o), 3);
                continue;
            }
            assert_eq!(code(&o), 0, "construct {args:?}");
            let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
            let literal = v["set"].to_string();
            let mut check = vec!["verify"];
            check.extend(args.iter().map(String::as_str));
            check.push(&literal);
            assert_eq!(code(&klsf(&check)), 0, "verify {args:?} {literal}");
        }
    }
}

#[test]
fn survey_rows_and_determinism() {
    let o = klsf(&["survey", "1..24", "2..5", "1..3", "--oracle-max", "24"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let single = stdout(&o);
    let mut lines = single.lines();
    assert_eq!(lines.next(), Some("n,k,l,mu_formula,lower5,upper5,mu_oracle,agree"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    assert_eq!(rows.len(), 24 * 9);

    let o = klsf(&["survey", "1..24", "2..5", "1..3", "--oracle-max", "24", "--workers", "4"]);
    assert_eq!(stdout(&o), single);

    let o = klsf(&["survey", "9..9", "5..5", "2..2"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("9,5,2,2,1,3,,true"));

    assert_eq!(code(&klsf(&["survey", "1..5", "1..2", "2..3"])), 2);
    assert_eq!(code(&klsf(&["survey", "5..1", "2..3", "1..1"])), 2);
    assert_eq!(code(&klsf(&["survey", "a..b", "2..3", "1..1"])), 2);
}

#[test]
fn survey_respects_cap_and_writes_file() {
    let dir = std::env::temp_dir().join(format!("klsf-survey-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.csv");
    let o = klsf_env(
        &["survey", "8..12", "3..3", "1..1", "--oracle-max", "40", "--out", path.to_str().unwrap()],
        "KLSF_ORACLE_MAX",
        "10",
    );
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|r| r.split(',').collect()).collect();
    let oracle_cells: Vec<&str> = rows.iter().map(|r| r[6]).collect();
    let formula_cells: Vec<&str> = rows.iter().map(|r| r[3]).collect();
    assert_eq!(oracle_cells[..3], formula_cells[..3]);
    assert_eq!(oracle_cells[3..], ["", ""]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn ptuples_reports() {
    let o = klsf(&["ptuples", "7", "4", "--oracle"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("formula: 6"));
    assert!(text.contains("oracle: 6"));
    assert!(text.contains("dilations of the middle set: true"));
    let v = json_output(&["ptuples", "7", "4", "--oracle", "--json"], "ptuples.schema.json");
    assert_eq!(v["all_dilations"], true);
    let v = json_output(&["ptuples", "7", "2", "--json"], "ptuples.schema.json");
    assert_eq!(v["formula"], 0);
    assert_eq!(code(&klsf(&["ptuples", "8", "3"])), 2);
    assert_eq!(code(&klsf(&["ptuples", "7", "8"])), 2);
}

#[test]
fn oracle_runs_and_caps() {
    let v = json_output(&["oracle", "10", "2", "1", "--all", "--json"], "oracle.schema.json");
    assert_eq!(v["optimum"], 5);
    assert!(v["witnesses"].as_array().unwrap().contains(&serde_json::json!([1, 3, 5, 7, 9])));
    assert_eq!(code(&klsf(&["oracle", "41", "2", "1"])), 4);
    let o = klsf_env(&["oracle", "42", "2", "1"], "KLSF_ORACLE_MAX", "45");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("optimum: 21"));
    assert_eq!(code(&klsf_env(&["oracle", "5", "2", "1"], "KLSF_ORACLE_MAX", "x")), 2);
}

#[test]
fn group_bounds() {
    let v = json_output(&["group", "[2,4]", "2", "1", "--oracle", "--json"], "group.schema.json");
    assert_eq!(v["group"], serde_json::json!([2, 4]));
    assert_eq!(v["bound"], 4);
    assert_eq!(v["oracle"], 4);
    assert_eq!(v["exactness_known"], true);
    let v = json_output(&["group", "[5,5]", "2", "1", "--json"], "group.schema.json");
    assert_eq!(v["bound"], 10);
    let v = json_output(&["group", "[]", "2", "1", "--json"], "group.schema.json");
    assert_eq!(v["bound"], 0);
    assert_eq!(code(&klsf(&["group", "[4,2]", "2", "1"])), 2);
}
