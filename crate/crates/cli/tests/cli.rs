use std::process::{Command, Output};

use adnil_cli::{IdealRecord, Report};
use serde_json::Value;

fn adnil(args: &[&str]) -> Output {
    adnil_env(args, &[])
}

fn adnil_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_adnil"));
    cmd.args(args).env_remove("ADNIL_MAX_RANK");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json_report(args: &[&str]) -> Report {
    let out = adnil(&[args, &["--json"]].concat());
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid report JSON")
}

fn footer(r: &Report, name: &str) -> Value {
    r.footer.iter().find(|f| f.name == name).map(|f| f.value.clone()).unwrap()
}

#[test]
fn enumerate_row_counts() {
    assert_eq!(json_report(&["enumerate", "G2"]).rows.len(), 8);
    assert_eq!(json_report(&["enumerate", "A4", "--minimax"]).rows.len(), 9);
    assert_eq!(json_report(&["enumerate", "C2"]).rows.len(), 6);
    assert_eq!(json_report(&["enumerate", "sp4"]).rows.len(), 6);
    let abelian = json_report(&["enumerate", "A3", "--abelian", "--strictly-positive"]);
    assert_eq!(footer(&abelian, "ideals"), 14);
    assert!(abelian.rows.iter().all(|r| r[6] == Value::Bool(true) && r[7] == Value::Bool(true)));
}

#[test]
fn enumerate_json_roundtrips() {
    let out = adnil(&["enumerate", "B3", "--json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap();
    let mut again = serde_json::to_string_pretty(&report).unwrap();
    again.push('\n');
    assert_eq!(again, text);
    for row in &report.rows {
        let rec = IdealRecord::from_row(row).unwrap();
        let back = serde_json::to_value(&rec).unwrap();
        for (col, v) in report.columns.iter().zip(row) {
            assert_eq!(&back[col.as_str()], v);
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a = adnil(&["enumerate", "D4", "--tsv"]);
    let b = adnil(&["enumerate", "D4", "--tsv", "--jobs", "2"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v1 = adnil(&["verify", "affine", "--type", "A2", "--seed", "7", "--words", "50", "--json"]);
    let v2 = adnil(&["verify", "affine", "--type", "A2", "--seed", "7", "--words", "50", "--json", "--jobs", "3"]);
    assert_eq!(v1.stdout, v2.stdout);
}

#[test]
fn table7_matches() {
    let out = adnil(&["table7", "--tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let g2 = text.lines().find(|l| l.starts_with("G2\t")).unwrap();
    assert_eq!(g2, "G2\tG2\t3\t3\t2\t2\t2\tok");
    let f4 = text.lines().find(|l| l.starts_with("F4\t")).unwrap();
    assert_eq!(f4, "F4\tF4\t17\t17\t19\t19\t19\tok");
}

fn count_values(ty: &str) -> Vec<(String, String, String)> {
    json_report(&["count", ty])
        .rows
        .iter()
        .map(|r| (r[0].as_str().unwrap().into(), r[1].as_str().unwrap().into(), r[2].as_str().unwrap().into()))
        .collect()
}

#[test]
fn count_reports() {
    let e6 = count_values("E6");
    assert_eq!(e6[0], ("#AD{b}".into(), "gf".into(), "111".into()));
    assert_eq!(e6[1], ("#AD0{b}".into(), "gf".into(), "53".into()));
    assert_eq!(count_values("B5"), count_values("C5"));
    let e8 = json_report(&["count", "E8"]);
    assert_eq!(footer(&e8, "reference"), "no reference");
    assert_eq!(footer(&e8, "methods agree"), true);
}

#[test]
fn rank_cap_comes_from_environment() {
    let plain = json_report(&["count", "A10"]);
    assert!(plain.rows.iter().all(|r| r[1] != "enumeration"));
    let out = adnil_env(&["count", "A10", "--json"], &[("ADNIL_MAX_RANK", "10")]);
    let raised: Report = serde_json::from_slice(&out.stdout).unwrap();
    let enumerated: Vec<&Vec<Value>> = raised.rows.iter().filter(|r| r[1] == "enumeration").collect();
    assert_eq!(enumerated[0][2], "2188");
    assert_eq!(adnil(&["enumerate", "A10"]).status.code(), Some(2));
    assert_eq!(adnil_env(&["count", "A2"], &[("ADNIL_MAX_RANK", "many")]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "identities", "--n-max", "12"][..],
        &["verify", "shi", "--type", "G2"],
        &["verify", "normalizer-oracles", "--type", "B2"],
        &["verify", "counting", "--type", "C3"],
        &["verify", "typeAC", "--type", "A3"],
    ] {
        let r = json_report(args);
        assert_eq!(footer(&r, "result"), "pass", "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(adnil(&["enumerate", "Q7"]).status.code(), Some(2));
    assert_eq!(adnil(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(adnil(&["verify", "typeAC", "--type", "D4"]).status.code(), Some(2));
    assert_eq!(adnil(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(adnil(&["enumerate", "A2", "--json", "--tsv"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("adnil-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2.tsv");
    let out = adnil(&["enumerate", "G2", "--tsv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("generators\tweight\tlevi"));
    assert!(text.contains("# ideals\t8"));
    std::fs::remove_dir_all(dir).unwrap();
}
