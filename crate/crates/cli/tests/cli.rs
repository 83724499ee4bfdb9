use std::process::{Command, Output};

use serde_json::Value;

fn zclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zclass"))
        .args(args)
        .output()
        .expect("run zclass")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = zclass(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn count_b4_json() {
    let v = json(&["count", "B4", "--format", "json"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["group"], "B4");
    assert_eq!(v["group_order"], 384);
    assert_eq!(v["conjugacy_class_count"], 20);
    assert_eq!(v["z_class_count"], 13);
    assert_eq!(v["method"], "formula");
    assert!(v.get("z_classes").is_none());
}

#[test]
fn formula_and_oracle_agree_from_the_command_line() {
    for t in ["B3", "D4", "D6", "I2(12)"] {
        let f = json(&["count", t, "--method", "formula", "--format", "json"]);
        let o = json(&["count", t, "--method", "oracle", "--format", "json"]);
        assert_eq!(f["z_class_count"], o["z_class_count"], "{t}");
        assert_eq!(o["method"], "oracle");
    }
}

#[test]
fn e8_counts_come_from_the_table() {
    let v = json(&["count", "E8", "--format", "json"]);
    assert_eq!(v["z_class_count"], 65);
    assert_eq!(v["conjugacy_class_count"], 112);
    assert_eq!(v["group_order"], 696729600u64);
    assert_eq!(v["method"], "table");
}

#[test]
fn large_orders_stay_exact_in_json() {
    let v = json(&["count", "B40", "--format", "json"]);
    // 2^40 * 40! does not fit in a u64 or f64 mantissa
    let order = v["group_order"].to_string();
    assert!(order.starts_with("897108341211212142020325469195"), "{order}");
    assert_eq!(order.len(), 60);
}

#[test]
fn product_csv_has_total_row() {
    let o = zclass(&["count", "B3 x I2(8)", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "group,factor,conjugacy_class_count,z_class_count,method");
    assert_eq!(lines.len(), 4);
    assert!(lines[3].starts_with("B3 x I2(8),total,"));
    assert!(lines[3].ends_with(",20,formula"));
}

#[test]
fn classes_b2_table() {
    let o = zclass(&["classes", "B2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("z-classes          4\n"));
    let listed: Vec<&str> = text.lines().filter(|l| l.starts_with('{')).collect();
    assert_eq!(listed.len(), 4);
    assert!(listed.contains(&"{1~2, 1b~2}"));
}

#[test]
fn classes_d4_keeps_split_halves_apart() {
    let v = json(&["classes", "D4", "--format", "json"]);
    let groups: Vec<Vec<String>> = serde_json::from_value(v["z_classes"].clone()).unwrap();
    assert_eq!(groups.len(), 10);
    assert!(groups.contains(&vec!["4+".to_string()]));
    assert!(groups.contains(&vec!["4-".to_string()]));
}

#[test]
fn classes_oracle_listing_for_exceptional_types() {
    let v = json(&["classes", "H3", "--method", "oracle", "--format", "json"]);
    let groups: Vec<Vec<String>> = serde_json::from_value(v["z_classes"].clone()).unwrap();
    assert_eq!(groups.len(), 4);
    assert_eq!(groups.iter().map(Vec::len).sum::<usize>(), 10);
}

#[test]
fn verify_single_and_product() {
    let v = json(&["verify", "B2 x I2(3)", "--format", "json"]);
    assert_eq!(v["pass"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2]["reference_method"], "product");
    assert_eq!(rows[2]["oracle_z_classes"], 12);

    let o = zclass(&["verify", "H3"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("all passed\n"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| zclass(args).status.code();
    assert_eq!(code(&["count", "D4"]), Some(0));
    // parse and usage errors
    assert_eq!(code(&["count", "D1"]), Some(2));
    assert_eq!(code(&["count", "Q7"]), Some(2));
    assert_eq!(code(&["count", "A3", "--method", "formula"]), Some(2));
    assert_eq!(code(&["classes", "F4"]), Some(2));
    assert_eq!(code(&["verify"]), Some(2));
    // resource caps
    assert_eq!(code(&["count", "A9"]), Some(3));
    assert_eq!(code(&["count", "E7", "--method", "oracle"]), Some(3));
    assert_eq!(code(&["count", "E8", "--method", "oracle", "--allow-large"]), Some(3));
}

#[test]
fn cap_errors_suggest_allow_large() {
    let o = zclass(&["count", "E7", "--method", "oracle"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("--allow-large"), "{err}");
    let o = zclass(&["count", "E8", "--method", "oracle", "--allow-large"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("beyond the oracle"), "{err}");
}

#[test]
fn parse_errors_point_at_the_problem() {
    let o = zclass(&["count", "B3 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn cache_dir_is_used_and_reused() {
    let dir = std::env::temp_dir().join(format!("zclass-cli-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let d = dir.to_str().unwrap();
    let first = json(&["count", "F4", "--method", "oracle", "--cache-dir", d, "--format", "json"]);
    assert!(std::fs::read_dir(&dir).unwrap().count() >= 1);
    let second = json(&["count", "F4", "--method", "oracle", "--cache-dir", d, "--format", "json"]);
    assert_eq!(first, second);
    assert_eq!(first["z_class_count"], 16);
    std::fs::remove_dir_all(&dir).unwrap();
}
