//! Output records and their JSON, CSV and table renderings.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Number;

/// Bumped whenever a field is added, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

/// Exact JSON number for an arbitrarily large count.
pub fn number(n: &BigUint) -> Number {
    serde_json::from_str(&n.to_string()).expect("decimal digits form a JSON number")
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FactorRecord {
    pub factor: String,
    pub conjugacy_class_count: Number,
    pub z_class_count: Number,
    pub method: String,
}

/// Result of `count` and `classes`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub group: String,
    pub group_order: Number,
    pub conjugacy_class_count: Number,
    pub z_class_count: Number,
    pub method: String,
    pub per_factor: Vec<FactorRecord>,
    /// Each z-class as the labels of its conjugacy classes.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub z_classes: Option<Vec<Vec<String>>>,
}

/// One row of a `verify` run.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerifyRow {
    pub group: String,
    pub group_order: Number,
    /// How the expected counts were obtained: `formula`, `table`, or
    /// `oracle-on-roots` for type A, which has no closed form.
    pub reference_method: String,
    pub reference_conjugacy_classes: Number,
    pub reference_z_classes: Number,
    pub oracle_conjugacy_classes: Number,
    pub oracle_z_classes: Number,
    pub pass: bool,
    /// Z-classes present on only one side, for types with a structural
    /// grouping. Empty when the groupings agree.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub grouping_diff: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub rows: Vec<VerifyRow>,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn render_output(rec: &OutputRecord, format: Format) -> String {
    match format {
        Format::Json => json(rec),
        Format::Csv => match &rec.z_classes {
            None => {
                let mut rows: Vec<Vec<String>> = rec
                    .per_factor
                    .iter()
                    .map(|f| {
                        vec![
                            rec.group.clone(),
                            f.factor.clone(),
                            f.conjugacy_class_count.to_string(),
                            f.z_class_count.to_string(),
                            f.method.clone(),
                        ]
                    })
                    .collect();
                rows.push(vec![
                    rec.group.clone(),
                    "total".into(),
                    rec.conjugacy_class_count.to_string(),
                    rec.z_class_count.to_string(),
                    rec.method.clone(),
                ]);
                csv_rows(
                    &["group", "factor", "conjugacy_class_count", "z_class_count", "method"],
                    rows,
                )
            }
            Some(groups) => {
                let rows = groups
                    .iter()
                    .enumerate()
                    .flat_map(|(i, g)| {
                        g.iter()
                            .map(move |label| vec![rec.group.clone(), i.to_string(), label.clone()])
                    })
                    .collect();
                csv_rows(&["group", "z_class", "conjugacy_class"], rows)
            }
        },
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "group              {}", rec.group);
            let _ = writeln!(out, "order              {}", rec.group_order);
            let _ = writeln!(out, "conjugacy classes  {}", rec.conjugacy_class_count);
            let _ = writeln!(out, "z-classes          {}", rec.z_class_count);
            let _ = writeln!(out, "method             {}", rec.method);
            if rec.per_factor.len() > 1 {
                for f in &rec.per_factor {
                    let _ = writeln!(
                        out,
                        "  {:<16} {} classes, {} z-classes ({})",
                        f.factor, f.conjugacy_class_count, f.z_class_count, f.method
                    );
                }
            }
            if let Some(groups) = &rec.z_classes {
                for g in groups {
                    let _ = writeln!(out, "{{{}}}", g.join(", "));
                }
            }
            out
        }
    }
}

pub fn render_verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => csv_rows(
            &[
                "group",
                "group_order",
                "reference_method",
                "reference_conjugacy_classes",
                "reference_z_classes",
                "oracle_conjugacy_classes",
                "oracle_z_classes",
                "pass",
                "grouping_diff",
            ],
            report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.group.clone(),
                        r.group_order.to_string(),
                        r.reference_method.clone(),
                        r.reference_conjugacy_classes.to_string(),
                        r.reference_z_classes.to_string(),
                        r.oracle_conjugacy_classes.to_string(),
                        r.oracle_z_classes.to_string(),
                        r.pass.to_string(),
                        r.grouping_diff.join("; "),
                    ]
                })
                .collect(),
        ),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:<14} {:>10} {:<16} {:>9} {:>9} {:>9} {:>9}  result",
                "group", "order", "reference", "classes", "z", "oracle", "oracle z"
            );
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{:<14} {:>10} {:<16} {:>9} {:>9} {:>9} {:>9}  {}",
                    r.group,
                    r.group_order.to_string(),
                    r.reference_method,
                    r.reference_conjugacy_classes.to_string(),
                    r.reference_z_classes.to_string(),
                    r.oracle_conjugacy_classes.to_string(),
                    r.oracle_z_classes.to_string(),
                    if r.pass { "PASS" } else { "FAIL" }
                );
                for d in &r.grouping_diff {
                    let _ = writeln!(out, "    {d}");
                }
            }
            let _ = writeln!(out, "{}", if report.pass { "all passed" } else { "MISMATCH" });
            out
        }
    }
}
