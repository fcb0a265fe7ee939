//! Output rendering: JSON values and plain-text grids.

use serde_json::{json, Value};

use forceproof::{AlgebraSignature, RelationReport, ViolationReport};

pub fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable value"));
}

/// Labeled grid for a dense table, rows over the domain, columns over the
/// codomain.
pub fn grid(domain: &AlgebraSignature, codomain: &AlgebraSignature, values: &[f64]) -> String {
    let cols = codomain.element_count();
    let labels: Vec<String> = (0..cols).map(|b| codomain.label(b)).collect();
    let row_labels: Vec<String> = (0..domain.element_count()).map(|a| domain.label(a)).collect();
    let first_width = row_labels.iter().map(String::len).max().unwrap_or(1).max(4);
    let width = labels.iter().map(String::len).max().unwrap_or(4).max(10);

    let mut out = format!("{:>first_width$}", "");
    for label in &labels {
        out.push_str(&format!(" {label:>width$}"));
    }
    out.push('\n');
    for (a, row_label) in row_labels.iter().enumerate() {
        out.push_str(&format!("{row_label:>first_width$}"));
        for b in 0..cols {
            out.push_str(&format!(" {:>width$.6}", values[a * cols + b]));
        }
        out.push('\n');
    }
    out
}

/// Violations as structured JSON entries with atom-name witnesses.
pub fn violations_json(report: &ViolationReport) -> Vec<Value> {
    use forceproof::Violation::*;
    let domain = report.domain();
    let codomain = report.codomain();
    let d = |bits: usize| json!(domain.atom_names_of(bits));
    let c = |bits: usize| json!(codomain.atom_names_of(bits));
    report
        .iter()
        .map(|v| {
            let mut entry = match *v {
                AxiomI { b, value } => json!({"b": c(b), "value": value}),
                AxiomII { a, value } => json!({"a": d(a), "value": value}),
                AxiomIII { value } => json!({"value": value}),
                AxiomIV { a_low, a_high, b, low_value, high_value } => json!({
                    "a_low": d(a_low), "a_high": d(a_high), "b": c(b),
                    "low_value": low_value, "high_value": high_value,
                }),
                AxiomV { a, b_low, b_high, low_value, high_value } => json!({
                    "a": d(a), "b_low": c(b_low), "b_high": c(b_high),
                    "low_value": low_value, "high_value": high_value,
                }),
                Range { a, b, value } => json!({"a": d(a), "b": c(b), "value": value}),
            };
            let obj = entry.as_object_mut().expect("object entry");
            obj.insert("axiom".into(), json!(v.axiom_label()));
            obj.insert("description".into(), json!(report.describe(v)));
            entry
        })
        .collect()
}

pub fn relation_violations_text(report: &RelationReport) -> Vec<String> {
    report.iter().map(|v| report.describe(v)).collect()
}
