//! JSON renderings of the reports, with floats cut to 12 significant digits.

use serde_json::{json, Map, Value};

use crate::diagnostics::{Classification, ObstructionSequence, ProductAmenability, ScanReport};
use crate::dual::{DualTable, FusionVector};
use crate::line::LineViolationReport;
use crate::weights::ViolationReport;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to 12 significant digits; non-finite values are kept as-is.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

/// A rounded number, or a string for ±inf and NaN (JSON has no literal for them).
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round_sig(x))
    } else {
        json!(x.to_string())
    }
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn fusion_json(dual: &DualTable, v: &FusionVector) -> Value {
    let mut map = Map::new();
    for (label, m) in v.iter() {
        map.insert(dual.format_label(label), json!(m));
    }
    Value::Object(map)
}

pub fn violations_json(dual: &DualTable, report: &ViolationReport<f64>) -> Value {
    let rows: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "left": dual.format_label(&v.left),
                "right": dual.format_label(&v.right),
                "output": dual.format_label(&v.output),
                "ratio": num(v.ratio),
            })
        })
        .collect();
    json!({
        "truncation": report.truncation,
        "checked_pairs": report.checked_pairs,
        "valid": report.is_valid(),
        "violations": rows,
    })
}

pub fn scan_json(dual: &DualTable, report: &ScanReport<f64>) -> Value {
    let limits = match &report.closed_form_limits {
        Some(l) => json!({ "rows": nums(&l.rows), "cols": nums(&l.cols) }),
        None => Value::Null,
    };
    json!({
        "truncation": report.truncation,
        "labels": report.labels.iter().map(|l| dual.format_label(l)).collect::<Vec<_>>(),
        "tail_start": report.tail_start,
        "threshold": num(report.threshold),
        "theta": report.theta.iter().map(|row| nums(row)).collect::<Vec<_>>(),
        "row_tail_sup": nums(&report.row_tail_sup),
        "col_tail_sup": nums(&report.col_tail_sup),
        "closed_form_limits": limits,
        "verdict": report.verdict.as_str(),
    })
}

pub fn product_json(report: &ProductAmenability<f64>) -> Value {
    json!({
        "factors": nums(&report.factors),
        "partial_products": nums(&report.partial_products),
        "estimate": num(report.estimate),
        "terms": report.factors.len(),
        "settled_from": report.settled_from,
        "exhausted": report.exhausted,
        "verdict": report.verdict.as_str(),
    })
}

pub fn obstruction_json(dual: &DualTable, seq: &ObstructionSequence<f64>) -> Value {
    json!({
        "label": dual.format_label(&seq.label),
        "n_max": seq.values.len(),
        "values": nums(&seq.values),
        "running_min": nums(&seq.running_min),
        "min": num(seq.min()),
    })
}

pub fn classification_json(c: &Classification<f64>) -> Value {
    let mut v = json!({ "class": c.name(), "exact": c.is_exact() });
    let obj = v.as_object_mut().expect("object");
    match c {
        Classification::Bounded { sup, .. } => {
            obj.insert("sup".into(), num(*sup));
        }
        Classification::Divergent { frontier_min, .. } => {
            obj.insert("frontier_min".into(), num(*frontier_min));
        }
        Classification::Inconclusive { sup, frontier_min } => {
            obj.insert("sup".into(), num(*sup));
            obj.insert("frontier_min".into(), num(*frontier_min));
        }
    }
    v
}

pub fn line_violations_json(report: &LineViolationReport<f64>) -> Value {
    json!({
        "checked_pairs": report.checked_pairs,
        "extrapolated": report.extrapolated,
        "valid": report.is_valid(),
        "violations": report
            .violations
            .iter()
            .map(|v| json!({ "x": num(v.x), "y": num(v.y), "ratio": num(v.ratio) }))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(2.0 / 3.0 * 1e-20), 6.66666666667e-21);
        assert_eq!(round_sig(3.0), 3.0);
        assert_eq!(round_sig(-0.0), -0.0);
        assert_eq!(num(f64::INFINITY), json!("inf"));
    }

    #[test]
    fn rounding_is_idempotent() {
        for x in [std::f64::consts::PI, 1e300, 7.123456789012345e-5] {
            assert_eq!(round_sig(round_sig(x)), round_sig(x));
        }
    }

    #[test]
    fn fusion_rendering() {
        let s3 = DualTable::s3();
        let v = s3.fuse(&crate::IrrepLabel::Finite(2), &crate::IrrepLabel::Finite(2)).unwrap();
        assert_eq!(fusion_json(&s3, &v).to_string(), r#"{"sign":1,"std":1,"trivial":1}"#);
    }
}
