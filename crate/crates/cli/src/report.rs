//! JSON reports. Keys are emitted in sorted order (serde_json's default
//! map), so a report is byte-identical across runs with the same inputs and
//! seed; wall-clock timings only appear when explicitly requested.

use matchlift_core::{StrongColoring, Violation};
use serde_json::{json, Map, Value};

pub fn rational_str(value: num_rational::Rational64) -> String {
    value.to_string()
}

pub fn strong_coloring_report(
    c: &StrongColoring,
    valid: bool,
    seed: u64,
    node_limit: u64,
    palette: Option<usize>,
    elapsed_ms: Option<u128>,
) -> Value {
    let mut class_sizes: Vec<usize> = c.classes().iter().map(Vec::len).collect();
    class_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let mut obj = Map::new();
    obj.insert("method".into(), c.method.tag().into());
    obj.insert("color_count".into(), c.color_count.into());
    obj.insert(
        "certified_bound".into(),
        match &c.certified_bound {
            Some(b) => json!({
                "value": rational_str(b.value),
                "formula": b.formula,
            }),
            None => Value::Null,
        },
    );
    obj.insert("valid".into(), valid.into());
    obj.insert("class_sizes".into(), class_sizes.into());
    obj.insert("seed".into(), seed.into());
    obj.insert(
        "parameters".into(),
        json!({
            "node_limit": node_limit,
            "palette": palette,
        }),
    );
    if let Some(ms) = elapsed_ms {
        obj.insert("elapsed_ms".into(), (ms as u64).into());
    }
    Value::Object(obj)
}

pub fn violation_value(v: &Violation) -> Value {
    match v {
        Violation::AdjacentSameColor { a, b, color } => json!({
            "kind": "adjacent-same-color",
            "ids": [a, b],
            "color": color,
        }),
        Violation::ConflictSameColor { e, f, color } => json!({
            "kind": "conflict-same-color",
            "ids": [e, f],
            "color": color,
        }),
        Violation::Uncolored { id } => json!({
            "kind": "uncolored",
            "ids": [id],
        }),
        Violation::BadClass { declared, actual } => json!({
            "kind": "bad-class",
            "declared": declared,
            "actual": actual,
        }),
    }
}

pub fn print_value(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}
