//! Keeps the JSON emitted by the library in lock-step with the schema files
//! under `docs/`. The validator below covers the draft-07 subset those
//! schemas actually use (type, enum, properties, required,
//! additionalProperties, items, minimum) and rejects any keyword outside it,
//! so a schema edit that silently disables a check is impossible.

use std::str::FromStr;

use num::{BigRational, Zero};
use serde_json::Value;

use hypersum::catalog::{entries, verify_all, VerifyOptions};
use hypersum::ExactValue;

fn load_schema(name: &str) -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/");
    let text = std::fs::read_to_string(format!("{path}{name}")).expect("schema file readable");
    serde_json::from_str(&text).expect("schema file is valid JSON")
}

/// Validates `value` against the supported schema subset, pushing a
/// human-readable message per violation.
fn validate(schema: &Value, value: &Value, at: &str, errors: &mut Vec<String>) {
    const KNOWN: &[&str] = &[
        "$schema",
        "title",
        "description",
        "type",
        "enum",
        "properties",
        "required",
        "additionalProperties",
        "items",
        "minimum",
    ];
    let obj = schema.as_object().expect("schema node is an object");
    for key in obj.keys() {
        assert!(KNOWN.contains(&key.as_str()), "unsupported schema keyword '{key}' at {at}");
    }

    if let Some(ty) = obj.get("type") {
        let allowed: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().map(|v| v.as_str().unwrap()).collect(),
            _ => panic!("bad 'type' at {at}"),
        };
        let actual = match value {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) if n.is_i64() || n.is_u64() => "integer",
            Value::Number(_) => "number",
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        // draft-07: integers also satisfy "number"
        let ok = allowed.contains(&actual) || (actual == "integer" && allowed.contains(&"number"));
        if !ok {
            errors.push(format!("{at}: expected type {allowed:?}, got {actual}"));
            return;
        }
    }

    if let Some(allowed) = obj.get("enum") {
        if !allowed.as_array().unwrap().contains(value) {
            errors.push(format!("{at}: {value} not in enum {allowed}"));
        }
    }

    if let Some(min) = obj.get("minimum") {
        if let (Some(m), Some(v)) = (min.as_f64(), value.as_f64()) {
            if v < m {
                errors.push(format!("{at}: {v} below minimum {m}"));
            }
        }
    }

    if let Value::Object(map) = value {
        if let Some(required) = obj.get("required") {
            for name in required.as_array().unwrap() {
                let name = name.as_str().unwrap();
                if !map.contains_key(name) {
                    errors.push(format!("{at}: missing required property '{name}'"));
                }
            }
        }
        let props = obj.get("properties").and_then(Value::as_object);
        if let Some(props) = props {
            for (name, sub) in props {
                if let Some(v) = map.get(name) {
                    validate(sub, v, &format!("{at}.{name}"), errors);
                }
            }
        }
        if obj.get("additionalProperties") == Some(&Value::Bool(false)) {
            for name in map.keys() {
                if props.is_none_or(|p| !p.contains_key(name)) {
                    errors.push(format!("{at}: unexpected property '{name}'"));
                }
            }
        }
    }

    if let (Value::Array(items), Some(sub)) = (value, obj.get("items")) {
        for (i, v) in items.iter().enumerate() {
            validate(sub, v, &format!("{at}[{i}]"), errors);
        }
    }
}

fn assert_valid(schema: &Value, value: &Value) {
    let mut errors = Vec::new();
    validate(schema, value, "$", &mut errors);
    assert!(errors.is_empty(), "schema violations:\n{}", errors.join("\n"));
}

#[test]
fn exact_values_match_schema() {
    let schema = load_schema("exact-value.schema.json");
    let zero = serde_json::to_value(ExactValue::zero()).unwrap();
    assert_valid(&schema, &zero);
    assert_eq!(zero, serde_json::json!([]));

    for e in entries() {
        let v = serde_json::to_value(&e.expected).unwrap();
        assert_valid(&schema, &v);
        // semantic checks the schema cannot express: coefficients parse as
        // nonzero rationals already in lowest terms
        for term in v.as_array().unwrap() {
            let coeff = term["coeff"].as_str().unwrap();
            let r = BigRational::from_str(coeff).unwrap();
            assert!(!r.is_zero(), "{}: zero coefficient serialized", e.id);
            assert_eq!(r.to_string(), coeff, "{}: coefficient not in lowest terms", e.id);
        }
    }
}

#[test]
fn verify_reports_match_schema() {
    let schema = load_schema("verify-report.schema.json");
    let opts = VerifyOptions { precision: 128, ..VerifyOptions::default() };
    let report = serde_json::to_value(verify_all(&opts, false)).unwrap();
    assert_valid(&schema, &report);
    assert_eq!(report["summary"]["total"], 40);
}

/// A failing verification must also fit the schema (null lhs, reason set).
#[test]
fn failure_reports_match_schema() {
    let schema = load_schema("verify-report.schema.json");
    let opts = VerifyOptions { precision: 128, max_terms: 4, ..VerifyOptions::default() };
    let report = verify_all(&opts, false);
    assert!(report.summary.failed > 0, "term starvation should fail some entries");
    assert_valid(&schema, &serde_json::to_value(&report).unwrap());
}
