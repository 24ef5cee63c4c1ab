//! Published schema for the solve sidecar, plus a small structural
//! validator covering the subset of JSON Schema the artifact uses
//! (`type`, `properties`, `required`, `items`).

use serde_json::Value;

use crate::error::{Error, Result};

pub const SOLVE_SIDECAR_SCHEMA: &str = r#"{
  "type": "object",
  "required": ["command", "problem", "request", "resolved", "status", "iters", "flops"],
  "properties": {
    "command": { "type": "string" },
    "problem": {
      "type": "object",
      "required": ["source", "n", "d", "seed"],
      "properties": {
        "source": { "type": "string" },
        "n": { "type": "integer" },
        "d": { "type": "integer" },
        "cond": { "type": ["number", "null"] },
        "seed": { "type": "integer" },
        "matrix": { "type": ["string", "null"] },
        "rhs": { "type": ["string", "null"] }
      }
    },
    "request": {
      "type": "object",
      "required": ["method", "sketch", "mode", "m", "mu", "beta", "eps", "max_iters"],
      "properties": {
        "method": { "type": "string" },
        "sketch": { "type": "string" },
        "mode": { "type": "string" },
        "m": { "type": "string" },
        "mu": { "type": "string" },
        "beta": { "type": "string" },
        "window": { "type": "integer" },
        "eps": { "type": "number" },
        "max_iters": { "type": "integer" },
        "timings": { "type": "boolean" }
      }
    },
    "resolved": {
      "type": "object",
      "required": ["m", "sketch", "mode", "seed"],
      "properties": {
        "m": { "type": "integer" },
        "mu": { "type": ["number", "null"] },
        "beta": { "type": ["number", "null"] },
        "sketch": { "type": "string" },
        "mode": { "type": "string" },
        "seed": { "type": "integer" }
      }
    },
    "status": { "type": "string" },
    "iters": { "type": "integer" },
    "final_delta_rel": { "type": ["number", "null"] },
    "final_resid_rel": { "type": "number" },
    "flops": {
      "type": "object",
      "required": ["sketch", "factor", "iterate", "total"],
      "properties": {
        "sketch": { "type": "integer" },
        "factor": { "type": "integer" },
        "iterate": { "type": "integer" },
        "total": { "type": "integer" }
      }
    },
    "wall_seconds": { "type": ["object", "null"] }
  }
}"#;

/// Validates `value` against the schema subset used by this crate.
pub fn validate_against_schema(schema: &str, value: &Value) -> Result<()> {
    let schema: Value = serde_json::from_str(schema).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("bad schema: {e}"),
    })?;
    check(&schema, value, "$")
}

fn check(schema: &Value, value: &Value, path: &str) -> Result<()> {
    if let Some(ty) = schema.get("type") {
        let allowed: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(|v| v.as_str()).collect(),
            _ => vec![],
        };
        if !allowed.iter().any(|t| type_matches(t, value)) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("{path}: expected type {allowed:?}, got {value}"),
            });
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required.iter().filter_map(Value::as_str) {
            if value.get(key).is_none() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("{path}: missing required field '{key}'"),
                });
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, sub) in props {
            if let Some(v) = value.get(key) {
                check(sub, v, &format!("{path}.{key}"))?;
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), value.as_array()) {
        for (i, v) in arr.iter().enumerate() {
            check(items, v, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn type_matches(ty: &str, value: &Value) -> bool {
    match ty {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_i64() || value.is_u64(),
        "number" => value.is_number(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn schema_itself_parses() {
        let parsed: Value = serde_json::from_str(SOLVE_SIDECAR_SCHEMA).unwrap();
        assert!(parsed.get("required").is_some());
    }

    #[test]
    fn validator_flags_missing_fields_and_bad_types() {
        let schema = r#"{"type":"object","required":["a"],"properties":{"a":{"type":"integer"}}}"#;
        assert!(validate_against_schema(schema, &json!({"a": 3})).is_ok());
        assert!(validate_against_schema(schema, &json!({})).is_err());
        assert!(validate_against_schema(schema, &json!({"a": "x"})).is_err());
    }
}
