//! Argument values given as JSON.

use serde_json::Value;

use skeinlab::laurent::LaurentPoly;

/// A `LaurentPoly` document, or a bare integer meaning a constant.
pub fn laurent_from_value(v: &Value) -> Result<LaurentPoly, String> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(LaurentPoly::constant)
            .ok_or_else(|| format!("`{n}` is not an integer")),
        Value::String(s) => s
            .trim()
            .parse::<num_bigint::BigInt>()
            .map(LaurentPoly::constant)
            .map_err(|_| format!("`{s}` is not a decimal integer")),
        Value::Object(_) => serde_json::from_value(v.clone()).map_err(|e| e.to_string()),
        other => Err(format!("expected an integer or {{\"v_exponents\": ...}}, got {other}")),
    }
}

pub fn parse_laurent(text: &str) -> Result<LaurentPoly, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    laurent_from_value(&v)
}

pub fn parse_laurent_list(text: &str) -> Result<Vec<LaurentPoly>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let items = v.as_array().ok_or("expected a JSON array")?;
    if items.is_empty() {
        return Err("expected at least one coefficient".into());
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| laurent_from_value(x).map_err(|e| format!("entry {i}: {e}")))
        .collect()
}
