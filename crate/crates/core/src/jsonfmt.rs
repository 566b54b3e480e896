//! Deterministic JSON rendering: object keys in sorted order (serde_json's
//! default map) and every float printed with 17 significant digits, which is
//! enough for exact f64 round trips and byte-identical regression output.

use serde::Serialize;
use serde_json::Value;

/// Formats an `f64` with 17 significant digits in scientific notation.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Serializes any value to deterministic JSON text.
pub fn to_string_17<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    let v = serde_json::to_value(value)?;
    let mut out = String::new();
    write_value(&v, &mut out);
    Ok(out)
}

fn write_value(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else {
                out.push_str(&format_f64(n.as_f64().expect("numeric")));
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string serializes"));
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (i, (k, val)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(k).expect("key serializes"));
                out.push(':');
                write_value(val, out);
            }
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_exactly() {
        for x in [0.5, 1.0 / 3.0, std::f64::consts::PI, -1e-17, 6.02e23] {
            let s = format_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }

    #[test]
    fn rendering_is_deterministic_and_sorted() {
        #[derive(Serialize)]
        struct T {
            b: f64,
            a: u32,
        }
        let s = to_string_17(&T { b: 0.5, a: 3 }).unwrap();
        assert_eq!(s, r#"{"a":3,"b":5.0000000000000000e-1}"#);
    }
}
