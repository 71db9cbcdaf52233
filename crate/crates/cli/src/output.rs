use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

/// Rounds every float in `value` to 12 significant digits.
pub fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
                if let Some(r) = serde_json::Number::from_f64(rounded) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

pub fn to_json<S: Serialize>(report: &S) -> String {
    let mut value = serde_json::to_value(report).expect("reports serialize to JSON");
    round_floats(&mut value);
    let mut text = serde_json::to_string_pretty(&value).expect("JSON values print");
    text.push('\n');
    text
}

pub fn emit(out: Option<&Path>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_keep_twelve_digits() {
        let mut v = serde_json::json!({"a": 0.27807190511263774, "b": [1.0, 2], "c": 1e-17});
        round_floats(&mut v);
        assert_eq!(v.to_string(), r#"{"a":0.278071905113,"b":[1.0,2],"c":1e-17}"#);
    }
}
