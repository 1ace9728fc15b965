//! Plain-text rendering of command output.

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) => a.iter().map(cell).collect::<Vec<_>>().join(" "),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn rows(out: &mut String, indent: &str, items: &[Value]) {
    if items.iter().all(|x| matches!(x, Value::Object(_))) {
        let mut cols: Vec<String> = Vec::new();
        for o in items.iter().filter_map(Value::as_object) {
            for k in o.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
        let grid: Vec<Vec<String>> = items
            .iter()
            .filter_map(Value::as_object)
            .map(|o| cols.iter().map(|k| o.get(k).map_or(String::new(), cell)).collect())
            .collect();
        let widths: Vec<usize> = (0..cols.len())
            .map(|j| grid.iter().map(|r| r[j].chars().count()).chain([cols[j].chars().count()]).max().unwrap_or(0))
            .collect();
        let line = |r: &[String]| {
            r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
        };
        out.push_str(&format!("{indent}{}\n", line(&cols)));
        for r in &grid {
            out.push_str(&format!("{indent}{}\n", line(r)));
        }
    } else {
        for x in items {
            out.push_str(&format!("{indent}{}\n", cell(x)));
        }
    }
}

fn object(out: &mut String, indent: &str, v: &serde_json::Map<String, Value>) {
    for (k, x) in v {
        match x {
            Value::Array(a) if a.iter().all(is_scalar) => out.push_str(&format!("{indent}{k}: {}\n", cell(x))),
            Value::Array(a) => {
                out.push_str(&format!("{indent}{k}:\n"));
                rows(out, &format!("{indent}  "), a);
            }
            Value::Object(o) => {
                out.push_str(&format!("{indent}{k}:\n"));
                object(out, &format!("{indent}  "), o);
            }
            _ => out.push_str(&format!("{indent}{k}: {}\n", cell(x))),
        }
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(o) => object(&mut out, "", o),
        Value::Array(a) => rows(&mut out, "", a),
        _ => out.push_str(&format!("{}\n", cell(v))),
    }
    out
}
