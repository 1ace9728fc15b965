//! Exact JSON encodings and argument parsing. Every scalar is a string such as
//! "-3/4"; pole and wall subsets are 1-based.

use std::str::FromStr;

use logconn_core::chart::ParConnection;
use logconn_core::exact::{Poly, ProjPoint, Q, RatFun};
use logconn_core::parabolic::{ParabolicBundle, Point, SpectralData, Wall, Weights};
use serde_json::{json, Map, Value};

use crate::CliError;

pub fn q(x: &Q) -> Value {
    Value::String(x.to_text())
}

pub fn qs(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(q).collect())
}

pub fn proj(p: &ProjPoint<Q>) -> Value {
    qs(p.coords())
}

/// Coefficients from the constant term up.
pub fn poly(p: &Poly<Q>) -> Value {
    qs(p.coeffs())
}

pub fn ratfun(r: &RatFun<Q>) -> Value {
    json!({ "num": poly(r.num()), "den": poly(r.den()) })
}

pub fn subset(s: &[usize]) -> Value {
    Value::Array(s.iter().map(|i| json!(i + 1)).collect())
}

pub fn spectral(sd: &SpectralData<Q>) -> Value {
    let n = sd.len();
    json!({
        "plus": Value::Array((0..n).map(|i| q(sd.plus(i))).collect()),
        "minus": Value::Array((0..n).map(|i| q(sd.minus(i))).collect()),
        "degree": sd.degree(),
    })
}

pub fn weights(w: &Weights) -> Value {
    qs(w.as_slice())
}

pub fn point(p: &Point<Q>) -> Value {
    match p {
        Point::Finite(x) => q(x),
        Point::Infinity => Value::String("inf".into()),
    }
}

pub fn bundle(b: &ParabolicBundle, t: &[Q]) -> Value {
    let (e1, e2) = b.splitting();
    json!({
        "t": qs(t),
        "splitting": [e1, e2],
        "directions": Value::Array(b.directions().iter().map(proj).collect()),
    })
}

pub fn wall(w: &Wall) -> Value {
    json!({ "k": w.k(), "subset": subset(&w.subset()) })
}

pub fn connection(c: &ParConnection<Q>) -> Value {
    let (e1, e2) = c.splitting();
    let m = c.matrix();
    json!({
        "poles": Value::Array(c.poles().iter().map(point).collect()),
        "splitting": [e1, e2],
        "lambda": q(c.lambda()),
        "directions": Value::Array(c.directions().iter().map(|d| qs(d)).collect()),
        "exponents": Value::Array(c.exponents().iter().map(|(p, m)| json!([q(p), q(m)])).collect()),
        "matrix": Value::Array((0..2).map(|j| Value::Array((0..2).map(|k| ratfun(m.entry(j, k))).collect())).collect()),
        "verified": c.verify().is_ok(),
    })
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn parse_q(s: &str) -> Result<Q, CliError> {
    Q::from_str(s).map_err(|_| usage(format!("not a rational number: {s:?}")))
}

/// Comma-separated rationals; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<Q>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| usage(format!("not an integer: {x:?}"))))
        .collect()
}

/// Comma-separated `x:y` pairs.
pub fn parse_pairs(s: &str) -> Result<Vec<(Q, Q)>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            let (a, b) = item.split_once(':').ok_or_else(|| usage(format!("expected x:y, got {item:?}")))?;
            Ok((parse_q(a)?, parse_q(b)?))
        })
        .collect()
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
pub fn read_json(arg: &str) -> Result<Value, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| usage(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("malformed JSON: {e}")))
}

/// A scalar given as a string or a JSON integer.
pub fn value_q(v: &Value) -> Result<Q, CliError> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) => n.as_i64().map(Q::from).ok_or_else(|| usage(format!("non-integer number {n}; use a string"))),
        _ => Err(usage(format!("expected a rational, got {v}"))),
    }
}

pub fn value_qs(v: &Value) -> Result<Vec<Q>, CliError> {
    v.as_array().ok_or_else(|| usage(format!("expected an array, got {v}")))?.iter().map(value_q).collect()
}

pub fn value_i64(v: &Value) -> Result<i64, CliError> {
    v.as_i64().ok_or_else(|| usage(format!("expected an integer, got {v}")))
}

pub fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| usage(format!("missing field {key:?}")))
}

pub fn value_spectral(v: &Value) -> Result<SpectralData<Q>, CliError> {
    let obj = v.as_object().ok_or_else(|| usage("spectral data must be an object"))?;
    let plus = value_qs(field(obj, "plus")?)?;
    let minus = value_qs(field(obj, "minus")?)?;
    let degree = obj.get("degree").map(value_i64).transpose()?.unwrap_or(-1);
    Ok(SpectralData::new(plus, minus, degree)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use logconn_core::exact::q as rat;

    #[test]
    fn scalars_roundtrip_as_strings() {
        let x = rat(-3, 4);
        assert_eq!(q(&x), json!("-3/4"));
        assert_eq!(value_q(&q(&x)).unwrap(), x);
        assert_eq!(value_q(&json!(5)).unwrap(), Q::from(5));
        assert!(value_q(&json!(0.5)).is_err());
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("2, 1/3").unwrap(), vec![Q::from(2), rat(1, 3)]);
        assert!(parse_list("").unwrap().is_empty());
        assert!(parse_list("2,x").is_err());
        assert!(parse_list("1/0").is_err());
        assert_eq!(parse_pairs("1/2:0").unwrap(), vec![(rat(1, 2), Q::from(0))]);
        assert!(parse_pairs("1/2").is_err());
        assert_eq!(subset(&[0, 2]), json!([1, 3]));
    }
}
