//! Matrix JSON format.
//!
//! ```json
//! {"rows": 2, "cols": 2, "entries": [[1, "1/2"], [0, 3]]}
//! ```
//!
//! Entries are JSON integers or decimal-free rational strings `"p/q"`.
//! Floats, NaN-like tokens, zero denominators and ragged rows are
//! rejected.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::{Error, Mat, Rat};

/// Parses a rational from a JSON entry: an integer number or a string of
/// the form `"p"` or `"p/q"`.
pub fn rat_from_json(v: &Value) -> Result<Rat, Error> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(BigInt::from(i)))
            } else {
                Err(Error::parse(format!(
                    "entry {n} is not an exact integer; use a \"p/q\" string for rationals"
                )))
            }
        }
        Value::String(s) => parse_rat(s),
        other => Err(Error::parse(format!(
            "entry {other} is neither integer nor string"
        ))),
    }
}

/// Parses `"p"` or `"p/q"` with integer `p`, `q` and `q != 0`.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n, d),
    };
    let parse_int = |txt: &str| -> Result<BigInt, Error> {
        if txt.is_empty()
            || !txt
                .chars()
                .enumerate()
                .all(|(i, ch)| ch.is_ascii_digit() || (i == 0 && ch == '-'))
        {
            return Err(Error::parse(format!(
                "'{s}' is not an integer or p/q rational"
            )));
        }
        txt.parse::<BigInt>()
            .map_err(|_| Error::parse(format!("'{s}' is not an integer or p/q rational")))
    };
    let n = parse_int(num)?;
    let d = parse_int(den)?;
    if d.is_zero() {
        return Err(Error::parse(format!("'{s}' has a zero denominator")));
    }
    Ok(Rat::new(n, d))
}

/// Serializes a rational: a JSON integer when it is an i64-sized integer,
/// otherwise a `"p/q"` string.
pub fn rat_to_json(r: &Rat) -> Value {
    if r.is_integer() {
        if let Ok(i) = i64::try_from(r.numer().clone()) {
            return json!(i);
        }
        return json!(r.numer().to_string());
    }
    json!(format!("{}/{}", r.numer(), r.denom()))
}

pub fn mat_to_json(m: &Mat) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array((0..m.cols()).map(|c| rat_to_json(m.at(r, c))).collect()))
        .collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn mat_from_json(v: &Value) -> Result<Mat, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse("matrix JSON must be an object"))?;
    let dim = |key: &str| -> Result<usize, Error> {
        obj.get(key)
            .and_then(Value::as_u64)
            .filter(|&d| d > 0)
            .map(|d| d as usize)
            .ok_or_else(|| Error::parse(format!("missing or invalid '{key}'")))
    };
    let rows = dim("rows")?;
    let cols = dim("cols")?;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("missing 'entries' array"))?;
    if entries.len() != rows {
        return Err(Error::parse(format!(
            "expected {rows} rows, got {}",
            entries.len()
        )));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for (r, row) in entries.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::parse(format!("row {} is not an array", r + 1)))?;
        if row.len() != cols {
            return Err(Error::parse(format!(
                "row {} has {} entries, expected {cols}",
                r + 1,
                row.len()
            )));
        }
        for e in row {
            flat.push(rat_from_json(e)?);
        }
    }
    Mat::new(rows, cols, flat)
}

pub fn parse_mat(text: &str) -> Result<Mat, Error> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("invalid JSON: {e}")))?;
    mat_from_json(&v)
}

pub fn read_mat(path: &std::path::Path) -> Result<Mat, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(format!("cannot read {}: {e}", path.display())))?;
    parse_mat(&text).map_err(|e| Error::parse(format!("{}: {e}", path.display())))
}
