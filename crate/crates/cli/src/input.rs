use std::path::Path;

use combdyn::{LiftedCircleMap, Pattern, Rational, SharkovskyElement};
use serde_json::Value;

use crate::report::Failure;

pub fn pattern(text: &str) -> Result<Pattern, Failure> {
    text.parse::<Pattern>().map_err(|e| Failure::Domain(format!("bad pattern {text:?}: {e}")))
}

pub fn element(text: &str) -> Result<SharkovskyElement, Failure> {
    text.parse::<SharkovskyElement>().map_err(|e| Failure::Domain(format!("bad Sharkovsky element {text:?}: {e}")))
}

/// `p/q` or an integer.
pub fn rational(text: &str) -> Result<Rational, Failure> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    compact.parse::<Rational>().map_err(|e| Failure::Domain(format!("bad rational {text:?}: {e}")))
}

/// `lo,hi` as two rationals.
pub fn rational_pair(text: &str) -> Result<(Rational, Rational), Failure> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Failure::Domain(format!("expected LO,HI, got {text:?}")))?;
    Ok((rational(a)?, rational(b)?))
}

/// A circle map file: a JSON array of `["num/den", "num/den"]` pairs giving
/// breakpoints and values of the lift.
pub fn circle_map(path: &Path) -> Result<LiftedCircleMap, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
    circle_map_from_json(&text)
}

pub fn circle_map_from_json(text: &str) -> Result<LiftedCircleMap, Failure> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Failure::Domain(format!("bad circle map JSON: {e}")))?;
    let rows = doc.as_array().ok_or_else(|| Failure::Domain("circle map must be a JSON array".into()))?;
    let entry = |v: &Value| -> Result<Rational, Failure> {
        match v {
            Value::String(s) => rational(s),
            Value::Number(n) => rational(&n.to_string()),
            _ => Err(Failure::Domain(format!("expected a rational string, got {v}"))),
        }
    };
    let mut breakpoints = Vec::with_capacity(rows.len());
    let mut values = Vec::with_capacity(rows.len());
    for row in rows {
        match row.as_array().map(Vec::as_slice) {
            Some([t, v]) => {
                breakpoints.push(entry(t)?);
                values.push(entry(v)?);
            }
            _ => return Err(Failure::Domain(format!("expected a [breakpoint, value] pair, got {row}"))),
        }
    }
    Ok(LiftedCircleMap::new(breakpoints, values)?)
}
