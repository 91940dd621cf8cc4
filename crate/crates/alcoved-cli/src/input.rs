//! Matrix file parsing: a whitespace-separated 4x4 grid of integers or
//! `p/q` rationals, or a JSON array of arrays. The `-inf` sentinel is
//! rejected at this boundary.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;

use alcoved::trop::{Rational, TropMatrix, TropScalar};

/// A malformed input file; maps to exit code 2.
#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

pub fn read_matrix(path: &Path) -> Result<TropMatrix, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn parse_matrix(text: &str) -> Result<TropMatrix, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        parse_json_matrix(trimmed)
    } else {
        parse_text_matrix(text)
    }
}

fn parse_text_matrix(text: &str) -> Result<TropMatrix, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 16 {
        return err(format!(
            "expected 16 whitespace-separated entries, got {}",
            tokens.len()
        ));
    }
    let mut entries = Vec::with_capacity(16);
    for t in tokens {
        entries.push(parse_entry(t)?);
    }
    build(entries)
}

fn parse_json_matrix(text: &str) -> Result<TropMatrix, ParseError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ParseError(format!("invalid JSON: {e}")))?;
    let rows = match value.as_array() {
        Some(rows) if rows.len() == 4 => rows,
        _ => return err("expected a JSON array of 4 rows"),
    };
    let mut entries = Vec::with_capacity(16);
    for row in rows {
        let cells = match row.as_array() {
            Some(cells) if cells.len() == 4 => cells,
            _ => return err("each JSON row must be an array of 4 entries"),
        };
        for cell in cells {
            let scalar = match cell {
                serde_json::Value::Number(n) => match n.as_i64() {
                    Some(i) => TropScalar::from(i),
                    None => {
                        return err(format!(
                            "entry {n} is not an exact integer; write rationals as \"p/q\" strings"
                        ))
                    }
                },
                serde_json::Value::String(s) => parse_entry(s)?,
                other => return err(format!("unsupported JSON entry {other}")),
            };
            entries.push(scalar);
        }
    }
    build(entries)
}

fn build(entries: Vec<TropScalar>) -> Result<TropMatrix, ParseError> {
    let rows: Vec<Vec<TropScalar>> = entries.chunks(4).map(|c| c.to_vec()).collect();
    TropMatrix::from_rows(rows).map_err(|e| ParseError(e.to_string()))
}

fn parse_entry(token: &str) -> Result<TropScalar, ParseError> {
    let lowered = token.to_ascii_lowercase();
    if matches!(lowered.as_str(), "-inf" | "inf" | "-infinity" | "infinity") {
        return err("infinite entries are not accepted: matrices must be finite");
    }
    parse_rational(token).map(TropScalar::Finite)
}

pub fn parse_rational(token: &str) -> Result<Rational, ParseError> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let numer = BigInt::from_str(num.trim()).map_err(|_| {
        ParseError(format!(
            "cannot parse `{token}` as an integer or p/q rational"
        ))
    })?;
    let denom = match den {
        None => BigInt::from(1),
        Some(d) => BigInt::from_str(d.trim()).map_err(|_| {
            ParseError(format!(
                "cannot parse `{token}` as an integer or p/q rational"
            ))
        })?,
    };
    if denom == BigInt::from(0) {
        return err(format!("zero denominator in `{token}`"));
    }
    Ok(Rational::new(numer, denom))
}
