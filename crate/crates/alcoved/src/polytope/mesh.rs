//! OFF mesh export with configurable decimal precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::trop::Rational;

use super::{AlcovedPolytope, PolytopeError};

pub const DEFAULT_MESH_PRECISION: usize = 12;

/// Serializes a 3-dimensional body as OFF text: header, counts, vertex
/// coordinate lines (decimal, `precision` significant digits), then face
/// lines as counterclockwise-from-outside index cycles.
pub fn export_mesh(p: &AlcovedPolytope, precision: usize) -> Result<String, PolytopeError> {
    if p.dim() < 3 {
        return Err(PolytopeError::Degenerate { dim: p.dim() });
    }
    let (nv, ne, nf) = (p.vertices().len(), p.edges().len(), p.facets().len());
    let mut out = String::from("OFF\n");
    out.push_str(&format!("{nv} {nf} {ne}\n"));
    for v in p.vertices() {
        let coords: Vec<String> = v
            .point
            .coords()
            .iter()
            .map(|c| decimal_string(c, precision.max(1)))
            .collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    for f in p.facets() {
        out.push_str(&f.cycle.len().to_string());
        for &vid in &f.cycle {
            out.push_str(&format!(" {vid}"));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Decimal expansion of an exact rational with at most `sig` significant
/// digits, exact when the expansion terminates within the budget. Rounds
/// half away from zero.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().abs();

    // Number of integer digits of num/den.
    let ten = BigInt::from(10);
    let mut int_digits: i64 = 0;
    let mut scaled_den = den.clone();
    while num >= scaled_den {
        scaled_den *= &ten;
        int_digits += 1;
    }
    // 10^(int_digits - 1) <= num/den < 10^int_digits, except int_digits = 0
    // when the value is below 1; then find the leading fractional digit.
    let mut exponent = int_digits; // value in [10^(exponent-1), 10^exponent)
    if int_digits == 0 {
        let mut scaled_num = num.clone() * &ten;
        exponent = 0;
        while scaled_num < den {
            scaled_num *= &ten;
            exponent -= 1;
        }
    }

    // Round num/den * 10^(sig - exponent) to an integer.
    let shift = sig as i64 - exponent;
    let (mut scaled_num, mut divisor) = (num, den);
    if shift >= 0 {
        scaled_num *= ten.pow(shift as u32);
    } else {
        divisor *= ten.pow((-shift) as u32);
    }
    let (mut digits, rem) = scaled_num.div_rem(&divisor);
    if &rem * 2 >= divisor {
        digits += 1;
    }
    let mut point_pos = exponent;
    let width = digits.to_string().len() as i64;
    if width > sig as i64 {
        // rounding overflowed into one more digit (e.g. 999.9 -> 1000)
        point_pos += 1;
        digits /= &ten;
    }

    // Strip trailing zeros of the fractional part while keeping integers.
    let mut digit_str = digits.to_string();
    // point_pos counts digits before the decimal point
    let mut text = if point_pos <= 0 {
        let zeros = "0".repeat((-point_pos) as usize);
        format!("0.{zeros}{digit_str}")
    } else if (point_pos as usize) >= digit_str.len() {
        digit_str.push_str(&"0".repeat(point_pos as usize - digit_str.len()));
        digit_str
    } else {
        format!(
            "{}.{}",
            &digit_str[..point_pos as usize],
            &digit_str[point_pos as usize..]
        )
    };
    if text.contains('.') {
        text = text.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if negative {
        format!("-{text}")
    } else {
        text
    }
}
