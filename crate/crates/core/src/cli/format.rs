// SPDX-License-Identifier: Apache-2.0

//! Fixed-precision number formatting for every file the tool writes.

use serde_json::Value;

/// Significant digits in all numeric output.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats `x` with [`SIGNIFICANT_DIGITS`] significant digits, trailing zeros
/// removed. Plain notation for exponents in `-5..12`, scientific otherwise.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `x` rounded to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x.is_finite() {
        format_sig(x).parse().expect("formatted number parses")
    } else {
        x
    }
}

/// Rounds every floating-point number inside a JSON value in place.
pub fn round_json_numbers(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            if let Some(r) = serde_json::Number::from_f64(round_sig(x)) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json_numbers),
        Value::Object(map) => map.values_mut().for_each(round_json_numbers),
        _ => {}
    }
}

/// Pretty JSON with rounded numbers and a trailing newline.
pub fn to_json_string<T: serde::Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("serializable value");
    round_json_numbers(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("json value serializes");
    s.push('\n');
    s
}
