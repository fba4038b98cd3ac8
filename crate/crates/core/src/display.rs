//! Decimal rendering of exact rationals. Display only; nothing is computed
//! from these strings.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Number of significant digits used when no precision is requested.
pub const DEFAULT_SIGNIFICANT_DIGITS: usize = 6;

/// Rounds to `places` digits after the point, half away from zero.
pub fn to_fixed(value: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let scaled = value.abs() * BigRational::from_integer(scale);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let rounded = if r * 2 >= *scaled.denom() { q + 1 } else { q };
    let digits = rounded.to_string();
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - places);
        format!("{int_part}.{frac_part}")
    };
    if value.is_negative() && body.chars().any(|c| c.is_ascii_digit() && c != '0') {
        format!("-{body}")
    } else {
        body
    }
}

/// Rounds to `digits` significant digits, never switching to exponent form.
pub fn to_significant(value: &BigRational, digits: usize) -> String {
    let digits = digits.max(1);
    if value.is_zero() {
        return "0".to_string();
    }
    let int_digits = integer_digit_count(value);
    let places = if int_digits >= digits as i64 {
        0
    } else {
        (digits as i64 - int_digits) as usize
    };
    let s = to_fixed(value, places);
    trim_fraction(&s)
}

/// Position of the leading significant digit relative to the decimal point:
/// 3 for 123.4, 0 for 0.5, -2 for 0.004.
fn integer_digit_count(value: &BigRational) -> i64 {
    let a = value.abs();
    let int_part = a.numer() / a.denom();
    if int_part.sign() != Sign::NoSign {
        return int_part.to_string().len() as i64;
    }
    let mut count = 0i64;
    let mut x = a;
    let ten = BigRational::from_integer(BigInt::from(10));
    while x.numer() < x.denom() {
        x *= ten.clone();
        count -= 1;
    }
    count + 1
}

fn trim_fraction(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

/// `"p/q"` form, or just `"p"` for integers.
pub fn exact(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
