//! Exact rational helpers: parsing of game literals and fixed-place decimal rendering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational used for weights, quotas and distances.
pub type Rational = Ratio<i128>;

/// Parses `123`, `7/12` or `0.65` into an exact rational. Decimals are converted exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let value = if let Some((a, b)) = body.split_once('/') {
        let a = parse_digits(a)?;
        let b = parse_digits(b)?;
        if b == 0 {
            return None;
        }
        Rational::new(a, b)
    } else if let Some((int, frac)) = body.split_once('.') {
        if int.is_empty() && frac.is_empty() {
            return None;
        }
        let int = if int.is_empty() {
            0
        } else {
            parse_digits(int)?
        };
        let frac_val = if frac.is_empty() {
            0
        } else {
            parse_digits(frac)?
        };
        let scale = 10i128.checked_pow(frac.len() as u32)?;
        Rational::new(int.checked_mul(scale)?.checked_add(frac_val)?, scale)
    } else {
        Rational::from_integer(parse_digits(body)?)
    };
    Some(if neg { -value } else { value })
}

fn parse_digits(s: &str) -> Option<i128> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Renders `num/den` rounded half-up to `places` digits after the point.
pub fn format_fixed(num: &BigInt, den: &BigInt, places: u32) -> String {
    assert!(den.is_positive());
    let neg = num.is_negative();
    let scale = BigInt::from(10u32).pow(places);
    let scaled: BigInt = num.abs() * &scale * 2 + den;
    let (rounded, _) = scaled.div_rem(&(den * 2u32));
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if neg && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{int}");
    }
    format!(
        "{sign}{int}.{:0>width$}",
        frac.to_string(),
        width = places as usize
    )
}

pub fn format_rational(r: &Rational, places: u32) -> String {
    format_fixed(&BigInt::from(*r.numer()), &BigInt::from(*r.denom()), places)
}

/// Seven places after the point, the rendering used for all reported distances.
pub fn decimal7(r: &Rational) -> String {
    format_rational(r, 7)
}

/// `a/b` form, or a bare integer when the denominator is one.
pub fn fraction_string(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators, as long as it fits.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> Result<i128> {
    values.into_iter().try_fold(1i128, |acc, r| {
        let g = acc.gcd(r.denom());
        (acc / g)
            .checked_mul(*r.denom())
            .ok_or(Error::Overflow("common denominator"))
    })
}
