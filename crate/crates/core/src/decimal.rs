//! Decimal rendering of MPFR values in positional notation.

use rug::float::Round;
use rug::Float;

/// Renders `x` with `digits` significant decimal digits, rounded in the given
/// direction. Magnitudes outside `1e-30..1e40` fall back to scientific
/// notation.
pub fn positional(x: &Float, digits: usize, round: Round) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let raw = x.to_string_radix_round(10, Some(digits), round);
    let (negative, body) = match raw.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, raw.as_str()),
    };
    let (mantissa, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().expect("decimal exponent")),
        None => (body, 0),
    };
    let point = mantissa.find('.').unwrap_or(mantissa.len()) as i64;
    let mut all_digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    // position of the decimal point relative to the start of `all_digits`
    let mut point = point + exp;
    while all_digits.len() > 1 && all_digits.starts_with('0') {
        all_digits.remove(0);
        point -= 1;
    }
    let sign = if negative { "-" } else { "" };
    let sci_exp = point - 1;
    if !(-30..40).contains(&sci_exp) {
        let (head, tail) = all_digits.split_at(1);
        return if tail.is_empty() {
            format!("{sign}{head}e{sci_exp}")
        } else {
            format!("{sign}{head}.{tail}e{sci_exp}")
        };
    }
    let text = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), all_digits)
    } else if point as usize >= all_digits.len() {
        format!("{}{}", all_digits, "0".repeat(point as usize - all_digits.len()))
    } else {
        let (int, frac) = all_digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{text}")
}

/// [`positional`] with round-to-nearest.
pub fn positional_nearest(x: &Float, digits: usize) -> String {
    positional(x, digits, Round::Nearest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(x: f64) -> Float {
        Float::with_val(128, x)
    }

    #[test]
    fn renders_positional_forms() {
        assert_eq!(positional(&f(1.5), 3, Round::Nearest), "1.50");
        assert_eq!(positional(&f(0.125), 2, Round::Down), "0.12");
        assert_eq!(positional(&f(0.125), 2, Round::Up), "0.13");
        assert_eq!(positional(&f(-0.00125), 3, Round::Nearest), "-0.00125");
        assert_eq!(positional(&f(12345.0), 3, Round::Nearest), "12300");
        assert_eq!(positional(&f(12345.0), 7, Round::Nearest), "12345.00");
        assert_eq!(positional(&f(0.0), 5, Round::Nearest), "0");
    }

    #[test]
    fn extreme_magnitudes_use_scientific() {
        assert_eq!(positional(&f(1e-40), 2, Round::Nearest), "1.0e-40");
        assert_eq!(positional(&f(-3e50), 1, Round::Nearest), "-3e50");
    }
}
