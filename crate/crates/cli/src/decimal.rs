//! Exact decimal parsing. User-supplied reals are parsed as exact rationals
//! (scientific notation accepted) and only then converted: outward to an
//! interval where they enter certified arithmetic, or to the nearest f64
//! where a single representable value is recorded (certificates state the
//! exact coefficient they certify).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use zetabound_core::Interval;

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("not a decimal number: {s:?}");
    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(i) => (&digits[..i], &digits[i + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let mut numer = BigInt::zero();
    for c in int_part.chars().chain(frac_part.chars()) {
        numer = numer * 10 + (c as u8 - b'0');
    }
    numer *= sign;
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let (n, d) = if shift >= 0 {
        (numer * ten.pow(shift as u32), BigInt::one())
    } else {
        (numer, ten.pow((-shift) as u32))
    };
    Ok(BigRational::new(n, d))
}

/// Outward-rounded interval enclosure of the exact decimal.
pub fn parse_interval(s: &str) -> Result<Interval, String> {
    Ok(Interval::from_ratio(&parse_rational(s)?))
}

/// Nearest representable f64 (exact for dyadic decimals like 0.75 or 1e8).
pub fn parse_f64(s: &str) -> Result<f64, String> {
    let iv = parse_interval(s)?;
    Ok(iv.mid())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_dyadics_stay_points() {
        for s in ["0.75", "1e8", "3", "-2.5", "0.0009765625"] {
            let iv = parse_interval(s).unwrap();
            assert!(iv.is_point(), "{s} should parse exactly");
        }
        assert_eq!(parse_f64("0.75").unwrap(), 0.75);
        assert_eq!(parse_f64("1e8").unwrap(), 1e8);
    }

    #[test]
    fn inexact_decimals_get_bracketed() {
        let iv = parse_interval("0.1").unwrap();
        assert!(iv.lo < iv.hi);
        assert!(iv.contains(0.1));
        assert!(iv.width() <= 2.0 * (0.1f64.next_up() - 0.1));
    }

    #[test]
    fn scientific_notation() {
        assert_eq!(parse_f64("2.391e0").unwrap(), 2.391);
        assert_eq!(parse_f64("25e-1").unwrap(), 2.5);
        assert_eq!(parse_f64("1E4").unwrap(), 1e4);
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "1.2.3", "1e", "--4", "0x10"] {
            assert!(parse_rational(s).is_err(), "{s:?} should fail");
        }
    }
}
