//! Exact rationals and the canonical `"p"` / `"p/q"` string form used by
//! every file format and report.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::Error;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses the canonical rational form: an optional `-`, digits, and an
/// optional `/q` with `q > 0`. The value must already be reduced, so every
/// rational has exactly one accepted spelling.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = parse_integer(num, true).ok_or_else(bad)?;
    let explicit_den = den.is_some();
    let den = match den {
        Some(d) => parse_integer(d, false).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if den.is_zero() || den.is_negative() || (explicit_den && den.is_one()) {
        return Err(bad());
    }
    if !num.gcd(&den).is_one() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn parse_integer(text: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match text.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    // "-0" and leading zeros have a shorter canonical spelling
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if digits == "0" && text.starts_with('-') {
        return None;
    }
    text.parse().ok()
}

/// Lenient parser for command-line input: accepts anything `BigRational`
/// would, including unreduced fractions like `4/6`.
pub fn parse_rational_lenient(text: &str) -> Result<Rational, Error> {
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Uniform numerator and denominator from `[-9, 9]`, denominator nonzero.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-9..=9i64);
    let mut den = 0;
    while den == 0 {
        den = rng.gen_range(-9..=9i64);
    }
    frac(num, den)
}

pub fn random_nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let q = random_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms_parse() {
        assert_eq!(parse_rational("0").unwrap(), zero());
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("-3/4").unwrap(), frac(-3, 4));
        assert_eq!(format_rational(&frac(6, -8)), "-3/4");
        assert_eq!(format_rational(&int(5)), "5");
    }

    #[test]
    fn non_canonical_forms_are_rejected() {
        for text in ["1/0", "2/4", "3/-4", "-0", "007", "1/1", "0/5", "", "x", "1.5", "+2"] {
            assert!(parse_rational(text).is_err(), "{text} should be rejected");
        }
    }

    #[test]
    fn lenient_parser_reduces() {
        assert_eq!(parse_rational_lenient("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse_rational_lenient("-5").unwrap(), int(-5));
        assert!(parse_rational_lenient("1/0").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), one());
        assert_eq!(factorial(5), int(120));
    }
}
