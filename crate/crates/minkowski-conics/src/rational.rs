//! Exact rational scalars and their text forms.
//!
//! Every geometric quantity in this crate is an arbitrary-precision
//! rational; floating point appears only at the sampler and report
//! boundaries.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Rational from an integer pair.
///
/// Panics on a zero denominator; intended for literals in code and tests.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from a single integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Error produced when a rational literal cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal: {:?}", self.input)
    }
}

impl std::error::Error for ParseRationalError {}

fn parse_err(s: &str) -> ParseRationalError {
    ParseRationalError {
        input: s.to_owned(),
    }
}

/// Parses `"num/den"`, plain integers, and decimal strings.
///
/// Decimal strings expand literally in base ten (`"2.25"` is `9/4`), never
/// through a binary float round-trip.
pub fn parse_rational(s: &str) -> Result<Rat, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(parse_err(s));
    }
    if let Some((numer, denom)) = s.split_once('/') {
        let n = BigInt::from_str(numer.trim()).map_err(|_| parse_err(s))?;
        let d = BigInt::from_str(denom.trim()).map_err(|_| parse_err(s))?;
        if d.is_zero() {
            return Err(parse_err(s));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        // Base-10 expansion: sign applies to the whole literal.
        let (sign, int_digits) = match int_part.as_bytes().first() {
            Some(b'-') => (-1, &int_part[1..]),
            Some(b'+') => (1, &int_part[1..]),
            _ => (1, int_part),
        };
        if frac_part.is_empty() && int_digits.is_empty() {
            return Err(parse_err(s));
        }
        if !frac_part.bytes().all(|b| b.is_ascii_digit())
            || !int_digits.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(parse_err(s));
        }
        let int_val = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(int_digits).map_err(|_| parse_err(s))?
        };
        let frac_val = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(frac_part).map_err(|_| parse_err(s))?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let numer = (int_val * &scale + frac_val) * BigInt::from(sign);
        return Ok(Rat::new(numer, scale));
    }
    let n = BigInt::from_str(s).map_err(|_| parse_err(s))?;
    Ok(Rat::from_integer(n))
}

/// Renders `r` as a bare integer when integral, `"num/den"` otherwise.
pub fn format_rational(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest `f64`, robust against numerators and denominators far outside
/// the double range.
pub fn rat_to_f64(r: &Rat) -> f64 {
    let (quot, rem) = r.numer().div_rem(r.denom());
    let q = quot.to_f64().unwrap_or(f64::NAN);
    if !q.is_finite() {
        return q;
    }
    // rem/denom is in (-1, 1); widen it to 53 bits before converting.
    const SCALE: f64 = 9007199254740992.0; // 2^53
    let frac = (rem * (BigInt::one() << 53u8)) / r.denom();
    q + frac.to_f64().unwrap_or(0.0) / SCALE
}

/// Exact square root when `r` is a perfect square of a rational.
///
/// Returns `None` for negative inputs and non-squares.
pub fn exact_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let numer = r.numer();
    let denom = r.denom();
    let sn = numer.sqrt();
    if &sn * &sn != *numer {
        return None;
    }
    let sd = denom.sqrt();
    if &sd * &sd != *denom {
        return None;
    }
    Some(Rat::new(sn, sd))
}
