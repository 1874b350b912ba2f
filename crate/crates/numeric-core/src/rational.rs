//! Rational scalars and their text forms.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `"num/den"` always, integers included (`"3/1"`).
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q`, integers and finite decimals (`0.6` parses as `3/5`).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| format!("bad numerator in {s:?}"))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| format!("bad denominator in {s:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.trim_start().starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let n = BigInt::from_str(&digits).map_err(|_| format!("bad decimal {s:?}"))?;
        let d = num::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    BigInt::from_str(s)
        .map(Rational::from_integer)
        .map_err(|_| format!("bad rational {s:?}"))
}

pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // huge numerator and denominator: scale both down before dividing
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn is_half_integer(r: &Rational) -> bool {
    !is_integer(r) && is_integer(&(r * int(2)))
}

/// Nonnegative integer value, if any.
pub fn as_natural(r: &Rational) -> Option<u64> {
    if is_integer(r) && !r.is_negative() {
        r.numer().to_u64()
    } else {
        None
    }
}

/// Rational approximation of an f64 with denominator a power of two; exact.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// The rational with the smallest denominator in `[a, b]` (continued
/// fractions). Requires `a <= b`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    assert!(a <= b, "empty interval");
    if !a.is_positive() && !b.is_negative() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    if fl == *a {
        return fl;
    }
    let next = &fl + Rational::one();
    if next <= *b {
        return next;
    }
    let rest = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + rest.recip()
}
