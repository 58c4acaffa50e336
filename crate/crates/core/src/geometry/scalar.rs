//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type ExactScalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> ExactScalar {
    ExactScalar::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> ExactScalar {
    ExactScalar::new(BigInt::from(num), BigInt::from(den))
}

/// Sign of a scalar as -1, 0 or +1.
pub fn sign(v: &ExactScalar) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// `a - b` as an unreduced numerator and positive denominator.
pub fn raw_difference(a: &ExactScalar, b: &ExactScalar) -> (BigInt, BigInt) {
    if a.denom() == b.denom() {
        return (a.numer() - b.numer(), a.denom().clone());
    }
    (a.numer() * b.denom() - b.numer() * a.denom(), a.denom() * b.denom())
}

/// Parses `"p/q"`, `"p"` or a finite decimal literal such as `"-9.9"`.
pub fn parse_scalar(text: &str) -> Option<ExactScalar> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(ExactScalar::new(num, den));
    }
    if let Some((whole, fraction)) = text.split_once('.') {
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{whole_digits}{fraction}");
        let mut num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), fraction.len());
        return Some(ExactScalar::new(num, den));
    }
    let num: BigInt = text.parse().ok()?;
    Some(ExactScalar::from_integer(num))
}

/// Bit length of the larger of numerator and denominator.
pub fn bit_length(v: &ExactScalar) -> u64 {
    v.numer().bits().max(v.denom().bits())
}

/// Largest power of two (possibly negative exponent) that is `<= v`.
/// Requires `v > 0`.
pub fn power_of_two_floor(v: &ExactScalar) -> ExactScalar {
    assert!(v.is_positive(), "power_of_two_floor needs a positive value");
    let two = int(2);
    let mut p = ExactScalar::one();
    if &p <= v {
        while &(&p * &two) <= v {
            p = &p * &two;
        }
    } else {
        while &p > v {
            p = &p / &two;
        }
    }
    p
}

/// Largest power of two `q` with `q * q <= v`, a certified lower bound
/// for `sqrt(v)`. Requires `v > 0`.
pub fn sqrt_lower_power_of_two(v: &ExactScalar) -> ExactScalar {
    let p = power_of_two_floor(v);
    let two = int(2);
    let mut q = ExactScalar::one();
    if q <= p {
        while &(&q * &q) * int(4) <= p {
            q = &q * &two;
        }
    } else {
        while &q * &q > p {
            q = &q / &two;
        }
    }
    q
}

/// Smallest power of two that is strictly greater than `v` (1 when `v <= 0`).
pub fn power_of_two_above(v: &ExactScalar) -> ExactScalar {
    if !v.is_positive() {
        return ExactScalar::one();
    }
    power_of_two_floor(v) * int(2)
}

/// Rough `f64` value, for reporting and export only.
pub fn to_f64(v: &ExactScalar) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(f) = v.to_f64() {
        return f;
    }
    // Very large numerators and denominators: shift both down first.
    let shift = v.numer().bits().max(v.denom().bits()).saturating_sub(1000);
    let n = (v.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (v.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Formats `v` as a decimal string rounded half away from zero to `digits`
/// fractional digits, trailing zeros removed.
pub fn to_decimal(v: &ExactScalar, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = v * ExactScalar::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let magnitude = rounded.abs();
    let int_part = &magnitude / &scale;
    let frac_part = &magnitude % &scale;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 && !frac_part.is_zero() {
        let mut f = format!("{:0>width$}", frac_part.to_string(), width = digits);
        while f.ends_with('0') {
            f.pop();
        }
        out.push('.');
        out.push_str(&f);
    }
    out
}
