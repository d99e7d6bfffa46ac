//! Coefficient arithmetic for the two supported modes: exact rationals and `f64`.
//!
//! A whole division chain runs in a single mode; the [`Coeff`] trait is the
//! small common surface both modes expose. Rational values stay reduced with
//! positive denominator (guaranteed by `num::BigRational` itself).

use std::fmt::{Debug, Display};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Num, Signed, ToPrimitive};

/// Scalar usable as a polynomial coefficient.
///
/// Implemented for [`BigRational`] (exact mode) and [`f64`] (float mode).
pub trait Coeff:
    Num + Signed + Clone + PartialOrd + ToPrimitive + Debug + Display + 'static
{
    fn from_integer(n: i64) -> Self;

    /// Lossy view used wherever the pipeline leaves exact arithmetic
    /// (square roots, eigensolves, reports).
    fn to_float(&self) -> f64;

    /// Coefficient-zero threshold for a run whose input coefficients have the
    /// given maximum magnitude. Exact mode tolerates nothing; float mode uses
    /// the scale-relative cutoff `1e-12 * scale`.
    fn zero_threshold(scale: f64) -> Self;
}

impl Coeff for f64 {
    fn from_integer(n: i64) -> Self {
        n as f64
    }

    fn to_float(&self) -> f64 {
        *self
    }

    fn zero_threshold(scale: f64) -> Self {
        1e-12 * scale.max(1.0)
    }
}

impl Coeff for BigRational {
    fn from_integer(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_float(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn zero_threshold(_scale: f64) -> Self {
        BigRational::from_integer(BigInt::from(0))
    }
}

/// Parse a scalar literal: integer (`-3`), fraction (`11/3`), decimal
/// (`0.25`), or scientific (`2.5e-3`). All of these are exact rationals.
pub fn rational_from_str(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((num_part, den_part)) = text.split_once('/') {
        let n = decimal_to_rational(num_part.trim())?;
        let d = decimal_to_rational(den_part.trim())?;
        if d == BigRational::from_integer(BigInt::from(0)) {
            return None;
        }
        return Some(n / d);
    }
    decimal_to_rational(text)
}

fn decimal_to_rational(text: &str) -> Option<BigRational> {
    if text.is_empty() {
        return None;
    }
    let (mantissa, exponent) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => match mantissa.strip_prefix('+') {
            Some(rest) => (1, rest),
            None => (1, mantissa),
        },
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let joined = format!("{int_part}{frac_part}");
    let numer = joined.parse::<BigInt>().ok()? * BigInt::from(sign);
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    Some(if shift >= 0 {
        BigRational::from_integer(numer * num::pow::pow(ten, shift as usize))
    } else {
        BigRational::new(numer, num::pow::pow(ten, (-shift) as usize))
    })
}
