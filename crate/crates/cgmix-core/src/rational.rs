//! Exact rational arithmetic.
//!
//! Costs, preference values and approximation factors are `i128`-backed
//! rationals. The workspace enables overflow checks in every build profile,
//! so an overflow panics loudly instead of wrapping; the cost magnitudes this
//! crate deals with stay far below that limit.

use alloc::string::{String, ToString};

use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// The rational number type used throughout the crate.
pub type Rational = num_rational::Ratio<i128>;

/// Shorthand constructor, mainly for tests and gadget definitions.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// Parses a rational from `p/q`, integer, or decimal notation.
///
/// Decimals are expanded exactly in base 10, so `"0.1"` becomes `1/10`.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let bad = || Error::BadRational {
        input: input.to_string(),
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((numer, denom)) = s.split_once('/') {
        let n: i128 = numer.trim().parse().map_err(|_| bad())?;
        let d: i128 = denom.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int: i128 = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            0
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: i128 = frac_part.parse().map_err(|_| bad())?;
        let scale = 10i128
            .checked_pow(frac_part.len() as u32)
            .ok_or_else(bad)?;
        let frac = Rational::new(digits, scale);
        let whole = Rational::from_integer(int);
        return Ok(if negative { whole - frac } else { whole + frac });
    }
    let n: i128 = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Formats a rational as `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(value: &Rational) -> String {
    if value.denom() == &1 {
        value.numer().to_string()
    } else {
        let mut s = value.numer().to_string();
        s.push('/');
        s.push_str(&value.denom().to_string());
        s
    }
}

/// True iff `value` is a valid cost value (non-negative).
pub fn is_cost_value(value: &Rational) -> bool {
    !value.is_negative() || value.is_zero()
}
