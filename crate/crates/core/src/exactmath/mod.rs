//! Exact rational scalar and polynomial arithmetic.
//!
//! Everything here works over [`Rational`] (arbitrary precision). Nothing in
//! this module rounds; floating point only appears in the plot rasterizer.

mod bipoly;
mod resultant;
mod roots;
mod unipoly;

pub use bipoly::{BiPoly, Var};
pub use resultant::{discriminant_in_x, resultant, resultant_x, sylvester_resultant};
pub use roots::{
    count_variations, isolate_roots, isolate_roots_real_line, root_count, simplest_between, Endpoints,
    IsolatedRoot, SturmChain,
};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("indeterminate root count: zero polynomial")]
    ZeroPolynomial,
    #[error("resultant of a zero polynomial")]
    ZeroResultant,
    #[error("polynomial is constant in x")]
    ConstantInX,
    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: Box<Rational>, hi: Box<Rational> },
    #[error("isolation width must be positive")]
    NonPositiveWidth,
}

/// `n/1` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign(q: &Rational) -> Ordering {
    if q.is_zero() {
        Ordering::Equal
    } else if q.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// `2^-k`.
pub fn pow2_neg(k: u32) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(1) << k)
}

/// Parse `"a"`, `"a/b"` or a finite decimal such as `"-0.05"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{}{}", whole_digits, frac);
        let mut n: BigInt = digits.parse().ok()?;
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Some(Rational::new(n, d));
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Decimal rendering with `digits` fractional digits, rounded toward zero.
pub fn to_decimal(q: &Rational, digits: usize) -> String {
    let neg = q.is_negative();
    let a = q.abs();
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (a.numer() * &scale) / a.denom();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if neg && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("1/2"), Some(rat(1, 2)));
        assert_eq!(parse_rational("0.05"), Some(rat(1, 20)));
        assert_eq!(parse_rational("-1.5"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn lowest_terms() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&rat(2, 3), 4), "0.6666");
        assert_eq!(to_decimal(&rat(-1, 8), 3), "-0.125");
        assert_eq!(to_decimal(&int(3), 0), "3");
    }
}
