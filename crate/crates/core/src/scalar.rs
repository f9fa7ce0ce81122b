//! The max-plus scalar: an exact rational number or the bottom element −∞.
//!
//! `⊕` is `max`, `⊗` is ordinary addition. −∞ is neutral for `⊕` and
//! absorbing for `⊗`, and `0` is neutral for `⊗`. All finite arithmetic is
//! exact, backed by arbitrary-precision rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Element of ℝ ∪ {−∞} with exact rational finite values.
///
/// The derived ordering places `NegInf` below every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtReal {
    NegInf,
    Finite(BigRational),
}

impl ExtReal {
    pub fn neg_inf() -> Self {
        ExtReal::NegInf
    }

    /// The multiplicative unit `0`.
    pub fn zero() -> Self {
        ExtReal::Finite(BigRational::zero())
    }

    pub fn from_int(value: i64) -> Self {
        ExtReal::Finite(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        ExtReal::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, ExtReal::NegInf)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtReal::Finite(r) => Some(r),
            ExtReal::NegInf => None,
        }
    }

    /// `self ⊕ other`.
    pub fn oplus(&self, other: &ExtReal) -> ExtReal {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `self ⊗ other`.
    pub fn otimes(&self, other: &ExtReal) -> ExtReal {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::NegInf,
        }
    }

    /// Multiplicative inverse `−self`; `None` for −∞.
    pub fn inverse(&self) -> Option<ExtReal> {
        self.as_rational().map(|r| ExtReal::Finite(-r))
    }

    /// `self − other` for a finite `other`; −∞ stays −∞.
    pub(crate) fn minus_finite(&self, other: &BigRational) -> ExtReal {
        match self {
            ExtReal::Finite(a) => ExtReal::Finite(a - other),
            ExtReal::NegInf => ExtReal::NegInf,
        }
    }
}

impl From<i64> for ExtReal {
    fn from(value: i64) -> Self {
        ExtReal::from_int(value)
    }
}

impl From<BigRational> for ExtReal {
    fn from(value: BigRational) -> Self {
        ExtReal::Finite(value)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExtReal::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseExtRealError(pub String);

impl fmt::Display for ParseExtRealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseExtRealError {}

fn parse_unsigned_decimal(body: &str) -> Option<BigRational> {
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    Some(BigRational::new(numer, denom))
}

/// Accepts `-inf` (any case), integers, decimals such as `2.5`, and
/// rationals such as `5/4`, each with an optional sign.
impl FromStr for ExtReal {
    type Err = ParseExtRealError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let err = || ParseExtRealError(format!("invalid entry `{token}`"));
        if token.eq_ignore_ascii_case("-inf") {
            return Ok(ExtReal::NegInf);
        }
        let (negative, body) = match token.as_bytes().first() {
            Some(b'-') => (true, &token[1..]),
            Some(b'+') => (false, &token[1..]),
            _ => (false, token),
        };
        let value = match body.split_once('/') {
            Some((p, q)) => {
                if p.is_empty() || q.is_empty() {
                    return Err(err());
                }
                if !p.bytes().all(|b| b.is_ascii_digit()) || !q.bytes().all(|b| b.is_ascii_digit())
                {
                    return Err(err());
                }
                let p: BigInt = p.parse().map_err(|_| err())?;
                let q: BigInt = q.parse().map_err(|_| err())?;
                if q.is_zero() {
                    return Err(ParseExtRealError(format!("zero denominator in `{token}`")));
                }
                BigRational::new(p, q)
            }
            None => parse_unsigned_decimal(body).ok_or_else(err)?,
        };
        Ok(ExtReal::Finite(if negative { -value } else { value }))
    }
}

/// Exact rational for `numer / denom`; shorthand used throughout the tests.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub(crate) fn is_nonnegative(value: &ExtReal) -> bool {
    match value {
        ExtReal::Finite(r) => !r.is_negative(),
        ExtReal::NegInf => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_inf_is_bottom() {
        assert!(ExtReal::NegInf < ExtReal::from_int(-1_000_000));
        assert_eq!(ExtReal::NegInf.oplus(&ExtReal::from_int(3)), ExtReal::from_int(3));
        assert_eq!(ExtReal::NegInf.otimes(&ExtReal::from_int(3)), ExtReal::NegInf);
        assert_eq!(ExtReal::zero().otimes(&ExtReal::from_int(3)), ExtReal::from_int(3));
    }

    #[test]
    fn parses_token_grammar() {
        assert_eq!("-inf".parse::<ExtReal>().unwrap(), ExtReal::NegInf);
        assert_eq!("-INF".parse::<ExtReal>().unwrap(), ExtReal::NegInf);
        assert_eq!("-3".parse::<ExtReal>().unwrap(), ExtReal::from_int(-3));
        assert_eq!("+7".parse::<ExtReal>().unwrap(), ExtReal::from_int(7));
        assert_eq!("2.5".parse::<ExtReal>().unwrap(), ExtReal::from_ratio(5, 2));
        assert_eq!("-0.25".parse::<ExtReal>().unwrap(), ExtReal::from_ratio(-1, 4));
        assert_eq!("5/4".parse::<ExtReal>().unwrap(), ExtReal::from_ratio(5, 4));
        assert_eq!("-10/4".parse::<ExtReal>().unwrap(), ExtReal::from_ratio(-5, 2));
        for bad in ["", "-", "inf", "+inf", "1/0", "1.2.3", "a", "1/-2", "/3", "2/", "."] {
            assert!(bad.parse::<ExtReal>().is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn display_uses_integer_or_fraction() {
        assert_eq!(ExtReal::from_ratio(5, 4).to_string(), "5/4");
        assert_eq!(ExtReal::from_ratio(-6, 3).to_string(), "-2");
        assert_eq!(ExtReal::NegInf.to_string(), "-inf");
    }
}
