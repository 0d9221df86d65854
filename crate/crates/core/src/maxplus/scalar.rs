use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};

use crate::error::ScalarParseError;

/// An element of the max-plus semiring: `-inf` or an exact rational.
///
/// The derived ordering puts [`Scalar::Bottom`] below every finite value, so
/// `max` on scalars is the tropical sum.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    #[default]
    Bottom,
    Finite(BigRational),
}

impl Scalar {
    /// The tropical zero, `-inf`.
    pub const fn bottom() -> Self {
        Scalar::Bottom
    }

    /// The tropical unit, `0`.
    pub fn unit() -> Self {
        Scalar::Finite(BigRational::zero())
    }

    pub fn from_int(value: i64) -> Self {
        Scalar::Finite(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom` as an exact rational. Panics on a zero denominator.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Scalar::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, Scalar::Bottom)
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Scalar::Finite(v) if v.is_zero())
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Scalar::Bottom => None,
            Scalar::Finite(v) => Some(v),
        }
    }

    /// Tropical inverse (`-x`); `None` for `-inf`.
    pub fn inverse(&self) -> Option<Scalar> {
        self.finite().map(|v| Scalar::Finite(-v))
    }

    /// `self ⊕ other = max(self, other)`.
    pub fn oplus(&self, other: &Scalar) -> Scalar {
        tadd(self, other)
    }

    /// `self ⊗ other = self + other`.
    pub fn otimes(&self, other: &Scalar) -> Scalar {
        tmul(self, other)
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::from_int(value)
    }
}

impl From<BigRational> for Scalar {
    fn from(value: BigRational) -> Self {
        Scalar::Finite(value)
    }
}

/// Tropical addition: the larger operand, with `-inf` neutral.
pub fn tadd(a: &Scalar, b: &Scalar) -> Scalar {
    match a.cmp(b) {
        Ordering::Less => b.clone(),
        _ => a.clone(),
    }
}

/// Tropical multiplication: ordinary addition, with `-inf` absorbing.
pub fn tmul(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Finite(x), Scalar::Finite(y)) => Scalar::Finite(x + y),
        _ => Scalar::Bottom,
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Bottom => f.write_str("-inf"),
            Scalar::Finite(v) if v.is_integer() => write!(f, "{}", v.numer()),
            Scalar::Finite(v) => write!(f, "{}/{}", v.numer(), v.denom()),
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    /// Accepts `-inf`, integers, decimals (`-2.5`) and fractions (`5/2`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ScalarParseError(s.to_string());
        if s == "-inf" {
            return Ok(Scalar::Bottom);
        }
        if let Some((n, d)) = s.split_once('/') {
            let numer = parse_integer(n).ok_or_else(bad)?;
            let denom = parse_integer(d).ok_or_else(bad)?;
            if denom.is_zero() || denom.is_negative() || d.starts_with('+') {
                return Err(bad());
            }
            return Ok(Scalar::Finite(BigRational::new(numer, denom)));
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        let digits_ok = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if (int_part.is_empty() && frac_part.is_empty())
            || !digits_ok(int_part)
            || !digits_ok(frac_part)
            || (body.contains('.') && frac_part.is_empty())
        {
            return Err(bad());
        }
        let mut numer: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let denom = num::pow(BigInt::from(10u32), frac_part.len());
        Ok(Scalar::Finite(BigRational::new(numer, denom)))
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix('-').unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl Scalar {
    /// Lossy conversion for reporting only; never feed this back into
    /// combinatorial decisions.
    pub fn to_f64(&self) -> f64 {
        use num::ToPrimitive;
        match self {
            Scalar::Bottom => f64::NEG_INFINITY,
            Scalar::Finite(v) => v.to_f64().unwrap_or(f64::NAN),
        }
    }
}
