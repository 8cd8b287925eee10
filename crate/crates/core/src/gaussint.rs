//! Exact Gaussian integers `re + im·i` over arbitrary-precision integers.
//!
//! All arithmetic is exact. The textual form accepted by [`GaussInt::from_str`]
//! and produced by `Display` is
//!
//! ```text
//! gaussint := SIGN? DIGITS | SIGN? DIGITS SIGN DIGITS "i" | SIGN? DIGITS "i"
//! ```
//!
//! e.g. `3`, `-5`, `2+3i`, `2-3i`, `-597i`, `0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GaussIntError;

/// A Gaussian integer. Ordering is lexicographic on `(re, im)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn real(re: impl Into<BigInt>) -> Self {
        GaussInt::new(re, 0)
    }

    pub fn zero() -> Self {
        GaussInt::default()
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    /// `i^k` for any `k`, reduced mod 4.
    pub fn unit(k: u32) -> Self {
        match k % 4 {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplication by `i^k` without a general product.
    pub fn mul_unit(&self, k: u32) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => GaussInt {
                re: -&self.im,
                im: self.re.clone(),
            },
            2 => -self,
            _ => GaussInt {
                re: self.im.clone(),
                im: -&self.re,
            },
        }
    }

    /// Exact `self^exp` by binary exponentiation; `x^0 = 1`.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = GaussInt::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns `(i^k · self, k)` where the result lies in `{re > 0, im ≥ 0}`.
    pub fn canonical_associate(&self) -> Result<(GaussInt, u32), GaussIntError> {
        if self.is_zero() {
            return Err(GaussIntError::ZeroHasNoAssociate);
        }
        for k in 0..4 {
            let candidate = self.mul_unit(k);
            if candidate.re.is_positive() && !candidate.im.is_negative() {
                return Ok((candidate, k));
            }
        }
        unreachable!("every nonzero Gaussian integer has an associate in the first quadrant")
    }
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::real(v)
    }
}

impl From<BigInt> for GaussInt {
    fn from(v: BigInt) -> Self {
        GaussInt::real(v)
    }
}

impl<'a> Add<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;

    fn add(self, rhs: &'a GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;

    fn sub(self, rhs: &'a GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;

    fn mul(self, rhs: &'a GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;

    fn neg(self) -> GaussInt {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $tr<&'a GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &'a GaussInt) -> GaussInt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for GaussInt {
    type Output = GaussInt;

    fn neg(self) -> GaussInt {
        -&self
    }
}

impl std::iter::Sum for GaussInt {
    fn sum<I: Iterator<Item = GaussInt>>(iter: I) -> GaussInt {
        iter.fold(GaussInt::zero(), |acc, z| acc + z)
    }
}

impl One for GaussInt {
    fn one() -> Self {
        GaussInt::one()
    }
}

impl Zero for GaussInt {
    fn zero() -> Self {
        GaussInt::zero()
    }

    fn is_zero(&self) -> bool {
        GaussInt::is_zero(self)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.magnitude())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

fn parse_signed_digits(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for GaussInt {
    type Err = GaussIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GaussIntError::Parse {
            token: s.to_string(),
        };
        if !s.is_ascii() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            return parse_signed_digits(s).map(GaussInt::real).ok_or_else(bad);
        };
        // The split point is the last sign that is not the leading one.
        match body[1.min(body.len())..].rfind(['+', '-']).map(|p| p + 1) {
            Some(split) => {
                let re = parse_signed_digits(&body[..split]).ok_or_else(bad)?;
                let (sign, im) = body[split..].split_at(1);
                let im = parse_signed_digits(im).ok_or_else(bad)?;
                Ok(GaussInt::new(re, if sign == "-" { -im } else { im }))
            }
            None => parse_signed_digits(body)
                .map(|im| GaussInt::new(0, im))
                .ok_or_else(bad),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GaussIntRepr {
    re: String,
    im: String,
}

/// JSON form `{"re":"122","im":"-597"}`; decimal strings keep full precision.
impl Serialize for GaussInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GaussIntRepr {
            re: self.re.to_string(),
            im: self.im.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GaussIntRepr::deserialize(deserializer)?;
        let part = |s: &str| {
            parse_signed_digits(s).ok_or_else(|| D::Error::custom(format!("invalid integer {s:?}")))
        };
        Ok(GaussInt {
            re: part(&repr.re)?,
            im: part(&repr.im)?,
        })
    }
}
