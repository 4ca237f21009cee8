//! Exact Gaussian-integer arithmetic.
//!
//! [`GInt`] holds a pair of arbitrary-precision coordinates and never rounds.
//! Besides the ring operations this module provides the size measures used by
//! the φ formula (norm, ℓ₁, ℓ∞, `m`), the 2-adic and (1+i)-adic valuations, and
//! the canonical unit `u_z` that rotates `z` so its largest coordinate becomes
//! the positive real part.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Gaussian integer `x + yi`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GInt {
    pub x: BigInt,
    pub y: BigInt,
}

/// One of the four units `1, i, -1, -i`, stored as the exponent of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    One,
    I,
    NegOne,
    NegI,
}

impl Unit {
    /// The units in the fixed order `[1, i, -1, -i]`.
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::NegOne, Unit::NegI];

    fn exponent(self) -> u8 {
        match self {
            Unit::One => 0,
            Unit::I => 1,
            Unit::NegOne => 2,
            Unit::NegI => 3,
        }
    }

    fn from_exponent(e: u8) -> Unit {
        Unit::ALL[(e % 4) as usize]
    }

    pub fn mul(self, other: Unit) -> Unit {
        Unit::from_exponent(self.exponent() + other.exponent())
    }

    pub fn inv(self) -> Unit {
        Unit::from_exponent(4 - self.exponent())
    }

    /// `self / other`.
    pub fn div(self, other: Unit) -> Unit {
        self.mul(other.inv())
    }

    /// Multiplies `z` by this unit. A rotation by a quarter turn, so no
    /// big-integer multiplication happens.
    pub fn apply(self, z: &GInt) -> GInt {
        match self {
            Unit::One => z.clone(),
            Unit::I => GInt { x: -&z.y, y: z.x.clone() },
            Unit::NegOne => -z,
            Unit::NegI => GInt { x: z.y.clone(), y: -&z.x },
        }
    }

    pub fn to_gint(self) -> GInt {
        self.apply(&GInt::one())
    }

    /// Returns the unit equal to `z`, if `z` is one.
    pub fn from_gint(z: &GInt) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| u.to_gint() == *z)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::One => "1",
            Unit::I => "i",
            Unit::NegOne => "-1",
            Unit::NegI => "-i",
        })
    }
}

impl FromStr for Unit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Unit> {
        match s {
            "1" | "+1" => Ok(Unit::One),
            "i" | "+i" => Ok(Unit::I),
            "-1" => Ok(Unit::NegOne),
            "-i" => Ok(Unit::NegI),
            _ => Err(Error::Parse { kind: "unit", input: s.to_string() }),
        }
    }
}

impl GInt {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> GInt {
        GInt { x: x.into(), y: y.into() }
    }

    pub fn zero() -> GInt {
        GInt::default()
    }

    pub fn one() -> GInt {
        GInt::new(1, 0)
    }

    pub fn i() -> GInt {
        GInt::new(0, 1)
    }

    /// `1 + i`, the prime above 2.
    pub fn one_plus_i() -> GInt {
        GInt::new(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.l1() == BigUint::one()
    }

    pub fn conj(&self) -> GInt {
        GInt { x: self.x.clone(), y: -&self.y }
    }

    /// `x² + y²`.
    pub fn norm(&self) -> BigUint {
        let x = self.x.magnitude();
        let y = self.y.magnitude();
        x * x + y * y
    }

    /// `|x| + |y|`.
    pub fn l1(&self) -> BigUint {
        self.x.magnitude() + self.y.magnitude()
    }

    /// `max(|x|, |y|)`.
    pub fn linf(&self) -> BigUint {
        self.x.magnitude().max(self.y.magnitude()).clone()
    }

    /// `min(|x|, |y|)`, equal to `l1 - linf`.
    pub fn m_min(&self) -> BigUint {
        self.x.magnitude().min(self.y.magnitude()).clone()
    }

    /// 2-adic valuation of `gcd(x, y)`: the minimum trailing-zero count over
    /// the nonzero coordinates.
    pub fn v2(&self) -> Result<u64> {
        match (self.x.trailing_zeros(), self.y.trailing_zeros()) {
            (Some(a), Some(b)) => Ok(a.min(b)),
            (Some(a), None) | (None, Some(a)) => Ok(a),
            (None, None) => Err(Error::ZeroInput("v2")),
        }
    }

    /// (1+i)-adic valuation. Equals `2·v2(z) + c` where `c = 1` exactly when
    /// both coordinates are odd after removing `2^v2`.
    pub fn v1pi(&self) -> Result<u64> {
        let j = self.v2()?;
        let odd = |t: &BigInt| t.magnitude().bit(j);
        Ok(2 * j + u64::from(odd(&self.x) && odd(&self.y)))
    }

    /// The canonical unit `u_z`: rotates `z` so that `Re(u_z·z) = linf(z)`,
    /// or onto `linf(z)·(1+i)` when `|x| = |y|`.
    pub fn canonical_unit(&self) -> Result<Unit> {
        if self.is_zero() {
            return Err(Error::ZeroInput("canonical_unit"));
        }
        let (x, y) = (&self.x, &self.y);
        let unit = if x.magnitude() == y.magnitude() {
            // u·z for the four units: (x, y), (-y, x), (-x, -y), (y, -x)
            match (x.sign(), y.sign()) {
                (Sign::Plus, Sign::Plus) => Unit::One,
                (Sign::Minus, Sign::Plus) => Unit::NegI,
                (Sign::Minus, Sign::Minus) => Unit::NegOne,
                _ => Unit::I,
            }
        } else if x.magnitude() > y.magnitude() {
            if x.is_positive() {
                Unit::One
            } else {
                Unit::NegOne
            }
        } else if y.is_positive() {
            Unit::NegI
        } else {
            Unit::I
        };
        Ok(unit)
    }

    /// `u_z · z`, the canonical associate of `z`. Zero maps to zero.
    pub fn canonical_associate(&self) -> GInt {
        match self.canonical_unit() {
            Ok(u) => u.apply(self),
            Err(_) => GInt::zero(),
        }
    }

    /// `s(z) = sgn(Im(u_z·z))`.
    pub fn s_sign(&self) -> Result<i8> {
        let rotated = self.canonical_unit()?.apply(self);
        Ok(match rotated.y.sign() {
            Sign::Plus => 1,
            Sign::NoSign => 0,
            Sign::Minus => -1,
        })
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &GInt) -> Option<GInt> {
        if d.is_zero() {
            return None;
        }
        let n = BigInt::from(d.norm());
        let num = self * &d.conj();
        let (qx, rx) = num.x.div_rem(&n);
        let (qy, ry) = num.y.div_rem(&n);
        (rx.is_zero() && ry.is_zero()).then_some(GInt { x: qx, y: qy })
    }

    pub fn divides(&self, other: &GInt) -> bool {
        other.exact_div(self).is_some()
    }

    /// `z / (1+i)` when `(1+i) | z`, i.e. when `x + y` is even.
    pub fn div_one_plus_i(&self) -> Option<GInt> {
        let s = &self.x + &self.y;
        if s.is_odd() {
            return None;
        }
        let d = &self.y - &self.x;
        Some(GInt { x: s >> 1u32, y: d >> 1u32 })
    }

    /// `(1+i)·z`.
    pub fn mul_one_plus_i(&self) -> GInt {
        GInt { x: &self.x - &self.y, y: &self.x + &self.y }
    }
}

impl From<Unit> for GInt {
    fn from(u: Unit) -> GInt {
        u.to_gint()
    }
}

impl From<i64> for GInt {
    fn from(x: i64) -> GInt {
        GInt::new(x, 0)
    }
}

impl From<(i64, i64)> for GInt {
    fn from((x, y): (i64, i64)) -> GInt {
        GInt::new(x, y)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&GInt> for &GInt {
            type Output = GInt;
            fn $method(self, rhs: &GInt) -> GInt {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<GInt> for GInt {
            type Output = GInt;
            fn $method(self, rhs: GInt) -> GInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GInt> for GInt {
            type Output = GInt;
            fn $method(self, rhs: &GInt) -> GInt {
                (&self).$method(rhs)
            }
        }
        impl $trait<GInt> for &GInt {
            type Output = GInt;
            fn $method(self, rhs: GInt) -> GInt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GInt { x: &a.x + &b.x, y: &a.y + &b.y });
forward_binop!(Sub, sub, |a, b| GInt { x: &a.x - &b.x, y: &a.y - &b.y });
forward_binop!(Mul, mul, |a, b| GInt {
    x: &a.x * &b.x - &a.y * &b.y,
    y: &a.x * &b.y + &a.y * &b.x,
});

impl Neg for GInt {
    type Output = GInt;
    fn neg(self) -> GInt {
        GInt { x: -self.x, y: -self.y }
    }
}

impl Neg for &GInt {
    type Output = GInt;
    fn neg(self) -> GInt {
        GInt { x: -&self.x, y: -&self.y }
    }
}

impl Mul<Unit> for &GInt {
    type Output = GInt;
    fn mul(self, u: Unit) -> GInt {
        u.apply(self)
    }
}

impl Mul<Unit> for GInt {
    type Output = GInt;
    fn mul(self, u: Unit) -> GInt {
        u.apply(&self)
    }
}

impl fmt::Display for GInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, y: &BigInt| -> fmt::Result {
            if y.magnitude().is_one() {
                f.write_str("i")
            } else {
                write!(f, "{}i", y.magnitude())
            }
        };
        match (self.x.is_zero(), self.y.sign()) {
            (_, Sign::NoSign) => write!(f, "{}", self.x),
            (true, sign) => {
                if sign == Sign::Minus {
                    f.write_str("-")?;
                }
                imag(f, &self.y)
            }
            (false, sign) => {
                write!(f, "{}", self.x)?;
                f.write_str(if sign == Sign::Minus { "-" } else { "+" })?;
                imag(f, &self.y)
            }
        }
    }
}

fn parse_integer(s: &str, whole: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse { kind: "Gaussian integer", input: whole.to_string() });
    }
    let value: BigInt = digits.parse().expect("ascii digits");
    Ok(if s.starts_with('-') { -value } else { value })
}

impl FromStr for GInt {
    type Err = Error;

    /// Accepts `x`, `yi`, `x+yi`, `x-yi`, with `i`, `-i`, `x+i` shorthands.
    fn from_str(s: &str) -> Result<GInt> {
        let t = s.trim();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GInt { x: parse_integer(t, s)?, y: BigInt::zero() });
        };
        // split before the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (real, imag) = match split {
            Some(k) => (Some(&body[..k]), &body[k..]),
            None => (None, body),
        };
        let y = match imag {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            digits => parse_integer(digits, s)?,
        };
        let x = match real {
            Some(r) => parse_integer(r, s)?,
            None => BigInt::zero(),
        };
        Ok(GInt { x, y })
    }
}

impl Serialize for GInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<GInt, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serializes any `Display` value as its text form.
pub fn ser_display<T: fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

impl Serialize for Unit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
