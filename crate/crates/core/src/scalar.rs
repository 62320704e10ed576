//! Exact rational scalars and their text encoding.
//!
//! Every coordinate and squared length in the crate is a [`Scalar`]. The text
//! form accepted on input is either a decimal (`"-1.25"`, `"3"`) or a fraction
//! (`"7/3"`); output always uses the canonical fraction form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

// num-rational normalizes every result with a binary gcd, which costs
// O(bits) big-integer steps even against a denominator of 1. The hot
// geometric predicates go through these, which skip it for integers.

#[inline]
fn integral(n: BigInt) -> Scalar {
    Scalar::new_raw(n, BigInt::one())
}

#[inline]
pub fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_integer() && b.is_integer() {
        integral(a.numer() * b.numer())
    } else {
        a * b
    }
}

#[inline]
pub fn add(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_integer() && b.is_integer() {
        integral(a.numer() + b.numer())
    } else {
        a + b
    }
}

#[inline]
pub fn sub(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_integer() && b.is_integer() {
        integral(a.numer() - b.numer())
    } else {
        a - b
    }
}

/// `a·b − c·d`.
#[inline]
pub fn det2(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Scalar {
    if a.is_integer() && b.is_integer() && c.is_integer() && d.is_integer() {
        integral(a.numer() * b.numer() - c.numer() * d.numer())
    } else {
        a * b - c * d
    }
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn half() -> Scalar {
    rat(1, 2)
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"-0.125"`.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational scalar: {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Scalar::new(n, d));
    }
    let (neg, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let n = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    let d = num_traits::pow(BigInt::from(10), frac.len());
    let v = Scalar::new(n, d);
    Ok(if neg { -v } else { v })
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(v: &Scalar) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn to_f64(v: &Scalar) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        // Huge numerator/denominator pairs overflow the direct conversion.
        let shift = v.numer().bits().max(v.denom().bits()) as i64 - 60;
        let n = (v.numer() >> shift.max(0) as usize).to_f64().unwrap_or(0.0);
        let d = (v.denom() >> shift.max(0) as usize).to_f64().unwrap_or(1.0);
        n / d
    })
}

/// Nearest rational with denominator `den` (ties away from zero are fine here).
pub fn from_f64_rounded(x: f64, den: i64) -> Scalar {
    let n = (x * den as f64).round() as i64;
    rat(n, den)
}

/// Exact square root when `v` is the square of a rational.
pub fn sqrt_exact(v: &Scalar) -> Option<Scalar> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer().sqrt();
    let d = v.denom().sqrt();
    if &(&n * &n) == v.numer() && &(&d * &d) == v.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}

pub fn sign(v: &Scalar) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Serde adapter storing a [`Scalar`] as its text form. Integers written as
/// JSON numbers are also accepted on input.
pub mod text {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        d.deserialize_any(ScalarVisitor)
    }

    pub(crate) struct ScalarVisitor;

    impl Visitor<'_> for ScalarVisitor {
        type Value = Scalar;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("a rational as \"p/q\", a decimal string, or an integer")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Scalar, E> {
            parse(v).map_err(E::custom)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Scalar, E> {
            Ok(int(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Scalar, E> {
            Ok(Scalar::from_integer(BigInt::from(v)))
        }
    }
}

/// Serde adapter for `[x, y]` pairs of scalars.
pub mod pair {
    use super::*;
    use serde::ser::SerializeTuple;
    use serde::Deserialize;

    pub fn serialize<S: Serializer>(v: &(Scalar, Scalar), s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&format(&v.0))?;
        t.serialize_element(&format(&v.1))?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<(Scalar, Scalar), D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(with = "super::text")] Scalar);
        let [x, y]: [W; 2] = Deserialize::deserialize(d)?;
        Ok((x.0, y.0))
    }
}
