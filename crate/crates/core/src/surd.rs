//! Exact real numbers of the form `Σ q_S · √(∏_{i∈S} k_i)` with rational
//! `q_S` and positive rational radicands `k_i`.
//!
//! These are the numbers that appear once angle bisectors enter the picture:
//! normalizing a line `ax + by + c = 0` introduces `√(a² + b²)`, and the
//! tri-tangent disk of three lines lives in the field generated by the three
//! norms. Signs are decided exactly by peeling one radical at a time:
//! `X + Y√k` has the sign of `X` when `X` and `Y` agree, and otherwise the
//! sign of `X · (X² − k Y²)`, where `X² − k Y²` has one radical fewer.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};
use crate::scalar::{self, Scalar};

/// Upper bound on distinct radicands in one number; the coefficient vector
/// has `2^MAX_RADICALS` entries.
pub const MAX_RADICALS: usize = 8;

#[derive(Clone)]
pub struct Surd {
    rads: Arc<Vec<Scalar>>,
    coeffs: Vec<Scalar>,
}

impl Surd {
    pub fn rational(q: Scalar) -> Surd {
        Surd { rads: Arc::new(Vec::new()), coeffs: vec![q] }
    }

    pub fn zero() -> Surd {
        Surd::rational(Scalar::zero())
    }

    /// `√k` for a nonnegative rational `k`. Perfect squares stay rational.
    pub fn sqrt(k: &Scalar) -> Result<Surd> {
        if k.is_negative() {
            return domain(format!("square root of negative {}", scalar::format(k)));
        }
        if let Some(r) = scalar::sqrt_exact(k) {
            return Ok(Surd::rational(r));
        }
        Ok(Surd { rads: Arc::new(vec![k.clone()]), coeffs: vec![Scalar::zero(), scalar::one()] })
    }

    pub fn radicands(&self) -> &[Scalar] {
        &self.rads
    }

    /// The rational value, when no radical survives.
    pub fn to_rational(&self) -> Option<Scalar> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn sign(&self) -> i32 {
        sign_estimate(&self.coeffs, &self.rads).unwrap_or_else(|| sign_rec(&self.coeffs, &self.rads))
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn square(&self) -> Surd {
        self * self
    }

    pub fn scale(&self, q: &Scalar) -> Surd {
        Surd { rads: self.rads.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// `1/self`, by multiplying through by conjugates one radical at a time.
    pub fn inv(&self) -> Result<Surd> {
        let mut num = Surd::rational(scalar::one());
        let mut den = self.clone();
        for j in (0..den.rads.len()).rev() {
            let conj = Surd {
                rads: den.rads.clone(),
                coeffs: den.coeffs.iter().enumerate().map(|(m, c)| if m >> j & 1 == 1 { -c } else { c.clone() }).collect(),
            };
            num = &num * &conj;
            den = &den * &conj;
        }
        match den.to_rational() {
            Some(q) if !q.is_zero() => Ok(num.scale(&(scalar::one() / q))),
            _ => domain("inverse of zero"),
        }
    }

    pub fn div(&self, other: &Surd) -> Result<Surd> {
        Ok(self * &other.inv()?)
    }

    pub fn to_f64(&self) -> f64 {
        let roots: Vec<f64> = self.rads.iter().map(|k| scalar::to_f64(k).sqrt()).collect();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                let basis: f64 = (0..roots.len()).filter(|i| mask >> i & 1 == 1).map(|i| roots[i]).product();
                scalar::to_f64(c) * basis
            })
            .sum()
    }

    /// Brings both operands onto a common radicand list.
    fn unify(&self, other: &Surd) -> (Arc<Vec<Scalar>>, Vec<Scalar>, Vec<Scalar>) {
        if Arc::ptr_eq(&self.rads, &other.rads) || self.rads == other.rads {
            return (self.rads.clone(), self.coeffs.clone(), other.coeffs.clone());
        }
        if other.rads.is_empty() {
            let mut c = vec![Scalar::zero(); self.coeffs.len()];
            c[0] = other.coeffs[0].clone();
            return (self.rads.clone(), self.coeffs.clone(), c);
        }
        if self.rads.is_empty() {
            let mut c = vec![Scalar::zero(); other.coeffs.len()];
            c[0] = self.coeffs[0].clone();
            return (other.rads.clone(), c, other.coeffs.clone());
        }
        let mut union: Vec<Scalar> = self.rads.to_vec();
        let own_map: Vec<(usize, Scalar)> = (0..union.len()).map(|i| (i, scalar::one())).collect();
        let mut other_map = Vec::with_capacity(other.rads.len());
        for k in other.rads.iter() {
            // √k = q·√u whenever k/u is a rational square.
            let hit = union.iter().enumerate().find_map(|(i, u)| scalar::sqrt_exact(&(k / u)).map(|q| (i, q)));
            match hit {
                Some(m) => other_map.push(m),
                None => {
                    union.push(k.clone());
                    other_map.push((union.len() - 1, scalar::one()));
                }
            }
        }
        assert!(union.len() <= MAX_RADICALS, "too many distinct radicals in one expression");
        let a = lift(&self.coeffs, &own_map, &union);
        let b = lift(&other.coeffs, &other_map, &union);
        (Arc::new(union), a, b)
    }
}

fn lift(coeffs: &[Scalar], map: &[(usize, Scalar)], union: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); 1 << union.len()];
    for (mask, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut target = 0usize;
        let mut factor = scalar::one();
        for (j, (idx, q)) in map.iter().enumerate() {
            if mask >> j & 1 == 1 {
                if target >> idx & 1 == 1 {
                    factor *= &union[*idx];
                }
                target ^= 1 << idx;
                factor *= q;
            }
        }
        out[target] += c * factor;
    }
    out
}

fn mul_coeffs(a: &[Scalar], b: &[Scalar], rads: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len()];
    for (s, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (t, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let mut v = x * y;
            let common = s & t;
            for (i, k) in rads.iter().enumerate() {
                if common >> i & 1 == 1 {
                    v *= k;
                }
            }
            out[s ^ t] += v;
        }
    }
    out
}

/// Normal f64 nearest to `q` (correctly rounded), or `None`.
fn approx(q: &Scalar) -> Option<f64> {
    let x = q.to_f64()?;
    x.is_normal().then_some(x)
}

/// Float filter in front of the exact sign: each term carries at most about
/// `1 + 2.5·|rads|` roundings and the sum one per term, so a total above
/// `4·(|rads| + |terms| + 2)·ε·Σ|term|` has a certain sign.
fn sign_estimate(coeffs: &[Scalar], rads: &[Scalar]) -> Option<i32> {
    let roots = rads.iter().map(|k| approx(k).map(f64::sqrt)).collect::<Option<Vec<f64>>>()?;
    let (mut sum, mut mag, mut terms) = (0.0f64, 0.0f64, 0usize);
    for (s, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = approx(c)?;
        for (i, r) in roots.iter().enumerate() {
            if s >> i & 1 == 1 {
                t *= r;
                if !t.is_normal() {
                    return None;
                }
            }
        }
        sum += t;
        mag += t.abs();
        terms += 1;
    }
    if terms == 0 {
        return Some(0);
    }
    let bound = mag * (4 * (rads.len() + terms + 2)) as f64 * f64::EPSILON;
    if !bound.is_finite() {
        None
    } else if sum > bound {
        Some(1)
    } else if sum < -bound {
        Some(-1)
    } else {
        None
    }
}

fn sign_rec(coeffs: &[Scalar], rads: &[Scalar]) -> i32 {
    if rads.is_empty() {
        return scalar::sign(&coeffs[0]);
    }
    let half = coeffs.len() / 2;
    let lower = &rads[..rads.len() - 1];
    let (x, y) = coeffs.split_at(half);
    let sy = sign_rec(y, lower);
    let sx = sign_rec(x, lower);
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    // Opposite signs: compare X² with k·Y².
    let k = &rads[rads.len() - 1];
    let x2 = mul_coeffs(x, x, lower);
    let y2 = mul_coeffs(y, y, lower);
    let diff: Vec<Scalar> = x2.iter().zip(&y2).map(|(p, q)| p - q * k).collect();
    sx * sign_rec(&diff, lower)
}

impl From<Scalar> for Surd {
    fn from(q: Scalar) -> Surd {
        Surd::rational(q)
    }
}

impl From<&Scalar> for Surd {
    fn from(q: &Scalar) -> Surd {
        Surd::rational(q.clone())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}", scalar::format(c))?;
            for (i, k) in self.rads.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    write!(f, "·√{}", scalar::format(k))?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Surd) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for Surd {}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Surd) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Surd) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl Add<&Surd> for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        let (rads, a, b) = self.unify(rhs);
        Surd { rads, coeffs: a.into_iter().zip(b).map(|(x, y)| x + y).collect() }
    }
}

impl Sub<&Surd> for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        let (rads, a, b) = self.unify(rhs);
        Surd { rads, coeffs: a.into_iter().zip(b).map(|(x, y)| x - y).collect() }
    }
}

impl Mul<&Surd> for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        if self.rads.is_empty() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.rads.is_empty() {
            return self.scale(&rhs.coeffs[0]);
        }
        let (rads, a, b) = self.unify(rhs);
        let coeffs = mul_coeffs(&a, &b, &rads);
        Surd { rads, coeffs }
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { rads: self.rads.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Surd> for Surd {
            type Output = Surd;
            fn $m(self, rhs: Surd) -> Surd {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Surd> for Surd {
            type Output = Surd;
            fn $m(self, rhs: &Surd) -> Surd {
                (&self).$m(rhs)
            }
        }
        impl $tr<Surd> for &Surd {
            type Output = Surd;
            fn $m(self, rhs: Surd) -> Surd {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn s(k: i64) -> Surd {
        Surd::sqrt(&int(k)).unwrap()
    }

    #[test]
    fn perfect_squares_collapse() {
        assert_eq!(s(9).to_rational(), Some(int(3)));
        assert_eq!(Surd::sqrt(&rat(4, 25)).unwrap().to_rational(), Some(rat(2, 5)));
        assert!(Surd::sqrt(&int(-1)).is_err());
    }

    #[test]
    fn signs_of_nested_expressions() {
        // √2 + √3 − √10 ≈ −0.016
        let v = &(&s(2) + &s(3)) - &s(10);
        assert_eq!(v.sign(), -1);
        // (√2 + √3)² = 5 + 2√6
        let w = (&s(2) + &s(3)).square();
        let expect = &Surd::rational(int(5)) + &s(6).scale(&int(2));
        assert_eq!(w, expect);
        // √2·√3 − √6 = 0 across different radicand lists
        assert!((&(&s(2) * &s(3)) - &s(6)).is_zero());
        // √8 − 2√2 = 0 (proportional radicands)
        assert!((&s(8) - &s(2).scale(&int(2))).is_zero());
    }

    #[test]
    fn inverse_round_trips() {
        let v = &(&Surd::rational(int(3)) + &s(2)) - &s(5).scale(&rat(1, 3));
        let w = &v * &v.inv().unwrap();
        assert_eq!(w.to_rational(), Some(int(1)));
        let u = &s(2) * &s(3);
        assert!((&(&u * &u.inv().unwrap()) - &Surd::rational(int(1))).is_zero());
        assert!(Surd::zero().inv().is_err());
    }

    #[test]
    fn three_radicals() {
        // (√2+√3+√5)² ≈ 28.97
        let lhs = &(&s(2) + &s(3)) + &s(5);
        let close = Surd::sqrt(&rat(289, 10)).unwrap();
        assert_eq!((&lhs - &close).sign(), 1);
        let far = Surd::sqrt(&rat(290, 10)).unwrap();
        assert_eq!((&lhs - &far).sign(), -1);
    }

    #[test]
    fn matches_floating_point_on_samples() {
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                for c in -3..=3i64 {
                    let v = &(&Surd::rational(int(a)) + &s(2).scale(&int(b))) + &s(7).scale(&int(c));
                    let f = a as f64 + b as f64 * 2f64.sqrt() + c as f64 * 7f64.sqrt();
                    let expect = if f.abs() < 1e-12 { 0 } else if f > 0.0 { 1 } else { -1 };
                    assert_eq!(v.sign(), expect, "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn filter_defers_near_ties() {
        // p² − 2q² = −1, so q√2 − p ≈ 2·10⁻¹⁶ against terms near 10¹⁵.
        let (p, q) = (2_470_433_131_948_081i64, 1_746_860_020_068_409i64);
        let v = &s(2).scale(&int(q)) - &Surd::rational(int(p));
        assert_eq!(sign_estimate(&v.coeffs, &v.rads), None);
        assert_eq!(v.sign(), 1);
        assert_eq!((-&v).sign(), -1);
        // Clear cases are decided by the filter and agree with the peel.
        let w = &(&s(2) + &s(3)) - &s(10);
        assert_eq!(sign_estimate(&w.coeffs, &w.rads), Some(-1));
        assert_eq!(sign_rec(&w.coeffs, &w.rads), -1);
    }
}
