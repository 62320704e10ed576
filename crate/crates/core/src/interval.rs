//! Outward-rounded interval arithmetic over `astro_float` big floats.
//!
//! Every operation returns an interval guaranteed to contain the exact result
//! for all real inputs drawn from the operand intervals. A sign is only
//! reported when the whole interval lies strictly on one side of zero, or the
//! interval is the exact point zero.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::Zero;

use crate::scalar::Scalar;

/// Working precisions used by escalating evaluations, in bits.
/// 192 bits carry 57 decimal digits; 768 bits carry 231.
pub const PRECISION_LADDER: [usize; 3] = [192, 384, 768];

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone)]
pub struct Interval {
    lo: BigFloat,
    hi: BigFloat,
    prec: usize,
}

// astro_float only rounds to nearest, so results are widened by two units in
// the last place after every operation.
const NEAR: RoundingMode = RoundingMode::ToEven;

#[derive(Clone, Copy)]
enum Dir {
    Down,
    Up,
}

use Dir::{Down as DOWN, Up as UP};

fn widen(x: BigFloat, p: usize, dir: Dir) -> BigFloat {
    if x.is_zero() {
        return x;
    }
    let e = match x.exponent() {
        Some(e) => e,
        None => return x,
    };
    let mut ulp2 = BigFloat::from_word(1, 64);
    ulp2.set_exponent(e - p as i32 + 2);
    match dir {
        Dir::Down => x.sub(&ulp2, p, NEAR),
        Dir::Up => x.add(&ulp2, p, NEAR),
    }
}

macro_rules! rnd {
    ($dir:expr, $p:expr, $x:ident . $op:ident ( $($arg:expr),* )) => {
        widen($x.$op($($arg,)* $p, NEAR), $p, $dir)
    };
}

fn exact_int(text: &str, bits: usize) -> BigFloat {
    with_consts(|cc| BigFloat::parse(text, Radix::Dec, bits, RoundingMode::None, cc))
}

impl Interval {
    pub fn point(v: BigFloat, prec: usize) -> Interval {
        Interval { lo: v.clone(), hi: v, prec }
    }

    pub fn from_int(v: i64, prec: usize) -> Interval {
        Interval::point(BigFloat::from_i64(v, prec.max(64)), prec)
    }

    pub fn from_rational(q: &Scalar, prec: usize) -> Interval {
        let bits = q.numer().bits().max(q.denom().bits()) as usize + 64;
        let n = exact_int(&q.numer().to_string(), bits.max(prec));
        let d = exact_int(&q.denom().to_string(), bits.max(prec));
        Interval { lo: rnd!(DOWN, prec, n.div(&d)), hi: rnd!(UP, prec, n.div(&d)), prec }
    }

    pub fn pi(prec: usize) -> Interval {
        let pi = with_consts(|cc| cc.pi(prec, NEAR));
        Interval { lo: widen(pi.clone(), prec, DOWN), hi: widen(pi, prec, UP), prec }
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    /// `Some(±1)` when strictly signed, `Some(0)` for the exact point zero,
    /// `None` when the interval straddles zero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() && !self.lo.is_zero() {
            Some(1)
        } else if self.hi.is_negative() && !self.hi.is_zero() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn contains_zero(&self) -> bool {
        !(self.lo.is_positive() && !self.lo.is_zero()) && !(self.hi.is_negative() && !self.hi.is_zero())
    }

    pub fn width(&self) -> BigFloat {
        let hi = &self.hi;
        rnd!(UP, self.prec, hi.sub(&self.lo))
    }

    pub fn mid(&self) -> BigFloat {
        let s = self.lo.add(&self.hi, self.prec + 2, NEAR);
        s.div(&BigFloat::from_i64(2, 64), self.prec, NEAR)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_string().parse().unwrap_or(f64::NAN)
    }

    /// Midpoint rendered in scientific notation with the full working precision.
    pub fn mid_string(&self) -> String {
        self.mid().to_string()
    }

    pub fn sqr(&self) -> Interval {
        let p = self.prec;
        let (a, b) = (self.lo.abs(), self.hi.abs());
        let (small, large) = if a < b { (a, b) } else { (b, a) };
        let lo = if self.contains_zero() { BigFloat::from_i64(0, p) } else { rnd!(DOWN, p, small.mul(&small)) };
        Interval { lo, hi: rnd!(UP, p, large.mul(&large)), prec: p }
    }

    pub fn sqrt(&self) -> Interval {
        let p = self.prec;
        let zero = BigFloat::from_i64(0, p);
        let (l, h) = (&self.lo, &self.hi);
        let lo = if l.is_negative() { zero.clone() } else { rnd!(DOWN, p, l.sqrt()).max(&zero) };
        let hi = if h.is_negative() { zero } else { rnd!(UP, p, h.sqrt()) };
        Interval { lo, hi, prec: p }
    }

    fn lipschitz(&self, f: impl Fn(&BigFloat, &mut Consts) -> BigFloat) -> Interval {
        let p = self.prec;
        let one = BigFloat::from_i64(1, p);
        let (center, rad) = if self.lo == self.hi {
            (self.lo.clone(), BigFloat::from_i64(0, p))
        } else {
            // sin and cos are 1-Lipschitz.
            let w = self.width();
            (self.mid(), rnd!(UP, p, w.div(&BigFloat::from_i64(2, 64))))
        };
        let v = with_consts(|cc| f(&center, cc));
        if v.is_zero() && rad.is_zero() {
            return Interval { lo: v.clone(), hi: v, prec: p };
        }
        let lo = widen(v.clone(), p, DOWN);
        let hi = widen(v, p, UP);
        Interval {
            lo: rnd!(DOWN, p, lo.sub(&rad)).max(&-one.clone()),
            hi: rnd!(UP, p, hi.add(&rad)).min(&one),
            prec: p,
        }
    }

    pub fn sin(&self) -> Interval {
        let p = self.prec;
        self.lipschitz(|x, cc| x.sin(p, NEAR, cc))
    }

    pub fn cos(&self) -> Interval {
        let p = self.prec;
        self.lipschitz(|x, cc| x.cos(p, NEAR, cc))
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Add<&Interval> for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        let p = self.prec.max(o.prec);
        let (a, b) = (&self.lo, &self.hi);
        Interval { lo: rnd!(DOWN, p, a.add(&o.lo)), hi: rnd!(UP, p, b.add(&o.hi)), prec: p }
    }
}

impl Sub<&Interval> for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        let p = self.prec.max(o.prec);
        let (a, b) = (&self.lo, &self.hi);
        Interval { lo: rnd!(DOWN, p, a.sub(&o.hi)), hi: rnd!(UP, p, b.sub(&o.lo)), prec: p }
    }
}

impl Mul<&Interval> for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let p = self.prec.max(o.prec);
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in pairs {
            let m = a.mul(b, p, NEAR);
            let d = widen(m.clone(), p, DOWN);
            let u = widen(m, p, UP);
            lo = Some(match lo {
                Some(l) if l <= d => l,
                _ => d,
            });
            hi = Some(match hi {
                Some(h) if h >= u => h,
                _ => u,
            });
        }
        Interval { lo: lo.unwrap(), hi: hi.unwrap(), prec: p }
    }
}

impl Div<&Interval> for &Interval {
    type Output = Interval;
    fn div(self, o: &Interval) -> Interval {
        let p = self.prec.max(o.prec);
        if o.contains_zero() {
            return Interval { lo: BigFloat::min_value(p), hi: BigFloat::max_value(p), prec: p };
        }
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in pairs {
            let q = a.div(b, p, NEAR);
            let d = widen(q.clone(), p, DOWN);
            let u = widen(q, p, UP);
            lo = Some(match lo {
                Some(l) if l <= d => l,
                _ => d,
            });
            hi = Some(match hi {
                Some(h) if h >= u => h,
                _ => u,
            });
        }
        Interval { lo: lo.unwrap(), hi: hi.unwrap(), prec: p }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone(), prec: self.prec }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: &Interval) -> Interval {
                (&self).$m(rhs)
            }
        }
        impl $tr<Interval> for &Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

/// Exact rational value of a finite big float.
pub fn float_to_rational(x: &BigFloat) -> Option<Scalar> {
    use num_bigint::{BigInt, BigUint, Sign};
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    let (words, _, sign, e, _) = x.as_raw_parts()?;
    let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
    let m = BigInt::from_biguint(if sign.is_negative() { Sign::Minus } else { Sign::Plus }, BigUint::from_bytes_le(&bytes));
    // The mantissa is a fraction: value = m · 2^(e − bits).
    let shift = e as i64 - (words.len() * 64) as i64;
    let two = BigInt::from(2u8);
    Some(if shift >= 0 {
        Scalar::from_integer(m * two.pow(shift as u32))
    } else {
        Scalar::new(m, two.pow((-shift) as u32))
    })
}

impl Interval {
    pub fn lo_rational(&self) -> Option<Scalar> {
        float_to_rational(&self.lo)
    }

    pub fn hi_rational(&self) -> Option<Scalar> {
        float_to_rational(&self.hi)
    }

    /// Midpoint rounded to the nearest multiple of `10^-digits`.
    pub fn round_decimal(&self, digits: u32) -> Option<Scalar> {
        let m = float_to_rational(&self.mid())?;
        let scale = Scalar::from_integer(num_bigint::BigInt::from(10u8).pow(digits));
        Some((m * &scale).round() / scale)
    }
}

/// Angle `q·π` for rational `q`; exact zero stays an exact point.
pub fn pi_multiple(q: &Scalar, prec: usize) -> Interval {
    if q.is_zero() {
        return Interval::from_int(0, prec);
    }
    &Interval::pi(prec) * &Interval::from_rational(q, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn rational_enclosure() {
        let third = Interval::from_rational(&rat(1, 3), 192);
        assert!(third.lo() < third.hi());
        let back = &third * &Interval::from_int(3, 192);
        assert!(!back.contains_zero());
        assert!((&back - &Interval::from_int(1, 192)).contains_zero());
    }

    #[test]
    fn trig_identities_enclose_zero() {
        let x = Interval::from_rational(&rat(7, 10), 192);
        let s = x.sin();
        let c = x.cos();
        let one = &s.sqr() + &c.sqr();
        assert!((&one - &Interval::from_int(1, 192)).contains_zero());
        let w = (&one - &Interval::from_int(1, 192)).width();
        assert!(w < BigFloat::from_f64(1e-50, 64));
    }

    #[test]
    fn sin_of_pi_straddles_only_zero() {
        let pi = Interval::pi(192);
        let s = pi.sin();
        assert_eq!(s.sign(), None);
        assert_eq!(pi_multiple(&int(0), 192).sin().sign(), Some(0));
        assert_eq!(pi_multiple(&rat(1, 6), 192).sin().sign(), Some(1));
    }

    #[test]
    fn exact_conversion() {
        let third = Interval::from_rational(&rat(1, 3), 192);
        let (lo, hi) = (third.lo_rational().unwrap(), third.hi_rational().unwrap());
        assert!(lo < rat(1, 3) && rat(1, 3) < hi);
        assert_eq!(float_to_rational(&BigFloat::from_i64(-6, 64)), Some(int(-6)));
        assert_eq!(third.round_decimal(3), Some(rat(333, 1000)));
    }

    #[test]
    fn sqrt_bounds() {
        let two = Interval::from_int(2, 192).sqrt();
        let sq = two.sqr();
        assert!((&sq - &Interval::from_int(2, 192)).contains_zero());
        assert!(two.to_f64() > 1.414 && two.to_f64() < 1.415);
    }
}
