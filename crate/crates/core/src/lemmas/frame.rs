//! Exact incidence predicates and random rational similarities shared by the
//! configuration generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::reject;
use crate::error::Result;
use crate::gen::{rand_rational, unit_circle_point};
use crate::geom::{cross, dot, norm2, orient, Disk, Line, Point, Vector};
use crate::scalar::{self, int, rat, Scalar};

/// Rotation by a rational unit vector, optional mirror, scale and translation.
#[derive(Clone, Debug)]
pub struct Similarity {
    cos: Scalar,
    sin: Scalar,
    mirror: bool,
    scale: Scalar,
    shift: Vector,
}

impl Similarity {
    pub fn identity() -> Similarity {
        Similarity { cos: scalar::one(), sin: scalar::zero(), mirror: false, scale: scalar::one(), shift: (scalar::zero(), scalar::zero()) }
    }

    pub fn random(rng: &mut impl Rng) -> Similarity {
        let (mut c, mut s) = unit_circle_point(&rand_rational(rng, &int(-1), &int(1), 16));
        if rng.random_bool(0.5) {
            c = -c;
            s = -s;
        }
        Similarity {
            cos: c,
            sin: s,
            mirror: rng.random_bool(0.5),
            scale: rat(rng.random_range(1..=16), 4),
            shift: (int(rng.random_range(-20..=20)), int(rng.random_range(-20..=20))),
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        let y = if self.mirror { -&p.y } else { p.y.clone() };
        let x = (&self.cos * &p.x - &self.sin * &y) * &self.scale + &self.shift.0;
        let y = (&self.sin * &p.x + &self.cos * &y) * &self.scale + &self.shift.1;
        Point::new(x, y)
    }

    /// Whether the map reverses orientation.
    pub fn mirrors(&self) -> bool {
        self.mirror
    }

    pub fn apply_len2(&self, v: &Scalar) -> Scalar {
        v * &self.scale * &self.scale
    }
}

/// Scales points and squared lengths by the common denominator `L` of all
/// coordinates (squared lengths by `L²`), making every coordinate an integer.
/// All the lemma statements are invariant under this scaling, and integer
/// arithmetic avoids most of the gcd work of general rationals.
pub fn integerize(points: &mut [&mut Point], len2: &mut [&mut Scalar]) {
    let mut l = BigInt::one();
    for p in points.iter() {
        for v in [&p.x, &p.y] {
            l = l.lcm(v.denom());
        }
    }
    if l.is_one() {
        return;
    }
    let k = Scalar::from_integer(l);
    for p in points.iter_mut() {
        p.x = &p.x * &k;
        p.y = &p.y * &k;
    }
    let k2 = &k * &k;
    for v in len2.iter_mut() {
        **v = &**v * &k2;
    }
}

/// A closed disk with a rational radius, and an outside point with its two
/// tangency points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentPair {
    pub center: Point,
    #[serde(with = "scalar::text")]
    pub r2: Scalar,
    pub p: Point,
    pub t1: Point,
    pub t2: Point,
}

impl TangentPair {
    /// Circle of radius `r` at the origin; `P` on the positive x axis with
    /// tangency points `r·(c, ±s)` for the rational unit vector of parameter `t ∈ (0,1)`.
    pub fn canonical(r: &Scalar, t: &Scalar) -> TangentPair {
        let (c, s) = unit_circle_point(t);
        TangentPair {
            center: Point::new(scalar::zero(), scalar::zero()),
            r2: r * r,
            p: Point::new(r / &c, scalar::zero()),
            t1: Point::new(r * &c, r * &s),
            t2: Point::new(r * &c, -(r * &s)),
        }
    }

    pub fn transformed(&self, f: &Similarity) -> TangentPair {
        TangentPair {
            center: f.apply(&self.center),
            r2: f.apply_len2(&self.r2),
            p: f.apply(&self.p),
            t1: f.apply(&self.t1),
            t2: f.apply(&self.t2),
        }
    }

    /// Exact check of the shared hypotheses: `P` strictly outside, `T₁ ≠ T₂`
    /// on the circle with `PT_k ⟂ OT_k`.
    pub fn validate(&self) -> Result<()> {
        if !self.r2.is_positive() {
            return reject("radius is not positive");
        }
        if self.p.dist2(&self.center) <= self.r2 {
            return reject("P is not strictly outside the circle");
        }
        if self.t1 == self.t2 {
            return reject("tangency points coincide");
        }
        for t in [&self.t1, &self.t2] {
            if t.dist2(&self.center) != self.r2 {
                return reject("tangency point is off the circle");
            }
            if !dot(&t.sub(&self.center), &self.p.sub(t)).is_zero() {
                return reject("PT is not tangent to the circle");
            }
        }
        Ok(())
    }

    /// The disk centered at `P` through the tangency points.
    pub fn c_p(&self) -> Disk {
        Disk { center: self.p.clone(), r2: self.p.dist2(&self.t1) }
    }
}

pub fn on_segment(p: &Point, q: &Point, x: &Point) -> bool {
    if !orient(p, q, x).is_zero() {
        return false;
    }
    let d = q.sub(p);
    let t = dot(&x.sub(p), &d);
    !t.is_negative() && t <= norm2(&d)
}

/// `x` on the closed halfline from `apex` through `through`.
pub fn on_halfline(apex: &Point, through: &Point, x: &Point) -> bool {
    orient(apex, through, x).is_zero() && !dot(&x.sub(apex), &through.sub(apex)).is_negative()
}

/// `x ∈ h(apex, through) \ [apex, through]`.
pub fn beyond(apex: &Point, through: &Point, x: &Point) -> bool {
    let d = through.sub(apex);
    orient(apex, through, x).is_zero() && dot(&x.sub(apex), &d) > norm2(&d)
}

/// `x` strictly inside the convex wedge spanned by `h(apex,u)` and `h(apex,v)`.
pub fn in_open_wedge(apex: &Point, u: &Point, v: &Point, x: &Point) -> bool {
    let s = scalar::sign(&orient(apex, u, v));
    s != 0 && scalar::sign(&orient(apex, u, x)) == s && scalar::sign(&orient(apex, x, v)) == s
}

/// Common point of the closed halflines `a1 + s·d1` and `a2 + t·d2`.
pub fn halflines_meet(a1: &Point, d1: &Vector, a2: &Point, d2: &Vector) -> bool {
    let w = a2.sub(a1);
    let den = cross(d1, d2);
    if den.is_zero() {
        return cross(d1, &w).is_zero() && (!dot(d1, &w).is_negative() || !dot(d2, &w).is_positive());
    }
    let s = cross(&w, d2) / &den;
    let t = cross(&w, d1) / &den;
    !s.is_negative() && !t.is_negative()
}

/// The line through `u`, `v` stays out of the open disk.
pub fn line_misses_open_disk(u: &Point, v: &Point, center: &Point, r2: &Scalar) -> bool {
    let l = Line::through(u, v);
    let e = l.eval(center);
    &e * &e >= r2 * l.norm2()
}

/// The segment `pq` is tangent to the circle, touching it on the closed segment.
pub fn tangent_to_segment(p: &Point, q: &Point, center: &Point, r2: &Scalar) -> bool {
    let l = Line::through(p, q);
    let e = l.eval(center);
    if scalar::mul(&e, &e) != scalar::mul(r2, &l.norm2()) {
        return false;
    }
    let d = q.sub(p);
    let t = dot(&center.sub(p), &d);
    !t.is_negative() && t <= norm2(&d)
}

/// Closed disk inside the closed halfplane left of `p → q`.
pub fn disk_left_of(p: &Point, q: &Point, center: &Point, r2: &Scalar) -> bool {
    let l = Line::through(p, q);
    let e = l.eval(center);
    !e.is_negative() && scalar::mul(&e, &e) >= scalar::mul(r2, &l.norm2())
}

/// The line through `u`, `v` meets the closed segment `pq`.
pub fn line_meets_segment(u: &Point, v: &Point, p: &Point, q: &Point) -> bool {
    let a = scalar::sign(&orient(u, v, p));
    let b = scalar::sign(&orient(u, v, q));
    a * b <= 0
}

/// The tangent line at `w` on the circle `|x| = r` around the origin, pushed
/// outward by the factor `1 + eps`: `{x : x·w = r²(1+eps)}`.
pub fn offset_tangent(w: &Point, r2: &Scalar, eps: &Scalar) -> Line {
    Line { a: w.x.clone(), b: w.y.clone(), c: -(r2 * (scalar::one() + eps)) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_pair_is_valid() {
        let tp = TangentPair::canonical(&int(2), &rat(1, 3));
        tp.validate().unwrap();
        let mut rng = crate::gen::rng_for(3);
        for _ in 0..20 {
            tp.transformed(&Similarity::random(&mut rng)).validate().unwrap();
        }
        let mut bad = tp.clone();
        bad.t1 = bad.t2.clone();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn halfline_meeting() {
        let o = Point::int(0, 0);
        assert!(halflines_meet(&o, &(int(1), int(0)), &Point::int(2, -1), &(int(0), int(1))));
        assert!(!halflines_meet(&o, &(int(1), int(0)), &Point::int(2, 1), &(int(0), int(1))));
        assert!(halflines_meet(&o, &(int(1), int(0)), &Point::int(5, 0), &(int(-1), int(0))));
        assert!(!halflines_meet(&o, &(int(-1), int(0)), &Point::int(5, 0), &(int(1), int(0))));
        assert!(!halflines_meet(&o, &(int(1), int(0)), &Point::int(0, 1), &(int(1), int(0))));
    }

    #[test]
    fn wedge_and_segments() {
        let o = Point::int(0, 0);
        assert!(in_open_wedge(&o, &Point::int(1, 0), &Point::int(0, 1), &Point::int(1, 1)));
        assert!(!in_open_wedge(&o, &Point::int(1, 0), &Point::int(0, 1), &Point::int(1, 0)));
        assert!(on_segment(&o, &Point::int(2, 2), &Point::int(1, 1)));
        assert!(beyond(&o, &Point::int(2, 2), &Point::int(3, 3)));
        assert!(!beyond(&o, &Point::int(2, 2), &Point::int(2, 2)));
        assert!(tangent_to_segment(&Point::int(-1, 1), &Point::int(1, 1), &o, &int(1)));
        assert!(!tangent_to_segment(&Point::int(2, 1), &Point::int(3, 1), &o, &int(1)));
    }
}
