//! The quadrilateral lemma: `ABCD` convex, `ℓ(B,C) ∩ ℓ(A,D) = P` beyond
//! `ℓ(A,B)`, a disk inside `ABCD` tangent to `AB`, `BC`, `DA`, with `ℓ(A,O)`
//! crossing `BC` and `ℓ(B,O)` crossing `DA` ⇒ `D_AB ∩ D_CD = ∅`.

use num_traits::Signed;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::frame::*;
use super::{reject, Witness};
use crate::error::Result;
use crate::gen::{rand_rational, rng_for, unit_circle_point};
use crate::geom::{gdisks_intersect, Disk, GDisk, Line, Point};
use crate::poly::ConvexPolygon;
use crate::scalar::{self, int, rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
    pub p: Point,
    pub center: Point,
    #[serde(with = "scalar::text")]
    pub r2: Scalar,
}

pub fn check_quad(input: &QuadConfig) -> Result<(bool, Witness)> {
    let mut cfg = input.clone();
    cfg.integerize();
    let QuadConfig { a, b, c, d, p, center: o, r2 } = &cfg;
    if !r2.is_positive() {
        return reject("radius is not positive");
    }
    if ConvexPolygon::bounded(vec![a.clone(), b.clone(), c.clone(), d.clone()], false).is_err() {
        return reject("ABCD is not a strictly convex CCW quadrilateral");
    }
    match Line::through(b, c).intersection(&Line::through(a, d)) {
        Some(x) if &x == p => {}
        _ => return reject("P is not the intersection of l(B,C) and l(A,D)"),
    }
    if !Line::through(a, b).eval(p).is_negative() {
        return reject("l(A,B) does not separate P from the interior");
    }
    for (u, v) in [(a, b), (b, c), (c, d), (d, a)] {
        if !disk_left_of(u, v, o, r2) {
            return reject("disk is not inside ABCD");
        }
    }
    for (u, v) in [(a, b), (b, c), (d, a)] {
        if !tangent_to_segment(u, v, o, r2) {
            return reject("disk is not tangent to AB, BC and DA");
        }
    }
    if !line_meets_segment(a, o, b, c) {
        return reject("l(A,O) misses side BC");
    }
    if !line_meets_segment(b, o, d, a) {
        return reject("l(B,O) misses side DA");
    }
    let holds = !gdisks_intersect(&GDisk::Disk(Disk::on_diameter(a, b)), &GDisk::Disk(Disk::on_diameter(c, d)));
    Ok((holds, Witness::Quad { config: input.clone() }))
}

impl QuadConfig {
    pub fn integerize(&mut self) {
        let QuadConfig { a, b, c, d, p, center, r2 } = self;
        integerize(&mut [a, b, c, d, p, center], &mut [r2]);
    }
}

/// Canonical frame: disk of radius `r` at the origin, `P` on the positive x
/// axis, `AB` tangent at a rational point of the near arc, `CD` a pushed-out
/// tangent on the far side.
pub fn quad_from_params(r: &Scalar, t: &Scalar, u: &Scalar, v: &Scalar, eps: &Scalar) -> Result<QuadConfig> {
    let tp = TangentPair::canonical(r, t);
    let upper = Line::through(&tp.p, &tp.t1);
    let lower = Line::through(&tp.p, &tp.t2);
    let w = unit_circle_point(u);
    let t3 = Point::new(r * &w.0, r * &w.1);
    let ab = offset_tangent(&t3, &tp.r2, &scalar::zero());
    let far = unit_circle_point(v);
    let w4 = Point::new(-(r * &far.0), -(r * &far.1));
    let cd = offset_tangent(&w4, &tp.r2, eps);
    let (Some(a), Some(b), Some(c), Some(d)) =
        (ab.intersection(&lower), ab.intersection(&upper), cd.intersection(&upper), cd.intersection(&lower))
    else {
        return reject("a cut line is parallel to a tangent from P");
    };
    Ok(QuadConfig { a, b, c, d, p: tp.p, center: tp.center, r2: tp.r2 })
}

pub fn sample_quad(seed: u64) -> Result<QuadConfig> {
    let mut rng = rng_for(seed);
    let r = int(rng.random_range(1..=4));
    // l(A,O) only reaches BC when the angle at P is small, i.e. t near 1.
    let t = rat(rng.random_range(24..64), 64);
    let u = rand_rational(&mut rng, &-&t, &t, 64);
    // The far tangent crosses both sides of the wedge when |v| < t.
    let v = rand_rational(&mut rng, &-&t, &t, 64);
    let eps = if rng.random_range(0..8) == 0 { scalar::zero() } else { rand_rational(&mut rng, &int(0), &int(16), 64) };
    let q = quad_from_params(&r, &t, &u, &v, &eps)?;
    let f = Similarity::random(&mut rng);
    // A mirror reverses the order; relabel (A,B,C,D) → (B,A,D,C) to stay CCW.
    let (a, b, c, d) = if f.mirrors() { (&q.b, &q.a, &q.d, &q.c) } else { (&q.a, &q.b, &q.c, &q.d) };
    let mut out = QuadConfig {
        a: f.apply(a),
        b: f.apply(b),
        c: f.apply(c),
        d: f.apply(d),
        p: f.apply(&q.p),
        center: f.apply(&q.center),
        r2: f.apply_len2(&q.r2),
    };
    out.integerize();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_trapezoid() {
        // r = 25, tangency at (7, ±24), P = (625/7, 0); AB is x = 25, CD is x = −60.
        let q = quad_from_params(&int(25), &rat(3, 4), &int(0), &int(0), &rat(7, 5)).unwrap();
        assert_eq!(q.b, Point::new(int(25), rat(75, 4)));
        assert_eq!(q.c.x, int(-60));
        let (holds, _) = check_quad(&q).unwrap();
        assert!(holds);
        // With CD close to the disk, l(A,O) no longer reaches BC.
        let near = quad_from_params(&int(25), &rat(3, 4), &int(0), &int(0), &int(0)).unwrap();
        assert!(check_quad(&near).is_err());
    }

    #[test]
    fn sampled_quads_hold() {
        let mut ok = 0;
        for seed in 0..400 {
            let Ok(q) = sample_quad(seed) else { continue };
            if let Ok((holds, _)) = check_quad(&q) {
                assert!(holds, "seed {seed}");
                ok += 1;
            }
        }
        assert!(ok > 20, "only {ok} accepted");
    }
}
