//! The three-pairs lemma: a hexagon `ABCDEF` cut from triangle `PQR` with
//! `B,C ∈ PQ`, `D,E ∈ QR`, `F,A ∈ RP`, containing the incircle and tangent
//! to it along `BC`, `DE`, `FA` ⇒ one of `(AB,DE)`, `(CD,FA)`, `(EF,BC)` is a
//! disjoint pair of side disks.

use num_traits::Signed;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::frame::*;
use super::{reject, Witness};
use crate::error::Result;
use crate::gen::{rand_rational, rng_for, unit_circle_point};
use crate::geom::{cross, gdisks_intersect, orient, Disk, GDisk, Line, Point};
use crate::poly::ConvexPolygon;
use crate::scalar::{self, int, rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePairsConfig {
    pub triangle: [Point; 3],
    /// `A, B, C, D, E, F`.
    pub hexagon: [Point; 6],
    pub center: Point,
    #[serde(with = "scalar::text")]
    pub r2: Scalar,
}

pub fn check_3pairs(input: &ThreePairsConfig) -> Result<(bool, Witness)> {
    let mut cfg = input.clone();
    cfg.integerize();
    let cfg = &cfg;
    let [p, q, r] = &cfg.triangle;
    let [a, b, c, d, e, f] = &cfg.hexagon;
    let (o, r2) = (&cfg.center, &cfg.r2);
    if !r2.is_positive() {
        return reject("radius is not positive");
    }
    if !orient(p, q, r).is_positive() {
        return reject("PQR is not a CCW triangle");
    }
    for (u, v) in [(p, q), (q, r), (r, p)] {
        let l = Line::through(u, v);
        let x = l.eval(o);
        if x.is_negative() || &x * &x != r2 * l.norm2() {
            return reject("disk is not the incircle of PQR");
        }
    }
    let on = [(p, q, b), (p, q, c), (q, r, d), (q, r, e), (r, p, f), (r, p, a)];
    if !on.iter().all(|(u, v, x)| on_segment(u, v, x)) {
        return reject("hexagon vertices are off their triangle sides");
    }
    if ConvexPolygon::bounded(cfg.hexagon.to_vec(), false).is_err() {
        return reject("ABCDEF is not a strictly convex CCW hexagon");
    }
    for (u, v) in [(b, c), (d, e), (f, a)] {
        if !tangent_to_segment(u, v, o, r2) {
            return reject("incircle is not tangent to BC, DE and FA");
        }
    }
    let h = &cfg.hexagon;
    for k in 0..6 {
        if !disk_left_of(&h[k], &h[(k + 1) % 6], o, r2) {
            return reject("incircle is not inside the hexagon");
        }
    }
    let dk = |u: &Point, v: &Point| GDisk::Disk(Disk::on_diameter(u, v));
    let disjoint = [
        !gdisks_intersect(&dk(a, b), &dk(d, e)),
        !gdisks_intersect(&dk(c, d), &dk(f, a)),
        !gdisks_intersect(&dk(e, f), &dk(b, c)),
    ];
    Ok((disjoint.iter().any(|&x| x), Witness::ThreePairs { config: input.clone(), disjoint }))
}

impl ThreePairsConfig {
    pub fn integerize(&mut self) {
        let ThreePairsConfig { triangle, hexagon, center, r2 } = self;
        let mut pts: Vec<&mut Point> = triangle.iter_mut().chain(hexagon.iter_mut()).collect();
        pts.push(center);
        integerize(&mut pts, &mut [r2]);
    }
}

/// How a corner of the triangle is cut off.
#[derive(Clone, Debug)]
pub enum Cut {
    /// Points at the given fractions of the way from the corner to the two tangency points.
    Fractions(Scalar, Scalar),
    /// Tangent at the circle point with parameter `w`, pushed out by `1 + eps`.
    Tangent(Scalar, Scalar),
}

fn along(p: &Point, q: &Point, k: &Scalar) -> Point {
    let v = q.sub(p);
    p.offset(&(&v.0 * k, &v.1 * k))
}

/// Corner `x` between tangency points `u` (incoming side) and `v` (outgoing
/// side); returns the cut points on the incoming and outgoing sides.
fn cut_corner(x: &Point, u: &Point, v: &Point, r2: &Scalar, r: &Scalar, cut: &Cut) -> Result<(Point, Point)> {
    match cut {
        Cut::Fractions(s, t) => Ok((along(x, u, s), along(x, v, t))),
        Cut::Tangent(w, eps) => {
            let (c, s) = unit_circle_point(w);
            let wp = Point::new(r * &c, r * &s);
            let line = offset_tangent(&wp, r2, eps);
            let (Some(p1), Some(p2)) = (line.intersection(&Line::through(x, u)), line.intersection(&Line::through(x, v))) else {
                return reject("corner cut is parallel to a triangle side");
            };
            Ok((p1, p2))
        }
    }
}

/// Incircle of radius `r` at the origin touching the triangle at the circle
/// points with parameters `t` (CCW), corners cut as given (at `P`, `Q`, `R`).
pub fn three_pairs_from_params(r: &Scalar, t: [Scalar; 3], cuts: [Cut; 3]) -> Result<ThreePairsConfig> {
    let r2 = r * r;
    let u: Vec<Point> = t
        .iter()
        .map(|ti| {
            let (c, s) = unit_circle_point(ti);
            Point::new(r * &c, r * &s)
        })
        .collect();
    let uv = |k: usize| (u[k].x.clone(), u[k].y.clone());
    for k in 0..3 {
        if !cross(&uv(k), &uv((k + 1) % 3)).is_positive() {
            return reject("tangency points leave a gap of at least pi");
        }
    }
    let tangent = |k: usize| offset_tangent(&u[k], &r2, &scalar::zero());
    let corner = |i: usize, j: usize| tangent(i).intersection(&tangent(j)).expect("non-parallel after the gap test");
    // Side PQ touches at u[0], QR at u[1], RP at u[2].
    let (p, q, rr) = (corner(2, 0), corner(0, 1), corner(1, 2));
    let (a, b) = cut_corner(&p, &u[2], &u[0], &r2, r, &cuts[0])?;
    let (c, d) = cut_corner(&q, &u[0], &u[1], &r2, r, &cuts[1])?;
    let (e, f) = cut_corner(&rr, &u[1], &u[2], &r2, r, &cuts[2])?;
    Ok(ThreePairsConfig { triangle: [p, q, rr], hexagon: [a, b, c, d, e, f], center: Point::int(0, 0), r2 })
}

fn sample_cut(rng: &mut impl Rng, lo: &Scalar, hi: &Scalar) -> Cut {
    if rng.random_bool(0.5) {
        let eps = if rng.random_range(0..3) == 0 { scalar::zero() } else { rand_rational(rng, &int(0), &rat(1, 2), 32) };
        Cut::Tangent(rand_rational(rng, lo, hi, 64), eps)
    } else {
        Cut::Fractions(rand_rational(rng, &rat(1, 32), &int(1), 32), rand_rational(rng, &rat(1, 32), &int(1), 32))
    }
}

pub fn sample_three_pairs(seed: u64) -> Result<ThreePairsConfig> {
    let mut rng = rng_for(seed);
    let r = int(rng.random_range(1..=4));
    // One tangency point per third of the circle, roughly.
    let t = [
        rand_rational(&mut rng, &int(-8), &rat(-1, 2), 32),
        rand_rational(&mut rng, &rat(-1, 2), &rat(1, 2), 32),
        rand_rational(&mut rng, &rat(1, 2), &int(8), 32),
    ];
    // Tangent cuts use a circle parameter between the two neighbouring tangency
    // parameters; the corner whose arc crosses the angle π uses fractions.
    let cut_p = sample_cut(&mut rng, &t[2], &(&t[0] + int(8)));
    let cut_q = sample_cut(&mut rng, &t[0], &t[1]);
    let cut_r = sample_cut(&mut rng, &t[1], &t[2]);
    let cut_p = match cut_p {
        Cut::Tangent(..) => Cut::Fractions(rand_rational(&mut rng, &rat(1, 32), &int(1), 32), rand_rational(&mut rng, &rat(1, 32), &int(1), 32)),
        c => c,
    };
    let cfg = three_pairs_from_params(&r, t, [cut_p, cut_q, cut_r])?;
    let f = Similarity::random(&mut rng);
    let [p, q, rr] = cfg.triangle.each_ref().map(|x| f.apply(x));
    let [a, b, c, d, e, h] = cfg.hexagon.each_ref().map(|x| f.apply(x));
    // A mirror reverses the order; relabel so both polygons stay CCW.
    let (triangle, hexagon) = if f.mirrors() { ([p, rr, q], [b, a, h, e, d, c]) } else { ([p, q, rr], [a, b, c, d, e, h]) };
    let mut out = ThreePairsConfig { triangle, hexagon, center: f.apply(&cfg.center), r2: f.apply_len2(&cfg.r2) };
    out.integerize();
    Ok(out)
}
