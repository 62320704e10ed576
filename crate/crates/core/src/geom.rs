//! Points, lines, disks and halfplanes with exact predicates.
//!
//! Everything here works on squared quantities so that rational inputs give
//! rational intermediate values. The two constructions that genuinely need
//! square roots (angle bisectors and disks tangent to three lines) return
//! [`Surd`] coordinates instead.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Result};
use crate::scalar::{self, Scalar};
use crate::surd::Surd;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Point {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Point {
        Point::new(scalar::int(x), scalar::int(y))
    }

    pub fn sub(&self, o: &Point) -> Vector {
        (scalar::sub(&self.x, &o.x), scalar::sub(&self.y, &o.y))
    }

    pub fn offset(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.0, &self.y + &v.1)
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        let h = scalar::half();
        Point::new((&self.x + &o.x) * &h, (&self.y + &o.y) * &h)
    }

    pub fn dist2(&self, o: &Point) -> Scalar {
        norm2(&self.sub(o))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (scalar::to_f64(&self.x), scalar::to_f64(&self.y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", scalar::format(&self.x), scalar::format(&self.y))
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        scalar::pair::serialize(&(self.x.clone(), self.y.clone()), s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Point, D::Error> {
        let (x, y) = scalar::pair::deserialize(d)?;
        Ok(Point { x, y })
    }
}

/// A free vector `(dx, dy)`.
pub type Vector = (Scalar, Scalar);

pub fn cross(u: &Vector, v: &Vector) -> Scalar {
    scalar::det2(&u.0, &v.1, &u.1, &v.0)
}

pub fn dot(u: &Vector, v: &Vector) -> Scalar {
    scalar::add(&scalar::mul(&u.0, &v.0), &scalar::mul(&u.1, &v.1))
}

pub fn norm2(v: &Vector) -> Scalar {
    dot(v, v)
}

/// Twice the signed area of `pqr`; positive for a left turn.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Scalar {
    cross(&q.sub(p), &r.sub(p))
}

/// The locus `a·x + b·y + c = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Line {
    #[serde(with = "scalar::text")]
    pub a: Scalar,
    #[serde(with = "scalar::text")]
    pub b: Scalar,
    #[serde(with = "scalar::text")]
    pub c: Scalar,
}

impl Line {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Line> {
        if a.is_zero() && b.is_zero() {
            return domain("line with zero normal");
        }
        Ok(Line { a, b, c })
    }

    /// Directed line through `p` toward `q`; points to its left evaluate positive.
    pub fn through(p: &Point, q: &Point) -> Line {
        let a = scalar::sub(&p.y, &q.y);
        let b = scalar::sub(&q.x, &p.x);
        let c = -scalar::add(&scalar::mul(&a, &p.x), &scalar::mul(&b, &p.y));
        Line { a, b, c }
    }

    /// Directed line through `p` with direction `d`.
    pub fn with_dir(p: &Point, d: &Vector) -> Line {
        Line::through(p, &p.offset(d))
    }

    pub fn eval(&self, p: &Point) -> Scalar {
        scalar::add(&scalar::add(&scalar::mul(&self.a, &p.x), &scalar::mul(&self.b, &p.y)), &self.c)
    }

    pub fn eval_surd(&self, p: &SurdPoint) -> Surd {
        &(&p.x.scale(&self.a) + &p.y.scale(&self.b)) + &Surd::rational(self.c.clone())
    }

    pub fn normal(&self) -> Vector {
        (self.a.clone(), self.b.clone())
    }

    /// Direction along which the left side stays on the left.
    pub fn direction(&self) -> Vector {
        (self.b.clone(), -&self.a)
    }

    pub fn norm2(&self) -> Scalar {
        scalar::add(&scalar::mul(&self.a, &self.a), &scalar::mul(&self.b, &self.b))
    }

    pub fn is_parallel(&self, o: &Line) -> bool {
        cross(&self.normal(), &o.normal()).is_zero()
    }

    /// Same locus (coefficients proportional).
    pub fn same_locus(&self, o: &Line) -> bool {
        self.is_parallel(o) && (&self.a * &o.c - &o.a * &self.c).is_zero() && (&self.b * &o.c - &o.b * &self.c).is_zero()
    }

    pub fn intersection(&self, o: &Line) -> Option<Point> {
        let det = scalar::det2(&self.a, &o.b, &self.b, &o.a);
        if det.is_zero() {
            return None;
        }
        let x = scalar::det2(&self.b, &o.c, &o.b, &self.c) / &det;
        let y = scalar::det2(&o.a, &self.c, &self.a, &o.c) / &det;
        Some(Point::new(x, y))
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", scalar::format(&self.a), scalar::format(&self.b), scalar::format(&self.c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Halfline {
    pub apex: Point,
    #[serde(with = "scalar::pair")]
    pub dir: Vector,
}

impl Halfline {
    pub fn new(apex: Point, dir: Vector) -> Result<Halfline> {
        if dir.0.is_zero() && dir.1.is_zero() {
            return domain("halfline with zero direction");
        }
        Ok(Halfline { apex, dir })
    }

    pub fn contains(&self, q: &Point) -> bool {
        let v = q.sub(&self.apex);
        cross(&self.dir, &v).is_zero() && !dot(&self.dir, &v).is_negative()
    }
}

/// Closed disk given by its center and squared radius.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    #[serde(with = "scalar::text")]
    pub r2: Scalar,
}

impl Disk {
    pub fn new(center: Point, r2: Scalar) -> Result<Disk> {
        if r2.is_negative() {
            return domain("negative squared radius");
        }
        Ok(Disk { center, r2 })
    }

    /// The disk with diameter `pq` (Thales disk).
    pub fn on_diameter(p: &Point, q: &Point) -> Disk {
        Disk { center: p.midpoint(q), r2: p.dist2(q) / scalar::int(4) }
    }
}

/// Closed halfplane `{q : inside_sign · boundary(q) ≥ 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Halfplane {
    pub boundary: Line,
    pub inside_sign: i8,
}

impl Halfplane {
    pub fn new(boundary: Line, inside_sign: i8) -> Result<Halfplane> {
        if inside_sign != 1 && inside_sign != -1 {
            return domain("inside_sign must be ±1");
        }
        Ok(Halfplane { boundary, inside_sign })
    }

    /// `s · ℓ(q)`, nonnegative exactly on the closed halfplane.
    pub fn value(&self, q: &Point) -> Scalar {
        let v = self.boundary.eval(q);
        if self.inside_sign < 0 {
            -v
        } else {
            v
        }
    }

    /// Inward normal and offset, so the region is `n·q + c ≥ 0`.
    fn oriented(&self) -> (Vector, Scalar) {
        let l = &self.boundary;
        if self.inside_sign < 0 {
            ((-&l.a, -&l.b), -&l.c)
        } else {
            ((l.a.clone(), l.b.clone()), l.c.clone())
        }
    }
}

/// A side disk: a proper disk or, for halfline sides, a halfplane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GDisk {
    Disk(Disk),
    Halfplane(Halfplane),
}

fn nonneg(v: &Scalar) -> Result<()> {
    if v.is_negative() {
        return domain(format!("negative squared length {}", scalar::format(v)));
    }
    Ok(())
}

/// Squared median length from `P` to the midpoint of `QR`, from squared side lengths.
pub fn apollonius_pm2(pq2: &Scalar, pr2: &Scalar, qr2: &Scalar) -> Result<Scalar> {
    for v in [pq2, pr2, qr2] {
        nonneg(v)?;
    }
    Ok((scalar::int(2) * (pq2 + pr2) - qr2) / scalar::int(4))
}

/// Squared diagonal `PR` of a tangential quadrilateral with tangent lengths `a, b, c, d`.
pub fn tangential_diagonal2(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Result<Scalar> {
    for v in [a, b, c, d] {
        if !v.is_positive() {
            return domain(format!("tangent length must be positive, got {}", scalar::format(v)));
        }
    }
    let ac = a + c;
    let bd = b + d;
    Ok(&ac / &bd * (&ac * &bd + scalar::int(4) * b * d))
}

/// Power of `p` with respect to `disk`: the squared tangent length.
pub fn tangent_length2(p: &Point, disk: &Disk) -> Result<Scalar> {
    let v = p.dist2(&disk.center) - &disk.r2;
    if v.is_negative() {
        return domain("point lies strictly inside the disk");
    }
    Ok(v)
}

pub fn dist2_point_line(p: &Point, l: &Line) -> Scalar {
    let v = l.eval(p);
    &v * &v / l.norm2()
}

fn disk_disk(d1: &Disk, d2: &Disk) -> bool {
    let l = d1.center.dist2(&d2.center) - &d1.r2 - &d2.r2;
    if !l.is_positive() {
        return true;
    }
    &l * &l <= scalar::int(4) * &d1.r2 * &d2.r2
}

fn disk_halfplane(d: &Disk, h: &Halfplane) -> bool {
    let v = h.value(&d.center);
    if !v.is_negative() {
        return true;
    }
    &v * &v <= &d.r2 * h.boundary.norm2()
}

fn halfplane_halfplane(h1: &Halfplane, h2: &Halfplane) -> bool {
    let (n1, c1) = h1.oriented();
    let (n2, c2) = h2.oriented();
    if !cross(&n1, &n2).is_zero() || dot(&n1, &n2).is_positive() {
        return true;
    }
    // n2 = −λ·n1 with λ > 0: the strip −c1 ≤ n1·q ≤ c2/λ must be nonempty.
    let lambda = -dot(&n2, &n1) / norm2(&n1);
    !(c2 + lambda * c1).is_negative()
}

/// Exact test for a common point of two closed regions.
pub fn gdisks_intersect(d1: &GDisk, d2: &GDisk) -> bool {
    match (d1, d2) {
        (GDisk::Disk(a), GDisk::Disk(b)) => disk_disk(a, b),
        (GDisk::Disk(a), GDisk::Halfplane(h)) | (GDisk::Halfplane(h), GDisk::Disk(a)) => disk_halfplane(a, h),
        (GDisk::Halfplane(a), GDisk::Halfplane(b)) => halfplane_halfplane(a, b),
    }
}

/// Relative margin below which the double-precision screen defers to exact arithmetic.
pub const SCREEN_TOLERANCE: f64 = 1e-9;

/// Double-precision screen for disk pairs. Returns `None` when the margin is
/// too small to trust, or for halfplanes (which are always decided exactly).
pub fn gdisks_intersect_screen(d1: &GDisk, d2: &GDisk) -> Option<bool> {
    let (GDisk::Disk(a), GDisk::Disk(b)) = (d1, d2) else {
        return None;
    };
    let (ax, ay) = a.center.to_f64();
    let (bx, by) = b.center.to_f64();
    let ra = scalar::to_f64(&a.r2).sqrt();
    let rb = scalar::to_f64(&b.r2).sqrt();
    let d = ((ax - bx).powi(2) + (ay - by).powi(2)).sqrt();
    let margin = d - ra - rb;
    let scale = d.max(ra + rb).max(f64::MIN_POSITIVE);
    if !margin.is_finite() || margin.abs() <= SCREEN_TOLERANCE * scale {
        return None;
    }
    Some(margin < 0.0)
}

/// Screened test: the float answer when its margin is safe, exact otherwise.
pub fn gdisks_intersect_fast(d1: &GDisk, d2: &GDisk) -> bool {
    gdisks_intersect_screen(d1, d2).unwrap_or_else(|| gdisks_intersect(d1, d2))
}

pub fn point_in_gdisk(q: &Point, d: &GDisk) -> bool {
    match d {
        GDisk::Disk(k) => q.dist2(&k.center) <= k.r2,
        GDisk::Halfplane(h) => !h.value(q).is_negative(),
    }
}

/// Thales form of disk membership for the disk with diameter `ab`.
pub fn thales_contains(a: &Point, b: &Point, q: &Point) -> bool {
    !dot(&a.sub(q), &b.sub(q)).is_positive()
}

/// `D_inner ⊆ D_outer` for closed disks, on squared quantities:
/// `|c₁c₂| + r_in ≤ r_out` ⇔ `r_in² ≤ r_out²`, `t = r_out² + r_in² − |c₁c₂|² ≥ 0`, `4 r_out² r_in² ≤ t²`.
pub fn disk_contains_disk(outer: &Disk, inner: &Disk) -> bool {
    if inner.r2 > outer.r2 {
        return false;
    }
    let t = &outer.r2 + &inner.r2 - outer.center.dist2(&inner.center);
    if t.is_negative() {
        return false;
    }
    scalar::int(4) * &outer.r2 * &inner.r2 <= &t * &t
}

/// A point with coordinates in a multiquadratic extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdPoint {
    pub x: Surd,
    pub y: Surd,
}

impl SurdPoint {
    pub fn from_point(p: &Point) -> SurdPoint {
        SurdPoint { x: Surd::from(&p.x), y: Surd::from(&p.y) }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    pub fn dist2_point(&self, p: &Point) -> Surd {
        let dx = &self.x - &Surd::from(&p.x);
        let dy = &self.y - &Surd::from(&p.y);
        &dx.square() + &dy.square()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdLine {
    pub a: Surd,
    pub b: Surd,
    pub c: Surd,
}

impl SurdLine {
    pub fn eval(&self, p: &Point) -> Surd {
        &(&(&self.a * &Surd::from(&p.x)) + &(&self.b * &Surd::from(&p.y))) + &self.c
    }

    pub fn eval_surd(&self, p: &SurdPoint) -> Surd {
        &(&(&self.a * &p.x) + &(&self.b * &p.y)) + &self.c
    }
}

/// Disk with irrational center and radius, as produced by [`tri_tangent_disk`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdDisk {
    pub center: SurdPoint,
    pub radius: Surd,
}

impl SurdDisk {
    pub fn r2(&self) -> Surd {
        self.radius.square()
    }

    pub fn to_f64(&self) -> ((f64, f64), f64) {
        (self.center.to_f64(), self.radius.to_f64())
    }
}

/// `ℓ` oriented so that `hint` evaluates positive, with the norm `√(a²+b²)`.
fn oriented_toward(l: &Line, hint: &Point) -> Result<(Line, Surd)> {
    let v = l.eval(hint);
    if v.is_zero() {
        return domain("interior hint lies on a supporting line");
    }
    let l = if v.is_negative() { Line { a: -&l.a, b: -&l.b, c: -&l.c } } else { l.clone() };
    let n = Surd::sqrt(&l.norm2())?;
    Ok((l, n))
}

/// Locus of points equidistant from `s1` and `s2` on the side of `hint`.
/// Parallel lines yield their midline.
pub fn internal_bisector(s1: &Line, s2: &Line, interior_hint: &Point) -> Result<SurdLine> {
    if s1.same_locus(s2) {
        return domain("bisector of identical lines");
    }
    let (l1, n1) = oriented_toward(s1, interior_hint)?;
    let (l2, n2) = oriented_toward(s2, interior_hint)?;
    // l1(p)/n1 = l2(p)/n2, scaled by n1·n2.
    let a = &n2.scale(&l1.a) - &n1.scale(&l2.a);
    let b = &n2.scale(&l1.b) - &n1.scale(&l2.b);
    let c = &n2.scale(&l1.c) - &n1.scale(&l2.c);
    if a.is_zero() && b.is_zero() {
        return domain("lines are parallel and the hint lies outside their strip");
    }
    Ok(SurdLine { a, b, c })
}

/// Disk tangent to three lines, centered on the side of all three that
/// contains `interior_hint`.
pub fn tri_tangent_disk(s_prev: &Line, s_mid: &Line, s_next: &Line, interior_hint: &Point) -> Result<SurdDisk> {
    let mut rows = Vec::with_capacity(3);
    for l in [s_prev, s_mid, s_next] {
        rows.push(oriented_toward(l, interior_hint)?);
    }
    // a_i x + b_i y − n_i ρ = −c_i
    let det3 = |m: [[Surd; 3]; 3]| -> Surd {
        let t0 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
        let t1 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
        let t2 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
        &(&t0 - &t1) + &t2
    };
    let col = |f: &dyn Fn(&(Line, Surd)) -> Surd| -> [Surd; 3] { [f(&rows[0]), f(&rows[1]), f(&rows[2])] };
    let ca = col(&|r| Surd::from(&r.0.a));
    let cb = col(&|r| Surd::from(&r.0.b));
    let cn = col(&|r| -&r.1);
    let cr = col(&|r| Surd::from(&-&r.0.c));
    let build = |c0: &[Surd; 3], c1: &[Surd; 3], c2: &[Surd; 3]| -> [[Surd; 3]; 3] {
        std::array::from_fn(|i| [c0[i].clone(), c1[i].clone(), c2[i].clone()])
    };
    let d = det3(build(&ca, &cb, &cn));
    if d.is_zero() {
        return domain("no disk is tangent to all three lines");
    }
    let inv = d.inv()?;
    let x = &det3(build(&cr, &cb, &cn)) * &inv;
    let y = &det3(build(&ca, &cr, &cn)) * &inv;
    let rho = &det3(build(&ca, &cb, &cr)) * &inv;
    if !rho.is_positive() {
        return domain("tangent disk on the hint side has nonpositive radius");
    }
    Ok(SurdDisk { center: SurdPoint { x, y }, radius: rho })
}

/// Signed distance of a surd point to `l` scaled by `|n|`, i.e. `ℓ(p)`, compared
/// with `radius·|n|`: returns the sign of `ℓ(p) − radius·√(a²+b²)`.
pub fn surd_clearance_sign(l: &Line, p: &SurdPoint, radius: &Surd) -> Result<i32> {
    let n = Surd::sqrt(&l.norm2())?;
    Ok((&l.eval_surd(p) - &(radius * &n)).sign())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn disk(x: i64, y: i64, r2: Scalar) -> GDisk {
        GDisk::Disk(Disk::new(Point::int(x, y), r2).unwrap())
    }

    #[test]
    fn apollonius_examples() {
        assert_eq!(apollonius_pm2(&int(4), &int(4), &int(8)).unwrap(), int(2));
        assert_eq!(apollonius_pm2(&int(7), &int(7), &int(0)).unwrap(), int(7));
        assert_eq!(apollonius_pm2(&int(37), &int(36), &int(25)).unwrap(), rat(121, 4));
        assert!(apollonius_pm2(&int(-1), &int(1), &int(1)).is_err());
    }

    #[test]
    fn tangential_examples() {
        assert_eq!(tangential_diagonal2(&int(1), &int(1), &int(1), &int(1)).unwrap(), int(8));
        assert_eq!(tangential_diagonal2(&int(3), &int(3), &int(3), &int(3)).unwrap(), int(72));
        assert_eq!(tangential_diagonal2(&int(2), &int(1), &int(3), &int(1)).unwrap(), int(35));
        assert!(tangential_diagonal2(&int(0), &int(1), &int(1), &int(1)).is_err());
    }

    #[test]
    fn tangent_lengths() {
        let d = Disk::new(Point::int(0, 0), int(4)).unwrap();
        assert_eq!(tangent_length2(&Point::int(3, 0), &d).unwrap(), int(5));
        assert_eq!(tangent_length2(&Point::int(2, 0), &d).unwrap(), int(0));
        assert!(tangent_length2(&Point::int(1, 0), &d).is_err());
        let e = Disk::new(Point::int(1, 1), int(2)).unwrap();
        assert_eq!(tangent_length2(&Point::int(5, 5), &e).unwrap(), int(30));
    }

    #[test]
    fn intersection_cases() {
        let a = disk(0, 0, rat(1, 4));
        assert!(gdisks_intersect(&a, &a));
        // Opposite sides of the unit square: tangent.
        let p = GDisk::Disk(Disk::on_diameter(&Point::int(0, 0), &Point::int(1, 0)));
        let q = GDisk::Disk(Disk::on_diameter(&Point::int(1, 1), &Point::int(0, 1)));
        assert!(gdisks_intersect(&p, &q));
        let far = disk(3, 0, int(1));
        assert!(!gdisks_intersect(&disk(0, 0, int(1)), &far));
        // One disk inside the other.
        assert!(gdisks_intersect(&disk(0, 0, int(100)), &disk(1, 1, int(1))));
    }

    #[test]
    fn halfplane_cases() {
        let up = GDisk::Halfplane(Halfplane::new(Line::new(int(0), int(1), int(0)).unwrap(), 1).unwrap());
        let below = GDisk::Halfplane(Halfplane::new(Line::new(int(0), int(1), int(1)).unwrap(), -1).unwrap());
        let touching = GDisk::Halfplane(Halfplane::new(Line::new(int(0), int(1), int(0)).unwrap(), -1).unwrap());
        let slanted = GDisk::Halfplane(Halfplane::new(Line::new(int(1), int(1), int(0)).unwrap(), -1).unwrap());
        assert!(!gdisks_intersect(&up, &below));
        assert!(gdisks_intersect(&up, &touching));
        assert!(gdisks_intersect(&up, &slanted));
        assert!(gdisks_intersect(&disk(0, -1, int(1)), &up));
        assert!(!gdisks_intersect(&disk(0, -2, int(1)), &up));
        assert!(gdisks_intersect(&up, &disk(0, 5, int(1))));
    }

    #[test]
    fn membership() {
        let a = Point::int(0, 0);
        let b = Point::int(2, 0);
        let d = GDisk::Disk(Disk::on_diameter(&a, &b));
        assert!(point_in_gdisk(&a, &d));
        assert!(point_in_gdisk(&Point::int(1, 0), &d));
        assert!(!point_in_gdisk(&Point::int(3, 0), &d));
        assert!(thales_contains(&a, &b, &Point::int(1, 1)));
        assert!(!thales_contains(&a, &b, &Point::int(3, 0)));
    }

    #[test]
    fn distances() {
        let x_axis = Line::new(int(0), int(1), int(0)).unwrap();
        assert_eq!(dist2_point_line(&Point::int(5, 0), &x_axis), int(0));
        assert_eq!(dist2_point_line(&Point::int(0, 1), &x_axis), int(1));
        let l = Line::new(int(3), int(4), int(0)).unwrap();
        assert_eq!(dist2_point_line(&Point::int(3, 4), &l), int(25));
    }

    #[test]
    fn bisectors() {
        let x_axis = Line::new(int(0), int(1), int(0)).unwrap();
        let y_axis = Line::new(int(1), int(0), int(0)).unwrap();
        let b = internal_bisector(&x_axis, &y_axis, &Point::int(1, 1)).unwrap();
        assert!(b.eval(&Point::int(7, 7)).is_zero());
        assert!(!b.eval(&Point::int(7, -7)).is_zero());
        let top = Line::new(int(0), int(1), int(-2)).unwrap();
        let mid = internal_bisector(&x_axis, &top, &Point::int(0, 1)).unwrap();
        assert!(mid.eval(&Point::int(-3, 1)).is_zero());
        assert!(internal_bisector(&x_axis, &x_axis, &Point::int(0, 1)).is_err());
        // Through the origin along direction (3, 4).
        let slope = Line::through(&Point::int(0, 0), &Point::int(3, 4));
        let bis = internal_bisector(&x_axis, &slope, &Point::int(1, 0).offset(&(int(0), rat(1, 10)))).unwrap();
        for t in [1, 2, 5] {
            // Points (2t, t) lie on the bisector of the x axis and the (3,4) line.
            let p = Point::int(2 * t, t);
            assert!(bis.eval(&p).is_zero());
            assert_eq!(dist2_point_line(&p, &x_axis), dist2_point_line(&p, &slope));
        }
    }

    #[test]
    fn tri_tangent_incircle() {
        let x0 = Line::new(int(1), int(0), int(0)).unwrap();
        let y0 = Line::new(int(0), int(1), int(0)).unwrap();
        let hyp = Line::new(int(1), int(1), int(-2)).unwrap();
        let d = tri_tangent_disk(&x0, &y0, &hyp, &Point::new(rat(1, 2), rat(1, 2))).unwrap();
        let two = Surd::rational(int(2));
        let expect = &two - &Surd::sqrt(&int(2)).unwrap();
        assert_eq!(d.radius, expect);
        assert_eq!(d.center.x, expect);
        assert_eq!(d.center.y, expect);
        let inward = Line::new(int(-1), int(-1), int(2)).unwrap();
        for l in [&x0, &y0, &inward] {
            assert_eq!(surd_clearance_sign(l, &d.center, &d.radius).unwrap(), 0);
        }
    }

    #[test]
    fn screen_agrees_when_confident() {
        let a = disk(0, 0, int(1));
        let b = disk(3, 0, int(1));
        assert_eq!(gdisks_intersect_screen(&a, &b), Some(false));
        let t = disk(2, 0, int(1));
        assert_eq!(gdisks_intersect_screen(&a, &t), None);
        assert!(gdisks_intersect_fast(&a, &t));
    }
}
