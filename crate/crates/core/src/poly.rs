//! Convex polygons (bounded and unbounded), their side disks, the `a|b`
//! composition and side elision.
//!
//! A bounded polygon is a CCW vertex cycle `v_0 … v_{n−1}` with side `i`
//! running from `v_i` to `v_{i+1}`. An unbounded polygon is a vertex chain
//! `v_0 … v_m` plus two directions pointing away from the chain: side `0` is
//! the ray from `v_0` along `first_dir`, sides `1 … m` are the chain
//! segments, and side `m+1` is the ray from `v_m` along `last_dir`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::geom::{cross, dot, orient, Disk, GDisk, Halfline, Halfplane, Line, Point, Vector};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Side {
    Segment { p: Point, q: Point },
    Ray {
        apex: Point,
        #[serde(with = "scalar::pair")]
        dir: Vector,
    },
}

impl Side {
    pub fn is_ray(&self) -> bool {
        matches!(self, Side::Ray { .. })
    }

    pub fn disk(&self) -> GDisk {
        match self {
            Side::Segment { p, q } => GDisk::Disk(Disk::on_diameter(p, q)),
            Side::Ray { apex, dir } => {
                // Perpendicular to the ray at its apex, ray side included.
                let c = -(&dir.0 * &apex.x + &dir.1 * &apex.y);
                GDisk::Halfplane(Halfplane { boundary: Line { a: dir.0.clone(), b: dir.1.clone(), c }, inside_sign: 1 })
            }
        }
    }

    pub fn as_halfline(&self) -> Option<Halfline> {
        match self {
            Side::Ray { apex, dir } => Some(Halfline { apex: apex.clone(), dir: dir.clone() }),
            Side::Segment { .. } => None,
        }
    }

    /// Every point of the closed side lies on `l`.
    pub fn lies_on(&self, l: &Line) -> bool {
        match self {
            Side::Segment { p, q } => l.eval(p).is_zero() && l.eval(q).is_zero(),
            Side::Ray { apex, dir } => l.eval(apex).is_zero() && (&l.a * &dir.0 + &l.b * &dir.1).is_zero(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Bounded,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
    rays: Option<(Vector, Vector)>,
}

/// JSON document form of a polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonDoc {
    pub kind: Kind,
    pub vertices: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_pair")]
    pub first_dir: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_pair")]
    pub last_dir: Option<Vector>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub normalize: bool,
}

mod opt_pair {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vector>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            Some(p) => scalar::pair::serialize(p, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Vector>, D::Error> {
        scalar::pair::deserialize(d).map(Some)
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidPolygon(msg.into()))
}

fn neg(v: &Vector) -> Vector {
    (-&v.0, -&v.1)
}

fn is_zero_vec(v: &Vector) -> bool {
    v.0.is_zero() && v.1.is_zero()
}

/// Whether `w` is at a turn of at least π from `v` (counter-clockwise).
pub fn turn_at_least_pi(v: &Vector, w: &Vector) -> bool {
    let c = cross(v, w);
    c.is_negative() || (c.is_zero() && dot(v, w).is_negative())
}

impl ConvexPolygon {
    /// Validates a CCW vertex cycle; clockwise input is reversed when `normalize` is set.
    pub fn bounded(vertices: Vec<Point>, normalize: bool) -> Result<ConvexPolygon> {
        let n = vertices.len();
        if n < 3 {
            return invalid(format!("a bounded polygon needs at least 3 vertices, got {n}"));
        }
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return invalid(format!("repeated vertex {:?} at positions {i} and {j}", vertices[i]));
                }
            }
        }
        let turns: Vec<i32> =
            (0..n).map(|i| scalar::sign(&orient(&vertices[(i + n - 1) % n], &vertices[i], &vertices[(i + 1) % n]))).collect();
        if let Some(i) = turns.iter().position(|&t| t == 0) {
            return invalid(format!("collinear vertices around position {i}"));
        }
        let mut vertices = vertices;
        if turns.iter().all(|&t| t < 0) {
            if !normalize {
                return invalid("vertices are in clockwise order (set normalize to reverse them)");
            }
            vertices.reverse();
        } else if !turns.iter().all(|&t| t > 0) {
            return invalid("polygon is not convex");
        }
        // Left turns everywhere still allow a star; require every vertex strictly left of every edge.
        for i in 0..n {
            let (p, q) = (&vertices[i], &vertices[(i + 1) % n]);
            for (k, r) in vertices.iter().enumerate() {
                if k != i && k != (i + 1) % n && !orient(p, q, r).is_positive() {
                    return invalid("polygon winds more than once or is not convex");
                }
            }
        }
        Ok(ConvexPolygon { vertices, rays: None })
    }

    /// Validates an unbounded polygon from its vertex chain and the two outward ray directions.
    pub fn unbounded(vertices: Vec<Point>, first_dir: Vector, last_dir: Vector, normalize: bool) -> Result<ConvexPolygon> {
        if vertices.len() < 2 {
            return invalid("an unbounded polygon needs at least 2 chain vertices (3 sides)");
        }
        if is_zero_vec(&first_dir) || is_zero_vec(&last_dir) {
            return invalid("ray direction is zero");
        }
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i] == vertices[j] {
                    return invalid(format!("repeated vertex {:?}", vertices[i]));
                }
            }
        }
        match Self::check_unbounded(&vertices, &first_dir, &last_dir) {
            Ok(()) => Ok(ConvexPolygon { vertices, rays: Some((first_dir, last_dir)) }),
            Err(e) if normalize => {
                let mut rev = vertices;
                rev.reverse();
                Self::check_unbounded(&rev, &last_dir, &first_dir).map_err(|_| e)?;
                Ok(ConvexPolygon { vertices: rev, rays: Some((last_dir, first_dir)) })
            }
            Err(e) => Err(e),
        }
    }

    fn check_unbounded(vertices: &[Point], first_dir: &Vector, last_dir: &Vector) -> Result<()> {
        let m = vertices.len() - 1;
        let mut t = Vec::with_capacity(m + 2);
        t.push(neg(first_dir));
        for k in 1..=m {
            t.push(vertices[k].sub(&vertices[k - 1]));
        }
        t.push(last_dir.clone());
        for k in 0..t.len() - 1 {
            if !cross(&t[k], &t[k + 1]).is_positive() {
                return invalid(format!("no strict left turn at chain vertex {k}"));
            }
        }
        // Total turning at most π: every later direction stays left of the first.
        for (k, d) in t.iter().enumerate().skip(1) {
            let c = cross(&t[0], d);
            if c.is_negative() || (c.is_zero() && (k + 1 != t.len() || !dot(&t[0], d).is_negative())) {
                return invalid("boundary turns by more than π, the rays would meet");
            }
        }
        Ok(())
    }

    pub fn from_doc(doc: &PolygonDoc) -> Result<ConvexPolygon> {
        match doc.kind {
            Kind::Bounded => {
                if doc.first_dir.is_some() || doc.last_dir.is_some() {
                    return invalid("bounded polygons take no ray directions");
                }
                ConvexPolygon::bounded(doc.vertices.clone(), doc.normalize)
            }
            Kind::Unbounded => {
                let (Some(f), Some(l)) = (&doc.first_dir, &doc.last_dir) else {
                    return invalid("unbounded polygons need first_dir and last_dir");
                };
                ConvexPolygon::unbounded(doc.vertices.clone(), f.clone(), l.clone(), doc.normalize)
            }
        }
    }

    pub fn to_doc(&self) -> PolygonDoc {
        PolygonDoc {
            kind: self.kind(),
            vertices: self.vertices.clone(),
            first_dir: self.rays.as_ref().map(|r| r.0.clone()),
            last_dir: self.rays.as_ref().map(|r| r.1.clone()),
            normalize: false,
        }
    }

    pub fn from_json(text: &str) -> Result<ConvexPolygon> {
        let doc: PolygonDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        ConvexPolygon::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("polygon documents always serialize")
    }

    pub fn kind(&self) -> Kind {
        if self.rays.is_some() {
            Kind::Unbounded
        } else {
            Kind::Bounded
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_none()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn rays(&self) -> Option<&(Vector, Vector)> {
        self.rays.as_ref()
    }

    /// Number of sides.
    pub fn n(&self) -> usize {
        match self.rays {
            None => self.vertices.len(),
            Some(_) => self.vertices.len() + 1,
        }
    }

    pub fn side(&self, i: usize) -> Side {
        let n = self.n();
        assert!(i < n, "side index {i} out of range for {n} sides");
        match &self.rays {
            None => Side::Segment { p: self.vertices[i].clone(), q: self.vertices[(i + 1) % n].clone() },
            Some((f, l)) => {
                if i == 0 {
                    Side::Ray { apex: self.vertices[0].clone(), dir: f.clone() }
                } else if i == n - 1 {
                    Side::Ray { apex: self.vertices[n - 2].clone(), dir: l.clone() }
                } else {
                    Side::Segment { p: self.vertices[i - 1].clone(), q: self.vertices[i].clone() }
                }
            }
        }
    }

    pub fn sides(&self) -> Vec<Side> {
        (0..self.n()).map(|i| self.side(i)).collect()
    }

    /// Supporting line of side `i`, oriented with the interior on its left.
    pub fn side_line(&self, i: usize) -> Line {
        match self.side(i) {
            Side::Segment { p, q } => Line::through(&p, &q),
            Side::Ray { apex, dir } => {
                if i == 0 {
                    Line::with_dir(&apex, &neg(&dir))
                } else {
                    Line::with_dir(&apex, &dir)
                }
            }
        }
    }

    /// Traversal direction of side `i` (CCW).
    pub fn side_dir(&self, i: usize) -> Vector {
        self.side_line(i).direction()
    }

    pub fn side_disks(&self) -> Vec<GDisk> {
        self.sides().iter().map(Side::disk).collect()
    }

    /// Sides `i` and `j` are consecutive on the boundary. The two rays of an
    /// unbounded polygon are not consecutive.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let n = self.n();
        if i == j {
            return false;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        if hi - lo == 1 {
            return true;
        }
        self.is_bounded() && lo == 0 && hi == n - 1
    }

    /// A point strictly inside the polygon.
    pub fn interior_point(&self) -> Point {
        let mut pts = self.vertices.clone();
        if let Some((f, l)) = &self.rays {
            pts.push(self.vertices[0].offset(f));
            pts.push(self.vertices[self.vertices.len() - 1].offset(l));
        }
        let k = scalar::int(pts.len() as i64);
        let sx: Scalar = pts.iter().map(|p| p.x.clone()).sum();
        let sy: Scalar = pts.iter().map(|p| p.y.clone()).sum();
        Point::new(sx / &k, sy / k)
    }

    /// Closed containment.
    pub fn contains(&self, q: &Point) -> bool {
        (0..self.n()).all(|i| !self.side_line(i).eval(q).is_negative())
    }

    /// Twice the signed area (bounded polygons only).
    pub fn area2(&self) -> Option<Scalar> {
        if !self.is_bounded() {
            return None;
        }
        let n = self.vertices.len();
        Some((0..n).map(|i| crate::geom::cross(&(self.vertices[i].x.clone(), self.vertices[i].y.clone()), &(self.vertices[(i + 1) % n].x.clone(), self.vertices[(i + 1) % n].y.clone()))).sum())
    }

    /// The segment or halfline `a|b` replacing sides `i` and `j`.
    pub fn compose_ab(&self, i: usize, j: usize) -> Result<Side> {
        let n = self.n();
        if i >= n || j >= n {
            return domain(format!("side index out of range for {n} sides"));
        }
        match &self.rays {
            None => {
                let (a, b) = if j == (i + 1) % n {
                    (i, j)
                } else if i == (j + 1) % n {
                    (j, i)
                } else {
                    return domain(format!("sides {i} and {j} are not consecutive"));
                };
                Ok(Side::Segment { p: self.vertices[a].clone(), q: self.vertices[(b + 1) % n].clone() })
            }
            Some((f, l)) => {
                let (a, b) = (i.min(j), i.max(j));
                let m = self.vertices.len() - 1;
                if a == 0 && b == n - 1 {
                    Ok(Side::Segment { p: self.vertices[m].clone(), q: self.vertices[0].clone() })
                } else if b != a + 1 {
                    domain(format!("sides {i} and {j} are not consecutive"))
                } else if a == 0 {
                    Ok(Side::Ray { apex: self.vertices[1].clone(), dir: f.clone() })
                } else if b == n - 1 {
                    Ok(Side::Ray { apex: self.vertices[m - 1].clone(), dir: l.clone() })
                } else {
                    Ok(Side::Segment { p: self.vertices[a - 1].clone(), q: self.vertices[b].clone() })
                }
            }
        }
    }

    /// Replaces sides `i` and `j` by `a|b`. Returns the smaller polygon and
    /// the index of the new side in it.
    pub fn elide(&self, i: usize, j: usize) -> Result<(ConvexPolygon, usize)> {
        self.compose_ab(i, j)?;
        let n = self.n();
        let (a, b) = (i.min(j), i.max(j));
        match &self.rays {
            None => {
                if n <= 3 {
                    return domain("eliding two sides of a triangle leaves fewer than 3 sides");
                }
                // Drop the shared vertex.
                let (drop, new_index) = if b == a + 1 { (b, a) } else { (0, n - 2) };
                let mut v = self.vertices.clone();
                v.remove(drop);
                Ok((ConvexPolygon::bounded(v, false)?, new_index))
            }
            Some((f, l)) => {
                if a == 0 && b == n - 1 {
                    if self.vertices.len() < 3 {
                        return domain("closing the rays leaves fewer than 3 sides");
                    }
                    let m = self.vertices.len() - 1;
                    let v: Vec<Point> = self.vertices.clone();
                    return Ok((ConvexPolygon::bounded(v, false)?, m));
                }
                if n <= 3 {
                    return domain("elision leaves fewer than 3 sides");
                }
                let mut v = self.vertices.clone();
                v.remove(a);
                let p = ConvexPolygon::unbounded(v, f.clone(), l.clone(), false)?;
                Ok((p, a))
            }
        }
    }
}

impl Serialize for ConvexPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConvexPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<ConvexPolygon, D::Error> {
        let doc = PolygonDoc::deserialize(d)?;
        ConvexPolygon::from_doc(&doc).map_err(serde::de::Error::custom)
    }
}

/// Result of [`extend_to_polygon`]: the polygon and, for each input side,
/// the index of the side that contains it.
#[derive(Clone, Debug)]
pub struct Extended {
    pub polygon: ConvexPolygon,
    pub index_of: Vec<usize>,
}

fn supporting_line(side: &Side, is_first_ray: bool) -> Line {
    match side {
        Side::Segment { p, q } => Line::through(p, q),
        Side::Ray { apex, dir } => {
            if is_first_ray {
                Line::with_dir(apex, &neg(dir))
            } else {
                Line::with_dir(apex, dir)
            }
        }
    }
}

/// The convex polygon cut out by the supporting lines of sides taken in CCW
/// order from some convex polygon. Each input side is contained in the
/// corresponding output side.
///
/// Rays must be given with the flag telling whether they are the polygon's
/// first (incoming) ray; see [`ConvexPolygon::side`].
pub fn extend_to_polygon(sides: &[(Side, bool)]) -> Result<Extended> {
    let k = sides.len();
    if k < 3 {
        return domain("need at least 3 sides to extend");
    }
    let lines: Vec<Line> = sides.iter().map(|(s, first)| supporting_line(s, *first)).collect();
    let dirs: Vec<Vector> = lines.iter().map(Line::direction).collect();
    let gaps: Vec<usize> = (0..k).filter(|&i| turn_at_least_pi(&dirs[i], &dirs[(i + 1) % k])).collect();
    let vertex = |i: usize, j: usize| -> Result<Point> {
        lines[i].intersection(&lines[j]).ok_or_else(|| Error::Domain(format!("consecutive supporting lines {i}, {j} are parallel")))
    };
    match gaps.as_slice() {
        [] => {
            let mut v = Vec::with_capacity(k);
            for i in 0..k {
                v.push(vertex((i + k - 1) % k, i)?);
            }
            let polygon = ConvexPolygon::bounded(v, false).map_err(|e| Error::Domain(format!("inconsistent orientation: {e}")))?;
            Ok(Extended { polygon, index_of: (0..k).collect() })
        }
        [g] => {
            // Sides g+1, …, g (cyclically) with rays on g+1 and g.
            let order: Vec<usize> = (1..=k).map(|t| (g + t) % k).collect();
            let mut v = Vec::with_capacity(k - 1);
            for t in 0..k - 1 {
                v.push(vertex(order[t], order[t + 1])?);
            }
            let first_dir = neg(&dirs[order[0]]);
            let last_dir = dirs[order[k - 1]].clone();
            let polygon = ConvexPolygon::unbounded(v, first_dir, last_dir, false)
                .map_err(|e| Error::Domain(format!("inconsistent orientation: {e}")))?;
            let mut index_of = vec![0; k];
            for (t, &s) in order.iter().enumerate() {
                index_of[s] = t;
            }
            Ok(Extended { polygon, index_of })
        }
        _ => domain("sides are not in CCW order on a convex polygon"),
    }
}

/// Sides `idx` of `p`, tagged for [`extend_to_polygon`].
pub fn tagged_sides(p: &ConvexPolygon, idx: &[usize]) -> Vec<(Side, bool)> {
    idx.iter().map(|&i| (p.side(i), !p.is_bounded() && i == 0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::gdisks_intersect;
    use crate::scalar::{int, rat};

    fn square() -> ConvexPolygon {
        ConvexPolygon::bounded(vec![Point::int(0, 0), Point::int(1, 0), Point::int(1, 1), Point::int(0, 1)], false).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(square().n(), 4);
        let cw = vec![Point::int(0, 1), Point::int(1, 1), Point::int(1, 0), Point::int(0, 0)];
        assert!(ConvexPolygon::bounded(cw.clone(), false).is_err());
        let p = ConvexPolygon::bounded(cw, true).unwrap();
        assert_eq!(p.side_disks(), ConvexPolygon::bounded(p.vertices().to_vec(), false).unwrap().side_disks());
        let col = vec![Point::int(0, 0), Point::int(1, 0), Point::int(2, 0), Point::int(0, 1)];
        assert!(matches!(ConvexPolygon::bounded(col, false), Err(Error::InvalidPolygon(_))));
        let rep = vec![Point::int(0, 0), Point::int(1, 0), Point::int(0, 0), Point::int(0, 1)];
        assert!(ConvexPolygon::bounded(rep, false).is_err());
        let dent = vec![Point::int(0, 0), Point::int(4, 0), Point::int(1, 1), Point::int(0, 4)];
        assert!(ConvexPolygon::bounded(dent, false).is_err());
        // Pentagram: all left turns, winds twice.
        let star = vec![Point::int(0, 10), Point::int(-6, -8), Point::int(10, 3), Point::int(-10, 3), Point::int(6, -8)];
        assert!(ConvexPolygon::bounded(star, false).is_err());
    }

    #[test]
    fn square_disks() {
        let d = square().side_disks();
        assert_eq!(d.len(), 4);
        for g in &d {
            match g {
                GDisk::Disk(k) => assert_eq!(k.r2, rat(1, 4)),
                GDisk::Halfplane(_) => panic!("bounded polygon produced a halfplane"),
            }
        }
    }

    fn open_v() -> ConvexPolygon {
        ConvexPolygon::unbounded(
            vec![Point::int(-2, 1), Point::int(-1, 0), Point::int(1, 0), Point::int(2, 1)],
            (int(-1), int(2)),
            (int(1), int(2)),
            false,
        )
        .unwrap()
    }

    #[test]
    fn unbounded_validation() {
        let p = open_v();
        assert_eq!(p.n(), 5);
        let d = p.side_disks();
        assert!(matches!(d[0], GDisk::Halfplane(_)));
        assert!(matches!(d[4], GDisk::Halfplane(_)));
        assert!(d[1..4].iter().all(|g| matches!(g, GDisk::Disk(_))));
        assert!(!p.adjacent(0, 4));
        assert!(p.contains(&p.interior_point()));
        // Rays that converge are rejected.
        let closing = ConvexPolygon::unbounded(vec![Point::int(0, 0), Point::int(1, 0)], (int(1), int(1)), (int(-1), int(1)), false);
        assert!(closing.is_err());
        // Half-strip: antiparallel boundary directions are fine.
        let strip = ConvexPolygon::unbounded(vec![Point::int(0, 0), Point::int(1, 0)], (int(0), int(1)), (int(0), int(1)), false);
        assert!(strip.is_ok());
        // Reversed chain is accepted only with normalize.
        let rev = vec![Point::int(2, 1), Point::int(1, 0), Point::int(-1, 0), Point::int(-2, 1)];
        assert!(ConvexPolygon::unbounded(rev.clone(), (int(1), int(2)), (int(-1), int(2)), false).is_err());
        let fixed = ConvexPolygon::unbounded(rev, (int(1), int(2)), (int(-1), int(2)), true).unwrap();
        assert_eq!(fixed, p);
    }

    #[test]
    fn json_round_trip() {
        let p = open_v();
        let back = ConvexPolygon::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        let q = ConvexPolygon::from_json(r#"{"kind":"bounded","vertices":[["0","0"],["1/2","0"],[0,1]]}"#).unwrap();
        assert_eq!(q.vertices()[1].x, rat(1, 2));
        assert!(ConvexPolygon::from_json(r#"{"kind":"bounded","vertices":[["0","0"]"#).is_err());
    }

    #[test]
    fn composition_cases() {
        let s = square();
        assert_eq!(s.compose_ab(0, 1).unwrap(), Side::Segment { p: Point::int(0, 0), q: Point::int(1, 1) });
        assert_eq!(s.compose_ab(3, 0).unwrap(), Side::Segment { p: Point::int(0, 1), q: Point::int(1, 0) });
        assert!(s.compose_ab(0, 2).is_err());
        // Ray from (0,0) along (−1,0), then the segment (0,0)–(0,1): a half-strip.
        let u = ConvexPolygon::unbounded(vec![Point::int(0, 0), Point::int(0, 1)], (int(-1), int(0)), (int(-1), int(0)), false).unwrap();
        assert_eq!(u.compose_ab(0, 1).unwrap(), Side::Ray { apex: Point::int(0, 1), dir: (int(-1), int(0)) });
        // The rays of a wedge-like region that would converge are rejected.
        let u = ConvexPolygon::unbounded(vec![Point::int(0, 1), Point::int(0, 0), Point::int(4, 0)], (int(1), int(0)), (int(0), int(1)), false);
        assert!(u.is_err());
        assert_eq!(open_v().compose_ab(4, 0).unwrap(), Side::Segment { p: Point::int(2, 1), q: Point::int(-2, 1) });
        let two = ConvexPolygon::unbounded(vec![Point::int(0, 0), Point::int(4, 0)], (int(-1), int(1)), (int(1), int(1)), false).unwrap();
        assert_eq!(two.compose_ab(0, 2).unwrap(), Side::Segment { p: Point::int(4, 0), q: Point::int(0, 0) });
    }

    #[test]
    fn elision() {
        let (t, k) = square().elide(0, 1).unwrap();
        assert_eq!(t.vertices(), &[Point::int(0, 0), Point::int(1, 1), Point::int(0, 1)]);
        assert_eq!(t.side(k), square().compose_ab(0, 1).unwrap());
        let (t, k) = square().elide(3, 0).unwrap();
        assert_eq!(t.side(k), square().compose_ab(3, 0).unwrap());
        let (b, k) = open_v().elide(0, 4).unwrap();
        assert!(b.is_bounded());
        assert_eq!(b.n(), 4);
        assert_eq!(b.side(k), open_v().compose_ab(0, 4).unwrap());
        let (u, k) = open_v().elide(0, 1).unwrap();
        assert_eq!(u.n(), 4);
        assert_eq!(u.side(k), open_v().compose_ab(0, 1).unwrap());
        let (u, k) = open_v().elide(3, 4).unwrap();
        assert_eq!(u.side(k), open_v().compose_ab(3, 4).unwrap());
        let (u, k) = open_v().elide(2, 3).unwrap();
        assert_eq!(u.side(k), open_v().compose_ab(2, 3).unwrap());
        let tri = ConvexPolygon::bounded(vec![Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)], false).unwrap();
        assert!(tri.elide(0, 1).is_err());
    }

    #[test]
    fn ab_disk_keeps_square_edges() {
        let s = square();
        let ab = s.compose_ab(0, 1).unwrap().disk();
        assert!(gdisks_intersect(&ab, &s.side(2).disk()));
    }

    #[test]
    fn extension_of_hexagon_sides_is_identity() {
        let hex = ConvexPolygon::bounded(
            vec![Point::int(2, 0), Point::int(4, 0), Point::int(5, 2), Point::int(4, 4), Point::int(2, 4), Point::int(1, 2)],
            false,
        )
        .unwrap();
        let e = extend_to_polygon(&tagged_sides(&hex, &[0, 1, 2, 3, 4, 5])).unwrap();
        assert_eq!(e.polygon, hex);
    }

    #[test]
    fn extension_opens_across_a_wide_gap() {
        // Octagon-like: keep sides whose directions span less than π.
        let oct = ConvexPolygon::bounded(
            vec![
                Point::int(1, 0),
                Point::int(2, 0),
                Point::int(3, 1),
                Point::int(3, 2),
                Point::int(2, 3),
                Point::int(1, 3),
                Point::int(0, 2),
                Point::int(0, 1),
            ],
            false,
        )
        .unwrap();
        let e = extend_to_polygon(&tagged_sides(&oct, &[0, 1, 2, 3])).unwrap();
        assert!(!e.polygon.is_bounded());
        for (k, &i) in [0usize, 1, 2, 3].iter().enumerate() {
            assert!(oct.side(i).lies_on(&e.polygon.side_line(e.index_of[k])));
        }
        let e = extend_to_polygon(&tagged_sides(&oct, &[0, 2, 4, 6])).unwrap();
        assert!(e.polygon.is_bounded());
        for v in oct.vertices() {
            assert!(e.polygon.contains(v));
        }
    }
}
