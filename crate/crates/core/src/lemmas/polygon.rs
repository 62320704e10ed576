//! Per-polygon checks: 1-chord, no-3-cycles, the tri-tangent disk, the
//! `abcx` and `a|b` lemmas, arrangement depth and the midpoint-sum example.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{reject, Witness};
use crate::error::{domain, Result};
use crate::geom::{gdisks_intersect, tri_tangent_disk, GDisk, Line, Point, SurdDisk, SurdPoint};
use crate::graph::{build_graph, is_planar_hamiltonian, BipartiteCert, IntersectGraph};
use crate::interval::Interval;
use crate::poly::{extend_to_polygon, tagged_sides, ConvexPolygon, Side};
use crate::scalar::{self, Scalar};
use crate::surd::Surd;

/// Number of intersecting non-neighbouring disks of every side.
pub fn chord_counts(p: &ConvexPolygon, g: &IntersectGraph) -> Vec<usize> {
    (0..p.n()).map(|i| g.neighbors(i).into_iter().filter(|&j| !p.adjacent(i, j)).count()).collect()
}

pub fn one_chord_from_graph(p: &ConvexPolygon, g: &IntersectGraph) -> (bool, Witness) {
    let chords = chord_counts(p, g);
    let side = chords.iter().position(|&c| c <= 1);
    (side.is_some(), Witness::OneChord { polygon: p.clone(), chords, side })
}

pub fn check_one_chord(p: &ConvexPolygon) -> Result<(bool, Witness)> {
    if p.n() < 5 {
        return domain(format!("1-chord needs n ≥ 5, got {}", p.n()));
    }
    Ok(one_chord_from_graph(p, &build_graph(&p.side_disks())))
}

fn check_six(p: &ConvexPolygon, six: [usize; 6]) -> Result<()> {
    if p.n() < 6 {
        return domain(format!("no-3-cycles needs n ≥ 6, got {}", p.n()));
    }
    if six[5] >= p.n() || six.windows(2).any(|w| w[0] >= w[1]) {
        return domain(format!("side indices {six:?} are not strictly increasing below {}", p.n()));
    }
    Ok(())
}

/// The three opposite pairs `(a,d)`, `(b,e)`, `(c,f)` decided on `g`.
pub fn opposite_pairs_disjoint(g: &IntersectGraph, six: [usize; 6]) -> [bool; 3] {
    std::array::from_fn(|k| !g.has_edge(six[k], six[k + 3]))
}

pub fn check_no_3_cycles(p: &ConvexPolygon, six: [usize; 6]) -> Result<(bool, Witness)> {
    check_six(p, six)?;
    let disks = p.side_disks();
    let disjoint: [bool; 3] = std::array::from_fn(|k| !gdisks_intersect(&disks[six[k]], &disks[six[k + 3]]));
    Ok((disjoint.iter().any(|&d| d), Witness::NoThreeCycles { polygon: p.clone(), six, extended: false, disjoint }))
}

/// The same statement for the hexagon cut out by the six supporting lines,
/// whose sides contain the original ones.
pub fn check_no_3_cycles_extended(p: &ConvexPolygon, six: [usize; 6]) -> Result<(bool, Witness)> {
    check_six(p, six)?;
    let ext = extend_to_polygon(&tagged_sides(p, &six))?;
    let disks = ext.polygon.side_disks();
    let idx = &ext.index_of;
    let disjoint: [bool; 3] = std::array::from_fn(|k| !gdisks_intersect(&disks[idx[k]], &disks[idx[k + 3]]));
    Ok((disjoint.iter().any(|&d| d), Witness::NoThreeCycles { polygon: p.clone(), six, extended: true, disjoint }))
}

/// Sides `(i−1, i, i+1)` when they are consecutive.
pub fn triple(p: &ConvexPolygon, i: usize) -> Option<(usize, usize, usize)> {
    let n = p.n();
    if i >= n {
        return None;
    }
    if p.is_bounded() {
        Some(((i + n - 1) % n, i, (i + 1) % n))
    } else if i >= 1 && i + 1 < n {
        Some((i - 1, i, i + 1))
    } else {
        None
    }
}

/// Parameter of the foot of `o` along a side, checked to lie on the closed side.
fn foot_on_side(side: &Side, o: &SurdPoint) -> bool {
    match side {
        Side::Segment { p, q } => {
            let d = q.sub(p);
            let t = &(&o.x - &Surd::from(&p.x)).scale(&d.0) + &(&o.y - &Surd::from(&p.y)).scale(&d.1);
            !t.is_negative() && !(&t - &Surd::rational(crate::geom::norm2(&d))).is_positive()
        }
        Side::Ray { apex, dir } => {
            let t = &(&o.x - &Surd::from(&apex.x)).scale(&dir.0) + &(&o.y - &Surd::from(&apex.y)).scale(&dir.1);
            !t.is_negative()
        }
    }
}

/// Sign of `ℓ(O) − ρ·|n|` for an interior-positive line.
fn clearance(l: &Line, d: &SurdDisk) -> Result<i32> {
    crate::geom::surd_clearance_sign(l, &d.center, &d.radius)
}

/// Disk tangent to sides `i−1, i, i+1`, inside `p`, touching each side on the
/// closed side.
pub fn tangent_disk_at(p: &ConvexPolygon, i: usize) -> Result<SurdDisk> {
    let Some((a, b, c)) = triple(p, i) else {
        return reject("sides i-1, i, i+1 are not consecutive");
    };
    let lines: Vec<Line> = (0..p.n()).map(|k| p.side_line(k)).collect();
    let disk = match tri_tangent_disk(&lines[a], &lines[b], &lines[c], &p.interior_point()) {
        Ok(d) => d,
        Err(_) => return reject("no disk on the interior side is tangent to the three lines"),
    };
    for (k, l) in lines.iter().enumerate() {
        if k != a && k != b && k != c && clearance(l, &disk)? < 0 {
            return reject("tangent disk is not contained in the polygon");
        }
    }
    for k in [a, b, c] {
        if !foot_on_side(&p.side(k), &disk.center) {
            return reject("tangency point is off the closed side");
        }
    }
    Ok(disk)
}

/// `P = ℓ(a) ∩ ℓ(c)` strictly on the far side of `ℓ(b)`.
pub fn separated_apex(p: &ConvexPolygon, i: usize) -> Result<Point> {
    let Some((a, b, c)) = triple(p, i) else {
        return reject("sides i-1, i, i+1 are not consecutive");
    };
    let Some(apex) = p.side_line(a).intersection(&p.side_line(c)) else {
        return reject("l(a) and l(c) are parallel");
    };
    if !p.side_line(b).eval(&apex).is_negative() {
        return reject("l(b) does not separate P from the interior");
    }
    Ok(apex)
}

/// Summary of a tri-tangent disk, for reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriTangent {
    pub side: usize,
    pub center: (f64, f64),
    pub radius: f64,
}

/// A disk tangent to three consecutive sides, contained in `p`, whose outer
/// sides' lines meet beyond the middle side. Candidates are tried by
/// increasing radius, ties by side index.
pub fn find_tri_tangent_witness(p: &ConvexPolygon) -> Result<Option<(SurdDisk, usize)>> {
    Ok(tri_tangent_search(p)?.0)
}

fn tri_tangent_search(p: &ConvexPolygon) -> Result<(Option<(SurdDisk, usize)>, usize)> {
    if p.n() < 5 {
        return domain(format!("the tri-tangent disk needs n ≥ 5, got {}", p.n()));
    }
    let mut cands: Vec<(SurdDisk, usize)> = (0..p.n()).filter_map(|i| tangent_disk_at(p, i).ok().map(|d| (d, i))).collect();
    let total = cands.len();
    cands.sort_by(|x, y| x.0.radius.cmp(&y.0.radius).then(x.1.cmp(&y.1)));
    Ok((cands.into_iter().find(|(_, i)| separated_apex(p, *i).is_ok()), total))
}

pub fn tri_tangent_outcome(p: &ConvexPolygon) -> Result<(bool, Witness)> {
    let (found, candidates) = tri_tangent_search(p)?;
    let found = found.map(|(d, side)| {
        let (center, radius) = d.to_f64();
        TriTangent { side, center, radius }
    });
    Ok((found.is_some(), Witness::TriTangent { polygon: p.clone(), found, candidates }))
}

/// Hypotheses of the `abcx` lemma that do not involve `x`.
pub struct AbcxSetup {
    pub i: usize,
    pub apex: Point,
    pub disk: SurdDisk,
}

pub fn abcx_setup(p: &ConvexPolygon, i: usize) -> Result<AbcxSetup> {
    if i >= p.n() {
        return domain(format!("side {i} out of range"));
    }
    let apex = separated_apex(p, i)?;
    let disk = tangent_disk_at(p, i)?;
    Ok(AbcxSetup { i, apex, disk })
}

/// Whether the line through `apex` and `o` meets the relative interior of `side`.
fn bisector_meets_interior(apex: &Point, o: &SurdPoint, side: &Side) -> bool {
    let u = (&o.x - &Surd::from(&apex.x), &o.y - &Surd::from(&apex.y));
    let f = |q: &Point| -> i32 {
        let (dx, dy) = (&q.x - &apex.x, &q.y - &apex.y);
        (&u.0.scale(&dy) - &u.1.scale(&dx)).sign()
    };
    match side {
        Side::Segment { p, q } => {
            let (a, b) = (f(p), f(q));
            a * b < 0 || (a == 0 && b == 0)
        }
        Side::Ray { apex: s, dir } => {
            let a = f(s);
            let g = (&u.0.scale(&dir.1) - &u.1.scale(&dir.0)).sign();
            a * g < 0 || (a == 0 && g == 0)
        }
    }
}

pub fn abcx_with(p: &ConvexPolygon, s: &AbcxSetup, x: usize) -> Result<bool> {
    let (a, b, c) = triple(p, s.i).expect("setup has a triple");
    if x >= p.n() {
        return domain(format!("side {x} out of range"));
    }
    if x == a || x == b || x == c {
        return reject("x is one of a, b, c");
    }
    let side_x = p.side(x);
    if bisector_meets_interior(&s.apex, &s.disk.center, &side_x) {
        return reject("bisector l(P,O) meets the interior of x");
    }
    Ok(!gdisks_intersect(&p.side(b).disk(), &side_x.disk()))
}

pub fn check_abcx(p: &ConvexPolygon, i: usize, x: usize) -> Result<(bool, Witness)> {
    let s = abcx_setup(p, i)?;
    let holds = abcx_with(p, &s, x)?;
    Ok((holds, Witness::Abcx { polygon: p.clone(), i, x }))
}

pub fn check_ab_lemma(p: &ConvexPolygon, i: usize, j: usize, c: usize) -> Result<(bool, Witness)> {
    let n = p.n();
    if c >= n {
        return domain(format!("side {c} out of range"));
    }
    let ab = p.compose_ab(i, j)?;
    if c == i || c == j {
        return reject("c is one of a, b");
    }
    let dc = p.side(c).disk();
    if !gdisks_intersect(&dc, &p.side(i).disk()) || !gdisks_intersect(&dc, &p.side(j).disk()) {
        return reject("D_c misses D_a or D_b");
    }
    Ok((gdisks_intersect(&dc, &ab.disk()), Witness::AbLemma { polygon: p.clone(), i, j, c }))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DepthReport {
    pub depth: usize,
    pub at: (f64, f64),
    pub candidates: usize,
}

fn surd_in_disk(q: &SurdPoint, d: &crate::geom::Disk) -> bool {
    !(&q.dist2_point(&d.center) - &Surd::rational(d.r2.clone())).is_positive()
}

/// Boundary intersection points of two circles.
fn circle_crossings(d1: &crate::geom::Disk, d2: &crate::geom::Disk) -> Result<Vec<SurdPoint>> {
    let dv = d2.center.sub(&d1.center);
    let d2n = crate::geom::norm2(&dv);
    if d2n.is_zero() {
        return Ok(Vec::new());
    }
    let k = (&d2n + &d1.r2 - &d2.r2) / (scalar::int(2) * &d2n);
    let h2 = &d1.r2 / &d2n - &k * &k;
    if h2.is_negative() {
        return Ok(Vec::new());
    }
    let base = (&d1.center.x + &k * &dv.0, &d1.center.y + &k * &dv.1);
    let h = Surd::sqrt(&h2)?;
    let mut out = Vec::with_capacity(2);
    for s in [1i64, -1] {
        let hs = h.scale(&scalar::int(s));
        out.push(SurdPoint { x: &Surd::from(&base.0) - &hs.scale(&dv.1), y: &Surd::from(&base.1) + &hs.scale(&dv.0) });
        if h2.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// Maximum number of side disks sharing a point, over circle crossings,
/// disk centers and vertices.
pub fn disk_depth(p: &ConvexPolygon) -> Result<DepthReport> {
    if !p.is_bounded() {
        return domain("depth is defined for bounded polygons");
    }
    let disks: Vec<crate::geom::Disk> = p
        .side_disks()
        .into_iter()
        .map(|g| match g {
            GDisk::Disk(d) => d,
            GDisk::Halfplane(_) => unreachable!("bounded polygons have proper side disks"),
        })
        .collect();
    let mut cands: Vec<SurdPoint> = p.vertices().iter().map(SurdPoint::from_point).collect();
    cands.extend(disks.iter().map(|d| SurdPoint::from_point(&d.center)));
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            cands.extend(circle_crossings(&disks[i], &disks[j])?);
        }
    }
    let mut best = (0usize, (0.0, 0.0));
    for q in &cands {
        let depth = disks.iter().filter(|d| surd_in_disk(q, d)).count();
        if depth > best.0 {
            best = (depth, q.to_f64());
        }
    }
    Ok(DepthReport { depth: best.0, at: best.1, candidates: cands.len() })
}

pub fn disk_depth_pentagon(p: &ConvexPolygon) -> Result<DepthReport> {
    if p.n() != 5 || !p.is_bounded() {
        return domain(format!("expected a bounded pentagon, got {} sides", p.n()));
    }
    disk_depth(p)
}

/// Bound on the depth of a pentagon's side disks.
pub const PENTAGON_DEPTH_BOUND: usize = 3;

pub fn depth_outcome(p: &ConvexPolygon) -> Result<(bool, Witness)> {
    let r = disk_depth_pentagon(p)?;
    Ok((r.depth <= PENTAGON_DEPTH_BOUND, Witness::Depth { polygon: p.clone(), depth: r.depth, at: r.at }))
}

/// Bipartiteness of the conflict graph of a bounded polygon.
pub fn main_outcome(p: &ConvexPolygon) -> Result<(bool, Witness)> {
    if !p.is_bounded() {
        return domain("the planarity statement is checked on bounded polygons");
    }
    let (ok, cert) = is_planar_hamiltonian(&build_graph(&p.side_disks()))?;
    let odd_cycle = match cert {
        BipartiteCert::OddCycle(c) => Some(c),
        BipartiteCert::Coloring(_) => None,
    };
    Ok((ok, Witness::Main { polygon: p.clone(), odd_cycle }))
}

/// The five non-adjacent side pairs of a pentagon.
pub const PENTAGON_PAIRS: [(usize, usize); 5] = [(0, 2), (1, 3), (2, 4), (3, 0), (4, 1)];

#[derive(Clone, Debug)]
pub struct MidpointReport {
    pub sum: Interval,
    pub perimeter: Interval,
}

impl MidpointReport {
    pub fn margin(&self) -> Interval {
        &self.perimeter - &self.sum
    }

    /// `Some(true)` when the sum is provably below the perimeter.
    pub fn sum_below_perimeter(&self) -> Option<bool> {
        self.margin().sign().map(|s| s > 0)
    }
}

fn pentagon_lengths2(p: &ConvexPolygon) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    if p.n() != 5 || !p.is_bounded() {
        return domain(format!("expected a bounded pentagon, got {} sides", p.n()));
    }
    let v = p.vertices();
    let mids: Vec<Point> = (0..5).map(|i| v[i].midpoint(&v[(i + 1) % 5])).collect();
    let diag = PENTAGON_PAIRS.iter().map(|&(i, j)| mids[i].dist2(&mids[j])).collect();
    let sides = (0..5).map(|i| v[i].dist2(&v[(i + 1) % 5])).collect();
    Ok((diag, sides))
}

/// Sum of the midpoint distances of the five non-adjacent side pairs, and the
/// perimeter, as enclosures at `prec` bits.
pub fn diag_midpoint_sum_at(p: &ConvexPolygon, prec: usize) -> Result<MidpointReport> {
    let (diag, sides) = pentagon_lengths2(p)?;
    let total = |xs: &[Scalar]| xs.iter().fold(Interval::from_int(0, prec), |acc, x| &acc + &Interval::from_rational(x, prec).sqrt());
    Ok(MidpointReport { sum: total(&diag), perimeter: total(&sides) })
}

pub fn diag_midpoint_sum(p: &ConvexPolygon) -> Result<MidpointReport> {
    diag_midpoint_sum_at(p, crate::interval::PRECISION_LADDER[0])
}

/// `⌊√q · 10^digits⌋ / 10^digits` by integer square roots.
pub fn sqrt_truncated(q: &Scalar, digits: u32) -> Scalar {
    let scale = BigInt::from(10u8).pow(digits);
    let (n, d) = (q.numer(), q.denom());
    // √(n/d) = √(n·d)/d
    let root = (n * d * &scale * &scale).sqrt();
    Scalar::new(root, d * &scale)
}

/// Independent decimal evaluation of (sum, perimeter), each truncated term
/// off by less than `10^-digits`.
pub fn midpoint_sum_decimal(p: &ConvexPolygon, digits: u32) -> Result<(Scalar, Scalar)> {
    let (diag, sides) = pentagon_lengths2(p)?;
    let total = |xs: &[Scalar]| xs.iter().map(|x| sqrt_truncated(x, digits)).sum();
    Ok((total(&diag), total(&sides)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{reference_pentagon, random_convex, regular_approx, unbounded_clip};
    use crate::scalar::{int, rat};

    #[test]
    fn one_chord_examples() {
        let pent = regular_approx(5, 20).unwrap();
        let (holds, w) = check_one_chord(&pent).unwrap();
        assert!(holds);
        let Witness::OneChord { chords, side, .. } = w else { panic!() };
        assert_eq!(chords, vec![0; 5]);
        assert_eq!(side, Some(0));
        assert!(check_one_chord(&reference_pentagon()).unwrap().0);
        assert!(check_one_chord(&regular_approx(6, 20).unwrap()).unwrap().0);
        assert!(check_one_chord(&regular_approx(4, 20).unwrap()).is_err());
    }

    #[test]
    fn no_3_cycles_examples() {
        let hex = regular_approx(6, 20).unwrap();
        let (holds, w) = check_no_3_cycles(&hex, [0, 1, 2, 3, 4, 5]).unwrap();
        assert!(holds);
        assert!(matches!(w, Witness::NoThreeCycles { disjoint: [true, true, true], .. }));
        assert!(check_no_3_cycles(&hex, [0, 2, 1, 3, 4, 5]).is_err());
        // Long thin hexagon: the short ends are far apart.
        let thin = ConvexPolygon::bounded(
            [(0, 0), (50, -1), (100, 0), (101, 1), (50, 2), (-1, 1)].iter().map(|&(x, y)| Point::int(x, y)).collect(),
            false,
        )
        .unwrap();
        let (holds, w) = check_no_3_cycles(&thin, [0, 1, 2, 3, 4, 5]).unwrap();
        assert!(holds);
        let Witness::NoThreeCycles { disjoint, .. } = w else { panic!() };
        assert!(disjoint[2], "{disjoint:?}");
        assert!(check_no_3_cycles_extended(&thin, [0, 1, 2, 3, 4, 5]).unwrap().0);
        for seed in 0..20 {
            let p = random_convex(9, seed, 32).unwrap();
            assert!(check_no_3_cycles_extended(&p, [0, 2, 3, 5, 7, 8]).unwrap().0);
        }
    }

    #[test]
    fn tri_tangent_examples() {
        let pent = regular_approx(5, 20).unwrap();
        let (d, i) = find_tri_tangent_witness(&pent).unwrap().unwrap();
        assert!(separated_apex(&pent, i).is_ok());
        assert!(d.radius.is_positive());
        let (d, i) = find_tri_tangent_witness(&reference_pentagon()).unwrap().unwrap();
        let p = reference_pentagon();
        let (a, b, c) = triple(&p, i).unwrap();
        for k in [a, b, c] {
            assert_eq!(clearance(&p.side_line(k), &d).unwrap(), 0);
        }
        for seed in 0..10 {
            assert!(tri_tangent_outcome(&random_convex(7, seed, 32).unwrap()).unwrap().0);
            assert!(tri_tangent_outcome(&unbounded_clip(6, seed, 32).unwrap()).unwrap().0);
        }
    }

    #[test]
    fn abcx_random_polygons() {
        let mut accepted = 0;
        for seed in 0..20 {
            let p = random_convex(7, seed, 32).unwrap();
            for i in 0..p.n() {
                let Ok(s) = abcx_setup(&p, i) else { continue };
                for x in 0..p.n() {
                    match abcx_with(&p, &s, x) {
                        Ok(holds) => {
                            assert!(holds, "seed {seed} i {i} x {x}");
                            accepted += 1;
                        }
                        Err(_) => {}
                    }
                }
                assert!(check_abcx(&p, i, s.i).is_err());
            }
        }
        assert!(accepted > 10, "only {accepted}");
    }

    #[test]
    fn ab_lemma_examples() {
        let sq = ConvexPolygon::bounded([(0, 0), (1, 0), (1, 1), (0, 1)].iter().map(|&(x, y)| Point::int(x, y)).collect(), false).unwrap();
        assert!(check_ab_lemma(&sq, 0, 1, 2).unwrap().0);
        let u = unbounded_clip(5, 3, 32).unwrap();
        let mut accepted = 0;
        for c in 1..4 {
            if let Ok((holds, _)) = check_ab_lemma(&u, 0, 4, c) {
                assert!(holds);
                accepted += 1;
            }
        }
        let _ = accepted;
    }

    #[test]
    fn depth_examples() {
        assert_eq!(disk_depth_pentagon(&regular_approx(5, 20).unwrap()).unwrap().depth, 2);
        assert!(disk_depth_pentagon(&reference_pentagon()).unwrap().depth <= 3);
        assert!(disk_depth_pentagon(&regular_approx(6, 20).unwrap()).is_err());
    }

    #[test]
    fn crossings_of_unit_circles() {
        let a = crate::geom::Disk::new(Point::int(0, 0), int(1)).unwrap();
        let b = crate::geom::Disk::new(Point::int(1, 0), int(1)).unwrap();
        let xs = circle_crossings(&a, &b).unwrap();
        assert_eq!(xs.len(), 2);
        for q in &xs {
            assert!(q.dist2_point(&a.center) == Surd::rational(int(1)));
            assert!(q.dist2_point(&b.center) == Surd::rational(int(1)));
            assert_eq!(q.x, Surd::rational(rat(1, 2)));
        }
        let far = crate::geom::Disk::new(Point::int(2, 0), int(1)).unwrap();
        assert_eq!(circle_crossings(&a, &far).unwrap().len(), 1);
    }

    #[test]
    fn midpoint_sum_reference_pentagon() {
        let p = reference_pentagon();
        let r = diag_midpoint_sum(&p).unwrap();
        assert_eq!(r.sum_below_perimeter(), Some(true));
        assert!((r.sum.to_f64() - 137.229).abs() < 1e-2);
        assert!((r.perimeter.to_f64() - 137.530).abs() < 1e-2);
        let pent = regular_approx(5, 20).unwrap();
        assert_eq!(diag_midpoint_sum(&pent).unwrap().sum_below_perimeter(), Some(false));
    }

    #[test]
    fn truncated_sqrt() {
        assert_eq!(sqrt_truncated(&int(4), 5), int(2));
        assert_eq!(sqrt_truncated(&int(2), 3), rat(1414, 1000));
        assert_eq!(sqrt_truncated(&rat(1, 4), 2), rat(1, 2));
    }
}
