//! Deterministic generators for convex polygons.
//!
//! Every sample is a pure function of its [`GenSpec`]: the random stream is a
//! ChaCha8 generator keyed by SplitMix64 of the seed. Corpora are written as
//! JSON lines, one `{"spec": …, "polygon": …}` object per line.

use std::io::{BufRead, Write};

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point, Vector};
use crate::interval::{pi_multiple, Interval};
use crate::poly::ConvexPolygon;
use crate::scalar::{self, int, rat, Scalar};

/// Smallest admissible sine of a vertex angle.
pub const MIN_VERTEX_SINE: f64 = 1e-6;

const MAX_ATTEMPTS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    RandomEdgeVectors,
    RandomHullOfPoints,
    RegularApprox,
    ThinSliver,
    ReferencePentagon,
    UnboundedClip,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::RandomEdgeVectors,
        Family::RandomHullOfPoints,
        Family::RegularApprox,
        Family::ThinSliver,
        Family::ReferencePentagon,
        Family::UnboundedClip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::RandomEdgeVectors => "random_edge_vectors",
            Family::RandomHullOfPoints => "random_hull_of_points",
            Family::RegularApprox => "regular_approx",
            Family::ThinSliver => "thin_sliver",
            Family::ReferencePentagon => "reference_pentagon",
            Family::UnboundedClip => "unbounded_clip",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Full description of one generated polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    pub family: Family,
    /// Integer coordinate bound for the random families.
    pub scale: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aspect: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digits: Option<u32>,
}

pub const DEFAULT_SCALE: u32 = 32;
pub const DEFAULT_ASPECT: u32 = 1000;
pub const DEFAULT_DIGITS: u32 = 20;

impl GenSpec {
    pub fn new(n: usize, seed: u64, family: Family) -> GenSpec {
        GenSpec { n, seed, family, scale: DEFAULT_SCALE, aspect: None, digits: None }
    }
}

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of item `index` in a campaign keyed by `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index.wrapping_add(0x5EED)))
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed))
}

/// Uniform rational `lo + (hi − lo)·k/den`, `k ∈ [0, den]`.
pub fn rand_rational(rng: &mut impl Rng, lo: &Scalar, hi: &Scalar, den: i64) -> Scalar {
    let k = rng.random_range(0..=den);
    lo + (hi - lo) * rat(k, den)
}

/// Rational point `((1−t²)/(1+t²), 2t/(1+t²))` of the unit circle.
pub fn unit_circle_point(t: &Scalar) -> (Scalar, Scalar) {
    let t2 = t * t;
    let d = scalar::one() + &t2;
    ((scalar::one() - &t2) / &d, (t + t) / d)
}

pub fn generate(spec: &GenSpec) -> Result<ConvexPolygon> {
    let n = spec.n;
    match spec.family {
        Family::RandomEdgeVectors => random_convex(n, spec.seed, spec.scale),
        Family::RandomHullOfPoints => random_hull(n, spec.seed, spec.scale),
        Family::RegularApprox => regular_approx(n, spec.digits.unwrap_or(DEFAULT_DIGITS)),
        Family::ThinSliver => thin_sliver(n, spec.aspect.unwrap_or(DEFAULT_ASPECT), spec.seed),
        Family::ReferencePentagon => {
            if n != 5 {
                return Err(Error::Generator(format!("the reference pentagon has 5 sides, requested {n}")));
            }
            Ok(reference_pentagon())
        }
        Family::UnboundedClip => unbounded_clip(n, spec.seed, spec.scale),
    }
}

pub fn reference_pentagon() -> ConvexPolygon {
    let v = [(1, 9), (0, 3), (0, -3), (1, -9), (60, 0)].map(|(x, y)| Point::int(x, y));
    ConvexPolygon::bounded(v.to_vec(), false).expect("reference pentagon is convex")
}

type IVec = (i64, i64);

fn half(v: IVec) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn icross(u: IVec, v: IVec) -> i128 {
    u.0 as i128 * v.1 as i128 - u.1 as i128 * v.0 as i128
}

fn inorm2(u: IVec) -> i128 {
    u.0 as i128 * u.0 as i128 + u.1 as i128 * u.1 as i128
}

fn by_angle(u: &IVec, v: &IVec) -> std::cmp::Ordering {
    half(*u).cmp(&half(*v)).then_with(|| 0.cmp(&icross(*u, *v)))
}

/// Strict left turn with sine at least [`MIN_VERTEX_SINE`].
fn sharp_enough(u: IVec, v: IVec) -> bool {
    let c = icross(u, v);
    // c² ≥ 10⁻¹² |u|²|v|²
    c > 0 && c * c * 1_000_000_000_000 >= inorm2(u) * inorm2(v)
}

fn polygon_from_edges(edges: &[IVec]) -> Result<ConvexPolygon> {
    let n = edges.len();
    for k in 0..n {
        if !sharp_enough(edges[k], edges[(k + 1) % n]) {
            return Err(Error::Generator("flat or reflex vertex".into()));
        }
    }
    let mut at = (0i64, 0i64);
    let mut verts = Vec::with_capacity(n);
    for e in edges {
        verts.push(Point::int(at.0, at.1));
        at = (at.0 + e.0, at.1 + e.1);
    }
    ConvexPolygon::bounded(verts, false)
}

/// Integer edge vectors with zero sum, sorted by angle.
pub fn random_convex(n: usize, seed: u64, scale: u32) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::Generator(format!("need n ≥ 3, got {n}")));
    }
    let b = scale.max(2) as i64;
    let mut rng = rng_for(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut edges: Vec<IVec> = Vec::with_capacity(n);
        let mut sum = (0, 0);
        while edges.len() < n - 1 {
            let e = (rng.random_range(-b..=b), rng.random_range(-b..=b));
            if e != (0, 0) {
                sum = (sum.0 + e.0, sum.1 + e.1);
                edges.push(e);
            }
        }
        let last = (-sum.0, -sum.1);
        if last == (0, 0) {
            continue;
        }
        edges.push(last);
        edges.sort_by(by_angle);
        if let Ok(p) = polygon_from_edges(&edges) {
            return Ok(p);
        }
    }
    Err(Error::Generator(format!("no convex {n}-gon after {MAX_ATTEMPTS} attempts")))
}

fn hull(points: &mut [IVec]) -> Vec<IVec> {
    points.sort();
    let mut lower: Vec<IVec> = Vec::new();
    for &p in points.iter() {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<IVec> = Vec::new();
    for &p in points.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn turn(a: IVec, b: IVec, c: IVec) -> i128 {
    icross((b.0 - a.0, b.1 - a.1), (c.0 - a.0, c.1 - a.1))
}

/// Convex hull of points jittered around a circle; retried until the hull has `n` vertices.
pub fn random_hull(n: usize, seed: u64, scale: u32) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::Generator(format!("need n ≥ 3, got {n}")));
    }
    let r = (scale.max(8) as f64) * 4.0;
    let mut rng = rng_for(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut pts: Vec<IVec> = (0..n)
            .map(|_| {
                let a: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                let rr = r * rng.random_range(0.9..1.0);
                ((rr * a.cos()).round() as i64, (rr * a.sin()).round() as i64)
            })
            .collect();
        let h = hull(&mut pts);
        if h.len() != n {
            continue;
        }
        let edges: Vec<IVec> = (0..n).map(|k| (h[(k + 1) % n].0 - h[k].0, h[(k + 1) % n].1 - h[k].1)).collect();
        if (0..n).any(|k| !sharp_enough(edges[k], edges[(k + 1) % n])) {
            continue;
        }
        let verts = h.iter().map(|&(x, y)| Point::int(x, y)).collect();
        if let Ok(p) = ConvexPolygon::bounded(verts, false) {
            return Ok(p);
        }
    }
    Err(Error::Generator(format!("no hull with {n} vertices after {MAX_ATTEMPTS} attempts")))
}

/// Regular `n`-gon on the unit circle, coordinates rounded to `10^-digits`.
/// Vertices with rational trigonometric values come out exact.
pub fn regular_approx(n: usize, digits: u32) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::Generator(format!("need n ≥ 3, got {n}")));
    }
    if !(6..=60).contains(&digits) {
        return Err(Error::Generator(format!("digits must be in 6..=60, got {digits}")));
    }
    let prec = 256;
    let mut verts = Vec::with_capacity(n);
    for k in 0..n {
        let angle: Interval = pi_multiple(&rat(2 * k as i64, n as i64), prec);
        let round = |v: Interval| v.round_decimal(digits).ok_or_else(|| Error::Generator("non-finite coordinate".into()));
        verts.push(Point::new(round(angle.cos())?, round(angle.sin())?));
    }
    ConvexPolygon::bounded(verts, false)
}

/// Random convex `n`-gon squeezed into the box `[0,1] × [0,1/aspect]`.
pub fn thin_sliver(n: usize, aspect: u32, seed: u64) -> Result<ConvexPolygon> {
    if aspect == 0 {
        return Err(Error::Generator("aspect must be positive".into()));
    }
    let base = random_convex(n, seed, DEFAULT_SCALE)?;
    let v = base.vertices();
    let min = |f: fn(&Point) -> &Scalar| v.iter().map(f).min().unwrap().clone();
    let max = |f: fn(&Point) -> &Scalar| v.iter().map(f).max().unwrap().clone();
    let (x0, x1, y0, y1) = (min(|p| &p.x), max(|p| &p.x), min(|p| &p.y), max(|p| &p.y));
    let sx = scalar::one() / (x1 - &x0);
    let sy = scalar::one() / ((y1 - &y0) * int(aspect as i64));
    let verts: Vec<Point> = v.iter().map(|p| Point::new((&p.x - &x0) * &sx, (&p.y - &y0) * &sy)).collect();
    // A positive diagonal scaling preserves orientation and convexity, but
    // can flatten a vertex below the sine threshold.
    for k in 0..n {
        let (a, b, c) = (&verts[(k + n - 1) % n], &verts[k], &verts[(k + 1) % n]);
        let (u, w) = (b.sub(a), c.sub(b));
        let cr = crate::geom::cross(&u, &w);
        let lhs = &cr * &cr * int(1_000_000_000_000);
        if lhs < crate::geom::norm2(&u) * crate::geom::norm2(&w) {
            return Err(Error::Generator(format!("sliver vertex {k} is flatter than the sine threshold")));
        }
    }
    ConvexPolygon::bounded(verts, false)
}

/// Unbounded `n`-sided region: a chain of upward-turning edges whose two end
/// edges are extended to rays.
pub fn unbounded_clip(n: usize, seed: u64, scale: u32) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::Generator(format!("need n ≥ 3, got {n}")));
    }
    let b = scale.max(2) as i64;
    let mut rng = rng_for(seed);
    for _ in 0..MAX_ATTEMPTS {
        // n edge directions with angles in (0, π), sorted.
        let mut edges: Vec<IVec> = (0..n).map(|_| (rng.random_range(-b..=b), rng.random_range(1..=b))).collect();
        edges.sort_by(by_angle);
        if (0..n - 1).any(|k| !sharp_enough(edges[k], edges[k + 1])) {
            continue;
        }
        // Chain vertices between consecutive edges; the first and last edge become rays.
        let mut at = (0i64, 0i64);
        let mut verts = Vec::with_capacity(n - 1);
        verts.push(Point::int(0, 0));
        for e in &edges[1..n - 1] {
            at = (at.0 + e.0, at.1 + e.1);
            verts.push(Point::int(at.0, at.1));
        }
        let first = edges[0];
        let last = edges[n - 1];
        let to_vec = |v: IVec| -> Vector { (int(v.0), int(v.1)) };
        if let Ok(p) = ConvexPolygon::unbounded(verts, to_vec((-first.0, -first.1)), to_vec(last), false) {
            return Ok(p);
        }
    }
    Err(Error::Generator(format!("no unbounded {n}-gon after {MAX_ATTEMPTS} attempts")))
}

/// Whether every vertex of a bounded polygon has sine at least [`MIN_VERTEX_SINE`].
pub fn vertex_sines_ok(p: &ConvexPolygon) -> bool {
    let v = p.vertices();
    let n = v.len();
    if !p.is_bounded() {
        return true;
    }
    (0..n).all(|k| {
        let u = v[k].sub(&v[(k + n - 1) % n]);
        let w = v[(k + 1) % n].sub(&v[k]);
        let c = crate::geom::cross(&u, &w);
        c.is_positive() && &c * &c * int(1_000_000_000_000) >= crate::geom::norm2(&u) * crate::geom::norm2(&w)
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub spec: GenSpec,
    pub polygon: ConvexPolygon,
}

pub fn write_corpus(out: &mut impl Write, entries: &[CorpusEntry]) -> std::io::Result<()> {
    for e in entries {
        serde_json::to_writer(&mut *out, e)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_corpus(input: impl BufRead) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let e: CorpusEntry = serde_json::from_str(&line).map_err(|e| Error::Parse(format!("corpus line {}: {e}", k + 1)))?;
        out.push(e);
    }
    Ok(out)
}

/// Picks a bounded family for a fuzz item, weighted toward the random families.
pub fn mixed_family(rng: &mut impl Rng, n: usize) -> Family {
    let roll = rng.random_range(0..100);
    match roll {
        0..=49 => Family::RandomEdgeVectors,
        50..=74 => Family::RandomHullOfPoints,
        75..=89 => Family::ThinSliver,
        90..=97 => Family::RegularApprox,
        _ if n == 5 => Family::ReferencePentagon,
        _ => Family::RandomEdgeVectors,
    }
}

/// Spec of item `index` of a mixed fuzz corpus.
pub fn mixed_spec(seed: u64, index: u64, n_min: usize, n_max: usize) -> GenSpec {
    let s = derive_seed(seed, index);
    let mut rng = rng_for(s ^ 0xA5A5);
    let n = rng.random_range(n_min..=n_max);
    let family = mixed_family(&mut rng, n);
    let mut spec = GenSpec::new(n, s, family);
    match family {
        Family::ThinSliver => spec.aspect = Some([10, 100, 1000, 10000][rng.random_range(0..4)]),
        Family::RegularApprox => spec.digits = Some(rng.random_range(12..=30)),
        _ => {}
    }
    spec
}
