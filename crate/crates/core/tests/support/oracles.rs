//! Coordinate-construction oracles for the closed-form length formulas.
//! Shared by the core integration tests and the acceptance target.

#![allow(dead_code)]

use num_traits::Signed;
use rand::Rng;
use sidedisk::gen::{rand_rational, rng_for, unit_circle_point};
use sidedisk::geom::{apollonius_pm2, cross, tangential_diagonal2, Line, Point};
use sidedisk::scalar::{int, sqrt_exact, Scalar};

fn rand_point(rng: &mut impl Rng) -> Point {
    Point::new(rand_rational(rng, &int(-50), &int(50), 97), rand_rational(rng, &int(-50), &int(50), 89))
}

/// `(|PQ|², |PR|², |QR|², |PM|²)` with `M` the midpoint of `QR`, measured.
pub fn apollonius_instance(rng: &mut impl Rng) -> [Scalar; 4] {
    let (p, q, r) = (rand_point(rng), rand_point(rng), rand_point(rng));
    [p.dist2(&q), p.dist2(&r), q.dist2(&r), p.dist2(&q.midpoint(&r))]
}

/// A tangential quadrilateral built from four tangency points on a circle
/// of rational radius: tangent lengths `a, b, c, d` at the vertices in CCW
/// order and the measured `|PR|²`. `None` when the points leave a gap ≥ π.
pub fn tangential_instance(rng: &mut impl Rng) -> Option<([Scalar; 4], Scalar)> {
    let r = rand_rational(rng, &int(1), &int(20), 8);
    let mut ts: Vec<Scalar> = (0..4).map(|_| rand_rational(rng, &int(-6), &int(6), 48)).collect();
    ts.sort();
    ts.dedup();
    if ts.len() < 4 {
        return None;
    }
    let touch: Vec<Point> = ts
        .iter()
        .map(|t| {
            let (c, s) = unit_circle_point(t);
            Point::new(&r * c, &r * s)
        })
        .collect();
    for k in 0..4 {
        let (u, v) = (&touch[k], &touch[(k + 1) % 4]);
        if !cross(&(u.x.clone(), u.y.clone()), &(v.x.clone(), v.y.clone())).is_positive() {
            return None;
        }
    }
    let r2 = &r * &r;
    let tangent = |p: &Point| Line::new(p.x.clone(), p.y.clone(), -r2.clone()).expect("nonzero normal");
    // Vertex k sits between touch[k − 1] and touch[k].
    let verts: Vec<Point> = (0..4).map(|k| tangent(&touch[(k + 3) % 4]).intersection(&tangent(&touch[k])).expect("gap < π")).collect();
    let lens: Vec<Scalar> = (0..4).map(|k| sqrt_exact(&verts[k].dist2(&touch[k])).expect("rational tangent length")).collect();
    Some(([lens[0].clone(), lens[1].clone(), lens[2].clone(), lens[3].clone()], verts[0].dist2(&verts[2])))
}

/// `(instances, mismatches)` over `count` random triangles.
pub fn check_apollonius(count: usize, seed: u64) -> (usize, usize) {
    let mut rng = rng_for(seed);
    let mut bad = 0;
    for _ in 0..count {
        let [pq2, pr2, qr2, pm2] = apollonius_instance(&mut rng);
        if apollonius_pm2(&pq2, &pr2, &qr2).ok() != Some(pm2) {
            bad += 1;
        }
    }
    (count, bad)
}

/// `(instances, mismatches)` over `count` random tangential quadrilaterals.
pub fn check_tangential(count: usize, seed: u64) -> (usize, usize) {
    let mut rng = rng_for(seed);
    let (mut done, mut bad) = (0, 0);
    while done < count {
        let Some(([a, b, c, d], pr2)) = tangential_instance(&mut rng) else { continue };
        done += 1;
        if tangential_diagonal2(&a, &b, &c, &d).ok() != Some(pr2) {
            bad += 1;
        }
    }
    (done, bad)
}
