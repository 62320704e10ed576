//! The five wedge lemmas around a disk `C` and an outside point `P`.
//!
//! * L3: `A ∈ PT₁`, `B ∈ PT₂`, `AB` tangent to `C` ⇒ `D_AB ⊆ C_P`.
//! * L4/L5: `E ∈ h(P,T₁)∖PT₁`, `D ∈ h(P,O)`, `ℓ(E,D)` misses the interior
//!   of `C`, split on `∠EDP ≤ π/2` ⇒ `D_DE ∩ C_P = ∅`.
//! * L6: `E ∈ h(P,T₁)∖PT₁`, `D` inside the wedge `(h(P,T₁), h(P,O))`,
//!   `h(E,D)` misses `h(P,O)`, `ℓ(E,D)` misses the interior of `C`.
//! * L7: `D ∈ h(P,O)∖PO`, `E` inside the wedge, `h(D,E)` misses `h(P,T₁)`.
//!
//! `C_P` is the disk centered at `P` through `T₁` and `T₂`.

use num_traits::Signed;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::frame::*;
use super::{reject, LemmaId, Witness};
use crate::error::{domain, Result};
use crate::gen::{rand_rational, rng_for, unit_circle_point};
use crate::geom::{disk_contains_disk, dot, gdisks_intersect, Disk, GDisk, Line, Point};
use crate::scalar::{int, rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "points", rename_all = "snake_case")]
pub enum Extra {
    Ab { a: Point, b: Point },
    De { d: Point, e: Point },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeConfig {
    pub case: LemmaId,
    #[serde(flatten)]
    pub base: TangentPair,
    pub extra: Extra,
}

pub fn verify_wedge_lemma(input: &WedgeConfig) -> Result<(bool, Witness)> {
    let mut cfg = input.clone();
    cfg.integerize();
    let cfg = &cfg;
    let t = &cfg.base;
    t.validate()?;
    let c_p = t.c_p();
    let witness = || Witness::Wedge { config: input.clone() };
    match (cfg.case, &cfg.extra) {
        (LemmaId::L3, Extra::Ab { a, b }) => {
            if !on_segment(&t.p, &t.t1, a) {
                return reject("A is not on segment PT1");
            }
            if !on_segment(&t.p, &t.t2, b) {
                return reject("B is not on segment PT2");
            }
            if a == b || !tangent_to_segment(a, b, &t.center, &t.r2) {
                return reject("AB is not tangent to the circle");
            }
            Ok((disk_contains_disk(&c_p, &Disk::on_diameter(a, b)), witness()))
        }
        (case @ (LemmaId::L4 | LemmaId::L5), Extra::De { d, e }) => {
            if !beyond(&t.p, &t.t1, e) {
                return reject("E is not on h(P,T1) beyond T1");
            }
            if !on_halfline(&t.p, &t.center, d) || d == &t.p {
                return reject("D is not on h(P,O)");
            }
            if !line_misses_open_disk(e, d, &t.center, &t.r2) {
                return reject("line ED meets the open disk");
            }
            let obtuse = dot(&e.sub(d), &t.p.sub(d)).is_negative();
            if case == LemmaId::L4 && obtuse {
                return reject("angle EDP exceeds pi/2");
            }
            if case == LemmaId::L5 && !obtuse {
                return reject("angle EDP is at most pi/2");
            }
            Ok((disjoint_from(&c_p, d, e), witness()))
        }
        (LemmaId::L6, Extra::De { d, e }) => {
            if !beyond(&t.p, &t.t1, e) {
                return reject("E is not on h(P,T1) beyond T1");
            }
            if d == e || !in_open_wedge(&t.p, &t.t1, &t.center, d) {
                return reject("D is not inside the wedge");
            }
            if halflines_meet(e, &d.sub(e), &t.p, &t.center.sub(&t.p)) {
                return reject("h(E,D) meets h(P,O)");
            }
            if !line_misses_open_disk(e, d, &t.center, &t.r2) {
                return reject("line ED meets the open disk");
            }
            Ok((disjoint_from(&c_p, d, e), witness()))
        }
        (LemmaId::L7, Extra::De { d, e }) => {
            if !beyond(&t.p, &t.center, d) {
                return reject("D is not on h(P,O) beyond O");
            }
            if !in_open_wedge(&t.p, &t.t1, &t.center, e) {
                return reject("E is not inside the wedge");
            }
            if halflines_meet(d, &e.sub(d), &t.p, &t.t1.sub(&t.p)) {
                return reject("h(D,E) meets h(P,T1)");
            }
            Ok((disjoint_from(&c_p, d, e), witness()))
        }
        (case, _) => domain(format!("{case} is not a wedge lemma or has the wrong point set")),
    }
}

impl WedgeConfig {
    pub fn integerize(&mut self) {
        let TangentPair { center, r2, p, t1, t2 } = &mut self.base;
        let mut pts = vec![center, p, t1, t2];
        match &mut self.extra {
            Extra::Ab { a, b } => pts.extend([a, b]),
            Extra::De { d, e } => pts.extend([d, e]),
        }
        integerize(&mut pts, &mut [r2]);
    }
}

fn disjoint_from(c_p: &Disk, d: &Point, e: &Point) -> bool {
    !gdisks_intersect(&GDisk::Disk(c_p.clone()), &GDisk::Disk(Disk::on_diameter(d, e)))
}

fn along(p: &Point, q: &Point, k: &Scalar) -> Point {
    p.offset(&{
        let v = q.sub(p);
        (&v.0 * k, &v.1 * k)
    })
}

/// Draws a raw configuration for `case`. Hypotheses are not enforced here;
/// [`verify_wedge_lemma`] decides acceptance.
pub fn sample_wedge(case: LemmaId, seed: u64) -> Result<WedgeConfig> {
    let mut rng = rng_for(seed);
    let r = int(rng.random_range(1..=4));
    let t = rat(rng.random_range(1..64), 64);
    let canon = TangentPair::canonical(&r, &t);
    let (p, o, t1) = (&canon.p, &canon.center, &canon.t1);
    let extra = match case {
        LemmaId::L3 => {
            let w = unit_circle_point(&rand_rational(&mut rng, &int(-1), &int(1), 128));
            let t3 = Point::new(&r * &w.0, &r * &w.1);
            if t3 == canon.t1 {
                Extra::Ab { a: canon.t1.clone(), b: canon.p.clone() }
            } else if t3 == canon.t2 {
                Extra::Ab { a: canon.p.clone(), b: canon.t2.clone() }
            } else {
                let tangent = offset_tangent(&t3, &canon.r2, &Scalar::from_integer(0.into()));
                let (Some(a), Some(b)) = (
                    tangent.intersection(&Line::through(p, &canon.t1)),
                    tangent.intersection(&Line::through(p, &canon.t2)),
                ) else {
                    return reject("tangent at T3 is parallel to a tangent from P");
                };
                Extra::Ab { a, b }
            }
        }
        LemmaId::L4 | LemmaId::L5 => {
            let e = along(p, t1, &rand_rational(&mut rng, &rat(1, 2), &int(5), 64));
            let d = if rng.random_range(0..8) == 0 {
                // Foot of E on ℓ(P,O): the right-angle boundary between L4 and L5.
                let k = dot(&e.sub(p), &o.sub(p)) / p.dist2(o);
                along(p, o, &k)
            } else {
                along(p, o, &rand_rational(&mut rng, &rat(1, 64), &int(4), 64))
            };
            Extra::De { d, e }
        }
        LemmaId::L6 => {
            let e = along(p, t1, &rand_rational(&mut rng, &rat(1, 2), &int(5), 64));
            let a = rand_rational(&mut rng, &int(0), &int(4), 32);
            let b = rand_rational(&mut rng, &int(0), &int(2), 32);
            let d = along(p, t1, &a).offset(&{
                let v = o.sub(p);
                (&v.0 * &b, &v.1 * &b)
            });
            Extra::De { d, e }
        }
        LemmaId::L7 => {
            let d = along(p, o, &rand_rational(&mut rng, &rat(1, 2), &int(4), 64));
            let a = rand_rational(&mut rng, &int(0), &int(4), 32);
            let b = rand_rational(&mut rng, &int(0), &int(3), 32);
            let e = along(p, t1, &a).offset(&{
                let v = o.sub(p);
                (&v.0 * &b, &v.1 * &b)
            });
            Extra::De { d, e }
        }
        other => return domain(format!("{other} is not a wedge lemma")),
    };
    let f = Similarity::random(&mut rng);
    let extra = match extra {
        Extra::Ab { a, b } => Extra::Ab { a: f.apply(&a), b: f.apply(&b) },
        Extra::De { d, e } => Extra::De { d: f.apply(&d), e: f.apply(&e) },
    };
    let mut out = WedgeConfig { case, base: canon.transformed(&f), extra };
    out.integerize();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon() -> TangentPair {
        // r = 3, tangency at (9/5, ±12/5), P = (5, 0), |PT₁| = 4.
        TangentPair::canonical(&int(3), &rat(1, 2))
    }

    #[test]
    fn l3_symmetric_and_boundary() {
        let tp = canon();
        assert_eq!(tp.p, Point::int(5, 0));
        // Tangent at (3,0): x = 3 meets PT₁ and PT₂ at (3, ±3/2).
        let cfg = WedgeConfig {
            case: LemmaId::L3,
            base: tp.clone(),
            extra: Extra::Ab { a: Point::new(int(3), rat(3, 2)), b: Point::new(int(3), rat(-3, 2)) },
        };
        assert!(verify_wedge_lemma(&cfg).unwrap().0);
        // Degenerate end: A = T₁, B = P gives internal tangency, still contained.
        let edge = WedgeConfig { extra: Extra::Ab { a: tp.t1.clone(), b: tp.p.clone() }, ..cfg.clone() };
        assert!(verify_wedge_lemma(&edge).unwrap().0);
        // A = T₁, B = T₂ violates tangency of AB.
        let chord = WedgeConfig { extra: Extra::Ab { a: tp.t1.clone(), b: tp.t2.clone() }, ..cfg };
        assert!(verify_wedge_lemma(&chord).is_err());
    }

    #[test]
    fn l4_right_angle_boundary() {
        let tp = canon();
        // E = P + 3(T₁ − P) = (-23/5, 36/5); D its foot on the x axis.
        let e = Point::new(rat(-23, 5), rat(36, 5));
        let d = Point::new(rat(-23, 5), int(0));
        let cfg = WedgeConfig { case: LemmaId::L4, base: tp, extra: Extra::De { d, e } };
        let (holds, _) = verify_wedge_lemma(&cfg).unwrap();
        assert!(holds);
        let as_l5 = WedgeConfig { case: LemmaId::L5, ..cfg };
        assert!(verify_wedge_lemma(&as_l5).is_err());
    }

    #[test]
    fn wrong_point_set_is_domain_error() {
        let cfg = WedgeConfig { case: LemmaId::L4, base: canon(), extra: Extra::Ab { a: Point::int(0, 0), b: Point::int(1, 1) } };
        assert!(matches!(verify_wedge_lemma(&cfg), Err(crate::error::Error::Domain(_))));
    }

    #[test]
    fn sampled_configs_hold() {
        for case in [LemmaId::L3, LemmaId::L4, LemmaId::L5, LemmaId::L6, LemmaId::L7] {
            let mut ok = 0;
            for seed in 0..300 {
                let Ok(cfg) = sample_wedge(case, seed) else { continue };
                if let Ok((holds, _)) = verify_wedge_lemma(&cfg) {
                    assert!(holds, "{case} seed {seed}");
                    ok += 1;
                }
            }
            assert!(ok > 20, "{case}: only {ok} accepted");
        }
    }
}
