use proptest::prelude::*;
use sidedisk::gen::{generate, mixed_spec, random_convex};
use sidedisk::geom::{gdisks_intersect, orient, Disk, GDisk, Point};
use sidedisk::graph::{build_graph, is_planar_hamiltonian};
use sidedisk::lemmas::polygon::check_one_chord;
use sidedisk::lemmas::{LemmaId, LemmaOutcome};
use sidedisk::poly::ConvexPolygon;
use sidedisk::scalar::rat;

fn point() -> impl Strategy<Value = Point> {
    (-400i64..400, -400i64..400, 1i64..12, 1i64..12).prop_map(|(x, y, dx, dy)| Point::new(rat(x, dx), rat(y, dy)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orientation_is_antisymmetric(p in point(), q in point(), r in point()) {
        prop_assert_eq!(orient(&p, &q, &r), -orient(&q, &p, &r));
        prop_assert_eq!(orient(&p, &q, &r), orient(&q, &r, &p));
    }

    #[test]
    fn disk_intersection_is_symmetric(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a != b && c != d);
        let (x, y) = (GDisk::Disk(Disk::on_diameter(&a, &b)), GDisk::Disk(Disk::on_diameter(&c, &d)));
        prop_assert_eq!(gdisks_intersect(&x, &y), gdisks_intersect(&y, &x));
        // Disks on a shared endpoint always meet.
        prop_assert!(gdisks_intersect(&x, &GDisk::Disk(Disk::on_diameter(&b, &c))) || b == c);
    }

    #[test]
    fn fuzz_polygons_have_planar_graphs(seed in any::<u64>(), n in 3usize..=10) {
        let spec = mixed_spec(seed, 0, n, n);
        if let Ok(p) = generate(&spec) {
            if p.is_bounded() {
                prop_assert!(is_planar_hamiltonian(&build_graph(&p.side_disks())).unwrap().0);
            }
        }
    }

    #[test]
    fn graph_is_invariant_under_relabeling(seed in 0u64..5000, shift in 1usize..8) {
        let Ok(p) = random_convex(8, seed, 30) else { return Ok(()) };
        let v = p.vertices();
        let rolled: Vec<Point> = (0..v.len()).map(|k| v[(k + shift) % v.len()].clone()).collect();
        let q = ConvexPolygon::bounded(rolled, false).unwrap();
        let (g, h) = (build_graph(&p.side_disks()), build_graph(&q.side_disks()));
        let n = v.len();
        for &(i, j) in &h.edges {
            prop_assert!(g.has_edge((i + shift) % n, (j + shift) % n));
        }
        prop_assert_eq!(g.edges.len(), h.edges.len());
    }

    #[test]
    fn outcomes_round_trip_and_replay(seed in 0u64..2000) {
        let Ok(p) = random_convex(6, seed, 25) else { return Ok(()) };
        let o = LemmaOutcome::new(LemmaId::L1, seed, check_one_chord(&p).unwrap());
        let back = LemmaOutcome::from_json(&o.to_json()).unwrap();
        prop_assert_eq!(&back, &o);
        prop_assert_eq!(back.replay().unwrap(), o);
    }
}
