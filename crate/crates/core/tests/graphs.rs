use sidedisk::campaign::{cycle_chords, run_oracle, OracleConfig};
use sidedisk::geom::Point;
use sidedisk::graph::kuratowski::{brute_force_planar, find_kuratowski, Kuratowski};
use sidedisk::graph::{build_graph, chords_of, conflict_graph, is_planar_hamiltonian, BipartiteCert, IntersectGraph};
use sidedisk::poly::ConvexPolygon;

#[test]
fn unit_square_is_k4() {
    let sq = ConvexPolygon::bounded([(0, 0), (1, 0), (1, 1), (0, 1)].map(|(x, y)| Point::int(x, y)).to_vec(), false).unwrap();
    let g = build_graph(&sq.side_disks());
    assert_eq!(g, IntersectGraph::complete(4));
    let cd = chords_of(&g).unwrap();
    assert_eq!(cd.chords, vec![(0, 2), (1, 3)]);
    let (planar, cert) = is_planar_hamiltonian(&g).unwrap();
    assert!(planar);
    let BipartiteCert::Coloring(c) = cert else { panic!("expected a coloring") };
    assert_ne!(c[0], c[1]);
}

#[test]
fn k5_is_rejected_with_certificates() {
    let g = IntersectGraph::complete(5);
    let (planar, cert) = is_planar_hamiltonian(&g).unwrap();
    assert!(!planar);
    let cg = conflict_graph(&chords_of(&g).unwrap());
    assert!(cert.verify(&cg));
    let BipartiteCert::OddCycle(cyc) = cert else { panic!("expected an odd cycle") };
    assert_eq!(cyc.len() % 2, 1);
    let k = find_kuratowski(&g).unwrap().expect("K5 contains itself");
    assert!(matches!(k, Kuratowski::K5 { .. }));
    assert!(k.verify(&g));
    assert!(!brute_force_planar(&g).unwrap());
}

#[test]
fn k33_subdivision_on_a_hexagon() {
    // The three long diagonals of a hexagon cross pairwise: a triangle of conflicts.
    let g = IntersectGraph::hamiltonian(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
    assert!(!is_planar_hamiltonian(&g).unwrap().0);
    assert!(matches!(find_kuratowski(&g).unwrap(), Some(Kuratowski::K33 { .. })));
}

#[test]
fn oracle_agrees_exhaustively_on_small_cycles() {
    assert_eq!(cycle_chords(6).len(), 9);
    for n in [4, 5, 6] {
        let r = run_oracle(&OracleConfig { n, count: None, seed: 0 }).unwrap();
        let o = r.oracle.unwrap();
        assert_eq!(o.cases, 1 << cycle_chords(n).len());
        assert_eq!(o.agreements, o.cases);
        assert!(r.failures.is_empty());
    }
    assert!(run_oracle(&OracleConfig { n: 9, count: None, seed: 0 }).is_err());
}
