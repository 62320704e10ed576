//! Intersection graphs, their circular embedding, the chord conflict graph
//! and the bipartiteness test that decides planarity of Hamiltonian graphs.

pub mod kuratowski;

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::geom::{gdisks_intersect, gdisks_intersect_fast, GDisk};

pub use kuratowski::{brute_force_planar, find_kuratowski, Kuratowski, BRUTE_FORCE_MAX_N};

/// Unordered vertex pair stored with `0 ≤ i < j`.
pub type Pair = (usize, usize);

pub fn pair(i: usize, j: usize) -> Pair {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectGraph {
    pub n: usize,
    /// Sorted edge list, each pair with `i < j`.
    pub edges: Vec<Pair>,
}

impl IntersectGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Pair>) -> Result<IntersectGraph> {
        let mut e: Vec<Pair> = Vec::new();
        for (i, j) in edges {
            if i == j {
                return domain(format!("loop at vertex {i}"));
            }
            if i >= n || j >= n {
                return domain(format!("edge ({i}, {j}) out of range for {n} vertices"));
            }
            e.push(pair(i, j));
        }
        e.sort_unstable();
        e.dedup();
        Ok(IntersectGraph { n, edges: e })
    }

    /// The cycle `0‥n−1` plus the given chords.
    pub fn hamiltonian(n: usize, chords: &[Pair]) -> Result<IntersectGraph> {
        let cycle = (0..n).map(|i| (i, (i + 1) % n));
        IntersectGraph::new(n, cycle.chain(chords.iter().copied()))
    }

    pub fn complete(n: usize) -> IntersectGraph {
        let e = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        IntersectGraph::new(n, e).expect("complete graph is well formed")
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&pair(i, j)).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.edges.iter().filter_map(|&(i, j)| if i == v { Some(j) } else if j == v { Some(i) } else { None }).collect();
        out.sort_unstable();
        out
    }

    /// Adjacency dump, one vertex per line: `i: j k l`.
    pub fn adjacency_text(&self) -> String {
        let mut s = String::new();
        for v in 0..self.n {
            let nb: Vec<String> = self.neighbors(v).iter().map(|u| u.to_string()).collect();
            if nb.is_empty() {
                writeln!(s, "{v}:").unwrap();
            } else {
                writeln!(s, "{v}: {}", nb.join(" ")).unwrap();
            }
        }
        s
    }
}

/// Pairs of side disks that intersect, decided exactly.
pub fn build_graph(disks: &[GDisk]) -> IntersectGraph {
    build_graph_with(disks, false)
}

/// As [`build_graph`]; with `screen` set, pairs with a safe double-precision
/// margin skip the exact evaluation.
pub fn build_graph_with(disks: &[GDisk], screen: bool) -> IntersectGraph {
    let n = disks.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let hit = if screen { gdisks_intersect_fast(&disks[i], &disks[j]) } else { gdisks_intersect(&disks[i], &disks[j]) };
            if hit {
                edges.push((i, j));
            }
        }
    }
    IntersectGraph { n, edges }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordDiagram {
    pub n: usize,
    pub chords: Vec<Pair>,
}

fn is_cycle_pair(n: usize, (i, j): Pair) -> bool {
    j == i + 1 || (i == 0 && j == n - 1)
}

/// Non-cycle edges of a graph that contains the cycle `0‥n−1`.
pub fn chords_of(g: &IntersectGraph) -> Result<ChordDiagram> {
    let n = g.n;
    if n >= 3 {
        for i in 0..n {
            if !g.has_edge(i, (i + 1) % n) {
                return domain(format!("cycle edge ({i}, {}) is missing", (i + 1) % n));
            }
        }
    }
    let chords = g.edges.iter().copied().filter(|&e| !is_cycle_pair(n, e)).collect();
    Ok(ChordDiagram { n, chords })
}

/// Two chords of a circle on `n` cyclic positions cross in the interior.
pub fn chords_cross(_n: usize, c1: Pair, c2: Pair) -> bool {
    let (a, b) = pair(c1.0, c1.1);
    let (x, y) = c2;
    if x == a || x == b || y == a || y == b {
        return false;
    }
    let inside = |v: usize| a < v && v < b;
    inside(x) != inside(y)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictGraph {
    pub n: usize,
    pub chords: Vec<Pair>,
    /// Sorted adjacency lists over chord indices.
    pub adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn edges(&self) -> Vec<Pair> {
        let mut e = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    e.push((u, v));
                }
            }
        }
        e
    }

    /// Some triangle of pairwise crossing chords, if any.
    pub fn triangle(&self) -> Option<[usize; 3]> {
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb.iter().filter(|&&v| v > u) {
                for &w in self.adj[v].iter().filter(|&&w| w > v) {
                    if self.adj[u].binary_search(&w).is_ok() {
                        return Some([u, v, w]);
                    }
                }
            }
        }
        None
    }
}

pub fn conflict_graph(cd: &ChordDiagram) -> ConflictGraph {
    let k = cd.chords.len();
    let mut adj = vec![Vec::new(); k];
    for u in 0..k {
        for v in u + 1..k {
            if chords_cross(cd.n, cd.chords[u], cd.chords[v]) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    ConflictGraph { n: cd.n, chords: cd.chords.clone(), adj }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartiteCert {
    /// Side (0 or 1) of each chord.
    Coloring(Vec<u8>),
    /// Chord indices forming a closed walk of odd length, each consecutive pair crossing.
    OddCycle(Vec<usize>),
}

impl BipartiteCert {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteCert::Coloring(_))
    }

    /// Re-checks the certificate against the conflict graph's chords.
    pub fn verify(&self, cg: &ConflictGraph) -> bool {
        match self {
            BipartiteCert::Coloring(c) => {
                c.len() == cg.chords.len()
                    && (0..c.len()).all(|u| {
                        (u + 1..c.len()).all(|v| !chords_cross(cg.n, cg.chords[u], cg.chords[v]) || c[u] != c[v])
                    })
            }
            BipartiteCert::OddCycle(cyc) => {
                let k = cyc.len();
                k % 2 == 1
                    && k >= 3
                    && cyc.iter().all(|&u| u < cg.chords.len())
                    && (0..k).all(|t| chords_cross(cg.n, cg.chords[cyc[t]], cg.chords[cyc[(t + 1) % k]]))
            }
        }
    }
}

/// Breadth-first 2-colouring; on failure returns a shortest-found odd cycle.
pub fn bipartite(cg: &ConflictGraph) -> BipartiteCert {
    let k = cg.adj.len();
    let mut color: Vec<Option<u8>> = vec![None; k];
    let mut parent = vec![usize::MAX; k];
    let mut depth = vec![0usize; k];
    for root in 0..k {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in &cg.adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return BipartiteCert::OddCycle(odd_cycle(u, v, &parent, &depth)),
                    Some(_) => {}
                }
            }
        }
    }
    BipartiteCert::Coloring(color.into_iter().map(|c| c.unwrap_or(0)).collect())
}

fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Planarity of a graph containing the cycle `0‥n−1`, decided by
/// bipartiteness of its chord conflict graph.
pub fn is_planar_hamiltonian(g: &IntersectGraph) -> Result<(bool, BipartiteCert)> {
    let cd = chords_of(g)?;
    let cert = bipartite(&conflict_graph(&cd));
    Ok((cert.is_bipartite(), cert))
}
