//! Exhaustive search for subdivisions of K₅ and K₃,₃.
//!
//! Deliberately naive: it shares nothing with the chord-based test and is
//! only meant for small graphs, where it serves as an independent oracle.

use serde::{Deserialize, Serialize};

use super::IntersectGraph;
use crate::error::{domain, Result};

pub const BRUTE_FORCE_MAX_N: usize = 12;

/// A topological K₅ or K₃,₃: branch vertices plus one path per pattern edge
/// (endpoints included).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Kuratowski {
    K5 { branch: Vec<usize>, paths: Vec<Vec<usize>> },
    K33 { left: Vec<usize>, right: Vec<usize>, paths: Vec<Vec<usize>> },
}

struct Search<'a> {
    adj: &'a [u32],
    pattern: Vec<(usize, usize)>,
    branch_mask: u32,
    paths: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn route(&mut self, k: usize, used: u32) -> bool {
        if k == self.pattern.len() {
            return true;
        }
        let (s, t) = self.pattern[k];
        if self.adj[s] >> t & 1 == 1 {
            // A direct edge never blocks another path, so it dominates.
            self.paths.push(vec![s, t]);
            if self.route(k + 1, used) {
                return true;
            }
            self.paths.pop();
            return false;
        }
        let free = !(used | self.branch_mask);
        let mut path = vec![s];
        self.extend(k, s, t, free, used, &mut path)
    }

    fn extend(&mut self, k: usize, at: usize, t: usize, free: u32, used: u32, path: &mut Vec<usize>) -> bool {
        let mut cand = self.adj[at] & free;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(v);
            let bit = 1u32 << v;
            if self.adj[v] >> t & 1 == 1 {
                let mut full = path.clone();
                full.push(t);
                self.paths.push(full);
                if self.route(k + 1, used | bit) {
                    return true;
                }
                self.paths.pop();
            }
            if self.extend(k, v, t, free & !bit, used | bit, path) {
                return true;
            }
            path.pop();
        }
        false
    }
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(pool, k, 0, &mut cur, &mut out);
    out
}

/// Finds a Kuratowski subdivision, if the graph has one.
pub fn find_kuratowski(g: &IntersectGraph) -> Result<Option<Kuratowski>> {
    if g.n > BRUTE_FORCE_MAX_N {
        return domain(format!("brute-force planarity is limited to {BRUTE_FORCE_MAX_N} vertices, got {}", g.n));
    }
    let mut adj = vec![0u32; g.n];
    for &(i, j) in &g.edges {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let degree = |v: usize| adj[v].count_ones();
    let mask_of = |vs: &[usize]| vs.iter().fold(0u32, |m, &v| m | 1 << v);

    let deg4: Vec<usize> = (0..g.n).filter(|&v| degree(v) >= 4).collect();
    for branch in combinations(&deg4, 5) {
        let pattern: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).map(|(a, b)| (branch[a], branch[b])).collect();
        let mut s = Search { adj: &adj, pattern, branch_mask: mask_of(&branch), paths: Vec::new() };
        if s.route(0, 0) {
            return Ok(Some(Kuratowski::K5 { branch, paths: s.paths }));
        }
    }

    let deg3: Vec<usize> = (0..g.n).filter(|&v| degree(v) >= 3).collect();
    for six in combinations(&deg3, 6) {
        // Fix six[0] on the left to skip mirrored splits.
        for rest in combinations(&six[1..], 2) {
            let left = vec![six[0], rest[0], rest[1]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let pattern: Vec<(usize, usize)> = left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b))).collect();
            let mut s = Search { adj: &adj, pattern, branch_mask: mask_of(&six), paths: Vec::new() };
            if s.route(0, 0) {
                return Ok(Some(Kuratowski::K33 { left, right, paths: s.paths }));
            }
        }
    }
    Ok(None)
}

/// Planarity by exhaustive Kuratowski-subdivision search (n ≤ 12).
pub fn brute_force_planar(g: &IntersectGraph) -> Result<bool> {
    Ok(find_kuratowski(g)?.is_none())
}

impl Kuratowski {
    /// Checks that the paths are genuine, internally disjoint and realize the pattern.
    pub fn verify(&self, g: &IntersectGraph) -> bool {
        let (branch, pattern, paths): (Vec<usize>, Vec<(usize, usize)>, &Vec<Vec<usize>>) = match self {
            Kuratowski::K5 { branch, paths } => {
                let p = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).map(|(a, b)| (branch[a], branch[b])).collect();
                (branch.clone(), p, paths)
            }
            Kuratowski::K33 { left, right, paths } => {
                let p = left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b))).collect();
                (left.iter().chain(right).copied().collect(), p, paths)
            }
        };
        if paths.len() != pattern.len() {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        for (path, &(s, t)) in paths.iter().zip(&pattern) {
            if path.first() != Some(&s) || path.last() != Some(&t) {
                return false;
            }
            if !path.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if branch.contains(&v) || !seen.insert(v) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(!brute_force_planar(&IntersectGraph::complete(5)).unwrap());
        assert!(brute_force_planar(&IntersectGraph::complete(4)).unwrap());
        let fan = IntersectGraph::hamiltonian(5, &[(0, 2), (0, 3)]).unwrap();
        assert!(brute_force_planar(&fan).unwrap());
        let k33 = IntersectGraph::hamiltonian(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        let w = find_kuratowski(&k33).unwrap().unwrap();
        assert!(w.verify(&k33));
        assert!(matches!(w, Kuratowski::K33 { .. }));
    }

    #[test]
    fn subdivided_k5_is_found() {
        // K5 on {0,2,4,6,8} with every edge 0–2 subdivided by vertex 1 etc.
        let mut e = Vec::new();
        let b = [0, 2, 4, 6, 8];
        for a in 0..5 {
            for c in a + 1..5 {
                e.push((b[a], b[c]));
            }
        }
        e.retain(|&x| x != (0, 2) && x != (4, 6));
        e.extend([(0, 1), (1, 2), (4, 5), (5, 6)]);
        let g = IntersectGraph::new(9, e).unwrap();
        let w = find_kuratowski(&g).unwrap().unwrap();
        assert!(w.verify(&g));
    }

    #[test]
    fn petersen_is_nonplanar() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = IntersectGraph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        let w = find_kuratowski(&g).unwrap().unwrap();
        assert!(w.verify(&g));
    }

    #[test]
    fn octahedron_is_planar() {
        let e = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).filter(|&(i, j)| j != i + 3);
        let g = IntersectGraph::new(6, e).unwrap();
        assert!(brute_force_planar(&g).unwrap());
    }

    #[test]
    fn size_limit() {
        assert!(brute_force_planar(&IntersectGraph::complete(13)).is_err());
    }
}
