//! Executable verifiers for the lemmas behind the planarity statement.
//!
//! Per-polygon statements are total checks; statements quantified over
//! configurations are checked on generated configurations whose hypotheses
//! are re-verified exactly. A configuration that misses a hypothesis is an
//! [`Error::Rejected`](crate::error::Error::Rejected), never a failure.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ConvexPolygon;

pub mod frame;
pub mod inequalities;
pub mod polygon;
pub mod quad;
pub mod three_pairs;
pub mod wedge;

pub use inequalities::{check_proof_inequalities, IneqGrid, IneqReport, IneqSample};
pub use polygon::{
    check_ab_lemma, check_abcx, check_no_3_cycles, check_no_3_cycles_extended, check_one_chord, diag_midpoint_sum,
    disk_depth_pentagon, find_tri_tangent_witness, DepthReport, MidpointReport, TriTangent,
};
pub use quad::{check_quad, sample_quad, QuadConfig};
pub use three_pairs::{check_3pairs, sample_three_pairs, ThreePairsConfig};
pub use wedge::{sample_wedge, verify_wedge_lemma, WedgeConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaId {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    L7,
    L8,
    L9,
    L10,
    L11,
    L12,
    #[serde(rename = "ineq")]
    Ineq,
    #[serde(rename = "depth")]
    Depth,
    #[serde(rename = "main")]
    Main,
}

impl LemmaId {
    /// Lemmas run by `lemmas --lemma all`, in report order.
    pub const CAMPAIGN: [LemmaId; 14] = [
        LemmaId::L1,
        LemmaId::L2,
        LemmaId::L3,
        LemmaId::L4,
        LemmaId::L5,
        LemmaId::L6,
        LemmaId::L7,
        LemmaId::L8,
        LemmaId::L9,
        LemmaId::L10,
        LemmaId::L11,
        LemmaId::L12,
        LemmaId::Ineq,
        LemmaId::Depth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::L1 => "L1",
            LemmaId::L2 => "L2",
            LemmaId::L3 => "L3",
            LemmaId::L4 => "L4",
            LemmaId::L5 => "L5",
            LemmaId::L6 => "L6",
            LemmaId::L7 => "L7",
            LemmaId::L8 => "L8",
            LemmaId::L9 => "L9",
            LemmaId::L10 => "L10",
            LemmaId::L11 => "L11",
            LemmaId::L12 => "L12",
            LemmaId::Ineq => "ineq",
            LemmaId::Depth => "depth",
            LemmaId::Main => "main",
        }
    }

    pub fn parse(s: &str) -> Result<LemmaId> {
        let t = s.trim();
        LemmaId::CAMPAIGN
            .into_iter()
            .chain([LemmaId::Main])
            .find(|id| id.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Parse(format!("unknown lemma id {s:?}")))
    }

    pub fn is_wedge(self) -> bool {
        matches!(self, LemmaId::L3 | LemmaId::L4 | LemmaId::L5 | LemmaId::L6 | LemmaId::L7)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Input and result of one check. Each variant carries everything needed to
/// re-run the check from scratch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    OneChord { polygon: ConvexPolygon, chords: Vec<usize>, side: Option<usize> },
    NoThreeCycles { polygon: ConvexPolygon, six: [usize; 6], extended: bool, disjoint: [bool; 3] },
    Wedge { config: WedgeConfig },
    TriTangent { polygon: ConvexPolygon, found: Option<TriTangent>, candidates: usize },
    Abcx { polygon: ConvexPolygon, i: usize, x: usize },
    AbLemma { polygon: ConvexPolygon, i: usize, j: usize, c: usize },
    Quad { config: QuadConfig },
    ThreePairs { config: ThreePairsConfig, disjoint: [bool; 3] },
    Inequality { sample: IneqSample },
    Depth { polygon: ConvexPolygon, depth: usize, at: (f64, f64) },
    Main { polygon: ConvexPolygon, odd_cycle: Option<Vec<usize>> },
    /// A Hamiltonian graph on the cycle `0‥n−1` plus `chords`.
    Oracle { n: usize, chords: Vec<(usize, usize)>, conflict_bipartite: bool, brute_force_planar: bool },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaOutcome {
    pub lemma: LemmaId,
    pub holds: bool,
    pub seed: u64,
    pub witness: Witness,
}

impl LemmaOutcome {
    pub fn new(lemma: LemmaId, seed: u64, (holds, witness): (bool, Witness)) -> LemmaOutcome {
        LemmaOutcome { lemma, holds, seed, witness }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("outcomes serialize")
    }

    pub fn from_json(text: &str) -> Result<LemmaOutcome> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Re-runs the check recorded in the witness.
    pub fn replay(&self) -> Result<LemmaOutcome> {
        let verdict = match &self.witness {
            Witness::OneChord { polygon, .. } => check_one_chord(polygon)?,
            Witness::NoThreeCycles { polygon, six, extended: false, .. } => check_no_3_cycles(polygon, *six)?,
            Witness::NoThreeCycles { polygon, six, extended: true, .. } => check_no_3_cycles_extended(polygon, *six)?,
            Witness::Wedge { config } => verify_wedge_lemma(config)?,
            Witness::TriTangent { polygon, .. } => polygon::tri_tangent_outcome(polygon)?,
            Witness::Abcx { polygon, i, x } => check_abcx(polygon, *i, *x)?,
            Witness::AbLemma { polygon, i, j, c } => check_ab_lemma(polygon, *i, *j, *c)?,
            Witness::Quad { config } => check_quad(config)?,
            Witness::ThreePairs { config, .. } => check_3pairs(config)?,
            Witness::Inequality { sample } => inequalities::recheck(sample)?,
            Witness::Depth { polygon, .. } => polygon::depth_outcome(polygon)?,
            Witness::Main { polygon, .. } => polygon::main_outcome(polygon)?,
            Witness::Oracle { n, chords, .. } => oracle_outcome(*n, chords)?,
        };
        Ok(LemmaOutcome::new(self.lemma, self.seed, verdict))
    }
}

/// Per-lemma campaign counters.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LemmaStats {
    pub attempted: u64,
    pub accepted: u64,
    pub rejected: u64,
    pub failed: u64,
    /// Samples an interval evaluation could not decide at the top precision.
    pub degenerate: u64,
    pub rejection_rate: f64,
    pub rejection_reasons: BTreeMap<String, u64>,
}

impl LemmaStats {
    pub fn record(&mut self, r: &Result<LemmaOutcome>) {
        match r {
            Ok(o) => self.accept(o.holds),
            Err(Error::Rejected(why)) => self.reject(why),
            Err(Error::Degenerate(_)) => {
                self.attempted += 1;
                self.degenerate += 1;
                self.update_rate();
            }
            Err(e) => self.reject(&e.to_string()),
        }
    }

    pub fn accept(&mut self, holds: bool) {
        self.attempted += 1;
        self.accepted += 1;
        self.failed += !holds as u64;
        self.update_rate();
    }

    pub fn reject(&mut self, why: &str) {
        self.attempted += 1;
        self.rejected += 1;
        match self.rejection_reasons.get_mut(why) {
            Some(k) => *k += 1,
            None => {
                self.rejection_reasons.insert(why.to_string(), 1);
            }
        }
        self.update_rate();
    }

    fn update_rate(&mut self) {
        self.rejection_rate = if self.attempted == 0 { 0.0 } else { self.rejected as f64 / self.attempted as f64 };
    }

    pub fn merge(&mut self, o: &LemmaStats) {
        self.attempted += o.attempted;
        self.accepted += o.accepted;
        self.rejected += o.rejected;
        self.failed += o.failed;
        self.degenerate += o.degenerate;
        for (k, v) in &o.rejection_reasons {
            *self.rejection_reasons.entry(k.clone()).or_default() += v;
        }
        self.update_rate();
    }

    /// Passing means: something was accepted, nothing failed, nothing undecided.
    pub fn passed(&self) -> bool {
        self.accepted > 0 && self.failed == 0 && self.degenerate == 0
    }
}

/// Agreement of the conflict-graph test with brute-force planarity.
pub fn oracle_outcome(n: usize, chords: &[(usize, usize)]) -> Result<(bool, Witness)> {
    use crate::graph::{chords_of, conflict_graph, is_planar_hamiltonian, kuratowski::brute_force_planar, IntersectGraph};
    let g = IntersectGraph::hamiltonian(n, chords)?;
    let (fast, cert) = is_planar_hamiltonian(&g)?;
    let certified = cert.verify(&conflict_graph(&chords_of(&g)?));
    let brute = brute_force_planar(&g)?;
    let w = Witness::Oracle { n, chords: chords.to_vec(), conflict_bipartite: fast, brute_force_planar: brute };
    Ok((certified && fast == brute, w))
}

pub(crate) fn reject<T>(why: &str) -> Result<T> {
    Err(Error::Rejected(why.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in LemmaId::CAMPAIGN {
            assert_eq!(LemmaId::parse(id.name()).unwrap(), id);
            let j = serde_json::to_string(&id).unwrap();
            assert_eq!(j, format!("\"{}\"", id.name()));
        }
        assert_eq!(LemmaId::parse("l9").unwrap(), LemmaId::L9);
        assert!(LemmaId::parse("L13").is_err());
    }

    #[test]
    fn stats_counting() {
        let mut s = LemmaStats::default();
        s.record(&Err(Error::Rejected("x".into())));
        s.record(&Err(Error::Rejected("x".into())));
        assert_eq!(s.rejection_reasons["x"], 2);
        assert!(!s.passed());
        assert_eq!(s.rejection_rate, 1.0);
    }
}
