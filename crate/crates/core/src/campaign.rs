//! Fuzz, lemma and oracle campaigns and the run report they produce.
//!
//! Work items are keyed by `(lemma, seed, index)`; batches run in parallel
//! and are merged in index order, so reports do not depend on the thread
//! count. Timings live in a separate field that [`RunReport::canonical_json`]
//! drops.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gen::{derive_seed, generate, mixed_spec, rng_for, Family, GenSpec};
use crate::graph::{build_graph, build_graph_with, chords_of, conflict_graph, pair, IntersectGraph, Pair};
use crate::lemmas::inequalities::IneqGrid;
use crate::lemmas::polygon::{abcx_setup, abcx_with, main_outcome, one_chord_from_graph, opposite_pairs_disjoint, tri_tangent_outcome, triple};
use crate::lemmas::*;
use crate::poly::ConvexPolygon;

const BATCH: u64 = 256;
/// Campaigns give up once rejections reach this multiple of the target.
const MAX_ATTEMPT_FACTOR: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    /// Double-precision screening with exact fallback near ties; failures are
    /// re-run exactly before they are reported.
    Float,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            _ => Err(Error::Parse(format!("unknown mode {s:?}, expected exact or float"))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "screening",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub count: u64,
    pub seed: u64,
    pub mode: Mode,
    pub family: Option<Family>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaConfig {
    /// `None` runs every campaign lemma.
    pub lemma: Option<LemmaId>,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub n: usize,
    /// `None` enumerates every chord subset.
    pub count: Option<u64>,
    pub seed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub polygons: u64,
    pub lemma_checks: u64,
    pub rejections: u64,
}

/// A failing check together with the spec of the polygon it came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub outcome: LemmaOutcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<GenSpec>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub n: usize,
    pub cases: u64,
    pub agreements: u64,
    pub planar: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: u64,
    pub stages_ms: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub config: serde_json::Value,
    pub totals: Totals,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lemmas: BTreeMap<String, LemmaStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<IneqReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub screening_reruns: Option<u64>,
    pub failures: Vec<Failure>,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl RunReport {
    fn new(command: &str, config: &impl Serialize) -> RunReport {
        RunReport {
            command: command.into(),
            config: serde_json::to_value(config).expect("configs serialize"),
            totals: Totals::default(),
            lemmas: BTreeMap::new(),
            inequalities: None,
            oracle: None,
            screening_reruns: None,
            failures: Vec::new(),
            exit_code: 0,
            timings: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report without timings; byte-identical across runs with equal flags.
    pub fn canonical_json(&self) -> String {
        RunReport { timings: None, ..self.clone() }.to_json()
    }

    /// Every campaign accepted something, nothing failed and nothing was undecided.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.lemmas.values().all(LemmaStats::passed)
            && self.inequalities.as_ref().is_none_or(IneqReport::passed)
            && self.oracle.as_ref().is_none_or(|o| o.agreements == o.cases)
    }

    fn finish(&mut self, started: Instant) {
        self.exit_code = if self.failures.is_empty() { 0 } else { 1 };
        self.timings.get_or_insert_with(Timings::default).total_ms = started.elapsed().as_millis() as u64;
    }

    fn stage(&mut self, name: &str, since: Instant) {
        self.timings.get_or_insert_with(Timings::default).stages_ms.insert(name.into(), since.elapsed().as_millis() as u64);
    }
}

/// Results of one work item, merged in order.
#[derive(Default)]
struct Item {
    stats: BTreeMap<LemmaId, LemmaStats>,
    failures: Vec<Failure>,
    polygons: u64,
    reruns: u64,
}

impl Item {
    fn stats(&mut self, id: LemmaId) -> &mut LemmaStats {
        self.stats.entry(id).or_default()
    }

    fn outcome(&mut self, id: LemmaId, seed: u64, spec: Option<&GenSpec>, r: Result<(bool, Witness)>) {
        let r = r.map(|v| LemmaOutcome::new(id, seed, v));
        self.stats(id).record(&r);
        if let Ok(o) = r {
            if !o.holds {
                self.failures.push(Failure { outcome: o, spec: spec.cloned() });
            }
        }
    }

    fn merge(&mut self, o: Item) {
        for (k, v) in o.stats {
            self.stats.entry(k).or_default().merge(&v);
        }
        self.failures.extend(o.failures);
        self.polygons += o.polygons;
        self.reruns += o.reruns;
    }
}

fn absorb(report: &mut RunReport, item: Item) {
    report.totals.polygons += item.polygons;
    for (id, s) in item.stats {
        report.totals.lemma_checks += s.accepted + s.degenerate;
        report.totals.rejections += s.rejected;
        report.lemmas.entry(id.name().to_string()).or_default().merge(&s);
    }
    report.failures.extend(item.failures);
    if item.reruns > 0 {
        *report.screening_reruns.get_or_insert(0) += item.reruns;
    }
}

/// Six-element subsets of `0..n` in lexicographic order.
pub fn six_subsets(n: usize) -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    let mut c = [0, 1, 2, 3, 4, 5];
    if n < 6 {
        return out;
    }
    loop {
        out.push(c);
        let Some(k) = (0..6).rev().find(|&k| c[k] < n - 6 + k) else { return out };
        c[k] += 1;
        for m in k + 1..6 {
            c[m] = c[m - 1] + 1;
        }
    }
}

/// Number of random 6-subsets checked on polygons above [`SIX_SUBSET_MAX_N`].
pub const SIX_SUBSET_SAMPLES: usize = 64;

fn sampled_six_subsets(n: usize, seed: u64) -> Vec<[usize; 6]> {
    let mut rng = rng_for(seed ^ 0x6666);
    (0..SIX_SUBSET_SAMPLES)
        .map(|_| {
            let mut v = rand::seq::index::sample(&mut rng, n, 6).into_vec();
            v.sort_unstable();
            std::array::from_fn(|k| v[k])
        })
        .collect()
}

/// Largest polygon size for which the 6-subset test is exhaustive.
pub const SIX_SUBSET_MAX_N: usize = 10;

/// Main statement, 1-chord and no-3-cycles checks on one polygon's graph.
fn graph_checks(item: &mut Item, p: &ConvexPolygon, g: &IntersectGraph, seed: u64, spec: Option<&GenSpec>) {
    let n = p.n();
    let cert = chords_of(g).map(|cd| conflict_graph(&cd));
    match &cert {
        Ok(cg) => {
            let holds = crate::graph::bipartite(cg).is_bipartite();
            if holds {
                item.stats(LemmaId::Main).accept(true);
            } else {
                item.outcome(LemmaId::Main, seed, spec, main_outcome(p));
            }
            let tri = cg.triangle();
            item.stats(LemmaId::L2).accept(tri.is_none());
            if tri.is_some() {
                item.failures.push(Failure {
                    outcome: LemmaOutcome::new(LemmaId::L2, seed, (false, Witness::Main { polygon: p.clone(), odd_cycle: tri.map(|t| t.to_vec()) })),
                    spec: spec.cloned(),
                });
            }
        }
        Err(e) => item.stats(LemmaId::Main).reject(&e.to_string()),
    }
    if n >= 5 {
        let (holds, w) = one_chord_from_graph(p, g);
        item.stats(LemmaId::L1).accept(holds);
        if !holds {
            item.failures.push(Failure { outcome: LemmaOutcome::new(LemmaId::L1, seed, (false, w)), spec: spec.cloned() });
        }
    }
    let sixes = if n <= SIX_SUBSET_MAX_N { six_subsets(n) } else { sampled_six_subsets(n, seed) };
    {
        for six in sixes {
            let holds = opposite_pairs_disjoint(g, six).iter().any(|&d| d);
            item.stats(LemmaId::L2).accept(holds);
            if !holds {
                if let Ok(v) = check_no_3_cycles(p, six) {
                    item.failures.push(Failure { outcome: LemmaOutcome::new(LemmaId::L2, seed, v), spec: spec.cloned() });
                }
            }
        }
    }
}

const GEN_ATTEMPTS: u64 = 16;

fn fuzz_item(cfg: &FuzzConfig, index: u64) -> Item {
    let mut item = Item::default();
    let mut spec = match cfg.family {
        None => mixed_spec(cfg.seed, index, cfg.n_min, cfg.n_max),
        Some(f) => {
            let s = derive_seed(cfg.seed, index);
            let n = rng_for(s ^ 0xA5A5).random_range(cfg.n_min..=cfg.n_max);
            GenSpec::new(n, s, f)
        }
    };
    // Families that can fail (slivers too flat) are resampled in place.
    let mut attempt = 0;
    let p = loop {
        match generate(&spec) {
            Ok(p) => break p,
            Err(e) if attempt + 1 == GEN_ATTEMPTS => {
                item.stats(LemmaId::Main).reject(&e.to_string());
                return item;
            }
            Err(_) => {
                attempt += 1;
                spec.seed = derive_seed(spec.seed, attempt);
            }
        }
    };
    item.polygons = 1;
    let disks = p.side_disks();
    let g = build_graph_with(&disks, cfg.mode == Mode::Float);
    graph_checks(&mut item, &p, &g, spec.seed, Some(&spec));
    if cfg.mode == Mode::Float && !item.failures.is_empty() {
        item = Item { polygons: 1, reruns: 1, ..Item::default() };
        graph_checks(&mut item, &p, &build_graph(&disks), spec.seed, Some(&spec));
    }
    item
}

fn run_batches(report: &mut RunReport, count: u64, f: impl Fn(u64) -> Item + Sync) {
    let mut start = 0;
    while start < count {
        let end = (start + BATCH * 16).min(count);
        let items: Vec<Item> = (start..end).into_par_iter().map(&f).collect();
        for it in items {
            absorb(report, it);
        }
        start = end;
    }
}

pub fn run_fuzz(cfg: &FuzzConfig) -> Result<RunReport> {
    if cfg.count == 0 {
        return Err(Error::Domain("fuzz needs --count ≥ 1".into()));
    }
    if cfg.n_min < 3 || cfg.n_min > cfg.n_max {
        return Err(Error::Domain(format!("invalid size range {}..={}", cfg.n_min, cfg.n_max)));
    }
    if cfg.family == Some(Family::ReferencePentagon) && (cfg.n_min, cfg.n_max) != (5, 5) {
        return Err(Error::Domain("the reference pentagon family needs n = 5".into()));
    }
    let started = Instant::now();
    let mut report = RunReport::new("fuzz", cfg);
    if cfg.mode == Mode::Float {
        report.screening_reruns = Some(0);
    }
    run_batches(&mut report, cfg.count, |i| fuzz_item(cfg, i));
    report.stage("fuzz", started);
    report.finish(started);
    Ok(report)
}

/// Size range and share of unbounded polygons used by each polygon lemma.
fn polygon_source(id: LemmaId) -> Option<(usize, usize, u32)> {
    match id {
        LemmaId::L1 => Some((5, 10, 20)),
        LemmaId::L2 => Some((6, 10, 20)),
        LemmaId::L8 => Some((5, 10, 20)),
        LemmaId::L9 => Some((5, 9, 20)),
        LemmaId::L10 => Some((4, 9, 20)),
        LemmaId::Depth => Some((5, 5, 0)),
        _ => None,
    }
}

fn lemma_seed(seed: u64, id: LemmaId) -> u64 {
    let tag = id.name().bytes().fold(0u64, |h, b| h.wrapping_mul(131).wrapping_add(b as u64));
    derive_seed(seed, tag)
}

/// Polygon `index` of a lemma campaign.
pub fn campaign_spec(seed: u64, index: u64, n_min: usize, n_max: usize, unbounded_percent: u32) -> GenSpec {
    let s = derive_seed(seed, index);
    let mut rng = rng_for(s ^ 0x5A5A);
    if rng.random_range(0..100) < unbounded_percent {
        GenSpec::new(rng.random_range(n_min..=n_max), s, Family::UnboundedClip)
    } else {
        mixed_spec(seed, index, n_min, n_max)
    }
}

fn polygon_lemma_item(id: LemmaId, seed: u64, index: u64) -> Item {
    let (lo, hi, share) = polygon_source(id).expect("polygon lemma");
    let spec = campaign_spec(seed, index, lo, hi, share);
    let mut item = Item::default();
    let p = match generate(&spec) {
        Ok(p) => p,
        Err(e) => {
            item.stats(id).reject(&e.to_string());
            return item;
        }
    };
    item.polygons = 1;
    let s = Some(&spec);
    let n = p.n();
    match id {
        LemmaId::L1 => item.outcome(id, spec.seed, s, check_one_chord(&p)),
        LemmaId::L2 => {
            let g = build_graph(&p.side_disks());
            for six in six_subsets(n) {
                let holds = opposite_pairs_disjoint(&g, six).iter().any(|&d| d);
                if holds {
                    item.stats(id).accept(true);
                } else {
                    item.outcome(id, spec.seed, s, check_no_3_cycles(&p, six));
                }
                item.outcome(id, spec.seed, s, check_no_3_cycles_extended(&p, six));
            }
        }
        LemmaId::L8 => item.outcome(id, spec.seed, s, tri_tangent_outcome(&p)),
        LemmaId::L9 => {
            for i in 0..n {
                let setup = match abcx_setup(&p, i) {
                    Ok(x) => x,
                    Err(e) => {
                        item.stats(id).record(&Err(e));
                        continue;
                    }
                };
                let (a, b, c) = triple(&p, i).expect("setup has a triple");
                for x in (0..n).filter(|&x| x != a && x != b && x != c) {
                    match abcx_with(&p, &setup, x) {
                        Ok(true) => item.stats(id).accept(true),
                        Ok(false) => item.outcome(id, spec.seed, s, check_abcx(&p, i, x)),
                        Err(e) => item.stats(id).record(&Err(e)),
                    }
                }
            }
        }
        LemmaId::L10 => {
            for i in 0..n {
                for j in i + 1..n {
                    if p.compose_ab(i, j).is_err() {
                        continue;
                    }
                    for c in (0..n).filter(|&c| c != i && c != j) {
                        item.outcome(id, spec.seed, s, check_ab_lemma(&p, i, j, c));
                    }
                }
            }
        }
        LemmaId::Depth => item.outcome(id, spec.seed, s, crate::lemmas::polygon::depth_outcome(&p)),
        _ => unreachable!("not a polygon lemma"),
    }
    item
}

fn config_lemma_item(id: LemmaId, seed: u64, index: u64) -> Item {
    let s = derive_seed(seed, index);
    let mut item = Item::default();
    let r = match id {
        LemmaId::L3 | LemmaId::L4 | LemmaId::L5 | LemmaId::L6 | LemmaId::L7 => sample_wedge(id, s).and_then(|c| verify_wedge_lemma(&c)),
        LemmaId::L11 => sample_quad(s).and_then(|c| check_quad(&c)),
        LemmaId::L12 => sample_three_pairs(s).and_then(|c| check_3pairs(&c)),
        _ => unreachable!("not a configuration lemma"),
    };
    item.outcome(id, s, None, r);
    item
}

/// Draws batches until `target` checks are accepted or the attempt budget runs out.
fn run_until(report: &mut RunReport, id: LemmaId, target: u64, f: impl Fn(u64) -> Item + Sync) {
    let mut acc = Item::default();
    let mut next = 0u64;
    let budget = target.saturating_mul(MAX_ATTEMPT_FACTOR).max(BATCH);
    loop {
        let s = acc.stats.get(&id).cloned().unwrap_or_default();
        if s.accepted >= target || s.attempted >= budget || next >= budget {
            break;
        }
        let items: Vec<Item> = (next..next + BATCH).into_par_iter().map(&f).collect();
        next += BATCH;
        for it in items {
            acc.merge(it);
        }
    }
    acc.stats.entry(id).or_default();
    absorb(report, acc);
}

fn run_one_lemma(report: &mut RunReport, id: LemmaId, cfg: &LemmaConfig) {
    let started = Instant::now();
    let seed = lemma_seed(cfg.seed, id);
    match id {
        LemmaId::Ineq => {
            let rep = check_proof_inequalities(&IneqGrid::with_total(cfg.samples));
            let mut s = LemmaStats::default();
            s.attempted = rep.points;
            s.accepted = rep.points - rep.degenerate_points;
            s.failed = rep.failed_points;
            s.degenerate = rep.degenerate_points;
            report.totals.lemma_checks += rep.checks;
            for f in rep.failures.iter().take(16) {
                let o = LemmaOutcome::new(LemmaId::Ineq, cfg.seed, (false, Witness::Inequality { sample: f.clone() }));
                report.failures.push(Failure { outcome: o, spec: None });
            }
            report.lemmas.insert(id.name().into(), s);
            report.inequalities = Some(rep);
        }
        LemmaId::Main => run_until(report, id, cfg.samples, |i| {
            let fc = FuzzConfig { n_min: 3, n_max: 12, count: 1, seed, mode: Mode::Exact, family: None };
            let mut it = fuzz_item(&fc, i);
            it.stats.retain(|k, _| *k == LemmaId::Main);
            it.failures.retain(|f| f.outcome.lemma == LemmaId::Main);
            it
        }),
        _ if polygon_source(id).is_some() => run_until(report, id, cfg.samples, |i| polygon_lemma_item(id, seed, i)),
        _ => run_until(report, id, cfg.samples, |i| config_lemma_item(id, seed, i)),
    }
    report.stage(id.name(), started);
}

pub fn run_lemmas(cfg: &LemmaConfig) -> Result<RunReport> {
    if cfg.samples == 0 {
        return Err(Error::Domain("lemmas needs --samples ≥ 1".into()));
    }
    let started = Instant::now();
    let mut report = RunReport::new("lemmas", cfg);
    let ids: Vec<LemmaId> = match cfg.lemma {
        Some(id) => vec![id],
        None => LemmaId::CAMPAIGN.to_vec(),
    };
    for id in ids {
        run_one_lemma(&mut report, id, cfg);
    }
    report.finish(started);
    Ok(report)
}

/// Largest cycle length the oracle accepts.
pub const ORACLE_MAX_N: usize = 8;

/// Chords of the `n`-cycle: the pairs that are not cycle edges.
pub fn cycle_chords(n: usize) -> Vec<Pair> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if !(i == 0 && j == n - 1) {
                out.push(pair(i, j));
            }
        }
    }
    out
}

pub fn run_oracle(cfg: &OracleConfig) -> Result<RunReport> {
    let n = cfg.n;
    if !(4..=ORACLE_MAX_N).contains(&n) {
        return Err(Error::Domain(format!("oracle supports 4 ≤ n ≤ {ORACLE_MAX_N}, got {n}")));
    }
    if cfg.count == Some(0) {
        return Err(Error::Domain("oracle needs --count ≥ 1".into()));
    }
    let started = Instant::now();
    let mut report = RunReport::new("oracle", cfg);
    let all = cycle_chords(n);
    let subsets: Vec<Vec<Pair>> = match cfg.count {
        None => (0u64..1 << all.len()).map(|m| all.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, c)| *c).collect()).collect(),
        Some(count) => (0..count)
            .map(|i| {
                let mut rng = rng_for(derive_seed(cfg.seed, i));
                all.iter().filter(|_| rng.random_bool(0.5)).copied().collect()
            })
            .collect(),
    };
    let cases: Vec<Result<(bool, Witness)>> = subsets.into_par_iter().map(|c| oracle_outcome(n, &c)).collect();
    let mut sum = OracleSummary { n, ..OracleSummary::default() };
    for (k, c) in cases.into_iter().enumerate() {
        let (agree, w) = c?;
        let Witness::Oracle { brute_force_planar: planar, .. } = &w else { unreachable!("oracle witness") };
        sum.cases += 1;
        sum.planar += *planar as u64;
        if agree {
            sum.agreements += 1;
        } else if report.failures.len() < 64 {
            report.failures.push(Failure { outcome: LemmaOutcome::new(LemmaId::Main, k as u64, (false, w)), spec: None });
        }
    }
    report.totals.lemma_checks = sum.cases;
    report.oracle = Some(sum);
    report.stage("oracle", started);
    report.finish(started);
    Ok(report)
}

/// Everything `analyze` reports about one polygon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    pub n: usize,
    pub bounded: bool,
    pub edges: Vec<Pair>,
    pub chords: Vec<Pair>,
    pub conflict_edges: Vec<Pair>,
    pub bipartite: bool,
    /// Chord colors, or the odd cycle of chord indices.
    pub certificate: crate::graph::BipartiteCert,
    pub outcomes: Vec<LemmaOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub midpoint_sum: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perimeter: Option<f64>,
}

pub fn analyze(p: &ConvexPolygon) -> Result<Analysis> {
    let n = p.n();
    let g = build_graph(&p.side_disks());
    let mut outcomes = Vec::new();
    let (chords, conflict_edges, bipartite, certificate) = if p.is_bounded() {
        let cd = chords_of(&g)?;
        let cg = conflict_graph(&cd);
        let cert = crate::graph::bipartite(&cg);
        (cd.chords.clone(), cg.edges(), cert.is_bipartite(), cert)
    } else {
        (Vec::new(), Vec::new(), true, crate::graph::BipartiteCert::Coloring(Vec::new()))
    };
    if p.is_bounded() {
        outcomes.push(LemmaOutcome::new(LemmaId::Main, 0, main_outcome(p)?));
    }
    if n >= 5 {
        outcomes.push(LemmaOutcome::new(LemmaId::L1, 0, check_one_chord(p)?));
        if let Ok(v) = tri_tangent_outcome(p) {
            outcomes.push(LemmaOutcome::new(LemmaId::L8, 0, v));
        }
    }
    if (6..=SIX_SUBSET_MAX_N).contains(&n) {
        for six in six_subsets(n) {
            let v = check_no_3_cycles(p, six)?;
            if !v.0 {
                outcomes.push(LemmaOutcome::new(LemmaId::L2, 0, v));
            }
        }
    }
    let (mut depth, mut midpoint_sum, mut perimeter) = (None, None, None);
    if n == 5 && p.is_bounded() {
        depth = Some(disk_depth_pentagon(p)?.depth);
        let m = diag_midpoint_sum(p)?;
        midpoint_sum = Some(m.sum.to_f64());
        perimeter = Some(m.perimeter.to_f64());
    }
    Ok(Analysis { n, bounded: p.is_bounded(), edges: g.edges.clone(), chords, conflict_edges, bipartite, certificate, outcomes, depth, midpoint_sum, perimeter })
}

/// `analyze` as a report: failures are the outcomes that did not hold.
pub fn run_analyze(p: &ConvexPolygon) -> Result<(RunReport, Analysis)> {
    let started = Instant::now();
    let a = analyze(p)?;
    let mut report = RunReport::new("analyze", &serde_json::json!({ "polygon": p.to_doc() }));
    report.totals = Totals { polygons: 1, lemma_checks: a.outcomes.len() as u64, rejections: 0 };
    report.failures = a.outcomes.iter().filter(|o| !o.holds).map(|o| Failure { outcome: o.clone(), spec: None }).collect();
    report.stage("analyze", started);
    report.finish(started);
    Ok((report, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_six() {
        assert_eq!(six_subsets(6).len(), 1);
        assert_eq!(six_subsets(8).len(), 28);
        assert_eq!(six_subsets(10).len(), 210);
        assert!(six_subsets(5).is_empty());
    }

    #[test]
    fn chords_of_cycles() {
        assert_eq!(cycle_chords(6).len(), 9);
        assert_eq!(cycle_chords(7).len(), 14);
        assert_eq!(cycle_chords(8).len(), 20);
    }

    #[test]
    fn small_fuzz_is_deterministic() {
        let cfg = FuzzConfig { n_min: 3, n_max: 9, count: 60, seed: 7, mode: Mode::Exact, family: None };
        let a = run_fuzz(&cfg).unwrap();
        assert_eq!(a.exit_code, 0, "{}", a.canonical_json());
        assert_eq!(a.canonical_json(), run_fuzz(&cfg).unwrap().canonical_json());
        let float = run_fuzz(&FuzzConfig { mode: Mode::Float, ..cfg }).unwrap();
        assert_eq!(float.lemmas, a.lemmas);
    }

    #[test]
    fn oracle_n6_exhaustive() {
        let r = run_oracle(&OracleConfig { n: 6, count: None, seed: 0 }).unwrap();
        let o = r.oracle.unwrap();
        assert_eq!(o.cases, 512);
        assert_eq!(o.agreements, 512);
        assert!(run_oracle(&OracleConfig { n: 9, count: None, seed: 0 }).is_err());
    }

    #[test]
    fn zero_counts_are_input_errors() {
        let cfg = FuzzConfig { n_min: 3, n_max: 9, count: 0, seed: 7, mode: Mode::Exact, family: None };
        assert!(run_fuzz(&cfg).is_err());
    }
}
