//! Acceptance suite: one PASS/FAIL line per criterion, at full size.
//!
//! Runs without the libtest harness so the lines are never captured. Set
//! `SIDEDISK_ACCEPTANCE_SCALE=k` to divide every campaign size by `k` for a
//! quick local pass; the lines then say `(scaled 1/k)` and the run does not
//! count as acceptance.

#[path = "../../core/tests/support/oracles.rs"]
mod oracles;

use std::time::Instant;

use sidedisk::campaign::{self, cycle_chords, FuzzConfig, LemmaConfig, Mode, OracleConfig, RunReport};
use sidedisk::gen::{reference_pentagon, regular_approx};
use sidedisk::interval::PRECISION_LADDER;
use sidedisk::lemmas::polygon::{diag_midpoint_sum_at, disk_depth_pentagon, midpoint_sum_decimal, PENTAGON_DEPTH_BOUND};
use sidedisk::lemmas::LemmaId;
use sidedisk::scalar::{rat, to_f64};

type Verdict = Result<String, String>;

fn scale() -> u64 {
    std::env::var("SIDEDISK_ACCEPTANCE_SCALE").ok().and_then(|s| s.parse().ok()).filter(|&k| k > 0).unwrap_or(1)
}

fn sized(full: u64) -> u64 {
    (full / scale()).max(1)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn stats<'a>(r: &'a RunReport, key: &str) -> Result<&'a sidedisk::lemmas::LemmaStats, String> {
    r.lemmas.get(key).ok_or_else(|| format!("no {key} statistics in the report"))
}

fn main_fuzz() -> RunReport {
    let cfg = FuzzConfig { n_min: 3, n_max: 12, count: sized(100_000), seed: 2026, mode: Mode::Exact, family: None };
    campaign::run_fuzz(&cfg).expect("fuzz configuration is valid")
}

fn c1_main(r: &RunReport) -> Verdict {
    let main = stats(r, "main")?;
    ensure(r.totals.polygons == sized(100_000), || format!("{} polygons generated", r.totals.polygons))?;
    ensure(main.failed == 0 && r.failures.is_empty(), || format!("{} non-bipartite conflict graphs", main.failed))?;
    let ms = r.timings.as_ref().map_or(0, |t| t.total_ms);
    Ok(format!("{} polygons, n in [3,12], mixed families, exact: all conflict graphs bipartite ({:.1} s)", r.totals.polygons, ms as f64 / 1e3))
}

fn c2_oracle() -> Verdict {
    let mut parts = Vec::new();
    for (n, count) in [(6, None), (7, None), (8, Some(sized(5000)))] {
        let r = campaign::run_oracle(&OracleConfig { n, count, seed: 8 }).map_err(|e| e.to_string())?;
        let o = r.oracle.as_ref().ok_or("no oracle summary")?;
        let expect = count.unwrap_or(1 << cycle_chords(n).len());
        ensure(o.cases == expect, || format!("n={n}: {} cases, expected {expect}", o.cases))?;
        ensure(o.agreements == o.cases && r.failures.is_empty(), || format!("n={n}: {} of {} agree", o.agreements, o.cases))?;
        parts.push(format!("n={n} {}/{}", o.agreements, o.cases));
    }
    Ok(format!("bipartite-chord test = Kuratowski brute force: {}", parts.join(", ")))
}

fn c3_one_chord(r: &RunReport) -> Verdict {
    let s = stats(r, "L1")?;
    ensure(s.accepted > 0 && s.failed == 0, || format!("{} failures among {} polygons", s.failed, s.accepted))?;
    Ok(format!("{} corpus polygons with n >= 5, each has a side with <= 1 chord", s.accepted))
}

fn c4_no_3_cycles(r: &RunReport) -> Verdict {
    let s = stats(r, "L2")?;
    ensure(s.accepted > 0 && s.failed == 0, || format!("{} failures among {} checks", s.failed, s.accepted))?;
    Ok(format!("{} checks (6-subsets, exhaustive for n <= 10, plus a direct triangle search per polygon): no 3-cycles", s.accepted))
}

fn c5_pentagon() -> Verdict {
    let p = reference_pentagon();
    let r = diag_midpoint_sum_at(&p, PRECISION_LADDER[0]).map_err(|e| e.to_string())?;
    let margin = r.margin().lo_rational().ok_or("unbounded margin")?;
    ensure(r.sum_below_perimeter() == Some(true) && margin > rat(1, 4), || format!("margin {}", to_f64(&margin)))?;
    let (sum, per) = (r.sum.to_f64(), r.perimeter.to_f64());
    ensure((sum - 137.23).abs() < 0.005 && (per - 137.53).abs() < 0.005, || format!("sum {sum}, perimeter {per}"))?;
    let (dsum, dper) = midpoint_sum_decimal(&p, 50).map_err(|e| e.to_string())?;
    let tol = rat(1, 10).pow(40);
    for (iv, dec, what) in [(&r.sum, &dsum, "sum"), (&r.perimeter, &dper, "perimeter")] {
        let (lo, hi) = (iv.lo_rational().ok_or("bad bound")?, iv.hi_rational().ok_or("bad bound")?);
        ensure(&lo - dec < tol && dec - &hi < tol && &hi - &lo < tol, || format!("{what} disagrees with the 50-digit recomputation"))?;
    }
    Ok(format!("sum {sum:.4} < perimeter {per:.4}, margin {:.4} > 0.25; both within 1e-40 of the 50-digit oracle", to_f64(&margin)))
}

fn c6_depth() -> Verdict {
    let reference = disk_depth_pentagon(&reference_pentagon()).map_err(|e| e.to_string())?.depth;
    let regular = disk_depth_pentagon(&regular_approx(5, 20).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.depth;
    ensure(reference <= PENTAGON_DEPTH_BOUND && regular <= PENTAGON_DEPTH_BOUND, || format!("depths {reference}, {regular}"))?;
    let r = campaign::run_lemmas(&LemmaConfig { lemma: Some(LemmaId::Depth), samples: sized(10_000), seed: 6 }).map_err(|e| e.to_string())?;
    let s = stats(&r, "depth")?;
    ensure(s.accepted >= sized(10_000) && s.failed == 0 && r.failures.is_empty(), || format!("{} of {} fuzz pentagons exceed depth 3", s.failed, s.accepted))?;
    Ok(format!("depth {reference} (reference), {regular} (regular), <= 3 on {} fuzz pentagons", s.accepted))
}

fn c7_formulas() -> Verdict {
    let (na, ba) = oracles::check_apollonius(1000, 70);
    let (nt, bt) = oracles::check_tangential(1000, 71);
    ensure(ba == 0 && bt == 0, || format!("apollonius {ba}/{na} and tangential {bt}/{nt} mismatches"))?;
    Ok(format!("apollonius_pm2 {na}/{na}, tangential_diagonal2 {nt}/{nt} exact matches against coordinates"))
}

const CAMPAIGNS: [LemmaId; 9] =
    [LemmaId::L3, LemmaId::L4, LemmaId::L5, LemmaId::L6, LemmaId::L7, LemmaId::L9, LemmaId::L10, LemmaId::L11, LemmaId::L12];

fn c8_campaigns() -> Verdict {
    let target = sized(100_000);
    let mut parts = Vec::new();
    let mut bad = Vec::new();
    for id in CAMPAIGNS {
        let r = campaign::run_lemmas(&LemmaConfig { lemma: Some(id), samples: target, seed: 8 }).map_err(|e| e.to_string())?;
        let s = stats(&r, id.name())?;
        if s.accepted < target || s.failed > 0 || s.degenerate > 0 || s.rejection_rate >= 0.999 || !r.failures.is_empty() {
            bad.push(format!("{}: accepted {} failed {} undecided {} rejection {:.4}", id.name(), s.accepted, s.failed, s.degenerate, s.rejection_rate));
        }
        parts.push(format!("{} {} ({:.1}% rej)", id.name(), s.accepted, 100.0 * s.rejection_rate));
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(parts.join(", "))
}

fn c9_inequalities() -> Verdict {
    let points = sized(1_000_000);
    let r = campaign::run_lemmas(&LemmaConfig { lemma: Some(LemmaId::Ineq), samples: points, seed: 9 }).map_err(|e| e.to_string())?;
    let q = r.inequalities.as_ref().ok_or("no inequality report")?;
    ensure(q.points >= points && q.passed() && r.failures.is_empty(), || format!("{} failures, {} undecided of {} points", q.failed_points, q.degenerate_points, q.points))?;
    Ok(format!("{} grid points, {} strict term checks at >= 50 digits, {} identity points", q.points, q.checks, q.equalities))
}

fn c10_determinism() -> Verdict {
    let runs: Vec<(&str, Box<dyn Fn() -> RunReport>)> = vec![
        ("fuzz", Box::new(|| campaign::run_fuzz(&FuzzConfig { n_min: 3, n_max: 12, count: 3000, seed: 10, mode: Mode::Exact, family: None }).unwrap())),
        ("fuzz float", Box::new(|| campaign::run_fuzz(&FuzzConfig { n_min: 3, n_max: 9, count: 2000, seed: 11, mode: Mode::Float, family: None }).unwrap())),
        ("lemmas", Box::new(|| campaign::run_lemmas(&LemmaConfig { lemma: None, samples: 100, seed: 12 }).unwrap())),
        ("oracle", Box::new(|| campaign::run_oracle(&OracleConfig { n: 8, count: Some(500), seed: 13 }).unwrap())),
        ("analyze", Box::new(|| campaign::run_analyze(&reference_pentagon()).unwrap().0)),
    ];
    for (name, run) in &runs {
        let (a, b) = (run().canonical_json(), run().canonical_json());
        ensure(a == b, || format!("{name} reports differ"))?;
    }
    let names: Vec<&str> = runs.iter().map(|r| r.0).collect();
    Ok(format!("byte-identical repeated reports: {}", names.join(", ")))
}

fn main() {
    let k = scale();
    let note = if k > 1 { format!(" (scaled 1/{k})") } else { String::new() };
    let mut failed = 0;
    let mut report = |id: u32, name: &str, started: Instant, v: Verdict| {
        let secs = started.elapsed().as_secs_f64();
        match v {
            Ok(detail) => println!("PASS [{id:>2}] {name}{note}: {detail} [{secs:.1} s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{id:>2}] {name}{note}: {why} [{secs:.1} s]");
            }
        }
    };
    let t = Instant::now();
    let fuzz = main_fuzz();
    report(1, "main fuzz", t, c1_main(&fuzz));
    report(2, "oracle equivalence", Instant::now(), c2_oracle());
    report(3, "1-chord on corpus", Instant::now(), c3_one_chord(&fuzz));
    report(4, "no 3-cycles on corpus", Instant::now(), c4_no_3_cycles(&fuzz));
    report(5, "pentagon midpoint sum", Instant::now(), c5_pentagon());
    report(6, "pentagon depth", Instant::now(), c6_depth());
    report(7, "length formulas", Instant::now(), c7_formulas());
    report(8, "lemma campaigns", Instant::now(), c8_campaigns());
    report(9, "inequality grid", Instant::now(), c9_inequalities());
    report(10, "determinism", Instant::now(), c10_determinism());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
