//! `sidedisk`: analyze polygons, run verification campaigns, cross-check the
//! planarity oracle and render figures.
//!
//! Exit codes: 0 pass, 1 counterexample, 2 input error.

mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use sidedisk::campaign::{self, Analysis, FuzzConfig, LemmaConfig, Mode, OracleConfig, RunReport};
use sidedisk::error::Error;
use sidedisk::gen::Family;
use sidedisk::lemmas::LemmaId;
use sidedisk::poly::ConvexPolygon;

#[derive(Parser)]
#[command(name = "sidedisk", version, about = "Exact verifier for side-disk intersection graphs of convex polygons")]
struct Cli {
    /// Write the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write a two-panel SVG figure here (analyze, render).
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection graph, conflict graph and lemma checks of one polygon.
    Analyze { polygon: PathBuf },
    /// Random polygons: planarity, 1-chord and no-3-cycles on each.
    Fuzz {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `exact`, or `float` for double-precision screening.
        #[arg(long, default_value = "exact")]
        mode: String,
        /// Restrict to one family; mixed when absent.
        #[arg(long)]
        family: Option<String>,
    },
    /// Lemma campaigns: `L1`…`L12`, `ineq`, `depth` or `all`.
    Lemmas {
        #[arg(long, default_value = "all")]
        lemma: String,
        /// Accepted configurations per lemma (grid points for `ineq`).
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Conflict-graph planarity test against brute force on Hamiltonian graphs.
    Oracle {
        #[arg(long)]
        n: usize,
        /// Random chord subsets; every subset when absent.
        #[arg(long)]
        count: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Only the SVG figure of a polygon.
    Render { polygon: PathBuf },
}

/// Input problems map to exit code 2.
struct InputError(anyhow::Error);

fn input<E: Into<anyhow::Error>>(e: E) -> InputError {
    InputError(e.into())
}

fn classify(e: Error) -> Failure {
    match e {
        Error::Domain(_) | Error::InvalidPolygon(_) | Error::Parse(_) | Error::Generator(_) => Failure::Input(input(e)),
        other => Failure::Internal(other.into()),
    }
}

enum Failure {
    Input(InputError),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e)
    }
}

fn read_polygon(path: &Path) -> Result<ConvexPolygon, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(|e| Failure::Input(input(e)))?;
    ConvexPolygon::from_json(&text).map_err(|e| Failure::Input(input(anyhow::anyhow!("{}: {e}", path.display()))))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn print_analysis(a: &Analysis) {
    println!("sides: {} ({})", a.n, if a.bounded { "bounded" } else { "unbounded" });
    let edges: Vec<String> = a.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
    println!("intersection graph: {} edges: {}", a.edges.len(), edges.join(" "));
    let missing: Vec<String> =
        (0..a.n).flat_map(|i| (i + 1..a.n).map(move |j| (i, j))).filter(|e| !a.edges.contains(e)).map(|(i, j)| format!("{i}-{j}")).collect();
    println!("missing pairs: {}", if missing.is_empty() { "none".into() } else { missing.join(" ") });
    if a.bounded {
        let chords: Vec<String> = a.chords.iter().map(|(i, j)| format!("{{{i},{j}}}")).collect();
        println!("chords: {} {}", a.chords.len(), chords.join(" "));
        let conflicts: Vec<String> = a.conflict_edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
        println!("conflict graph (chord indices): {}", if conflicts.is_empty() { "no edges".into() } else { conflicts.join(" ") });
        println!("certificate: {}", serde_json::to_string(&a.certificate).unwrap_or_default());
        println!("planar: {}", if a.bipartite { "yes (conflict graph bipartite)" } else { "NO (odd cycle)" });
    }
    for o in &a.outcomes {
        println!("{}: {}", o.lemma, if o.holds { "holds" } else { "FAILS" });
    }
    if let Some(d) = a.depth {
        println!("disk depth: {d}");
    }
    if let (Some(m), Some(p)) = (a.midpoint_sum, a.perimeter) {
        println!("non-adjacent midpoint distance sum: {m:.6}, perimeter: {p:.6}");
    }
}

fn summarize(r: &RunReport) {
    println!("command: {}", r.command);
    println!("polygons: {}, lemma checks: {}, rejections: {}", r.totals.polygons, r.totals.lemma_checks, r.totals.rejections);
    if let Some(k) = r.screening_reruns {
        println!("screening re-runs: {k}");
    }
    for (id, s) in &r.lemmas {
        println!(
            "  {id:>5}: accepted {:>8}  rejected {:>8} ({:.2}%)  failed {}  undecided {}",
            s.accepted,
            s.rejected,
            100.0 * s.rejection_rate,
            s.failed,
            s.degenerate
        );
    }
    if let Some(q) = &r.inequalities {
        println!("  inequality grid: {} points, {} term checks, {} equality points, {} escalated", q.points, q.checks, q.equalities, q.escalated);
    }
    if let Some(o) = &r.oracle {
        println!("  oracle n = {}: {} / {} agree ({} planar)", o.n, o.agreements, o.cases, o.planar);
    }
    if let Some(t) = &r.timings {
        println!("time: {} ms", t.total_ms);
    }
    for f in r.failures.iter().take(5) {
        println!("FAILURE {}", serde_json::to_string(f).unwrap_or_default());
    }
    println!("{}", if r.failures.is_empty() { "PASS" } else { "COUNTEREXAMPLE" });
}

fn run(cli: Cli) -> Result<i32, Failure> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Failure::Input(input(anyhow::anyhow!("--jobs must be at least 1"))));
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(|e| Failure::Internal(e.into()))?;
    }
    let report = match &cli.command {
        Command::Analyze { polygon } | Command::Render { polygon } => {
            let p = read_polygon(polygon)?;
            let (report, a) = campaign::run_analyze(&p).map_err(classify)?;
            if let Some(path) = &cli.svg {
                write_file(path, &svg::render(&p, &a))?;
            } else if matches!(cli.command, Command::Render { .. }) {
                return Err(Failure::Input(input(anyhow::anyhow!("render needs --svg <path>"))));
            }
            if matches!(cli.command, Command::Analyze { .. }) {
                print_analysis(&a);
            }
            report
        }
        Command::Fuzz { n_min, n_max, count, seed, mode, family } => {
            let mode = Mode::parse(mode).map_err(classify)?;
            let family = family.as_deref().map(Family::parse).transpose().map_err(classify)?;
            let cfg = FuzzConfig { n_min: *n_min, n_max: *n_max, count: *count, seed: *seed, mode, family };
            println!("mode: {}", mode.label());
            campaign::run_fuzz(&cfg).map_err(classify)?
        }
        Command::Lemmas { lemma, samples, seed } => {
            let lemma = if lemma.eq_ignore_ascii_case("all") { None } else { Some(LemmaId::parse(lemma).map_err(classify)?) };
            campaign::run_lemmas(&LemmaConfig { lemma, samples: *samples, seed: *seed }).map_err(classify)?
        }
        Command::Oracle { n, count, seed } => campaign::run_oracle(&OracleConfig { n: *n, count: *count, seed: *seed }).map_err(classify)?,
    };
    summarize(&report);
    if let Some(path) = &cli.out {
        write_file(path, &report.to_json())?;
    }
    Ok(report.exit_code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Input(InputError(e))) => {
            eprintln!("input error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
