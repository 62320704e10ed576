//! Interval verification of the trigonometric inequalities behind the
//! quadrilateral lemma and the cotangent chain of the wedge lemma.
//!
//! Angles are rational multiples of `π`. Rows share their `α` terms and step
//! `β` by an interval rotation; anything the fast path cannot decide is
//! re-evaluated from scratch along [`PRECISION_LADDER`].

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Witness;
use crate::error::Result;
use crate::interval::{pi_multiple, Interval, PRECISION_LADDER};
use crate::scalar::{self, int, rat, Scalar};
use astro_float::BigFloat;

/// Strict inequalities must clear this margin.
const MARGIN_EXP: u32 = 30;
/// Identities must enclose zero with at most this width.
const EQUALITY_WIDTH_EXP: u32 = 40;
const MAX_LISTED: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// `0 < α < π/6`, `π/4 + α/2 ≤ β < π/2 − α`.
    Quad,
    /// `0 < β ≤ α < π/2`.
    Chain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IneqGrid {
    pub quad_alpha: u32,
    pub quad_beta: u32,
    pub chain_alpha: u32,
    pub chain_beta: u32,
}

impl Default for IneqGrid {
    fn default() -> Self {
        IneqGrid { quad_alpha: 1000, quad_beta: 800, chain_alpha: 400, chain_beta: 500 }
    }
}

impl IneqGrid {
    pub fn points(&self) -> u64 {
        self.quad_alpha as u64 * self.quad_beta as u64 + self.chain_alpha as u64 * self.chain_beta as u64
    }

    /// A grid of roughly `total` points with the default proportions.
    pub fn with_total(total: u64) -> IneqGrid {
        let f = (total as f64 / 1e6).sqrt();
        let d = IneqGrid::default();
        let s = |x: u32| ((x as f64 * f).round() as u32).max(1);
        IneqGrid { quad_alpha: s(d.quad_alpha), quad_beta: s(d.quad_beta), chain_alpha: s(d.chain_alpha), chain_beta: s(d.chain_beta) }
    }
}

/// One evaluated point, kept when it fails or stays undecided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IneqSample {
    pub region: Region,
    /// `α / π`.
    #[serde(with = "scalar::text")]
    pub alpha: Scalar,
    /// `β / π`.
    #[serde(with = "scalar::text")]
    pub beta: Scalar,
    pub name: String,
    pub value: String,
    pub verdict: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct IneqReport {
    pub points: u64,
    pub checks: u64,
    /// Points on the diagonal `β = α` of the chain, where it holds with equality.
    pub equalities: u64,
    /// Points that needed more than the base precision.
    pub escalated: u64,
    pub failed_points: u64,
    pub degenerate_points: u64,
    pub failures: Vec<IneqSample>,
    pub degenerate: Vec<IneqSample>,
}

impl IneqReport {
    pub fn passed(&self) -> bool {
        self.points > 0 && self.failed_points == 0 && self.degenerate_points == 0
    }

    fn merge(&mut self, o: IneqReport) {
        self.points += o.points;
        self.checks += o.checks;
        self.equalities += o.equalities;
        self.escalated += o.escalated;
        self.failed_points += o.failed_points;
        self.degenerate_points += o.degenerate_points;
        for s in o.failures {
            if self.failures.len() < MAX_LISTED {
                self.failures.push(s);
            }
        }
        for s in o.degenerate {
            if self.degenerate.len() < MAX_LISTED {
                self.degenerate.push(s);
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// Strictly positive, by at least the margin.
    Strict,
    /// Encloses zero within the equality width.
    Zero,
    /// The exact point zero.
    ExactZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    Ok,
    Fail,
    Undecided,
}

struct Term {
    name: &'static str,
    kind: Kind,
    value: Interval,
}

fn pow10_inv(e: u32, prec: usize) -> Interval {
    Interval::from_rational(&Scalar::new(BigInt::from(1), BigInt::from(10u8).pow(e)), prec)
}

struct Floors {
    margin: BigFloat,
    width: BigFloat,
}

impl Floors {
    fn new(prec: usize) -> Floors {
        Floors { margin: pow10_inv(MARGIN_EXP, prec).hi().clone(), width: pow10_inv(EQUALITY_WIDTH_EXP, prec).lo().clone() }
    }
}

fn judge(t: &Term, f: &Floors) -> Verdict {
    match t.kind {
        Kind::Strict => match t.value.sign() {
            Some(1) if t.value.lo() > &f.margin => Verdict::Ok,
            Some(1) if t.value.hi() <= &f.margin => Verdict::Fail,
            Some(1) | None => Verdict::Undecided,
            _ => Verdict::Fail,
        },
        Kind::Zero => {
            if !t.value.contains_zero() {
                Verdict::Fail
            } else if t.value.width() <= f.width {
                Verdict::Ok
            } else {
                Verdict::Undecided
            }
        }
        Kind::ExactZero => match t.value.sign() {
            Some(0) => Verdict::Ok,
            None => Verdict::Undecided,
            _ => Verdict::Fail,
        },
    }
}

struct RowTrig {
    sa: Interval,
    ca: Interval,
    s2a: Interval,
    c2a: Interval,
    saca: Interval,
    cot: Interval,
    one: Interval,
    three: Interval,
    four: Interval,
}

impl RowTrig {
    fn new(qa: &Scalar, prec: usize) -> RowTrig {
        let a = pi_multiple(qa, prec);
        let (sa, ca) = (a.sin(), a.cos());
        let two = Interval::from_int(2, prec);
        let saca = &sa * &ca;
        RowTrig {
            s2a: &two * &saca,
            c2a: &ca.sqr() - &sa.sqr(),
            cot: &ca / &sa,
            saca,
            sa,
            ca,
            one: Interval::from_int(1, prec),
            three: Interval::from_int(3, prec),
            four: Interval::from_int(4, prec),
        }
    }
}

fn quad_terms(r: &RowTrig, sb: &Interval, cb: &Interval) -> Vec<Term> {
    let cb_sa = cb * &r.sa;
    let sb_ca = sb * &r.ca;
    let s_ba = &sb_ca + &cb_sa;
    let c_ba = &(cb * &r.ca) - &(sb * &r.sa);
    let s_b2a = &(sb * &r.c2a) - &(cb * &r.s2a);
    let s_bma = &sb_ca - &cb_sa;
    let tan3 = &sb_ca - &(&r.three * &cb_sa);
    let prod = &(&s_ba * &s_b2a) * cb;
    let sum2 = (&s_b2a + sb).sqr();
    let smsq = s_bma.sqr();
    let eq1 = &(&r.four * &prod) - &(&sum2 * &c_ba);
    let eq2 = &prod - &(&smsq * &c_ba);
    let identity = &eq2 - &(&r.saca * &tan3);
    let jensen = &(&r.four * &smsq) - &sum2;
    let t = |name, kind, value| Term { name, kind, value };
    vec![
        t("sin(b-2a) > 0", Kind::Strict, s_b2a),
        t("cos(b+a) > 0", Kind::Strict, c_ba),
        t("eq1", Kind::Strict, eq1),
        t("eq2", Kind::Strict, eq2),
        t("tan(b) > 3 tan(a)", Kind::Strict, tan3),
        t("eq2 identity", Kind::Zero, identity),
        t("jensen", Kind::Strict, jensen),
    ]
}

fn chain_terms(r: &RowTrig, sb: &Interval, cb: &Interval, diag: bool) -> Vec<Term> {
    let half_tan = sb / &(&r.one + cb);
    let c1 = &(&(&r.cot + &half_tan) * cb) - &r.cot;
    let c2 = &(&(cb * &half_tan) / &(&r.one - cb)) - &r.cot;
    let c3 = &(cb / sb) - &r.cot;
    let prec = sb.precision();
    let (kind, c4, k4) = if diag {
        (Kind::Zero, pi_multiple(&scalar::zero(), prec).sin(), Kind::ExactZero)
    } else {
        (Kind::Strict, &(&r.sa * cb) - &(&r.ca * sb), Kind::Strict)
    };
    let t = |name, kind, value| Term { name, kind, value };
    vec![t("chain1", kind, c1), t("chain2", kind, c2), t("chain3", kind, c3), t("chain4", k4, c4)]
}

fn terms_direct(region: Region, qa: &Scalar, qb: &Scalar, prec: usize) -> Vec<Term> {
    let r = RowTrig::new(qa, prec);
    let diag = region == Region::Chain && qa == qb;
    let (sb, cb) = if diag {
        (r.sa.clone(), r.ca.clone())
    } else {
        let b = pi_multiple(qb, prec);
        (b.sin(), b.cos())
    };
    match region {
        Region::Quad => quad_terms(&r, &sb, &cb),
        Region::Chain => chain_terms(&r, &sb, &cb, diag),
    }
}

struct PointResult {
    verdict: Verdict,
    escalated: bool,
    worst: Option<(String, String, Verdict)>,
}

fn worst_of(terms: &[Term], floors: &Floors) -> (Verdict, Option<(String, String, Verdict)>) {
    let mut out = (Verdict::Ok, None);
    for t in terms {
        let v = judge(t, floors);
        if v == Verdict::Fail {
            return (v, Some((t.name.to_string(), t.value.mid_string(), v)));
        }
        if v == Verdict::Undecided && out.0 == Verdict::Ok {
            out = (v, Some((t.name.to_string(), t.value.mid_string(), v)));
        }
    }
    out
}

/// Judges a point from precomputed base-precision terms, escalating as needed.
fn settle(region: Region, qa: &Scalar, qb: &Scalar, base: Vec<Term>, floors: &Floors) -> PointResult {
    let (mut v, mut worst) = worst_of(&base, floors);
    let mut escalated = false;
    for &prec in &PRECISION_LADDER[1..] {
        if v != Verdict::Undecided {
            break;
        }
        escalated = true;
        let f = Floors::new(prec);
        (v, worst) = worst_of(&terms_direct(region, qa, qb, prec), &f);
    }
    PointResult { verdict: v, escalated, worst }
}

fn sample(region: Region, qa: &Scalar, qb: &Scalar, w: (String, String, Verdict)) -> IneqSample {
    let verdict = match w.2 {
        Verdict::Fail => "fail",
        Verdict::Undecided => "undecided",
        Verdict::Ok => "ok",
    };
    IneqSample { region, alpha: qa.clone(), beta: qb.clone(), name: w.0, value: w.1, verdict: verdict.into() }
}

fn record(rep: &mut IneqReport, region: Region, qa: &Scalar, qb: &Scalar, n_terms: usize, r: PointResult) {
    rep.points += 1;
    rep.checks += n_terms as u64;
    rep.escalated += r.escalated as u64;
    match r.verdict {
        Verdict::Ok => {}
        Verdict::Fail => {
            rep.failed_points += 1;
            if rep.failures.len() < MAX_LISTED {
                rep.failures.push(sample(region, qa, qb, r.worst.expect("failing term")));
            }
        }
        Verdict::Undecided => {
            rep.degenerate_points += 1;
            if rep.degenerate.len() < MAX_LISTED {
                rep.degenerate.push(sample(region, qa, qb, r.worst.expect("undecided term")));
            }
        }
    }
}

/// Rotates `(s, c)` by the angle with sine `sh` and cosine `ch`.
fn rotate(s: &Interval, c: &Interval, sh: &Interval, ch: &Interval) -> (Interval, Interval) {
    (&(s * ch) + &(c * sh), &(c * ch) - &(s * sh))
}

fn quad_row(i: u32, grid: &IneqGrid) -> IneqReport {
    let prec = PRECISION_LADDER[0];
    let floors = Floors::new(prec);
    let qa = rat(i as i64 + 1, grid.quad_alpha as i64 + 1) * rat(1, 6);
    let lo = rat(1, 4) + &qa * rat(1, 2);
    let step = (rat(1, 4) - &qa * rat(3, 2)) / int(grid.quad_beta as i64);
    let r = RowTrig::new(&qa, prec);
    let b0 = pi_multiple(&lo, prec);
    let (mut sb, mut cb) = (b0.sin(), b0.cos());
    let h = pi_multiple(&step, prec);
    let (sh, ch) = (h.sin(), h.cos());
    let mut rep = IneqReport::default();
    for j in 0..grid.quad_beta {
        let qb = &lo + &step * int(j as i64);
        let terms = quad_terms(&r, &sb, &cb);
        let n = terms.len();
        let res = settle(Region::Quad, &qa, &qb, terms, &floors);
        record(&mut rep, Region::Quad, &qa, &qb, n, res);
        (sb, cb) = rotate(&sb, &cb, &sh, &ch);
    }
    rep
}

fn chain_row(i: u32, grid: &IneqGrid) -> IneqReport {
    let prec = PRECISION_LADDER[0];
    let floors = Floors::new(prec);
    let qa = rat(i as i64 + 1, grid.chain_alpha as i64 + 1) * rat(1, 2);
    let step = &qa / int(grid.chain_beta as i64);
    let r = RowTrig::new(&qa, prec);
    let h = pi_multiple(&step, prec);
    let (sh, ch) = (h.sin(), h.cos());
    let (mut sb, mut cb) = (sh.clone(), ch.clone());
    let mut rep = IneqReport::default();
    for j in 0..grid.chain_beta {
        let diag = j + 1 == grid.chain_beta;
        let qb = if diag { qa.clone() } else { &step * int(j as i64 + 1) };
        let terms = if diag { chain_terms(&r, &r.sa, &r.ca, true) } else { chain_terms(&r, &sb, &cb, false) };
        let n = terms.len();
        let res = settle(Region::Chain, &qa, &qb, terms, &floors);
        rep.equalities += diag as u64;
        record(&mut rep, Region::Chain, &qa, &qb, n, res);
        (sb, cb) = rotate(&sb, &cb, &sh, &ch);
    }
    rep
}

/// Evaluates every grid point; rows run in parallel and merge in row order.
pub fn check_proof_inequalities(grid: &IneqGrid) -> IneqReport {
    let quad: Vec<IneqReport> = (0..grid.quad_alpha).into_par_iter().map(|i| quad_row(i, grid)).collect();
    let chain: Vec<IneqReport> = (0..grid.chain_alpha).into_par_iter().map(|i| chain_row(i, grid)).collect();
    let mut rep = IneqReport::default();
    for r in quad.into_iter().chain(chain) {
        rep.merge(r);
    }
    rep
}

/// Re-evaluates a single recorded point from scratch.
pub fn recheck(s: &IneqSample) -> Result<(bool, Witness)> {
    let prec = PRECISION_LADDER[0];
    let res = settle(s.region, &s.alpha, &s.beta, terms_direct(s.region, &s.alpha, &s.beta, prec), &Floors::new(prec));
    if res.verdict == Verdict::Undecided {
        return Err(crate::error::Error::Degenerate(format!("{} undecided at alpha = {} pi, beta = {} pi", s.name, s.alpha, s.beta)));
    }
    let out = match res.worst {
        Some(w) => sample(s.region, &s.alpha, &s.beta, w),
        None => IneqSample { verdict: "ok".into(), ..s.clone() },
    };
    Ok((res.verdict == Verdict::Ok, Witness::Inequality { sample: out }))
}
