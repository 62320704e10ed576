//! Two-panel SVG: the polygon with its side disks, and the circular
//! embedding of the intersection graph with chords colored by the
//! bipartition (or the odd cycle highlighted).

use std::fmt::Write as _;

use sidedisk::campaign::Analysis;
use sidedisk::geom::GDisk;
use sidedisk::graph::BipartiteCert;
use sidedisk::poly::{ConvexPolygon, Side};

const PANEL: f64 = 480.0;
const PAD: f64 = 20.0;
const COLORS: [&str; 2] = ["#d62728", "#1f77b4"];
const ODD: &str = "#ff7f0e";

struct View {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl View {
    fn fit(pts: &[(f64, f64)]) -> View {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9) * 1.6;
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        View { x0: cx - span / 2.0, y0: cy - span / 2.0, scale: (PANEL - 2.0 * PAD) / span }
    }

    /// Screen coordinates, y up.
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (PAD + (x - self.x0) * self.scale, PANEL - PAD - (y - self.y0) * self.scale)
    }

    fn unmap(&self, (sx, sy): (f64, f64)) -> (f64, f64) {
        ((sx - PAD) / self.scale + self.x0, (PANEL - PAD - sy) / self.scale + self.y0)
    }
}

/// Sutherland–Hodgman clip of a convex polygon against `a·x + b·y + c ≥ 0`.
fn clip(poly: &[(f64, f64)], (a, b, c): (f64, f64, f64)) -> Vec<(f64, f64)> {
    let f = |p: (f64, f64)| a * p.0 + b * p.1 + c;
    let mut out = Vec::new();
    for k in 0..poly.len() {
        let (p, q) = (poly[k], poly[(k + 1) % poly.len()]);
        let (fp, fq) = (f(p), f(q));
        if fp >= 0.0 {
            out.push(p);
        }
        if (fp >= 0.0) != (fq >= 0.0) {
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

fn path(pts: &[(f64, f64)], close: bool) -> String {
    let mut s = String::new();
    for (k, (x, y)) in pts.iter().enumerate() {
        let _ = write!(s, "{}{x:.2},{y:.2} ", if k == 0 { "M" } else { "L" });
    }
    if close {
        s.push('Z');
    }
    s
}

fn polygon_panel(out: &mut String, p: &ConvexPolygon) {
    let verts: Vec<(f64, f64)> = p.vertices().iter().map(|v| v.to_f64()).collect();
    let mut outline = verts.clone();
    if let Some((f, l)) = p.rays() {
        let span = verts.iter().map(|v| v.0.abs().max(v.1.abs())).fold(1.0, f64::max);
        let dir = |d: &sidedisk::geom::Vector| {
            let (x, y) = (sidedisk::scalar::to_f64(&d.0), sidedisk::scalar::to_f64(&d.1));
            let n = x.hypot(y).max(1e-300);
            (x / n * span, y / n * span)
        };
        let (fd, ld) = (dir(f), dir(l));
        let (first, last) = (verts[0], verts[verts.len() - 1]);
        outline.insert(0, (first.0 - fd.0, first.1 - fd.1));
        outline.push((last.0 + ld.0, last.1 + ld.1));
    }
    let view = View::fit(&outline);
    let _ = writeln!(out, r#"<g clip-path="url(#left)">"#);
    let corners: Vec<(f64, f64)> = [(0.0, 0.0), (PANEL, 0.0), (PANEL, PANEL), (0.0, PANEL)].iter().map(|&c| view.unmap(c)).collect();
    for (i, side) in p.sides().iter().enumerate() {
        let color = format!("hsl({}, 60%, 50%)", (i * 360) / p.n().max(1));
        match side.disk() {
            GDisk::Disk(d) => {
                let ((cx, cy), r) = (d.center.to_f64(), sidedisk::scalar::to_f64(&d.r2).sqrt());
                let (sx, sy) = view.map((cx, cy));
                let _ = writeln!(
                    out,
                    r#"  <circle cx="{sx:.2}" cy="{sy:.2}" r="{:.2}" fill="{color}" fill-opacity="0.08" stroke="{color}" stroke-width="1"/>"#,
                    r * view.scale
                );
            }
            GDisk::Halfplane(h) => {
                let s = h.inside_sign as f64;
                let l = &h.boundary;
                let coef = |v| sidedisk::scalar::to_f64(v) * s;
                let region = clip(&corners, (coef(&l.a), coef(&l.b), coef(&l.c)));
                let pts: Vec<_> = region.into_iter().map(|q| view.map(q)).collect();
                let _ = writeln!(out, r#"  <path d="{}" fill="{color}" fill-opacity="0.08" stroke="{color}" stroke-dasharray="4 3"/>"#, path(&pts, true));
            }
        }
    }
    let pts: Vec<_> = outline.iter().map(|&q| view.map(q)).collect();
    let _ = writeln!(out, r#"  <path d="{}" fill="none" stroke="black" stroke-width="2"/>"#, path(&pts, p.is_bounded()));
    for (i, side) in p.sides().iter().enumerate() {
        let mid = match side {
            Side::Segment { p, q } => {
                let (a, b) = (p.to_f64(), q.to_f64());
                ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
            }
            Side::Ray { apex, .. } => apex.to_f64(),
        };
        let (x, y) = view.map(mid);
        let _ = writeln!(out, r#"  <text x="{x:.2}" y="{y:.2}" font-size="12" font-family="sans-serif">{i}</text>"#);
    }
    let _ = writeln!(out, "</g>");
}

fn embedding_panel(out: &mut String, a: &Analysis) {
    let n = a.n;
    let (cx, cy, r) = (PANEL * 1.5, PANEL / 2.0, PANEL / 2.0 - 3.0 * PAD);
    let at = |k: usize| {
        let t = std::f64::consts::TAU * k as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
        (cx + r * t.cos(), cy + r * t.sin())
    };
    let line = |out: &mut String, i: usize, j: usize, stroke: &str, width: f64, dash: &str| {
        let ((x1, y1), (x2, y2)) = (at(i), at(j));
        let _ = writeln!(out, r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{width}"{dash}/>"#);
    };
    let _ = writeln!(out, "<g>");
    for &(i, j) in &a.edges {
        if !a.chords.contains(&(i, j)) {
            line(out, i, j, "#555", 2.0, "");
        }
    }
    match &a.certificate {
        BipartiteCert::Coloring(c) => {
            for (k, &(i, j)) in a.chords.iter().enumerate() {
                line(out, i, j, COLORS[c.get(k).copied().unwrap_or(0) as usize % 2], 2.0, "");
            }
        }
        BipartiteCert::OddCycle(cyc) => {
            for (k, &(i, j)) in a.chords.iter().enumerate() {
                if cyc.contains(&k) {
                    line(out, i, j, ODD, 4.0, r#" stroke-dasharray="8 4""#);
                } else {
                    line(out, i, j, "#aaa", 1.5, "");
                }
            }
        }
    }
    for k in 0..n {
        let (x, y) = at(k);
        let _ = writeln!(out, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="9" fill="white" stroke="black"/>"#);
        let _ = writeln!(out, r#"  <text x="{x:.2}" y="{:.2}" font-size="11" text-anchor="middle" font-family="sans-serif">{k}</text>"#, y + 4.0);
    }
    let verdict = if a.bipartite { "conflict graph bipartite: planar" } else { "odd cycle in the conflict graph" };
    let _ = writeln!(out, r#"  <text x="{:.2}" y="{:.2}" font-size="14" text-anchor="middle" font-family="sans-serif">{verdict}</text>"#, cx, PANEL - 8.0);
    let _ = writeln!(out, "</g>");
}

pub fn render(p: &ConvexPolygon, a: &Analysis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{PANEL}" viewBox="0 0 {w} {PANEL}">"#,
        w = 2.0 * PANEL
    );
    let _ = writeln!(out, r#"<defs><clipPath id="left"><rect x="0" y="0" width="{PANEL}" height="{PANEL}"/></clipPath></defs>"#);
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{}" height="{PANEL}" fill="white"/>"#, 2.0 * PANEL);
    polygon_panel(&mut out, p);
    let _ = writeln!(out, r##"<line x1="{PANEL}" y1="0" x2="{PANEL}" y2="{PANEL}" stroke="#ccc"/>"##);
    embedding_panel(&mut out, a);
    out.push_str("</svg>\n");
    out
}
