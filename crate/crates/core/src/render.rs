//! Deterministic SVG arc diagrams and Hasse diagrams (DOT and SVG).
//!
//! Line mode puts the integer k at x = MARGIN + (k - lo) * PITCH on the
//! baseline y = LINE_Y; arcs bend BUMP above left-set points and BUMP below
//! right-set points. Circle mode puts residue r at angle 2π(r-1)/n clockwise
//! from the top on a circle of radius RADIUS around (CENTER, CENTER).

use std::f64::consts::PI;
use std::fmt::Write;

use crate::arc::Arc;
use crate::lab::FinitePoset;
use crate::tito::{wrapped_cross, WrappedArc};

pub const PITCH: i64 = 40;
pub const MARGIN: i64 = 30;
pub const LINE_Y: i64 = 60;
pub const BUMP: i64 = 20;
pub const CENTER: f64 = 150.0;
pub const RADIUS: f64 = 100.0;
pub const WRAP_STEP: f64 = 12.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn svg_open(out: &mut String, w: i64, h: i64) {
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#)
        .unwrap();
}

fn warning(out: &mut String, y: i64) {
    writeln!(out, r##"<text x="4" y="{y}" font-size="11" fill="#c00">warning: crossing arcs</text>"##).unwrap();
}

/// Arc diagram on a horizontal line. The drawn range defaults to the span of
/// the arcs.
pub fn render_arcs_line(arcs: &[Arc], range: Option<(i64, i64)>) -> String {
    let (lo, hi) = range.unwrap_or_else(|| {
        let lo = arcs.iter().map(|a| a.a).min().unwrap_or(1);
        let hi = arcs.iter().map(|a| a.b).max().unwrap_or(lo);
        (lo, hi)
    });
    let x = |k: i64| MARGIN + (k - lo) * PITCH;
    let (w, h) = (2 * MARGIN + (hi - lo) * PITCH, 2 * LINE_Y);
    let mut out = String::new();
    svg_open(&mut out, w, h);
    writeln!(out, r##"<line x1="{}" y1="{LINE_Y}" x2="{}" y2="{LINE_Y}" stroke="#ddd"/>"##, x(lo), x(hi)).unwrap();
    for k in lo..=hi {
        writeln!(out, r#"<circle cx="{}" cy="{LINE_Y}" r="3" fill="black"/>"#, x(k)).unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{k}</text>"#,
            x(k),
            LINE_Y + BUMP + 18
        )
        .unwrap();
    }
    for arc in arcs {
        let mut pts = vec![(x(arc.a), LINE_Y)];
        for m in arc.a + 1..arc.b {
            let y = if arc.left.contains(&m) { LINE_Y - BUMP } else { LINE_Y + BUMP };
            pts.push((x(m), y));
        }
        pts.push((x(arc.b), LINE_Y));
        let mut d = format!("M {} {}", pts[0].0, pts[0].1);
        if pts.len() == 2 {
            write!(d, " L {} {}", pts[1].0, pts[1].1).unwrap();
        } else {
            for s in pts.windows(2) {
                let ((x0, y0), (x1, y1)) = (s[0], s[1]);
                let c = (x1 - x0) / 2;
                write!(d, " C {} {y0} {} {y1} {x1} {y1}", x0 + c, x1 - c).unwrap();
            }
        }
        writeln!(out, r#"<path d="{d}" fill="none" stroke="black" stroke-width="2"/>"#).unwrap();
    }
    if arcs.iter().enumerate().any(|(i, p)| arcs[i + 1..].iter().any(|q| p.crosses(q))) {
        warning(&mut out, 12);
    }
    out.push_str("</svg>\n");
    out
}

fn polar(value: f64, n: usize, r: f64) -> (f64, f64) {
    let theta = 2.0 * PI * (value - 1.0) / n as f64;
    (CENTER + r * theta.sin(), CENTER - r * theta.cos())
}

/// Wrapped arcs drawn clockwise around a circle labelled by Z/nZ. Each later
/// winding passes one step further from the circle.
pub fn render_arcs_circle(arcs: &[WrappedArc], n: usize) -> String {
    let size = (2.0 * CENTER) as i64;
    let mut out = String::new();
    svg_open(&mut out, size, size);
    writeln!(out, r#"<circle cx="{CENTER:.2}" cy="{CENTER:.2}" r="3" fill="black"/>"#).unwrap();
    for r in 1..=n {
        let (px, py) = polar(r as f64, n, RADIUS);
        let (lx, ly) = polar(r as f64, n, RADIUS + 2.5 * WRAP_STEP + 8.0);
        writeln!(out, r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="black"/>"#).unwrap();
        writeln!(out, r#"<text x="{lx:.2}" y="{:.2}" font-size="12" text-anchor="middle">{r}</text>"#, ly + 4.0)
            .unwrap();
    }
    for w in arcs {
        let (a, b) = (w.a(), w.b());
        let radius = |k: i64| -> f64 {
            if k == a || k == b {
                return RADIUS;
            }
            let winding = ((k - a - 1) / n as i64) as f64 + 1.0;
            if w.arc.left.contains(&k) {
                RADIUS + winding * WRAP_STEP
            } else {
                RADIUS - winding * WRAP_STEP * 0.6
            }
        };
        let (sx, sy) = polar(a as f64, n, RADIUS);
        let mut d = format!("M {sx:.2} {sy:.2}");
        const STEPS: i64 = 8;
        for k in a..b {
            let (r0, r1) = (radius(k), radius(k + 1));
            for s in 1..=STEPS {
                let f = s as f64 / STEPS as f64;
                let (px, py) = polar(k as f64 + f, n, r0 + (r1 - r0) * f);
                write!(d, " L {px:.2} {py:.2}").unwrap();
            }
        }
        writeln!(out, r#"<path d="{d}" fill="none" stroke="black" stroke-width="2"/>"#).unwrap();
    }
    if arcs.iter().enumerate().any(|(i, p)| arcs[i + 1..].iter().any(|q| wrapped_cross(p, q))) {
        warning(&mut out, 12);
    }
    out.push_str("</svg>\n");
    out
}

/// DOT digraph of the cover relations, one `rank=same` group per rank.
pub fn render_hasse_dot(p: &FinitePoset) -> String {
    let ranks = p.ranks();
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, label) in p.labels().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", label.replace('\\', "\\\\").replace('"', "\\\"")).unwrap();
    }
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=max_rank {
        let members: Vec<String> = (0..p.len()).filter(|&i| ranks[i] == r).map(|i| format!("n{i};")).collect();
        if !members.is_empty() {
            writeln!(out, "  {{ rank=same; {} }}", members.join(" ")).unwrap();
        }
    }
    for (x, y) in p.cover_pairs() {
        writeln!(out, "  n{x} -> n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Layered SVG Hasse diagram, bottom rank at the bottom.
pub fn render_hasse_svg(p: &FinitePoset) -> String {
    const COL: i64 = 110;
    const ROW: i64 = 70;
    let ranks = p.ranks();
    let max_rank = ranks.iter().copied().max().unwrap_or(0) as i64;
    let layers: Vec<Vec<usize>> =
        (0..=max_rank).map(|r| (0..p.len()).filter(|&i| ranks[i] as i64 == r).collect()).collect();
    let widest = layers.iter().map(Vec::len).max().unwrap_or(1) as i64;
    let (w, h) = (widest * COL + 2 * MARGIN, max_rank * ROW + 2 * MARGIN + 20);
    let mut pos = vec![(0, 0); p.len()];
    for (r, layer) in layers.iter().enumerate() {
        let offset = (w - layer.len() as i64 * COL) / 2 + COL / 2;
        for (k, &i) in layer.iter().enumerate() {
            pos[i] = (offset + k as i64 * COL, h - MARGIN - 10 - r as i64 * ROW);
        }
    }
    let mut out = String::new();
    svg_open(&mut out, w, h);
    for (x, y) in p.cover_pairs() {
        let ((x0, y0), (x1, y1)) = (pos[x], pos[y]);
        writeln!(out, r##"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#888"/>"##).unwrap();
    }
    for (i, label) in p.labels().iter().enumerate() {
        let (x, y) = pos[i];
        writeln!(
            out,
            r#"<text x="{x}" y="{}" font-size="12" text-anchor="middle" font-family="monospace" paint-order="stroke" stroke="white" stroke-width="4">{}</text>"#,
            y + 4,
            escape(label)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::weak_order_sn_lattice;

    #[test]
    fn straight_segment_for_short_arc() {
        let svg = render_arcs_line(&["(3,4||)".parse().unwrap()], Some((1, 5)));
        assert!(svg.contains(r#"d="M 110 60 L 150 60""#));
        assert_eq!(svg.matches("<path").count(), 1);
    }

    #[test]
    fn empty_diagram_has_points_only() {
        let svg = render_arcs_line(&[], Some((1, 3)));
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<path").count(), 0);
    }

    #[test]
    fn crossing_arcs_get_a_warning() {
        let arcs: Vec<Arc> = vec!["(1,3|2|)".parse().unwrap(), "(2,4|3|)".parse().unwrap()];
        assert!(render_arcs_line(&arcs, None).contains("warning"));
    }

    #[test]
    fn hexagon_dot() {
        let dot = render_hasse_dot(&weak_order_sn_lattice(3).poset);
        assert_eq!(dot.matches("->").count(), 6);
        assert_eq!(dot.matches("[label=").count(), 6);
        let one = FinitePoset::new(vec!["x".into()], vec![vec![true]]).unwrap();
        assert_eq!(render_hasse_dot(&one).matches("->").count(), 0);
    }

    #[test]
    fn renders_are_deterministic() {
        let w = WrappedArc::parse("<2,7|5 6|3 4>", 4).unwrap();
        assert_eq!(render_arcs_circle(std::slice::from_ref(&w), 4), render_arcs_circle(&[w], 4));
        let p = weak_order_sn_lattice(3).poset;
        assert_eq!(render_hasse_svg(&p), render_hasse_svg(&p));
    }
}
