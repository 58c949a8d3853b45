//! Static SVG diagrams. Coordinates are converted to `f64` only here, for
//! drawing; nothing is read back.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::geometry::{lattice_points, LatticePoint};
use crate::scalar::Field;
use crate::subdivision::Subdivision;
use crate::tropcurve::TropicalCurve;

const SCALE: f64 = 60.0;
const MARGIN: f64 = 30.0;

fn to_f64<F: Field>(v: &F) -> f64 {
    let (n, d) = v.to_big_fraction();
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

struct Frame {
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new(min: (f64, f64), max: (f64, f64)) -> Self {
        Self {
            min_x: min.0,
            max_y: max.1,
            width: (max.0 - min.0) * SCALE + 2.0 * MARGIN,
            height: (max.1 - min.1) * SCALE + 2.0 * MARGIN,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.min_x) * SCALE + MARGIN, (self.max_y - y) * SCALE + MARGIN)
    }

    fn open(&self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.1}\" height=\"{h:.1}\" viewBox=\"0 0 {w:.1} {h:.1}\">\n",
            w = self.width,
            h = self.height
        )
    }
}

/// Cells as outlined polygons; marked points filled, unmarked lattice points
/// hollow.
pub fn render_subdivision(sub: &Subdivision) -> String {
    let verts = sub.base().vertices();
    let min = (verts.iter().map(|p| p.x).min().unwrap_or(0) as f64, verts.iter().map(|p| p.y).min().unwrap_or(0) as f64);
    let max = (verts.iter().map(|p| p.x).max().unwrap_or(0) as f64, verts.iter().map(|p| p.y).max().unwrap_or(0) as f64);
    let frame = Frame::new(min, max);
    let mut out = frame.open();
    for cell in sub.cells() {
        let pts: Vec<String> = cell
            .polygon()
            .iter()
            .map(|p| {
                let (x, y) = frame.map(p.x as f64, p.y as f64);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(
            out,
            "  <polygon class=\"cell\" points=\"{}\" fill=\"#eef3fb\" stroke=\"#234\" stroke-width=\"2\"/>",
            pts.join(" ")
        )
        .unwrap();
    }
    let marked = |p: LatticePoint| sub.cells().iter().any(|c| c.is_marked(p));
    for p in lattice_points(verts) {
        let (x, y) = frame.map(p.x as f64, p.y as f64);
        if marked(p) {
            writeln!(out, "  <circle class=\"marked\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"5\" fill=\"#234\"/>").unwrap();
        } else {
            writeln!(
                out,
                "  <circle class=\"unmarked\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"5\" fill=\"white\" stroke=\"#234\" stroke-width=\"1.5\"/>"
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Vertices, bounded edges and rays clipped to a window two units beyond the
/// vertices. Weights above one are written next to their edge.
pub fn render_curve<F: Field>(curve: &TropicalCurve<F>) -> String {
    let vs: Vec<(f64, f64)> = curve.vertices.iter().map(|(x, y)| (to_f64(x), to_f64(y))).collect();
    let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| vs.iter().map(pick).fold(init, f);
    let min = (fold(f64::min, f64::INFINITY, |v| v.0) - 2.0, fold(f64::min, f64::INFINITY, |v| v.1) - 2.0);
    let max = (fold(f64::max, f64::NEG_INFINITY, |v| v.0) + 2.0, fold(f64::max, f64::NEG_INFINITY, |v| v.1) + 2.0);
    let frame = Frame::new(min, max);
    let mut out = frame.open();
    let mut line = |class: &str, a: (f64, f64), b: (f64, f64), weight: u64| {
        let (x1, y1) = frame.map(a.0, a.1);
        let (x2, y2) = frame.map(b.0, b.1);
        writeln!(
            out,
            "  <line class=\"{class}\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#a22\" stroke-width=\"{}\"/>",
            1.5 * weight as f64
        )
        .unwrap();
        if weight > 1 {
            let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
            writeln!(out, "  <text class=\"weight\" x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\">{weight}</text>", mx + 6.0, my - 6.0)
                .unwrap();
        }
    };
    for e in &curve.bounded_edges {
        line("edge", vs[e.vertices[0]], vs[e.vertices[1]], e.weight);
    }
    for r in &curve.rays {
        let start = vs[r.vertex];
        let (dx, dy) = (r.direction.0 as f64, r.direction.1 as f64);
        // largest t keeping start + t·d inside the window
        let limit = |s: f64, d: f64, lo: f64, hi: f64| {
            if d > 0.0 {
                (hi - s) / d
            } else if d < 0.0 {
                (lo - s) / d
            } else {
                f64::INFINITY
            }
        };
        let t = limit(start.0, dx, min.0, max.0).min(limit(start.1, dy, min.1, max.1));
        line("ray", start, (start.0 + t * dx, start.1 + t * dy), r.weight);
    }
    for &(x, y) in &vs {
        let (cx, cy) = frame.map(x, y);
        writeln!(out, "  <circle class=\"vertex\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"4\" fill=\"#a22\"/>").unwrap();
    }
    out.push_str("</svg>\n");
    out
}
