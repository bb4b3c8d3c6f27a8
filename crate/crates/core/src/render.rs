//! SVG drawings of link diagrams: Tutte barycentric layout of the crossing
//! graph with a concentric fallback, over-strands drawn through and
//! under-strands broken at each crossing.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linkdiag::LinkDiagram;
use crate::planarmap::CombinatorialMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayoutKind {
    Tutte,
    Concentric,
    /// Crossingless diagrams: circles only.
    Circles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RenderSummary {
    pub crossings: usize,
    /// Under-strand gaps drawn, one per crossing.
    pub breaks: usize,
    pub layout: LayoutKind,
}

type Pt = (f64, f64);

const SIZE: f64 = 600.0;
const PALETTE: [&str; 8] = ["#1f4e9c", "#b8312f", "#2f8f4e", "#c27c0e", "#6a3d9a", "#11808a", "#8c564b", "#d6338a"];

/// Tutte embedding with the longest face as the outer polygon.
pub fn tutte_layout(m: &CombinatorialMap) -> Result<Vec<Pt>> {
    let nv = m.num_vertices();
    if !m.is_connected() || nv < 3 {
        return Err(Error::LayoutDegenerate("too few vertices or disconnected".into()));
    }
    let outer = m
        .faces()
        .into_iter()
        .map(|f| {
            let mut vs: Vec<usize> = Vec::new();
            for d in f {
                let v = m.vertex_of(d);
                if !vs.contains(&v) {
                    vs.push(v);
                }
            }
            vs
        })
        .max_by_key(|vs| vs.len())
        .unwrap_or_default();
    if outer.len() < 3 {
        return Err(Error::LayoutDegenerate("no face with three distinct vertices".into()));
    }
    let mut pos = vec![(0.0, 0.0); nv];
    let mut fixed = vec![false; nv];
    for (i, &v) in outer.iter().enumerate() {
        // the outer boundary runs counterclockwise in face order
        let t = TAU * i as f64 / outer.len() as f64 + FRAC_PI_2;
        pos[v] = (t.cos(), t.sin());
        fixed[v] = true;
    }
    let neighbours: Vec<Vec<usize>> = m
        .vertices()
        .iter()
        .map(|c| c.iter().map(|&d| m.vertex_of(m.alpha()[d])).collect())
        .collect();
    for _ in 0..20_000 {
        let mut moved: f64 = 0.0;
        for v in 0..nv {
            if fixed[v] {
                continue;
            }
            let k = neighbours[v].len() as f64;
            let (sx, sy) = neighbours[v].iter().fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            let p = (sx / k, sy / k);
            moved = moved.max((p.0 - pos[v].0).abs() + (p.1 - pos[v].1).abs());
            pos[v] = p;
        }
        if moved < 1e-12 {
            break;
        }
    }
    for a in 0..nv {
        for b in a + 1..nv {
            if (pos[a].0 - pos[b].0).hypot(pos[a].1 - pos[b].1) < 1e-4 {
                return Err(Error::LayoutDegenerate(format!("vertices {} and {} coincide", a, b)));
            }
        }
    }
    Ok(pos)
}

/// Vertices on concentric rings by distance from vertex 0; each connected
/// piece is laid out separately and the pieces are placed side by side.
pub fn concentric_layout(m: &CombinatorialMap) -> Vec<Pt> {
    let nv = m.num_vertices();
    let mut pos = vec![(0.0, 0.0); nv];
    let mut piece_of = vec![usize::MAX; nv];
    let mut pieces = 0;
    let adj: Vec<Vec<usize>> = m
        .vertices()
        .iter()
        .map(|c| c.iter().map(|&d| m.vertex_of(m.alpha()[d])).collect())
        .collect();
    let mut rings_all = Vec::new();
    for s in 0..nv {
        if piece_of[s] != usize::MAX {
            continue;
        }
        let mut rings: Vec<Vec<usize>> = vec![vec![s]];
        piece_of[s] = pieces;
        loop {
            let mut next = Vec::new();
            for &v in rings.last().unwrap() {
                for &u in &adj[v] {
                    if piece_of[u] == usize::MAX {
                        piece_of[u] = pieces;
                        next.push(u);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            rings.push(next);
        }
        rings_all.push(rings);
        pieces += 1;
    }
    let width = 2.2;
    for (p, rings) in rings_all.iter().enumerate() {
        let cx = p as f64 * width;
        let depth = rings.len().max(2) as f64 - 1.0;
        for (r, ring) in rings.iter().enumerate() {
            let radius = r as f64 / depth;
            for (i, &v) in ring.iter().enumerate() {
                let t = TAU * (i as f64 + 0.5 * r as f64) / ring.len() as f64;
                pos[v] = (cx + radius * t.cos(), radius * t.sin());
            }
        }
    }
    pos
}

fn circular_mean(angles: &[f64]) -> f64 {
    let (s, c) = angles.iter().fold((0.0, 0.0), |(s, c), a| (s + a.sin(), c + a.cos()));
    if s.abs() + c.abs() < 1e-12 {
        0.0
    } else {
        s.atan2(c)
    }
}

/// Maps layout coordinates (y up) onto the canvas (y down).
struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn new(points: &[Pt], margin: f64) -> Self {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in points {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        Frame {
            x0: x0 - (span - (x1 - x0)) / 2.0,
            y1: y1 + (span - (y1 - y0)) / 2.0,
            scale: (SIZE - 2.0 * margin) / span,
            margin,
        }
    }

    fn map(&self, p: Pt) -> Pt {
        (self.margin + self.scale * (p.0 - self.x0), self.margin + self.scale * (self.y1 - p.1))
    }
}

/// The SVG document and its summary.
pub fn render_svg_string(d: &LinkDiagram) -> (String, RenderSummary) {
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        SIZE
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let style = r#"fill="none" stroke-width="4" stroke-linecap="round""#;

    let nc = d.num_crossings();
    let cycles = d.strand_cycles();
    let mut colour = std::collections::HashMap::new();
    for (i, cyc) in cycles.iter().enumerate() {
        for &a in cyc {
            colour.insert(a, PALETTE[i % PALETTE.len()]);
        }
    }

    let kind = if nc == 0 {
        LayoutKind::Circles
    } else {
        let m = d.underlying_map();
        let (pos, kind) = match tutte_layout(&m) {
            Ok(p) => (p, LayoutKind::Tutte),
            Err(_) => (concentric_layout(&m), LayoutKind::Concentric),
        };
        let mut unit = f64::MAX;
        for a in 0..nc {
            for b in a + 1..nc {
                unit = unit.min((pos[a].0 - pos[b].0).hypot(pos[a].1 - pos[b].1));
            }
        }
        if unit == f64::MAX {
            unit = 1.0;
        }
        let frame = Frame::new(&pos, 0.12 * SIZE);

        // slots a quarter turn apart counterclockwise, turned to face the neighbours
        let mut dir = vec![0.0; 4 * nc];
        for k in 0..nc {
            let offsets: Vec<f64> = (0..4)
                .filter_map(|slot| {
                    let u = m.alpha()[4 * k + slot] / 4;
                    (u != k).then(|| (pos[u].1 - pos[k].1).atan2(pos[u].0 - pos[k].0) - FRAC_PI_2 * slot as f64)
                })
                .collect();
            let base = circular_mean(&offsets);
            for slot in 0..4 {
                dir[4 * k + slot] = base + FRAC_PI_2 * slot as f64;
            }
        }
        let (gap, reach) = (0.18 * unit, 0.45 * unit);
        let end = |x: usize, along: f64| {
            let k = x / 4;
            frame.map((pos[k].0 + along * dir[x].cos(), pos[k].1 + along * dir[x].sin()))
        };
        for dart in 0..4 * nc {
            let other = m.alpha()[dart];
            if other < dart {
                continue;
            }
            let start = |x: usize| if LinkDiagram::is_over_dart(x) { 0.0 } else { gap };
            let (p0, c0) = (end(dart, start(dart)), end(dart, reach));
            let (p1, c1) = (end(other, start(other)), end(other, reach));
            let label = d.crossings()[dart / 4].arcs[dart % 4];
            let _ = writeln!(
                svg,
                r#"<path d="M {:.2} {:.2} C {:.2} {:.2} {:.2} {:.2} {:.2} {:.2}" stroke="{}" {}/>"#,
                p0.0, p0.1, c0.0, c0.1, c1.0, c1.1, p1.0, p1.1, colour[&label], style
            );
        }
        kind
    };

    // free circles: a row along the bottom, or the whole canvas when alone
    let k = d.unknots();
    for i in 0..k {
        let (cx, cy, r) = if nc == 0 {
            (SIZE * (i as f64 + 0.5) / k as f64, SIZE / 2.0, SIZE / (3.0 * k as f64))
        } else {
            (0.06 * SIZE * (2 * i + 1) as f64, SIZE - 0.06 * SIZE, 0.04 * SIZE)
        };
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" stroke="{}" {}/>"#,
            cx,
            cy,
            r,
            PALETTE[(cycles.len() + i) % PALETTE.len()],
            style
        );
    }
    svg.push_str("</svg>\n");
    (
        svg,
        RenderSummary {
            crossings: nc,
            breaks: nc,
            layout: kind,
        },
    )
}

pub fn render_svg(d: &LinkDiagram, out: &Path) -> Result<RenderSummary> {
    let (svg, summary) = render_svg_string(d);
    std::fs::write(out, svg)?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::Archimedean;
    use crate::linkdiag::BraidWord;

    #[test]
    fn unknot_is_one_circle() {
        let (svg, s) = render_svg_string(&LinkDiagram::unknot());
        assert_eq!((s.breaks, s.layout), (0, LayoutKind::Circles));
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<path").count(), 0);
    }

    #[test]
    fn trefoil_breaks() {
        let t = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure();
        let (svg, s) = render_svg_string(&t);
        assert_eq!(s.breaks, 3);
        assert_eq!(svg.matches("<path").count(), 6);
    }

    #[test]
    fn truncated_tetrahedron_uses_tutte() {
        let d = Archimedean::TruncatedTetrahedron.diagram().unwrap();
        let (_, s) = render_svg_string(&d);
        assert_eq!((s.breaks, s.layout), (12, LayoutKind::Tutte));
    }

    #[test]
    fn tutte_rejects_tiny_maps() {
        let hopf = BraidWord::new(2, vec![1, 1]).unwrap().closure();
        assert!(matches!(tutte_layout(&hopf.underlying_map()), Err(Error::LayoutDegenerate(_))));
        assert_eq!(render_svg_string(&hopf).1.layout, LayoutKind::Concentric);
    }

    #[test]
    fn io_failure_surfaces() {
        let e = render_svg(&LinkDiagram::unknot(), Path::new("/nonexistent-dir/x.svg")).unwrap_err();
        assert_eq!(e.name(), "IOFailure");
    }
}
