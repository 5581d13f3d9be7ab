//! SVG output for graphs and grids.

use std::fmt::Write;

use crate::geom::Point;
use crate::graph::GeometricGraph;
use crate::grid::{classify_edges, EdgeColor, Grid};

struct Frame {
    min_x: f64,
    min_y: f64,
    width: f64,
    height: f64,
    unit: f64,
}

impl Frame {
    /// Bounding box plus a 5% margin; y is flipped so "up" is up.
    fn fit(points: &[Point]) -> Frame {
        if points.is_empty() {
            return Frame { min_x: 0.0, min_y: 0.0, width: 1.0, height: 1.0, unit: 1.0 };
        }
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for p in points {
            x0 = x0.min(p.x);
            x1 = x1.max(p.x);
            y0 = y0.min(-p.y);
            y1 = y1.max(-p.y);
        }
        let extent = (x1 - x0).max(y1 - y0);
        let extent = if extent > 0.0 { extent } else { 1.0 };
        let margin = 0.05 * extent;
        Frame {
            min_x: x0 - margin,
            min_y: y0 - margin,
            width: x1 - x0 + 2.0 * margin,
            height: y1 - y0 + 2.0 * margin,
            unit: extent / 200.0,
        }
    }

    fn open(&self, out: &mut String) {
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
            self.min_x, self.min_y, self.width, self.height
        );
    }
}

fn line(out: &mut String, a: Point, b: Point, class: &str, stroke: &str, width: f64) {
    let _ = writeln!(
        out,
        r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{width}"/>"#,
        a.x, -a.y, b.x, -b.y
    );
}

fn vertex(out: &mut String, p: Point, steiner: bool, frame: &Frame) {
    let r = frame.unit * if steiner { 0.6 } else { 1.0 };
    let (fill, class) = if steiner { ("none", "steiner") } else { ("black", "original") };
    let _ = writeln!(
        out,
        r#"<circle class="{class}" cx="{}" cy="{}" r="{r}" fill="{fill}" stroke="black" stroke-width="{}"/>"#,
        p.x,
        -p.y,
        frame.unit * 0.2
    );
}

/// Edges as `<line>`, original vertices as filled circles and Steiner
/// vertices as open circles.
pub fn render_graph(g: &GeometricGraph) -> String {
    let frame = Frame::fit(g.points().points());
    let mut out = String::new();
    frame.open(&mut out);
    for &(u, v) in g.edges() {
        line(&mut out, g.point(u), g.point(v), "edge", "black", frame.unit * 0.3);
    }
    for i in 0..g.num_vertices() {
        vertex(&mut out, g.point(i), g.is_steiner(i), &frame);
    }
    out.push_str("</svg>\n");
    out
}

/// A grid with its edge classes coloured. Without `spanner` every lattice
/// edge is drawn (red edges thin); with it only the spanner's edges are
/// drawn and re-inserted red edges are bold.
pub fn render_grid(grid: &Grid, spanner: Option<&GeometricGraph>) -> String {
    let set = grid.point_set();
    let frame = Frame::fit(set.points());
    let colors = classify_edges(grid).ok();
    let mut out = String::new();
    frame.open(&mut out);
    let w = frame.unit * 0.3;
    for (u, v) in grid.lattice_edges() {
        if spanner.is_some_and(|s| !s.has_edge(u, v)) {
            continue;
        }
        let color = colors.as_ref().map_or(EdgeColor::Boundary, |c| c[&(u, v)]);
        let (class, stroke, width) = match (color, spanner.is_some()) {
            (EdgeColor::Boundary, _) => ("boundary", "black", w),
            (EdgeColor::Blue, _) => ("blue", "blue", w),
            (EdgeColor::Red, false) => ("red", "red", w),
            (EdgeColor::Red, true) => ("red reinserted", "red", 3.0 * w),
        };
        line(&mut out, set[u], set[v], class, stroke, width);
    }
    for p in set.points() {
        vertex(&mut out, *p, false, &frame);
    }
    out.push_str("</svg>\n");
    out
}
