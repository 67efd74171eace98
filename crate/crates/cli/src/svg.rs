//! Deterministic SVG rendering: red points filled, blue points hollow,
//! route edges as segments, crossings marked with an X.

use altroute::{AltRoute, BicoloredSet, Color};
use std::fmt::Write;

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 40.0;

struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl Frame {
    fn new(set: &BicoloredSet) -> Frame {
        let xs: Vec<i64> = set.points().iter().map(|p| p.x).collect();
        let ys: Vec<i64> = set.points().iter().map(|p| p.y).collect();
        let (min_x, max_x) = (
            *xs.iter().min().unwrap() as f64,
            *xs.iter().max().unwrap() as f64,
        );
        let (min_y, max_y) = (
            *ys.iter().min().unwrap() as f64,
            *ys.iter().max().unwrap() as f64,
        );
        let span = (max_x - min_x).max(max_y - min_y).max(1.0);
        Frame {
            min_x,
            min_y,
            scale: (CANVAS - 2.0 * MARGIN) / span,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            MARGIN + (x - self.min_x) * self.scale,
            // Flip y so the picture matches the usual orientation.
            CANVAS - MARGIN - (y - self.min_y) * self.scale,
        )
    }
}

fn segment_intersection(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
    d: (f64, f64),
) -> Option<(f64, f64)> {
    let det = (b.0 - a.0) * (d.1 - c.1) - (b.1 - a.1) * (d.0 - c.0);
    if det == 0.0 {
        return None;
    }
    let t = ((c.0 - a.0) * (d.1 - c.1) - (c.1 - a.1) * (d.0 - c.0)) / det;
    Some((a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)))
}

pub fn render_svg(set: &BicoloredSet, route: Option<&AltRoute>) -> String {
    let frame = Frame::new(set);
    let pos = |i: usize| {
        let p = set.point(i);
        frame.map(p.x as f64, p.y as f64)
    };
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">"
    )
    .unwrap();
    writeln!(
        out,
        "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>"
    )
    .unwrap();

    if let Some(route) = route {
        for (a, b) in route.edges() {
            let (x1, y1) = pos(a);
            let (x2, y2) = pos(b);
            writeln!(
                out,
                "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"black\" stroke-width=\"1.5\"/>"
            )
            .unwrap();
        }
    }

    for (i, p) in set.points().iter().enumerate() {
        let (x, y) = pos(i);
        match p.color {
            Color::Red => writeln!(
                out,
                "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"6\" fill=\"red\" stroke=\"darkred\"/>"
            )
            .unwrap(),
            Color::Blue => writeln!(
                out,
                "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"6\" fill=\"white\" stroke=\"blue\" stroke-width=\"2\"/>"
            )
            .unwrap(),
        }
        writeln!(
            out,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" fill=\"gray\">{}</text>",
            x + 8.0,
            y - 8.0,
            i + 1
        )
        .unwrap();
    }

    if let Some(route) = route {
        let edges = route.edges();
        for &(ei, ej) in &route.crossings {
            let (a, b) = edges[ei];
            let (c, d) = edges[ej];
            if let Some((cx, cy)) = segment_intersection(pos(a), pos(b), pos(c), pos(d)) {
                let r = 5.0;
                writeln!(
                    out,
                    "  <path d=\"M {x1:.2} {y1:.2} L {x2:.2} {y2:.2} M {x3:.2} {y3:.2} L {x4:.2} {y4:.2}\" stroke=\"orange\" stroke-width=\"2\"/>",
                    x1 = cx - r, y1 = cy - r, x2 = cx + r, y2 = cy + r,
                    x3 = cx - r, y3 = cy + r, x4 = cx + r, y4 = cy - r
                )
                .unwrap();
            }
        }
    }

    out.push_str("</svg>\n");
    out
}
