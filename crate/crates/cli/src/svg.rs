//! SVG renders of approximations and convex decompositions.
//!
//! Coordinates are the input's pixel coordinates (y down). Every render has
//! one grey path for the boundary followed by one path per segment, colored
//! by cycling [`PALETTE`].

use std::fmt::Write as _;

use convseg::{ConvexDecomposition, LandmarkSequence, NormalizedBoundary, Point};

pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a",
];

const BOUNDARY_GREY: &str = "#b0b0b0";

fn path_data(points: &[Point], close: bool) -> String {
    let mut d = String::new();
    for (k, p) in points.iter().enumerate() {
        let _ = write!(d, "{}{} {}", if k == 0 { "M" } else { " L" }, p.x, p.y);
    }
    if close {
        d.push_str(" Z");
    }
    d
}

fn document(nb: &NormalizedBoundary, segments: &[Vec<Point>]) -> String {
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in &nb.source {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let pad = 2.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    );
    let _ = writeln!(
        out,
        r#"<path d="{}" fill="none" stroke="{BOUNDARY_GREY}" stroke-width="0.5"/>"#,
        path_data(&nb.source, true)
    );
    for (k, seg) in segments.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<path d="{}" fill="none" stroke="{}" stroke-width="1"/>"#,
            path_data(seg, false),
            PALETTE[k % PALETTE.len()]
        );
    }
    out.push_str("</svg>\n");
    out
}

/// The landmark polygon, one path per chord.
pub fn approximation(nb: &NormalizedBoundary, landmarks: &LandmarkSequence) -> String {
    let segments: Vec<Vec<Point>> = landmarks
        .segments()
        .map(|(a, b)| vec![nb.source[a], nb.source[b]])
        .collect();
    document(nb, &segments)
}

/// Boundary points of each approximately convex segment.
pub fn decomposition(nb: &NormalizedBoundary, dec: &ConvexDecomposition) -> String {
    let n = nb.len();
    let segments: Vec<Vec<Point>> = dec
        .segments
        .iter()
        .map(|s| {
            let mut pts: Vec<Point> = s.span_indices(n).map(|i| nb.source[i]).collect();
            if s.closed {
                pts.push(nb.source[s.start_lm]);
            }
            pts
        })
        .collect();
    document(nb, &segments)
}
