//! Synthetic silhouettes: simple parametric outlines and a scanline
//! rasterizer that turns them into masks.

use crate::geom::Point;
use crate::ingest::RasterMask;

use std::f64::consts::TAU;

pub fn regular_polygon(sides: usize, radius: f64) -> Vec<Point> {
    (0..sides)
        .map(|k| {
            let t = k as f64 * TAU / sides as f64;
            Point::new(radius * t.cos(), radius * t.sin())
        })
        .collect()
}

/// Star with `points` spikes, alternating `outer` and `inner` radii.
pub fn star(points: usize, outer: f64, inner: f64) -> Vec<Point> {
    (0..2 * points)
        .map(|k| {
            let t = k as f64 * TAU / (2 * points) as f64;
            let r = if k % 2 == 0 { outer } else { inner };
            Point::new(r * t.cos(), r * t.sin())
        })
        .collect()
}

pub fn ellipse(a: f64, b: f64, samples: usize) -> Vec<Point> {
    (0..samples)
        .map(|k| {
            let t = k as f64 * TAU / samples as f64;
            Point::new(a * t.cos(), b * t.sin())
        })
        .collect()
}

/// Rotation by `angle` (radians) and uniform `scale` about the origin,
/// then translation by `offset`.
pub fn transform(poly: &[Point], angle: f64, scale: f64, offset: Point) -> Vec<Point> {
    let (s, c) = angle.sin_cos();
    poly.iter()
        .map(|p| Point::new(c * p.x - s * p.y, s * p.x + c * p.y) * scale + offset)
        .collect()
}

/// Marks every pixel whose center `(x, y)` lies inside `poly` (even-odd).
pub fn rasterize(poly: &[Point], width: usize, height: usize) -> RasterMask {
    let mut bits = vec![false; width * height];
    let n = poly.len();
    let mut crossings = Vec::new();
    for y in 0..height {
        let yc = y as f64;
        crossings.clear();
        for i in 0..n {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            if (a.y <= yc) != (b.y <= yc) {
                crossings.push(a.x + (yc - a.y) * (b.x - a.x) / (b.y - a.y));
            }
        }
        crossings.sort_by(f64::total_cmp);
        for pair in crossings.chunks_exact(2) {
            let x0 = pair[0].ceil().max(0.0) as usize;
            let x1 = pair[1].ceil().min(width as f64).max(0.0) as usize;
            for x in x0..x1 {
                bits[y * width + x] = true;
            }
        }
    }
    RasterMask::new(width, height, bits).expect("dimensions match")
}

/// Shifts `poly` so its bounding box starts `margin` pixels from the top
/// left and rasterizes it on a canvas with the same margin on every side.
pub fn rasterize_fit(poly: &[Point], margin: usize) -> RasterMask {
    let min_x = poly.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let min_y = poly.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
    let max_x = poly.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
    let max_y = poly.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max);
    let shift = Point::new(margin as f64 - min_x.floor(), margin as f64 - min_y.floor());
    let moved: Vec<Point> = poly.iter().map(|&p| p + shift).collect();
    let width = (max_x - min_x).ceil() as usize + 2 * margin + 2;
    let height = (max_y - min_y).ceil() as usize + 2 * margin + 2;
    rasterize(&moved, width, height)
}
