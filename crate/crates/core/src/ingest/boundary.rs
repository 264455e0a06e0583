use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{signed_area, stable_sum, Point};

/// Closed digital boundary. Indexing wraps modulo `len()`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosedBoundary {
    points: Vec<Point>,
}

impl ClosedBoundary {
    /// Drops consecutive duplicates (including across the wrap) and rejects
    /// anything with fewer than three remaining points.
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        points.dedup();
        while points.len() > 1 && points.first() == points.last() {
            points.pop();
        }
        if points.len() < 3 {
            return Err(Error::TooFewPoints {
                needed: 3,
                got: points.len(),
            });
        }
        Ok(ClosedBoundary { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, i: usize) -> Point {
        self.points[i % self.points.len()]
    }

    pub fn signed_area(&self) -> f64 {
        signed_area(&self.points)
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }
}

/// Boundary translated to its arithmetic centroid and scaled to unit
/// perimeter.
///
/// `source` keeps the oriented input coordinates in the same cyclic order as
/// `points`. Distances and signs used for decisions downstream are evaluated
/// on `source` and multiplied by `sigma`, which equals the normalized value
/// but keeps lattice inputs in exact integer arithmetic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalizedBoundary {
    pub points: Vec<Point>,
    pub source: Vec<Point>,
    pub centroid_original: Point,
    pub sigma: f64,
    pub start_index_original: usize,
}

impl NormalizedBoundary {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i % self.points.len()]
    }

    pub(crate) fn src(&self, i: usize) -> Point {
        self.source[i % self.source.len()]
    }

    /// Cyclic index distance from `i` forward to `j`.
    pub fn forward(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        (j % n + n - i % n) % n
    }

    pub fn perimeter(&self) -> f64 {
        cyclic_length(&self.points)
    }
}

fn cyclic_length(points: &[Point]) -> f64 {
    let n = points.len();
    stable_sum(
        (0..n)
            .map(|i| points[i].distance(points[(i + 1) % n]))
            .collect(),
    )
}

/// Reverses clockwise boundaries so the shoelace area is positive.
pub fn orient_ccw(boundary: ClosedBoundary) -> Result<ClosedBoundary> {
    let area = boundary.signed_area();
    let scale = perimeter(&boundary);
    if area == 0.0 || area.abs() <= f64::EPSILON * scale * scale {
        return Err(Error::ZeroArea);
    }
    if area > 0.0 {
        Ok(boundary)
    } else {
        let mut pts = boundary.into_points();
        pts.reverse();
        Ok(ClosedBoundary { points: pts })
    }
}

/// Arithmetic mean of the coordinates (not the area centroid).
pub fn centroid(boundary: &ClosedBoundary) -> Point {
    mean(boundary.points())
}

fn mean(points: &[Point]) -> Point {
    let n = points.len() as f64;
    Point::new(
        stable_sum(points.iter().map(|p| p.x).collect()) / n,
        stable_sum(points.iter().map(|p| p.y).collect()) / n,
    )
}

/// Sum of edge lengths around the cycle, closing edge included.
pub fn perimeter(boundary: &ClosedBoundary) -> f64 {
    cyclic_length(boundary.points())
}

pub fn normalize(boundary: &ClosedBoundary) -> Result<NormalizedBoundary> {
    let length = perimeter(boundary);
    if !(length > 0.0) || !length.is_finite() {
        return Err(Error::ZeroPerimeter);
    }
    let sigma = 1.0 / length;
    let c = centroid(boundary);
    Ok(NormalizedBoundary {
        points: boundary.points().iter().map(|&p| (p - c) * sigma).collect(),
        source: boundary.points().to_vec(),
        centroid_original: c,
        sigma,
        start_index_original: 0,
    })
}

/// Relative tolerance under which two centroid distances count as tied.
const TIE_RTOL: f64 = 1e-9;

/// Rotates the cycle so index 0 is the point farthest from the centroid.
///
/// Near-ties (relative 1e-9) are resolved by comparing the distance
/// sequences that follow each candidate, largest first. Candidates whose
/// whole sequences agree (symmetric shapes) are ordered by their offset
/// from the centroid, larger x first, then larger y. Only coincident
/// offsets fall back to the lowest index, so the choice does not depend on
/// where the input cycle started.
pub fn canonical_start(nb: NormalizedBoundary) -> NormalizedBoundary {
    let n = nb.len();
    let offsets = centroid_offsets(&nb.source);
    let dist: Vec<f64> = offsets.iter().map(|p| p.x * p.x + p.y * p.y).collect();
    let dmax = dist.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let tol = dmax * TIE_RTOL;
    let ctol = dmax.sqrt() * TIE_RTOL;
    let near = |a: f64, b: f64, t: f64| {
        if (a - b).abs() <= t {
            Ordering::Equal
        } else {
            a.total_cmp(&b)
        }
    };
    let cmp = |a: f64, b: f64| {
        if (a - b).abs() <= tol {
            Ordering::Equal
        } else {
            a.total_cmp(&b)
        }
    };
    let mut best: Option<usize> = None;
    for i in (0..n).filter(|&i| dmax - dist[i] <= tol) {
        best = match best {
            None => Some(i),
            Some(b) => {
                let ord = (1..n)
                    .map(|k| cmp(dist[(i + k) % n], dist[(b + k) % n]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
                    .then_with(|| near(offsets[i].x, offsets[b].x, ctol))
                    .then_with(|| near(offsets[i].y, offsets[b].y, ctol));
                if ord == Ordering::Greater {
                    Some(i)
                } else {
                    Some(b)
                }
            }
        };
    }
    let k = best.unwrap_or(0);
    let mut out = nb;
    out.points.rotate_left(k);
    out.source.rotate_left(k);
    out.start_index_original = (out.start_index_original + k) % n;
    out
}

/// Offsets from the centroid scaled by `n`, i.e. `n·p − Σp`, taken
/// relative to the first point. Integer inputs stay exact.
fn centroid_offsets(source: &[Point]) -> Vec<Point> {
    let n = source.len() as f64;
    let o = source[0];
    let rel: Vec<Point> = source.iter().map(|&p| p - o).collect();
    let sx = stable_sum(rel.iter().map(|p| p.x).collect());
    let sy = stable_sum(rel.iter().map(|p| p.y).collect());
    rel.iter()
        .map(|p| Point::new(n * p.x - sx, n * p.y - sy))
        .collect()
}
