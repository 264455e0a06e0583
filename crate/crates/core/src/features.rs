//! The five per-segment descriptors and the sorted feature profile.
//!
//! `n` and `x` are counts of boundary points; `a`, `b` and `h` live in the
//! unit-perimeter frame of the normalized boundary.

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::convexdec::{ApproxConvexSegment, ConvexDecomposition};
use crate::error::{Error, Result};
use crate::geom::{segment_distance, Point};
use crate::ingest::NormalizedBoundary;

/// Base widths below this (normalized units) count as coincident endpoints.
pub const CLOSED_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SegmentFeatures {
    /// Segment size: boundary points in the segment.
    pub n: usize,
    /// Local extrema of the distance to the segment centroid.
    pub x: usize,
    /// Chord-closed area.
    pub a: f64,
    /// Base width.
    pub b: f64,
    /// Height above the base.
    pub h: f64,
}

impl SegmentFeatures {
    pub const ZERO: SegmentFeatures = SegmentFeatures {
        n: 0,
        x: 0,
        a: 0.0,
        b: 0.0,
        h: 0.0,
    };

    pub fn as_array(&self) -> [f64; 5] {
        [self.n as f64, self.x as f64, self.a, self.b, self.h]
    }

    /// Profile order: descending `n`, then descending `a`, then descending `b`.
    pub fn profile_order(&self, other: &Self) -> Ordering {
        other
            .n
            .cmp(&self.n)
            .then_with(|| other.a.total_cmp(&self.a))
            .then_with(|| other.b.total_cmp(&self.b))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FeatureProfile {
    pub shape_id: String,
    pub segments: Vec<SegmentFeatures>,
}

impl FeatureProfile {
    /// Sorts `segments` into profile order.
    pub fn new(shape_id: impl Into<String>, mut segments: Vec<SegmentFeatures>) -> Self {
        segments.sort_by(SegmentFeatures::profile_order);
        FeatureProfile {
            shape_id: shape_id.into(),
            segments,
        }
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn total_size(&self) -> usize {
        self.segments.iter().map(|s| s.n).sum()
    }

    /// CSV with header `segment,n,x,a,b,h`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("segment,n,x,a,b,h\n");
        for (k, s) in self.segments.iter().enumerate() {
            let _ = writeln!(out, "{k},{},{},{},{},{}", s.n, s.x, s.a, s.b, s.h);
        }
        out
    }
}

pub fn segment_size(nb: &NormalizedBoundary, segment: &ApproxConvexSegment) -> usize {
    segment.size(nb.len())
}

fn span(nb: &NormalizedBoundary, segment: &ApproxConvexSegment) -> Vec<Point> {
    segment.span_indices(nb.len()).map(|i| nb.src(i)).collect()
}

/// Number of strict local extrema of the distance from each segment point
/// to the segment's centroid, after merging runs of equal distances.
///
/// Closed segments compare runs cyclically; on open segments the first and
/// last runs are never counted.
pub fn extreme_point_count(nb: &NormalizedBoundary, segment: &ApproxConvexSegment) -> Result<usize> {
    let pts = span(nb, segment);
    if pts.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            got: pts.len(),
        });
    }
    let o = pts[0];
    let rel: Vec<Point> = pts.iter().map(|&p| p - o).collect();
    let m = rel.len() as f64;
    let sx: f64 = rel.iter().map(|p| p.x).sum();
    let sy: f64 = rel.iter().map(|p| p.y).sum();
    // |m·p − Σp|² orders points exactly like their distance to the centroid.
    let dist: Vec<f64> = rel
        .iter()
        .map(|p| {
            let dx = m * p.x - sx;
            let dy = m * p.y - sy;
            dx * dx + dy * dy
        })
        .collect();
    Ok(count_extrema(&dist, segment.closed))
}

/// Counts strict local extrema of `values` after run compression.
pub fn count_extrema(values: &[f64], cyclic: bool) -> usize {
    let mut runs: Vec<f64> = Vec::with_capacity(values.len());
    for &v in values {
        if runs.last() != Some(&v) {
            runs.push(v);
        }
    }
    if cyclic && runs.len() > 1 && runs.first() == runs.last() {
        runs.pop();
    }
    let r = runs.len();
    if r < 2 || (!cyclic && r < 3) {
        return 0;
    }
    let is_extremum = |prev: f64, cur: f64, next: f64| {
        (cur > prev && cur > next) || (cur < prev && cur < next)
    };
    if cyclic {
        (0..r)
            .filter(|&k| is_extremum(runs[(k + r - 1) % r], runs[k], runs[(k + 1) % r]))
            .count()
    } else {
        (1..r - 1)
            .filter(|&k| is_extremum(runs[k - 1], runs[k], runs[k + 1]))
            .count()
    }
}

/// Absolute shoelace area of the segment points closed by the base chord.
pub fn segment_area(nb: &NormalizedBoundary, segment: &ApproxConvexSegment) -> f64 {
    let pts = span(nb, segment);
    if pts.len() < 3 {
        return 0.0;
    }
    (crate::geom::signed_area(&pts) * nb.sigma * nb.sigma).abs()
}

/// Distance between the segment's end landmarks; zero for closed segments
/// and for endpoints closer than [`CLOSED_EPS`].
pub fn base_width(nb: &NormalizedBoundary, segment: &ApproxConvexSegment) -> f64 {
    if segment.closed {
        return 0.0;
    }
    let w = nb.src(segment.start_lm).distance(nb.src(segment.end_lm)) * nb.sigma;
    if w < CLOSED_EPS {
        0.0
    } else {
        w
    }
}

/// Largest distance from a segment point to the base chord. With no base
/// (closed segment) the distance to the shared endpoint is used instead.
pub fn segment_height(nb: &NormalizedBoundary, segment: &ApproxConvexSegment) -> f64 {
    let pts = span(nb, segment);
    let start = nb.src(segment.start_lm);
    let end = nb.src(segment.end_lm);
    let base = base_width(nb, segment);
    let raw = pts
        .iter()
        .map(|&p| match segment_distance(p, start, end) {
            Some(d) if base > 0.0 => d,
            _ => p.distance(start),
        })
        .fold(0.0, f64::max);
    raw * nb.sigma
}

pub fn segment_features(nb: &NormalizedBoundary, segment: &ApproxConvexSegment) -> SegmentFeatures {
    SegmentFeatures {
        n: segment_size(nb, segment),
        x: extreme_point_count(nb, segment).unwrap_or(0),
        a: segment_area(nb, segment),
        b: base_width(nb, segment),
        h: segment_height(nb, segment),
    }
}

pub fn profile(
    nb: &NormalizedBoundary,
    decomposition: &ConvexDecomposition,
    shape_id: impl Into<String>,
) -> FeatureProfile {
    FeatureProfile::new(
        shape_id,
        decomposition
            .segments
            .iter()
            .map(|s| segment_features(nb, s))
            .collect(),
    )
}
