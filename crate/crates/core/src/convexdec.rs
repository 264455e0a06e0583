//! Splitting the landmark polygon into approximately convex segments at its
//! concave (reflex) landmarks.

use std::fmt::Write as _;

use serde::Serialize;

use crate::approx::LandmarkSequence;
use crate::geom::Point;
use crate::ingest::NormalizedBoundary;

/// z-component of `(a − b) × (b − c)`; negative at a reflex vertex `b` of a
/// counterclockwise cycle.
pub fn turn_z(a: Point, b: Point, c: Point) -> f64 {
    (a - b).cross(b - c)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApproxConvexSegment {
    /// Boundary index of the first landmark.
    pub start_lm: usize,
    /// Boundary index of the last landmark; equals `start_lm` when closed.
    pub end_lm: usize,
    /// Positions of the delimiting landmarks in the landmark sequence.
    pub start_pos: usize,
    pub end_pos: usize,
    /// Half-open cyclic range `[start, end)` of boundary indices.
    pub boundary_range: (usize, usize),
    /// The segment runs around the whole cycle.
    pub closed: bool,
}

impl ApproxConvexSegment {
    /// Boundary points owned by the segment (half-open range).
    pub fn size(&self, n: usize) -> usize {
        if self.closed {
            n
        } else {
            (self.boundary_range.1 + n - self.boundary_range.0) % n
        }
    }

    /// Boundary indices in the half-open range.
    pub fn owned_indices(&self, n: usize) -> impl Iterator<Item = usize> {
        let start = self.boundary_range.0;
        (0..self.size(n)).map(move |k| (start + k) % n)
    }

    /// Boundary indices from `start_lm` through `end_lm`, both included.
    /// A closed segment lists every index once, starting at `start_lm`.
    pub fn span_indices(&self, n: usize) -> impl Iterator<Item = usize> {
        let count = if self.closed { n } else { self.size(n) + 1 };
        let start = self.start_lm;
        (0..count).map(move |k| (start + k) % n)
    }

    /// Landmark positions strictly inside the segment.
    pub fn interior_positions(&self, m: usize) -> impl Iterator<Item = usize> {
        let inner = if self.closed {
            m - 1
        } else {
            (self.end_pos + m - self.start_pos) % m - 1
        };
        let start = self.start_pos;
        (1..=inner).map(move |k| (start + k) % m)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexDecomposition {
    pub segments: Vec<ApproxConvexSegment>,
    pub landmark_source: LandmarkSequence,
}

fn landmark_turn(nb: &NormalizedBoundary, landmarks: &LandmarkSequence, p: usize) -> f64 {
    let m = landmarks.len();
    let idx = &landmarks.indices;
    turn_z(
        nb.src(idx[(p + m - 1) % m]),
        nb.src(idx[p]),
        nb.src(idx[(p + 1) % m]),
    )
}

/// Positions (in the landmark sequence) where the turn is strictly negative.
pub fn concave_points(nb: &NormalizedBoundary, landmarks: &LandmarkSequence) -> Vec<usize> {
    (0..landmarks.len())
        .filter(|&p| landmark_turn(nb, landmarks, p) < 0.0)
        .collect()
}

/// `turn_z` of every landmark vertex, in normalized units.
pub fn landmark_turns(nb: &NormalizedBoundary, landmarks: &LandmarkSequence) -> Vec<f64> {
    let s2 = nb.sigma * nb.sigma;
    (0..landmarks.len())
        .map(|p| landmark_turn(nb, landmarks, p) * s2)
        .collect()
}

pub fn decompose(nb: &NormalizedBoundary, landmarks: &LandmarkSequence) -> ConvexDecomposition {
    let concave = concave_points(nb, landmarks);
    let idx = &landmarks.indices;
    let closed_at = |pos: usize| ApproxConvexSegment {
        start_lm: idx[pos],
        end_lm: idx[pos],
        start_pos: pos,
        end_pos: pos,
        boundary_range: (idx[pos], idx[pos]),
        closed: true,
    };
    let segments = match concave.as_slice() {
        [] => vec![closed_at(0)],
        [only] => vec![closed_at(*only)],
        many => (0..many.len())
            .map(|k| {
                let (s, e) = (many[k], many[(k + 1) % many.len()]);
                ApproxConvexSegment {
                    start_lm: idx[s],
                    end_lm: idx[e],
                    start_pos: s,
                    end_pos: e,
                    boundary_range: (idx[s], idx[e]),
                    closed: false,
                }
            })
            .collect(),
    };
    ConvexDecomposition {
        segments,
        landmark_source: landmarks.clone(),
    }
}

/// One `seg=<k> lm_start=<i> lm_end=<j> size=<n_k>` line per segment, with
/// boundary indices for the landmarks.
pub fn format_decomposition(dec: &ConvexDecomposition, n: usize) -> String {
    let mut out = String::new();
    for (k, s) in dec.segments.iter().enumerate() {
        let _ = writeln!(
            out,
            "seg={k} lm_start={} lm_end={} size={}",
            s.start_lm,
            s.end_lm,
            s.size(n)
        );
    }
    out
}
