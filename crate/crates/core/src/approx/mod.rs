//! Polygonal approximation of a normalized boundary.
//!
//! A sequential scan with an escalating threshold produces an initial set
//! of landmark points; three deletion phases then prune pseudo landmarks:
//! weakest-segment merging under the error tolerance, the same under a
//! relaxed tolerance, and straight-vertex removal by cosine.

mod delete;
mod scan;

pub use delete::{delete_phase1, delete_phase2, delete_phase3, vertex_cosine};
pub use scan::{
    iterative_approximation, iterative_approximation_traced, max_deviation,
    point_chord_distance, scan_pass, sse, IterativeOutcome, PassRecord, StopReason,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{segment_distance, Point};
use crate::ingest::NormalizedBoundary;

/// Line segment between boundary points `i` and `j`, traversed `i → j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Chord {
    pub i: usize,
    pub j: usize,
    pub start: Point,
    pub end: Point,
}

impl Chord {
    pub fn new(nb: &NormalizedBoundary, i: usize, j: usize) -> Result<Self> {
        let n = nb.len();
        if i % n == j % n {
            return Err(Error::ZeroLengthChord);
        }
        Ok(Chord {
            i: i % n,
            j: j % n,
            start: nb.point(i),
            end: nb.point(j),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeviationResult {
    pub max_dev: f64,
    /// Boundary index of the farthest interior point; `None` when the chord
    /// spans no interior points.
    pub argmax: Option<usize>,
}

/// Landmark indices of the polygonal approximation, in increasing boundary
/// order. Segment `k` runs from `indices[k]` to `indices[k + 1]`, the last
/// one wrapping back to `indices[0]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LandmarkSequence {
    pub indices: Vec<usize>,
    /// Error tolerance attached to this approximation.
    pub tolerance: f64,
    /// Threshold of the last scan pass executed.
    pub pass_threshold_final: f64,
}

impl LandmarkSequence {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `(start, end)` boundary indices of every segment.
    pub fn segments(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.indices.len();
        (0..m).map(move |k| (self.indices[k], self.indices[(k + 1) % m]))
    }

    pub fn points(&self, nb: &NormalizedBoundary) -> Vec<Point> {
        self.indices.iter().map(|&i| nb.point(i)).collect()
    }

    /// Largest segment deviation, or `None` if some segment is degenerate.
    pub fn max_segment_deviation(&self, nb: &NormalizedBoundary) -> Option<f64> {
        self.segments()
            .map(|(a, b)| deviation(nb, a, b).map(|d| d.max_dev))
            .try_fold(0.0_f64, |acc, d| d.map(|d| acc.max(d)))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApproxConfig {
    /// Multiple of the object scale added to the tolerance in phase 2.
    pub lambda: u32,
    /// Cosine threshold for phase 3.
    pub kappa: f64,
    pub max_passes: usize,
    pub min_landmarks: usize,
    /// Keep the landmarks of the pass that broke the error bound instead of
    /// those of the last pass that satisfied it.
    pub keep_violating_pass: bool,
}

impl Default for ApproxConfig {
    fn default() -> Self {
        ApproxConfig {
            lambda: 5,
            kappa: -0.9,
            max_passes: 1000,
            min_landmarks: 3,
            keep_violating_pass: false,
        }
    }
}

impl ApproxConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_passes < 1 {
            return Err(Error::InvalidConfig("max_passes must be at least 1".into()));
        }
        if !(-1.0..=1.0).contains(&self.kappa) {
            return Err(Error::InvalidConfig(format!(
                "kappa must lie in [-1, 1], got {}",
                self.kappa
            )));
        }
        if self.min_landmarks < 3 {
            return Err(Error::InvalidConfig(format!(
                "min_landmarks must be at least 3, got {}",
                self.min_landmarks
            )));
        }
        Ok(())
    }
}

/// Scan, then deletion phases 1–3. The returned tolerance is the phase-2
/// threshold `τ + λσ`.
pub fn approximate(nb: &NormalizedBoundary, cfg: &ApproxConfig) -> Result<LandmarkSequence> {
    Ok(approximate_staged(nb, cfg)?.phase3)
}

/// Every intermediate approximation of [`approximate`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApproxStages {
    pub scan: LandmarkSequence,
    pub phase1: LandmarkSequence,
    pub phase2: LandmarkSequence,
    pub phase3: LandmarkSequence,
}

pub fn approximate_staged(nb: &NormalizedBoundary, cfg: &ApproxConfig) -> Result<ApproxStages> {
    cfg.validate()?;
    if nb.len() < cfg.min_landmarks {
        return Err(Error::TooFewPoints {
            needed: cfg.min_landmarks,
            got: nb.len(),
        });
    }
    let scan = iterative_approximation(nb, cfg);
    let tau = scan.tolerance;
    let phase1 = delete_phase1(nb, &scan, tau, cfg.min_landmarks);
    let phase2 = delete_phase2(nb, &phase1, tau, nb.sigma, cfg.lambda, cfg.min_landmarks);
    let phase3 = delete_phase3(nb, &phase2, cfg.kappa, cfg.min_landmarks);
    Ok(ApproxStages {
        scan,
        phase1,
        phase2,
        phase3,
    })
}

/// Maximum deviation of the boundary between `i` and `j` from chord `i → j`,
/// evaluated in source coordinates and scaled by σ. `None` when the chord
/// endpoints coincide.
pub(crate) fn deviation(nb: &NormalizedBoundary, i: usize, j: usize) -> Option<DeviationResult> {
    let a = nb.src(i);
    let b = nb.src(j);
    if a == b {
        return None;
    }
    let n = nb.len();
    let mut best = DeviationResult {
        max_dev: 0.0,
        argmax: None,
    };
    let mut raw_best = -1.0;
    let mut k = (i + 1) % n;
    while k != j % n {
        let d = segment_distance(nb.src(k), a, b).expect("non-degenerate chord");
        if d > raw_best {
            raw_best = d;
            best.argmax = Some(k);
        }
        k = (k + 1) % n;
    }
    if raw_best > 0.0 {
        best.max_dev = raw_best * nb.sigma;
    }
    Some(best)
}
