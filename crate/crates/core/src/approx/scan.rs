use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{segment_distance, segment_distance_or_point, Point};
use crate::ingest::NormalizedBoundary;

use super::{deviation, ApproxConfig, Chord, DeviationResult, LandmarkSequence};

/// Orthogonal distance to the chord when the perpendicular foot lies on it,
/// otherwise distance to the nearer endpoint.
pub fn point_chord_distance(p: Point, chord: &Chord) -> Result<f64> {
    segment_distance(p, chord.start, chord.end).ok_or(Error::ZeroLengthChord)
}

/// Largest [`point_chord_distance`] over the boundary points strictly
/// between `i` and `j` in cyclic order.
pub fn max_deviation(nb: &NormalizedBoundary, i: usize, j: usize) -> Result<DeviationResult> {
    if i % nb.len() == j % nb.len() {
        return Err(Error::ZeroLengthChord);
    }
    deviation(nb, i % nb.len(), j % nb.len()).ok_or(Error::ZeroLengthChord)
}

fn within(nb: &NormalizedBoundary, i: usize, j: usize, threshold: f64) -> bool {
    deviation(nb, i, j).is_some_and(|d| d.max_dev <= threshold)
}

/// One sequential scan with threshold `threshold`, starting at index 0.
///
/// From the current start the end point advances while the chord deviation
/// stays within the threshold; the last acceptable end becomes the next
/// landmark and start. The pass closes when the scan reaches index 0 again.
/// If fewer than `min_landmarks` result, the worst segment is split at its
/// farthest point until the floor is met.
pub fn scan_pass(nb: &NormalizedBoundary, threshold: f64, min_landmarks: usize) -> LandmarkSequence {
    let n = nb.len();
    let mut landmarks = vec![0usize];
    let mut start = 0usize;
    let mut end = 1usize;
    while end != 0 {
        let next = (end + 1) % n;
        if within(nb, start, next, threshold) {
            end = next;
        } else {
            landmarks.push(end);
            start = end;
            end = (start + 1) % n;
        }
    }
    let mut seq = LandmarkSequence {
        indices: landmarks,
        tolerance: threshold,
        pass_threshold_final: threshold,
    };
    pad_landmarks(nb, &mut seq, min_landmarks);
    seq
}

fn pad_landmarks(nb: &NormalizedBoundary, seq: &mut LandmarkSequence, min_landmarks: usize) {
    while seq.indices.len() < min_landmarks.min(nb.len()) {
        let split = seq
            .segments()
            .filter_map(|(a, b)| {
                let d = deviation(nb, a, b).unwrap_or_else(|| farthest_from_point(nb, a, b));
                d.argmax.map(|k| (d.max_dev, k))
            })
            .fold(None, |best: Option<(f64, usize)>, cand| match best {
                Some(b) if b.0 >= cand.0 => Some(b),
                _ => Some(cand),
            });
        let Some((_, k)) = split else { break };
        let pos = seq.indices.partition_point(|&i| i < k);
        seq.indices.insert(pos, k);
    }
}

fn farthest_from_point(nb: &NormalizedBoundary, i: usize, j: usize) -> DeviationResult {
    let n = nb.len();
    let a = nb.src(i);
    let mut best = DeviationResult {
        max_dev: 0.0,
        argmax: None,
    };
    let mut k = (i + 1) % n;
    while k != j {
        let d = nb.src(k).distance(a) * nb.sigma;
        if best.argmax.is_none() || d > best.max_dev {
            best = DeviationResult {
                max_dev: d,
                argmax: Some(k),
            };
        }
        k = (k + 1) % n;
    }
    best
}

/// Sum over boundary points of the squared distance to the chord of the
/// segment containing them. Landmarks contribute zero.
pub fn sse(nb: &NormalizedBoundary, landmarks: &LandmarkSequence) -> f64 {
    let n = nb.len();
    let sigma_sq = nb.sigma * nb.sigma;
    let mut total = 0.0;
    for (a, b) in landmarks.segments() {
        let (pa, pb) = (nb.src(a), nb.src(b));
        let mut k = (a + 1) % n;
        while k != b {
            let d = segment_distance_or_point(nb.src(k), pa, pb);
            total += d * d * sigma_sq;
            k = (k + 1) % n;
        }
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StopReason {
    /// The error bound was broken.
    BoundViolated,
    /// The next threshold would exceed half the unit perimeter.
    ThresholdCap,
    /// `max_passes` passes ran.
    PassCap,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PassRecord {
    pub threshold: f64,
    pub landmarks: usize,
    pub sse: f64,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IterativeOutcome {
    pub landmarks: LandmarkSequence,
    pub passes: Vec<PassRecord>,
    pub stop: StopReason,
}

/// Largest threshold the scan is allowed to reach.
pub const THRESHOLD_CAP: f64 = 0.5;

/// Runs scan passes at `T = σ, 2σ, 3σ, …` while the approximation error
/// stays within `T² · m / n` (m landmarks, n boundary points).
pub fn iterative_approximation(nb: &NormalizedBoundary, cfg: &ApproxConfig) -> LandmarkSequence {
    iterative_approximation_traced(nb, cfg).landmarks
}

pub fn iterative_approximation_traced(
    nb: &NormalizedBoundary,
    cfg: &ApproxConfig,
) -> IterativeOutcome {
    let n = nb.len() as f64;
    let mut passes = Vec::new();
    let mut last_ok: Option<LandmarkSequence> = None;
    let mut k = 1usize;
    loop {
        let threshold = k as f64 * nb.sigma;
        let current = scan_pass(nb, threshold, cfg.min_landmarks);
        let err = sse(nb, &current);
        let bound = threshold * threshold * (current.len() as f64 / n);
        passes.push(PassRecord {
            threshold,
            landmarks: current.len(),
            sse: err,
            bound,
        });

        if err > bound {
            let mut chosen = match last_ok {
                Some(prev) if !cfg.keep_violating_pass => prev,
                _ => current,
            };
            chosen.tolerance = threshold;
            chosen.pass_threshold_final = threshold;
            return IterativeOutcome {
                landmarks: chosen,
                passes,
                stop: StopReason::BoundViolated,
            };
        }

        let stop = if k >= cfg.max_passes {
            Some(StopReason::PassCap)
        } else if (k + 1) as f64 * nb.sigma > THRESHOLD_CAP {
            Some(StopReason::ThresholdCap)
        } else {
            None
        };
        if let Some(stop) = stop {
            return IterativeOutcome {
                landmarks: current,
                passes,
                stop,
            };
        }
        last_ok = Some(current);
        k += 1;
    }
}
