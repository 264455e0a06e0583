use crate::error::{Error, Result};
use crate::geom::Point;
use crate::ingest::NormalizedBoundary;

use super::{deviation, LandmarkSequence};

/// Phase 1: merge weakest segments while the merged deviation stays within
/// `tau`.
pub fn delete_phase1(
    nb: &NormalizedBoundary,
    landmarks: &LandmarkSequence,
    tau: f64,
    min_landmarks: usize,
) -> LandmarkSequence {
    merge_weakest(nb, landmarks, tau, min_landmarks)
}

/// Phase 2: phase 1 again with the relaxed threshold `tau + lambda · sigma`.
pub fn delete_phase2(
    nb: &NormalizedBoundary,
    landmarks: &LandmarkSequence,
    tau: f64,
    sigma: f64,
    lambda: u32,
    min_landmarks: usize,
) -> LandmarkSequence {
    merge_weakest(nb, landmarks, tau + f64::from(lambda) * sigma, min_landmarks)
}

/// Repeatedly takes the unfrozen segment with the smallest deviation and
/// deletes whichever of its two endpoints gives the smaller merged
/// deviation, provided that stays within `threshold`. A segment where
/// neither deletion qualifies is frozen until one of its neighbors changes.
fn merge_weakest(
    nb: &NormalizedBoundary,
    landmarks: &LandmarkSequence,
    threshold: f64,
    min_landmarks: usize,
) -> LandmarkSequence {
    let mut idx = landmarks.indices.clone();
    let mut dev: Vec<f64> = landmarks
        .segments()
        .map(|(a, b)| deviation(nb, a, b).map_or(f64::INFINITY, |d| d.max_dev))
        .collect();
    let mut frozen = vec![false; idx.len()];

    while idx.len() > min_landmarks {
        let m = idx.len();
        let weakest = (0..m)
            .filter(|&k| !frozen[k])
            .fold(None, |best: Option<usize>, k| match best {
                Some(b) if dev[b] <= dev[k] => Some(b),
                _ => Some(k),
            });
        let Some(k) = weakest else { break };

        let prev = idx[(k + m - 1) % m];
        let a = idx[k];
        let b = idx[(k + 1) % m];
        let next = idx[(k + 2) % m];
        let merged = |from: usize, to: usize| {
            deviation(nb, from, to)
                .map(|d| d.max_dev)
                .filter(|&d| d <= threshold)
        };
        // Deleting `a` merges with the previous segment, deleting `b` with
        // the next one.
        let choice = match (merged(prev, b), merged(a, next)) {
            (Some(ds), Some(de)) if de < ds => Some(((k + 1) % m, de)),
            (Some(ds), _) => Some((k, ds)),
            (None, Some(de)) => Some(((k + 1) % m, de)),
            (None, None) => None,
        };
        let Some((pos, merged_dev)) = choice else {
            frozen[k] = true;
            continue;
        };

        idx.remove(pos);
        dev.remove(pos);
        frozen.remove(pos);
        let m = idx.len();
        let q = if pos == 0 { m - 1 } else { pos - 1 };
        dev[q] = merged_dev;
        for off in [m - 1, 0, 1] {
            frozen[(q + off) % m] = false;
        }
    }

    LandmarkSequence {
        indices: idx,
        tolerance: threshold,
        pass_threshold_final: landmarks.pass_threshold_final,
    }
}

/// Cosine of the angle at `q_m` between `q_m → q_l` and `q_m → q_n`.
pub fn vertex_cosine(q_l: Point, q_m: Point, q_n: Point) -> Result<f64> {
    let u = q_l - q_m;
    let v = q_n - q_m;
    let denom = u.norm() * v.norm();
    if denom == 0.0 {
        return Err(Error::ZeroLengthArm);
    }
    Ok((u.dot(v) / denom).clamp(-1.0, 1.0))
}

/// Phase 3: delete the straightest vertex while its cosine does not exceed
/// `kappa`.
pub fn delete_phase3(
    nb: &NormalizedBoundary,
    landmarks: &LandmarkSequence,
    kappa: f64,
    min_landmarks: usize,
) -> LandmarkSequence {
    let mut idx = landmarks.indices.clone();
    let cos_at = |idx: &[usize], p: usize| -> f64 {
        let m = idx.len();
        let l = nb.src(idx[(p + m - 1) % m]);
        let c = nb.src(idx[p]);
        let r = nb.src(idx[(p + 1) % m]);
        if l == r {
            return f64::INFINITY;
        }
        vertex_cosine(l, c, r).unwrap_or(f64::INFINITY)
    };
    let mut cos: Vec<f64> = (0..idx.len()).map(|p| cos_at(&idx, p)).collect();

    while idx.len() > min_landmarks {
        let (p, c) = cos
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::INFINITY), |best, (p, c)| if c < best.1 { (p, c) } else { best });
        if !(c <= kappa) {
            break;
        }
        idx.remove(p);
        cos.remove(p);
        let m = idx.len();
        let before = (p + m - 1) % m;
        let after = p % m;
        cos[before] = cos_at(&idx, before);
        cos[after] = cos_at(&idx, after);
    }

    LandmarkSequence {
        indices: idx,
        tolerance: landmarks.tolerance,
        pass_threshold_final: landmarks.pass_threshold_final,
    }
}
