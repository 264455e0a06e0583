//! Rank-aligned comparison of two feature profiles.
//!
//! Despite the name, the score is a dissimilarity: 0 for identical profiles,
//! larger for shapes that differ more. Segments are matched purely by their
//! rank in the sorted profile; the shorter profile is padded with all-zero
//! segments.

use serde::Serialize;

use crate::features::{FeatureProfile, SegmentFeatures};

#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
pub struct SimilarityScore(pub f64);

impl SimilarityScore {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Per-feature multipliers `(n, x, a, b, h)` on the squared differences.
/// All ones reproduces the plain score.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FeatureWeights(pub [f64; 5]);

impl Default for FeatureWeights {
    fn default() -> Self {
        FeatureWeights([1.0; 5])
    }
}

impl FeatureWeights {
    pub fn is_unit(&self) -> bool {
        self.0 == [1.0; 5]
    }
}

/// Both profiles extended with zero segments to `s = max(s_i, s_j)`.
pub fn pad_profiles(
    p_i: &FeatureProfile,
    p_j: &FeatureProfile,
) -> (FeatureProfile, FeatureProfile, usize) {
    let s = p_i.len().max(p_j.len());
    let pad = |p: &FeatureProfile| {
        let mut out = p.clone();
        out.segments.resize(s, SegmentFeatures::ZERO);
        out
    };
    (pad(p_i), pad(p_j), s)
}

pub fn similarity(p_i: &FeatureProfile, p_j: &FeatureProfile) -> SimilarityScore {
    weighted_similarity(p_i, p_j, &FeatureWeights::default())
}

/// Same traversal as [`similarity`] without materializing the padding.
pub fn weighted_similarity(
    p_i: &FeatureProfile,
    p_j: &FeatureProfile,
    weights: &FeatureWeights,
) -> SimilarityScore {
    let s = p_i.len().max(p_j.len());
    let at = |p: &FeatureProfile, k: usize| p.segments.get(k).copied().unwrap_or(SegmentFeatures::ZERO);
    let mut total = 0.0;
    for k in 0..s {
        let (u, v) = (at(p_i, k).as_array(), at(p_j, k).as_array());
        for f in 0..5 {
            let d = u[f] - v[f];
            total += weights.0[f] * d * d;
        }
    }
    SimilarityScore(total)
}
