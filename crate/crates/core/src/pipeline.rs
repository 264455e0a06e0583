//! End-to-end analysis of one shape.

use serde::Serialize;

use crate::approx::{approximate_staged, ApproxConfig, ApproxStages};
use crate::convexdec::{decompose, ConvexDecomposition};
use crate::error::Result;
use crate::features::{profile, FeatureProfile};
use crate::ingest::{prepare_boundary, trace_boundary, ClosedBoundary, NormalizedBoundary, RasterMask};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShapeAnalysis {
    pub boundary: NormalizedBoundary,
    pub stages: ApproxStages,
    pub decomposition: ConvexDecomposition,
    pub profile: FeatureProfile,
}

/// ingest → approximate → decompose → profile.
pub fn analyze(
    boundary: ClosedBoundary,
    cfg: &ApproxConfig,
    shape_id: impl Into<String>,
) -> Result<ShapeAnalysis> {
    let nb = prepare_boundary(boundary)?;
    let stages = approximate_staged(&nb, cfg)?;
    let decomposition = decompose(&nb, &stages.phase3);
    let profile = profile(&nb, &decomposition, shape_id);
    Ok(ShapeAnalysis {
        boundary: nb,
        stages,
        decomposition,
        profile,
    })
}

pub fn analyze_mask(
    mask: &RasterMask,
    cfg: &ApproxConfig,
    shape_id: impl Into<String>,
) -> Result<ShapeAnalysis> {
    analyze(trace_boundary(mask)?, cfg, shape_id)
}
