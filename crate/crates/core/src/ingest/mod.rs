//! Getting a silhouette into the pipeline: raster masks, contour tracing,
//! orientation and normalization.

mod boundary;
pub mod io;
mod raster;

pub use boundary::{
    canonical_start, centroid, normalize, orient_ccw, perimeter, ClosedBoundary,
    NormalizedBoundary,
};
pub use raster::{trace_boundary, RasterMask};

use crate::error::Result;

/// `trace_boundary → orient_ccw → normalize → canonical_start`.
pub fn prepare_mask(mask: &RasterMask) -> Result<NormalizedBoundary> {
    prepare_boundary(trace_boundary(mask)?)
}

/// `orient_ccw → normalize → canonical_start` for an already traced contour.
pub fn prepare_boundary(boundary: ClosedBoundary) -> Result<NormalizedBoundary> {
    let oriented = orient_ccw(boundary)?;
    Ok(canonical_start(normalize(&oriented)?))
}
