//! Silhouette classification by approximately convex boundary segments.
//!
//! A traced contour is normalized to unit perimeter, approximated by a
//! polygon, split at its reflex vertices into approximately convex
//! segments, and summarized as a list of five-number segment descriptors
//! sorted by segment size. Two shapes are compared by summing squared
//! differences of rank-aligned descriptors, so no geometric alignment is
//! ever computed.
//!
//! ```
//! use convseg::{analyze, synth, ApproxConfig};
//!
//! let mask = synth::rasterize_fit(&synth::star(5, 40.0, 16.0), 4);
//! let boundary = convseg::ingest::trace_boundary(&mask).unwrap();
//! let shape = analyze(boundary, &ApproxConfig::default(), "star").unwrap();
//! assert_eq!(shape.profile.len(), 5);
//! ```
//!
//! The guide in `book/` walks through each stage.

pub mod approx;
pub mod classify;
pub mod convexdec;
pub mod error;
pub mod features;
pub mod geom;
pub mod ingest;
pub mod pipeline;
pub mod similarity;
pub mod synth;

pub use approx::{approximate, ApproxConfig, LandmarkSequence};
pub use classify::{loocv, EvalReport, LabeledShape};
pub use convexdec::{decompose, ConvexDecomposition};
pub use error::{Error, Result};
pub use features::{FeatureProfile, SegmentFeatures};
pub use geom::Point;
pub use ingest::{ClosedBoundary, NormalizedBoundary, RasterMask};
pub use pipeline::{analyze, analyze_mask, ShapeAnalysis};
pub use similarity::{similarity, SimilarityScore};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/ingest.md")]
    mod ingest {}
    #[doc = include_str!("../../../book/src/approximation.md")]
    mod approximation {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/features.md")]
    mod features {}
    #[doc = include_str!("../../../book/src/similarity.md")]
    mod similarity {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
