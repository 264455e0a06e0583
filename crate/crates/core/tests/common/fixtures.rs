//! Random boundaries and rasters shared by the integration tests.

#![allow(dead_code)]

use convseg::ingest::{prepare_boundary, prepare_mask, trace_boundary};
use convseg::{synth, ClosedBoundary, NormalizedBoundary, Point, RasterMask};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Star-shaped polygon with `n` vertices at random angles and radii.
pub fn random_polygon(rng: &mut StdRng, n: usize) -> Vec<Point> {
    let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup();
    angles
        .iter()
        .map(|&t| {
            let r = rng.gen_range(0.3..1.0) * 50.0;
            Point::new(r * t.cos(), r * t.sin())
        })
        .collect()
}

/// Union of a few random discs and boxes on a small canvas.
pub fn random_blob(rng: &mut StdRng, size: usize) -> RasterMask {
    let parts: Vec<(bool, f64, f64, f64, f64)> = (0..rng.gen_range(1..5))
        .map(|_| {
            let s = size as f64;
            (
                rng.gen_bool(0.5),
                rng.gen_range(0.25 * s..0.75 * s),
                rng.gen_range(0.25 * s..0.75 * s),
                rng.gen_range(0.1 * s..0.3 * s),
                rng.gen_range(0.1 * s..0.3 * s),
            )
        })
        .collect();
    RasterMask::from_fn(size, size, |x, y| {
        let (x, y) = (x as f64, y as f64);
        parts.iter().any(|&(disc, cx, cy, rx, ry)| {
            if disc {
                ((x - cx) / rx).powi(2) + ((y - cy) / ry).powi(2) <= 1.0
            } else {
                (x - cx).abs() <= rx && (y - cy).abs() <= ry
            }
        })
    })
    .unwrap()
}

/// Random synthetic silhouette raster: polygon, star or ellipse under a
/// random rotation and scale.
pub fn random_shape_mask(rng: &mut StdRng) -> RasterMask {
    let base = match rng.gen_range(0..4) {
        0 => synth::regular_polygon(rng.gen_range(3..7), 20.0),
        1 => synth::star(rng.gen_range(3..7), 22.0, rng.gen_range(8.0..14.0)),
        2 => synth::ellipse(22.0, rng.gen_range(8.0..20.0), 120),
        _ => {
            let n = rng.gen_range(5..12);
            random_polygon(rng, n).iter().map(|&p| p * 0.45).collect()
        }
    };
    let poly = synth::transform(
        &base,
        rng.gen_range(0.0..std::f64::consts::TAU),
        rng.gen_range(0.8..1.2),
        Point::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)),
    );
    synth::rasterize_fit(&poly, 3)
}

/// 100 small boundaries: float polygons and traced lattice blobs, n ≤ 200.
pub fn small_boundaries(seed: u64) -> Vec<NormalizedBoundary> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < 100 {
        let nb = if out.len() % 2 == 0 {
            let n = r.gen_range(3..=200);
            ClosedBoundary::new(random_polygon(&mut r, n))
                .and_then(prepare_boundary)
        } else {
            let size = r.gen_range(8..30);
            let mask = random_blob(&mut r, size);
            trace_boundary(&mask).and_then(prepare_boundary)
        };
        if let Ok(nb) = nb {
            if nb.len() <= 200 {
                out.push(nb);
            }
        }
    }
    out
}

pub fn normalized_mask(mask: &RasterMask) -> NormalizedBoundary {
    prepare_mask(mask).unwrap()
}

pub const SYNTH_CLASSES: [&str; 4] = ["ellipse", "square", "star", "triangle"];

/// Base outline for one of the synthetic classes.
pub fn class_outline(label: &str) -> Vec<Point> {
    match label {
        "square" => synth::regular_polygon(4, 40.0),
        "triangle" => synth::regular_polygon(3, 40.0),
        "star" => synth::star(5, 40.0, 18.0),
        "ellipse" => synth::ellipse(40.0, 22.0, 200),
        other => panic!("unknown class {other}"),
    }
}

/// `per_class` rasters of each class under a random rotation, a scale in
/// 0.9–1.1, a sub-pixel offset and a varying integer margin.
pub fn synthetic_dataset(classes: &[&str], per_class: usize, seed: u64) -> Vec<(String, String, RasterMask)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for &label in classes {
        let base = class_outline(label);
        for k in 0..per_class {
            let poly = synth::transform(
                &base,
                r.gen_range(0.0..std::f64::consts::TAU),
                r.gen_range(0.9..1.1),
                Point::new(r.gen_range(0.0..1.0), r.gen_range(0.0..1.0)),
            );
            let mask = synth::rasterize_fit(&poly, 2 + k % 3);
            out.push((format!("{label}-{k:02}"), label.to_string(), mask));
        }
    }
    out
}

pub fn labeled(data: &[(String, String, RasterMask)]) -> Vec<convseg::LabeledShape> {
    data.iter()
        .map(|(id, label, mask)| convseg::LabeledShape {
            shape_id: id.clone(),
            class_label: label.clone(),
            profile: convseg::analyze_mask(mask, &convseg::ApproxConfig::default(), id.clone())
                .unwrap()
                .profile,
            source_path: id.into(),
        })
        .collect()
}
