//! Reading shapes from disk: Netpbm and point lists through the library,
//! PNG/GIF/BMP through `image`.

use std::path::Path;

use convseg::ingest::{io, trace_boundary};
use convseg::{ClosedBoundary, Error, RasterMask, Result};

/// Gray level at or above which a decoded image pixel is foreground.
pub const LUMA_THRESHOLD: u8 = 128;

fn is_image(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .map(|e| matches!(e.to_ascii_lowercase().as_str(), "png" | "gif" | "bmp"))
        .unwrap_or(false)
}

pub fn read_image(path: &Path, invert: bool) -> Result<RasterMask> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    let img = image::load_from_memory(&bytes)
        .map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            line: 0,
            message: e.to_string(),
        })?
        .to_luma8();
    let (w, h) = img.dimensions();
    RasterMask::from_fn(w as usize, h as usize, |x, y| {
        (img.get_pixel(x as u32, y as u32).0[0] >= LUMA_THRESHOLD) != invert
    })
}

/// Any supported file as a boundary; `Ok(None)` for unrecognized
/// extensions.
pub fn read_shape(path: &Path, invert: bool) -> Result<Option<ClosedBoundary>> {
    if is_image(path) {
        return Ok(Some(trace_boundary(&read_image(path, invert)?)?));
    }
    io::read_boundary(path, invert)
}

/// Like [`read_shape`], but an unknown extension is an error.
pub fn require_shape(path: &Path, invert: bool) -> Result<ClosedBoundary> {
    if !path.exists() {
        return Err(Error::Io {
            path: path.to_path_buf(),
            source: std::io::Error::from(std::io::ErrorKind::NotFound),
        });
    }
    read_shape(path, invert)?.ok_or_else(|| Error::UnsupportedFormat(path.to_path_buf()))
}
