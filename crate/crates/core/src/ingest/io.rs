//! File formats: Netpbm masks (P1/P2/P4/P5) and `x,y` point lists.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geom::Point;

use super::{ClosedBoundary, RasterMask};

/// Gray level at or above which a PGM pixel counts as foreground.
pub const PGM_THRESHOLD: u32 = 128;

/// Decodes a Netpbm bitmap or graymap.
///
/// PBM: a set bit (black) is foreground. PGM: samples rescaled to 0..=255
/// and compared against [`PGM_THRESHOLD`]. `invert` flips either rule.
pub fn parse_pnm(bytes: &[u8], invert: bool) -> std::result::Result<RasterMask, String> {
    let mut cur = Cursor { bytes, pos: 0 };
    let magic = cur.token().ok_or("missing magic number")?;
    let kind = match magic.as_slice() {
        b"P1" => 1,
        b"P2" => 2,
        b"P4" => 4,
        b"P5" => 5,
        other => {
            return Err(format!(
                "unsupported magic {:?}",
                String::from_utf8_lossy(other)
            ))
        }
    };
    let width = cur.number()? as usize;
    let height = cur.number()? as usize;
    let maxval = if kind == 2 || kind == 5 {
        let m = cur.number()?;
        if m == 0 || m > 65535 {
            return Err(format!("bad maxval {m}"));
        }
        m
    } else {
        1
    };
    let count = width
        .checked_mul(height)
        .ok_or("image dimensions overflow")?;
    let mut bits = Vec::with_capacity(count);
    match kind {
        1 => {
            while bits.len() < count {
                cur.skip_space_and_comments();
                match cur.next_byte() {
                    Some(b'0') => bits.push(false),
                    Some(b'1') => bits.push(true),
                    Some(b) => return Err(format!("unexpected byte {b:#x} in P1 data")),
                    None => return Err("truncated P1 data".into()),
                }
            }
        }
        2 => {
            for _ in 0..count {
                let v = cur.number()?;
                bits.push(scale_gray(v, maxval) >= PGM_THRESHOLD);
            }
        }
        4 => {
            cur.single_whitespace();
            let row_bytes = width.div_ceil(8);
            let data = cur.take(row_bytes * height).ok_or("truncated P4 data")?;
            for y in 0..height {
                for x in 0..width {
                    let byte = data[y * row_bytes + x / 8];
                    bits.push(byte & (0x80 >> (x % 8)) != 0);
                }
            }
        }
        5 => {
            cur.single_whitespace();
            let wide = maxval > 255;
            let data = cur
                .take(count * if wide { 2 } else { 1 })
                .ok_or("truncated P5 data")?;
            for i in 0..count {
                let v = if wide {
                    u32::from(data[2 * i]) << 8 | u32::from(data[2 * i + 1])
                } else {
                    u32::from(data[i])
                };
                bits.push(scale_gray(v, maxval) >= PGM_THRESHOLD);
            }
        }
        _ => unreachable!(),
    }
    if invert {
        bits.iter_mut().for_each(|b| *b = !*b);
    }
    RasterMask::new(width, height, bits).map_err(|e| e.to_string())
}

fn scale_gray(v: u32, maxval: u32) -> u32 {
    if maxval == 255 {
        v
    } else {
        (u64::from(v) * 255 / u64::from(maxval)) as u32
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn next_byte(&mut self) -> Option<u8> {
        let b = *self.bytes.get(self.pos)?;
        self.pos += 1;
        Some(b)
    }

    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Option<Vec<u8>> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#')
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.bytes[start..self.pos].to_vec())
    }

    fn number(&mut self) -> std::result::Result<u32, String> {
        let tok = self.token().ok_or("unexpected end of header")?;
        std::str::from_utf8(&tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("bad number {:?}", String::from_utf8_lossy(&tok)))
    }

    fn single_whitespace(&mut self) {
        if self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn take(&mut self, len: usize) -> Option<&[u8]> {
        let out = self.bytes.get(self.pos..self.pos + len)?;
        self.pos += len;
        Some(out)
    }
}

/// Parses `x,y` lines; blank lines and lines starting with `#` are skipped.
pub fn parse_point_list(text: &str, path: &Path) -> Result<Vec<Point>> {
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            path: path.to_path_buf(),
            line: lineno + 1,
            message,
        };
        let (x, y) = line
            .split_once(',')
            .ok_or_else(|| parse_err(format!("expected \"x,y\", got {line:?}")))?;
        let coord = |s: &str| {
            s.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| parse_err(format!("bad coordinate {s:?}")))
        };
        points.push(Point::new(coord(x)?, coord(y)?));
    }
    Ok(points)
}

/// Writes points as `x,y` lines using the shortest representation that
/// parses back to the same `f64`.
pub fn format_point_list(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        let _ = writeln!(out, "{},{}", p.x, p.y);
    }
    out
}

pub fn read_point_list(path: &Path) -> Result<ClosedBoundary> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    ClosedBoundary::new(parse_point_list(&text, path)?)
}

pub fn read_pnm(path: &Path, invert: bool) -> Result<RasterMask> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    parse_pnm(&bytes, invert).map_err(|message| Error::Parse {
        path: path.to_path_buf(),
        line: 0,
        message,
    })
}

/// Input kinds recognized by file extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Pnm,
    PointList,
}

pub fn input_kind(path: &Path) -> Option<InputKind> {
    let ext = path.extension()?.to_str()?.to_ascii_lowercase();
    match ext.as_str() {
        "pbm" | "pgm" | "pnm" => Some(InputKind::Pnm),
        "txt" | "pts" | "xy" => Some(InputKind::PointList),
        _ => None,
    }
}

/// Reads any natively supported input into a traced boundary. `Ok(None)`
/// means the extension is not handled here.
pub fn read_boundary(path: &Path, invert: bool) -> Result<Option<ClosedBoundary>> {
    match input_kind(path) {
        Some(InputKind::Pnm) => Ok(Some(super::trace_boundary(&read_pnm(path, invert)?)?)),
        Some(InputKind::PointList) => Ok(Some(read_point_list(path)?)),
        None => Ok(None),
    }
}

/// Plain PBM (P1) encoding of a mask; foreground is written as `1`.
pub fn format_pbm(mask: &RasterMask) -> String {
    let mut out = format!("P1\n{} {}\n", mask.width(), mask.height());
    for y in 0..mask.height() {
        let row: Vec<&str> = (0..mask.width())
            .map(|x| if mask.get(x, y) { "1" } else { "0" })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
