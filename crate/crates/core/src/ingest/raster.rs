use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geom::Point;

use super::ClosedBoundary;

/// Binary silhouette, row-major, `true` = foreground.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RasterMask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl RasterMask {
    pub fn new(width: usize, height: usize, bits: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidMask(format!(
                "dimensions must be positive, got {width}x{height}"
            )));
        }
        if bits.len() != width * height {
            return Err(Error::InvalidMask(format!(
                "expected {} pixels, got {}",
                width * height,
                bits.len()
            )));
        }
        Ok(RasterMask {
            width,
            height,
            bits,
        })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let bits = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, bits)
    }

    /// Parses rows of `#` (foreground) and `.` (background). Handy in tests.
    pub fn from_ascii(art: &str) -> Result<Self> {
        let rows: Vec<&str> = art
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidMask("ragged ascii rows".into()));
        }
        let bits = rows
            .iter()
            .flat_map(|r| r.bytes().map(|b| b == b'#'))
            .collect();
        Self::new(width, height, bits)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    fn get_signed(&self, x: i64, y: i64) -> bool {
        x >= 0
            && y >= 0
            && (x as usize) < self.width
            && (y as usize) < self.height
            && self.get(x as usize, y as usize)
    }

    pub fn foreground_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn inverted(&self) -> Self {
        RasterMask {
            width: self.width,
            height: self.height,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Quarter turn; pixel `(x, y)` moves to `(height - 1 - y, x)`.
    pub fn rotated_90(&self) -> Self {
        let (w, h) = (self.height, self.width);
        let bits = (0..h)
            .flat_map(|y| (0..w).map(move |x| (x, y)))
            .map(|(x, y)| self.get(y, self.height - 1 - x))
            .collect();
        RasterMask {
            width: w,
            height: h,
            bits,
        }
    }

    /// Places the mask at offset `(dx, dy)` inside a larger background canvas.
    pub fn translated(&self, dx: usize, dy: usize) -> Self {
        let (w, h) = (self.width + dx, self.height + dy);
        let bits = (0..h)
            .flat_map(|y| (0..w).map(move |x| (x, y)))
            .map(|(x, y)| x >= dx && y >= dy && self.get(x - dx, y - dy))
            .collect();
        RasterMask {
            width: w,
            height: h,
            bits,
        }
    }

    /// Pixels of the largest 8-connected foreground component. Ties go to
    /// the component whose first pixel comes first in raster order.
    pub fn largest_component(&self) -> Option<RasterMask> {
        let mut label = vec![usize::MAX; self.bits.len()];
        let mut best: Option<(usize, usize)> = None; // (label, size)
        let mut next_label = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.bits.len() {
            if !self.bits[start] || label[start] != usize::MAX {
                continue;
            }
            let id = next_label;
            next_label += 1;
            label[start] = id;
            queue.push_back(start);
            let mut size = 0;
            while let Some(idx) = queue.pop_front() {
                size += 1;
                let (x, y) = ((idx % self.width) as i64, (idx / self.width) as i64);
                for (dx, dy) in NEIGHBORS {
                    let (nx, ny) = (x + dx, y + dy);
                    if self.get_signed(nx, ny) {
                        let n = ny as usize * self.width + nx as usize;
                        if label[n] == usize::MAX {
                            label[n] = id;
                            queue.push_back(n);
                        }
                    }
                }
            }
            if best.is_none_or(|(_, s)| size > s) {
                best = Some((id, size));
            }
        }
        let (id, _) = best?;
        Some(RasterMask {
            width: self.width,
            height: self.height,
            bits: label.iter().map(|&l| l == id).collect(),
        })
    }
}

/// Moore neighborhood in clockwise order for a y-down raster, starting west.
const NEIGHBORS: [(i64, i64); 8] = [
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
];

fn direction_of(dx: i64, dy: i64) -> usize {
    NEIGHBORS
        .iter()
        .position(|&d| d == (dx, dy))
        .expect("consecutive Moore neighbors are adjacent")
}

/// Outer contour of the largest 8-connected foreground component.
///
/// Moore-neighbor following with Jacob's stopping criterion: the trace ends
/// when the start pixel is re-entered from the same backtrack direction it
/// started with, or when the move out of the start pixel is about to repeat. Points are pixel centers at integer coordinates (x = column,
/// y = row).
pub fn trace_boundary(mask: &RasterMask) -> Result<ClosedBoundary> {
    let component = mask.largest_component().ok_or(Error::EmptyMask)?;
    let first = component
        .bits
        .iter()
        .position(|&b| b)
        .ok_or(Error::EmptyMask)?;
    let start = (
        (first % component.width) as i64,
        (first / component.width) as i64,
    );

    // The pixel west of the raster-order first pixel is background.
    let start_backtrack = 0usize;
    let mut current = start;
    let mut backtrack = start_backtrack;
    let mut contour = vec![start];
    let mut first_move = None;
    let limit = 4 * component.foreground_count() + 8;

    loop {
        let mut moved = false;
        for step in 1..=8 {
            let dir = (backtrack + step) % 8;
            let (dx, dy) = NEIGHBORS[dir];
            let cand = (current.0 + dx, current.1 + dy);
            if component.get_signed(cand.0, cand.1) {
                let (pdx, pdy) = NEIGHBORS[(backtrack + step - 1) % 8];
                let prev = (current.0 + pdx, current.1 + pdy);
                backtrack = direction_of(prev.0 - cand.0, prev.1 - cand.1);
                current = cand;
                moved = true;
                break;
            }
        }
        if !moved {
            break; // isolated pixel
        }
        if current == start && backtrack == start_backtrack {
            break;
        }
        // The start can be re-entered from another side, in which case
        // Jacob's test never fires; stop once the first move repeats.
        match first_move {
            None => first_move = Some((current, backtrack)),
            Some(m) if m == (current, backtrack) && contour.last() == Some(&start) => {
                contour.pop();
                break;
            }
            _ => {}
        }
        contour.push(current);
        if contour.len() > limit {
            break;
        }
    }

    let points: Vec<Point> = contour
        .into_iter()
        .map(|(x, y)| Point::new(x as f64, y as f64))
        .collect();
    let n = points.len();
    ClosedBoundary::new(points).map_err(|_| Error::DegenerateComponent(n))
}
