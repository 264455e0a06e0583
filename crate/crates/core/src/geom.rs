//! Planar primitives shared by every stage of the pipeline.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product of `self` and `other`.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// Distance from `p` to the closed segment `a`–`b`.
///
/// When the foot of the perpendicular from `p` falls on the segment this is
/// the orthogonal distance, otherwise the distance to the nearer endpoint.
/// Returns `None` when `a == b`.
///
/// The endpoint tests use dot products rather than a projection parameter so
/// that integer inputs are classified without rounding.
pub fn segment_distance(p: Point, a: Point, b: Point) -> Option<f64> {
    let d = b - a;
    let len_sq = d.norm_sq();
    if len_sq == 0.0 {
        return None;
    }
    let ap = p - a;
    let along = ap.dot(d);
    if along < 0.0 {
        Some(ap.norm())
    } else if along > len_sq {
        Some((p - b).norm())
    } else {
        Some(d.cross(ap).abs() / len_sq.sqrt())
    }
}

/// Like [`segment_distance`], but a degenerate segment collapses to the
/// distance from its single point.
pub(crate) fn segment_distance_or_point(p: Point, a: Point, b: Point) -> f64 {
    segment_distance(p, a, b).unwrap_or_else(|| p.distance(a))
}

/// Twice the signed shoelace area of the closed polygon `points`, computed
/// relative to the first vertex.
pub fn signed_area2(points: &[Point]) -> f64 {
    let Some(&origin) = points.first() else {
        return 0.0;
    };
    points
        .windows(2)
        .map(|w| (w[0] - origin).cross(w[1] - origin))
        .sum()
}

/// Signed shoelace area; positive for counterclockwise vertex order.
pub fn signed_area(points: &[Point]) -> f64 {
    0.5 * signed_area2(points)
}

/// Order-independent sum: the same multiset of values always produces the
/// same bits.
pub(crate) fn stable_sum(mut values: Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    values.into_iter().sum()
}
