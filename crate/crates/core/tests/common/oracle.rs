//! Brute-force reference implementations.
//!
//! These recompute everything from scratch on every step and use a
//! projection parameter for the chord distance. Coordinates are the raw
//! oriented points scaled by σ, so exact lattice ties compare equal here
//! and in the library.

#![allow(dead_code)]

use convseg::{NormalizedBoundary, Point};

pub fn pt(nb: &NormalizedBoundary, i: usize) -> Point {
    nb.source[i % nb.len()]
}

/// Distance from `p` to segment `a`–`b` via the projection parameter.
pub fn chord_distance(p: Point, a: Point, b: Point) -> Option<f64> {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len_sq = dx * dx + dy * dy;
    if len_sq == 0.0 {
        return None;
    }
    let (px, py) = (p.x - a.x, p.y - a.y);
    let t = (px * dx + py * dy) / len_sq;
    let d = if t < 0.0 {
        (px * px + py * py).sqrt()
    } else if t > 1.0 {
        ((p.x - b.x).powi(2) + (p.y - b.y).powi(2)).sqrt()
    } else {
        (px * dy - py * dx).abs() / len_sq.sqrt()
    };
    Some(d)
}

/// Indices strictly between `i` and `j` going forward.
pub fn between(n: usize, i: usize, j: usize) -> Vec<usize> {
    let steps = (j + n - i) % n;
    let steps = if steps == 0 { n } else { steps };
    (1..steps).map(|k| (i + k) % n).collect()
}

/// Max deviation and first index reaching it; `None` for a degenerate chord.
pub fn deviation(nb: &NormalizedBoundary, i: usize, j: usize) -> Option<(f64, Option<usize>)> {
    let (a, b) = (pt(nb, i), pt(nb, j));
    if a == b {
        return None;
    }
    let mut best = (0.0, None);
    for k in between(nb.len(), i, j) {
        let d = chord_distance(pt(nb, k), a, b).unwrap() * nb.sigma;
        if best.1.is_none() || d > best.0 {
            best = (d, Some(k));
        }
    }
    Some(best)
}

fn segments(idx: &[usize]) -> Vec<(usize, usize)> {
    (0..idx.len()).map(|k| (idx[k], idx[(k + 1) % idx.len()])).collect()
}

pub fn sse(nb: &NormalizedBoundary, idx: &[usize]) -> f64 {
    let n = nb.len();
    let mut total = 0.0;
    for k in 0..n {
        if idx.contains(&k) {
            continue;
        }
        // segment whose forward range contains k
        let (a, b) = segments(idx)
            .into_iter()
            .find(|&(a, b)| between(n, a, b).contains(&k))
            .unwrap();
        let d = chord_distance(pt(nb, k), pt(nb, a), pt(nb, b))
            .unwrap_or_else(|| pt(nb, k).distance(pt(nb, a)))
            * nb.sigma;
        total += d * d;
    }
    total
}

/// Absolute shoelace area with the textbook cross-sum formula.
pub fn polygon_area(points: &[Point]) -> f64 {
    let m = points.len();
    let mut s = 0.0;
    for k in 0..m {
        let p = points[k];
        let q = points[(k + 1) % m];
        s += p.x * q.y - q.x * p.y;
    }
    (s / 2.0).abs()
}

pub fn scan(nb: &NormalizedBoundary, threshold: f64, min_landmarks: usize) -> Vec<usize> {
    let n = nb.len();
    let ok = |i: usize, j: usize| deviation(nb, i, j % n).is_some_and(|(d, _)| d <= threshold);
    let mut idx = vec![0];
    let mut start = 0;
    let mut end = 1;
    loop {
        if end == n {
            break;
        }
        if ok(start, end + 1) {
            end += 1;
        } else {
            idx.push(end);
            start = end;
            end = start + 1;
        }
    }
    while idx.len() < min_landmarks.min(n) {
        let mut best: Option<(f64, usize)> = None;
        for (a, b) in segments(&idx) {
            let cand = match deviation(nb, a, b) {
                Some((d, Some(k))) => Some((d, k)),
                Some((_, None)) => None,
                None => {
                    // coincident endpoints: farthest point from them
                    let mut far: Option<(f64, usize)> = None;
                    for k in between(n, a, b) {
                        let d = pt(nb, k).distance(pt(nb, a)) * nb.sigma;
                        if far.is_none_or(|f| d > f.0) {
                            far = Some((d, k));
                        }
                    }
                    far
                }
            };
            if let Some(c) = cand {
                if best.is_none_or(|b| c.0 > b.0) {
                    best = Some(c);
                }
            }
        }
        let Some((_, k)) = best else { break };
        idx.push(k);
        idx.sort_unstable();
    }
    idx
}

/// The escalating-threshold loop. Returns landmarks and tolerance.
pub fn iterate(nb: &NormalizedBoundary, min_landmarks: usize, max_passes: usize) -> (Vec<usize>, f64) {
    let n = nb.len() as f64;
    let mut prev: Option<Vec<usize>> = None;
    for k in 1..=max_passes {
        let t = k as f64 * nb.sigma;
        let cur = scan(nb, t, min_landmarks);
        if sse(nb, &cur) > t * t * cur.len() as f64 / n {
            return (prev.unwrap_or(cur), t);
        }
        if k == max_passes || (k + 1) as f64 * nb.sigma > 0.5 {
            return (cur, t);
        }
        prev = Some(cur);
    }
    unreachable!()
}

/// Weakest-segment merging, recomputing every deviation each round.
/// Segments are frozen by their endpoint pair.
pub fn merge(nb: &NormalizedBoundary, start: &[usize], threshold: f64, min_landmarks: usize) -> Vec<usize> {
    let dev = |a: usize, b: usize| deviation(nb, a, b).map_or(f64::INFINITY, |d| d.0);
    let mut idx = start.to_vec();
    let mut frozen: Vec<(usize, usize)> = Vec::new();
    while idx.len() > min_landmarks {
        let m = idx.len();
        let mut order: Vec<(f64, usize)> = (0..m)
            .filter(|&k| !frozen.contains(&(idx[k], idx[(k + 1) % m])))
            .map(|k| (dev(idx[k], idx[(k + 1) % m]), k))
            .collect();
        order.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
        let Some(&(_, k)) = order.first() else { break };
        let prev = idx[(k + m - 1) % m];
        let a = idx[k];
        let b = idx[(k + 1) % m];
        let next = idx[(k + 2) % m];
        let del_a = dev(prev, b);
        let del_b = dev(a, next);
        let victim = if del_b <= threshold && del_b < del_a {
            Some(b)
        } else if del_a <= threshold {
            Some(a)
        } else if del_b <= threshold {
            Some(b)
        } else {
            None
        };
        match victim {
            None => frozen.push((a, b)),
            Some(v) => {
                let pos = idx.iter().position(|&i| i == v).unwrap();
                let mm = idx.len();
                let left = idx[(pos + mm - 1) % mm];
                let right = idx[(pos + 1) % mm];
                idx.remove(pos);
                frozen.retain(|&(s, e)| s != left && e != left && s != right && e != right);
            }
        }
    }
    idx
}

pub fn cosine(l: Point, c: Point, r: Point) -> Option<f64> {
    let (ux, uy) = (l.x - c.x, l.y - c.y);
    let (vx, vy) = (r.x - c.x, r.y - c.y);
    let d = (ux * ux + uy * uy).sqrt() * (vx * vx + vy * vy).sqrt();
    if d == 0.0 || l == r {
        return None;
    }
    Some(((ux * vx + uy * vy) / d).clamp(-1.0, 1.0))
}

pub fn straighten(nb: &NormalizedBoundary, start: &[usize], kappa: f64, min_landmarks: usize) -> Vec<usize> {
    let mut idx = start.to_vec();
    while idx.len() > min_landmarks {
        let m = idx.len();
        let mut best: Option<(f64, usize)> = None;
        for p in 0..m {
            let c = cosine(pt(nb, idx[(p + m - 1) % m]), pt(nb, idx[p]), pt(nb, idx[(p + 1) % m]));
            if let Some(c) = c {
                if best.is_none_or(|b| c < b.0) {
                    best = Some((c, p));
                }
            }
        }
        match best {
            Some((c, p)) if c <= kappa => {
                idx.remove(p);
            }
            _ => break,
        }
    }
    idx
}
