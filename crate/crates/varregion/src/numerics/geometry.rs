//! Planar computational geometry used to certify region properties:
//! convexity, simplicity, signed point–polygon distance, and convex hulls.
//!
//! All predicates are tolerance-based; at the sampling densities used here
//! exact-arithmetic robustness is unnecessary.

use crate::error::{Error, Result};
use crate::Cx;

/// Closed polygon: the last vertex connects back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Cx>,
}

impl Polygon {
    /// Validating constructor: at least three finite vertices, and no two
    /// consecutive vertices (including the closing pair) within 1e-14 of
    /// each other.
    pub fn new(vertices: Vec<Cx>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidParams(format!(
                "polygon needs ≥ 3 vertices, got {}",
                vertices.len()
            )));
        }
        for v in &vertices {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::InvalidParams("polygon vertex is not finite".into()));
            }
        }
        let n = vertices.len();
        for i in 0..n {
            let gap = (vertices[(i + 1) % n] - vertices[i]).norm();
            if gap <= 1e-14 {
                return Err(Error::InvalidParams(format!(
                    "repeated consecutive vertex at index {i} (gap {gap:.3e})"
                )));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Cx] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest pairwise vertex distance; scale reference for tolerances.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut best = 0.0f64;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                best = best.max((v[j] - v[i]).norm());
            }
        }
        best
    }

    /// Largest distance between consecutive vertices (including the closing
    /// edge) — the discretization margin of a sampled smooth curve.
    pub fn max_edge_length(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        (0..n)
            .map(|i| (v[(i + 1) % n] - v[i]).norm())
            .fold(0.0, f64::max)
    }
}

/// Cross product of `b − a` and `c − a`.
fn cross(a: Cx, b: Cx, c: Cx) -> f64 {
    let u = b - a;
    let v = c - a;
    u.re * v.im - u.im * v.re
}

/// True iff every cross product of consecutive edge vectors has one sign,
/// treating `|cross| ≤ tol` as collinear.  A sensible default for `tol` is
/// `1e-10 · diameter`.
pub fn polygon_is_convex(p: &Polygon, tol: f64) -> bool {
    let v = p.vertices();
    let n = v.len();
    let mut pos = false;
    let mut neg = false;
    for i in 0..n {
        let c = cross(v[i], v[(i + 1) % n], v[(i + 2) % n]);
        if c > tol {
            pos = true;
        } else if c < -tol {
            neg = true;
        }
        if pos && neg {
            return false;
        }
    }
    true
}

/// Distance from point `w` to the segment `[a, b]`.
fn point_segment_distance(w: Cx, a: Cx, b: Cx) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (w - a).norm();
    }
    let t = ((w - a).re * ab.re + (w - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (w - (a + ab * t)).norm()
}

/// Distance between segments `[a1, b1]` and `[a2, b2]`; zero when they
/// properly intersect.
fn segment_distance(a1: Cx, b1: Cx, a2: Cx, b2: Cx) -> f64 {
    let d1 = cross(a1, b1, a2);
    let d2 = cross(a1, b1, b2);
    let d3 = cross(a2, b2, a1);
    let d4 = cross(a2, b2, b1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return 0.0;
    }
    point_segment_distance(a2, a1, b1)
        .min(point_segment_distance(b2, a1, b1))
        .min(point_segment_distance(a1, a2, b2))
        .min(point_segment_distance(b1, a2, b2))
}

/// True iff no two non-adjacent edges come within `tol` of each other.
/// Edges are prefiltered by x-interval overlap after sorting, which keeps
/// the check near-linear for the smooth curves produced here.
pub fn polygon_is_simple(p: &Polygon, tol: f64) -> bool {
    let v = p.vertices();
    let n = v.len();

    // (xmin, xmax, index, endpoints)
    let mut edges: Vec<(f64, f64, usize, Cx, Cx)> = (0..n)
        .map(|i| {
            let a = v[i];
            let b = v[(i + 1) % n];
            (a.re.min(b.re) - tol, a.re.max(b.re) + tol, i, a, b)
        })
        .collect();
    edges.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.2.cmp(&y.2)));

    for i in 0..n {
        let (_, xmax_i, idx_i, a1, b1) = edges[i];
        for e in edges.iter().skip(i + 1) {
            let (xmin_j, _, idx_j, a2, b2) = *e;
            if xmin_j > xmax_i {
                break;
            }
            let gap = (idx_i as isize - idx_j as isize).rem_euclid(n as isize);
            if gap == 1 || gap == n as isize - 1 {
                continue; // adjacent edges share a vertex
            }
            if segment_distance(a1, b1, a2, b2) <= tol {
                return false;
            }
        }
    }
    true
}

/// Signed distance from `w` to the boundary of `p`: positive inside,
/// negative outside, regardless of the input vertex orientation.
pub fn point_in_polygon(p: &Polygon, w: Cx) -> f64 {
    let v = p.vertices();
    let n = v.len();

    // Even–odd crossing test (orientation independent).
    let mut inside = false;
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        if (a.im > w.im) != (b.im > w.im) {
            let x_cross = a.re + (w.im - a.im) * (b.re - a.re) / (b.im - a.im);
            if w.re < x_cross {
                inside = !inside;
            }
        }
    }

    let dist = (0..n)
        .map(|i| point_segment_distance(w, v[i], v[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min);
    if inside {
        dist
    } else {
        -dist
    }
}

/// Convex hull of a point set (monotone chain), returned counterclockwise
/// with collinear points dropped.  Needs at least three non-collinear
/// points to produce a polygon-sized hull.
pub fn convex_hull(points: &[Cx]) -> Vec<Cx> {
    let mut pts: Vec<Cx> = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    let n = pts.len();
    if n < 3 {
        return pts;
    }

    let mut hull: Vec<Cx> = Vec::with_capacity(2 * n);
    for &pt in pts.iter() {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0.0 {
            hull.pop();
        }
        hull.push(pt);
    }
    let lower_len = hull.len() + 1;
    for &pt in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0.0
        {
            hull.pop();
        }
        hull.push(pt);
    }
    hull.pop(); // last point repeats the first
    hull
}
