//! Plane primitives: 2D vectors, axis-aligned rectangles, segment predicates,
//! and closed polylines with row-bucketed point queries.
//!
//! The polyline is the workhorse behind boundary membership tests, cell
//! classification, and cut-cell clipping: every closed spline caches one
//! (sagitta-controlled) polyline, and all geometric queries against the
//! boundary are answered from it.

use crate::math;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// 2D point / vector.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline(always)]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    #[inline(always)]
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product; twice the signed area of the
    /// triangle (0, self, o).
    #[inline(always)]
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline(always)]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline(always)]
    pub fn norm(self) -> f64 {
        math::sqrt(self.norm_sq())
    }

    #[inline(always)]
    pub fn dist(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    #[inline(always)]
    pub fn dist_sq(self, o: Vec2) -> f64 {
        (self - o).norm_sq()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline(always)]
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}
impl AddAssign for Vec2 {
    #[inline(always)]
    fn add_assign(&mut self, o: Vec2) {
        self.x += o.x;
        self.y += o.y;
    }
}
impl Sub for Vec2 {
    type Output = Vec2;
    #[inline(always)]
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}
impl SubAssign for Vec2 {
    #[inline(always)]
    fn sub_assign(&mut self, o: Vec2) {
        self.x -= o.x;
        self.y -= o.y;
    }
}
impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline(always)]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}
impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline(always)]
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.x / s, self.y / s)
    }
}
impl Neg for Vec2 {
    type Output = Vec2;
    #[inline(always)]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Axis-aligned rectangle `[lo.x, hi.x] × [lo.y, hi.y]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub lo: Vec2,
    pub hi: Vec2,
}

impl Rect {
    #[inline(always)]
    pub const fn new(lo: Vec2, hi: Vec2) -> Self {
        Rect { lo, hi }
    }

    #[inline(always)]
    pub fn width(&self) -> f64 {
        self.hi.x - self.lo.x
    }

    #[inline(always)]
    pub fn height(&self) -> f64 {
        self.hi.y - self.lo.y
    }

    #[inline(always)]
    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    #[inline(always)]
    pub fn center(&self) -> Vec2 {
        Vec2::new(0.5 * (self.lo.x + self.hi.x), 0.5 * (self.lo.y + self.hi.y))
    }

    #[inline(always)]
    pub fn contains(&self, p: Vec2) -> bool {
        p.x >= self.lo.x && p.x <= self.hi.x && p.y >= self.lo.y && p.y <= self.hi.y
    }

    pub fn contains_strict(&self, p: Vec2) -> bool {
        p.x > self.lo.x && p.x < self.hi.x && p.y > self.lo.y && p.y < self.hi.y
    }

    /// Corners in counter-clockwise order starting at `lo`.
    pub fn corner(&self, i: usize) -> Vec2 {
        match i & 3 {
            0 => self.lo,
            1 => Vec2::new(self.hi.x, self.lo.y),
            2 => self.hi,
            _ => Vec2::new(self.lo.x, self.hi.y),
        }
    }

    /// The four congruent quadrants, in (SW, SE, NW, NE) order.
    pub fn quadrants(&self) -> [Rect; 4] {
        let c = self.center();
        [
            Rect::new(self.lo, c),
            Rect::new(Vec2::new(c.x, self.lo.y), Vec2::new(self.hi.x, c.y)),
            Rect::new(Vec2::new(self.lo.x, c.y), Vec2::new(c.x, self.hi.y)),
            Rect::new(c, self.hi),
        ]
    }
}

/// Parametric interval of the segment `a + t (b-a)`, `t ∈ [0,1]`, inside
/// `rect` (Liang–Barsky). `None` when the segment misses the rectangle.
pub fn clip_segment_to_rect(a: Vec2, b: Vec2, rect: &Rect) -> Option<(f64, f64)> {
    let d = b - a;
    let mut t0 = 0.0_f64;
    let mut t1 = 1.0_f64;
    let checks = [
        (-d.x, a.x - rect.lo.x),
        (d.x, rect.hi.x - a.x),
        (-d.y, a.y - rect.lo.y),
        (d.y, rect.hi.y - a.y),
    ];
    for (p, q) in checks {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                if r > t1 {
                    return None;
                }
                if r > t0 {
                    t0 = r;
                }
            } else {
                if r < t0 {
                    return None;
                }
                if r < t1 {
                    t1 = r;
                }
            }
        }
    }
    Some((t0, t1))
}

#[inline]
fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b - a).cross(c - a)
}

#[inline]
fn on_segment(a: Vec2, b: Vec2, p: Vec2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Whether the closed segments `[a,b]` and `[c,d]` share any point.
pub fn segments_intersect(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

/// Whether the closed polygon with the given vertices is simple, i.e. no two
/// non-adjacent edges touch. Candidate pairs come from a sparse spatial hash
/// keyed by bucket coordinates, so the test stays near-linear in the vertex
/// count and its memory stays proportional to the polygon size.
pub fn polygon_is_simple(pts: &[Vec2]) -> bool {
    use alloc::collections::BTreeMap;

    let n = pts.len();
    if n < 3 {
        return false;
    }
    let seg = |i: usize| (pts[i], pts[(i + 1) % n]);

    // Bucket size: the longest edge, so each segment covers at most 2x2
    // buckets and geometrically close pairs share a bucket or a neighbor.
    let mut max_len = 0.0_f64;
    for i in 0..n {
        let (a, b) = seg(i);
        max_len = max_len.max(a.dist(b));
    }
    if max_len == 0.0 {
        return false;
    }
    let inv = 1.0 / max_len;
    let key = |p: Vec2| -> (i64, i64) { ((p.x * inv) as i64, (p.y * inv) as i64) };

    let mut buckets: BTreeMap<(i64, i64), Vec<u32>> = BTreeMap::new();
    for s in 0..n {
        let (a, b) = seg(s);
        let (i0, j0) = key(a);
        let (i1, j1) = key(b);
        for j in j0.min(j1)..=j0.max(j1) {
            for i in i0.min(i1)..=i0.max(i1) {
                buckets.entry((i, j)).or_default().push(s as u32);
            }
        }
    }

    let test_pair = |s: usize, t: usize| -> bool {
        if adjacent(s, t, n) {
            return false;
        }
        let (a, b) = seg(s);
        let (c, d) = seg(t);
        segments_intersect(a, b, c, d)
    };

    for (&(i, j), here) in &buckets {
        for (ai, &s) in here.iter().enumerate() {
            for &t in &here[ai + 1..] {
                if test_pair(s as usize, t as usize) {
                    return false;
                }
            }
        }
        // Forward half-neighborhood: each bucket pair visited once.
        for (di, dj) in [(1i64, 0i64), (-1, 1), (0, 1), (1, 1)] {
            if let Some(there) = buckets.get(&(i + di, j + dj)) {
                for &s in here {
                    for &t in there {
                        if test_pair(s as usize, t as usize) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn adjacent(s: usize, t: usize, n: usize) -> bool {
    s == t || (s + 1) % n == t || (t + 1) % n == s
}

/// Signed area of a closed polygon (positive for counter-clockwise order).
pub fn polygon_signed_area(pts: &[Vec2]) -> f64 {
    let n = pts.len();
    let mut a = 0.0;
    for i in 0..n {
        let p = pts[i];
        let q = pts[(i + 1) % n];
        a += p.cross(q);
    }
    0.5 * a
}

/// Closed polyline with a row bucket index over segments for O(local) point
/// queries. Vertex `i` connects to vertex `i+1 (mod n)`.
#[derive(Clone, Debug)]
pub(crate) struct Polyline {
    pts: Vec<Vec2>,
    bbox: Rect,
    y0: f64,
    inv_bin: f64,
    n_rows: usize,
    row_ptr: Vec<u32>,
    row_seg: Vec<u32>,
}

impl Polyline {
    pub fn new(pts: Vec<Vec2>) -> Self {
        assert!(pts.len() >= 3, "polyline needs at least 3 vertices");
        let n = pts.len();
        let (mut lo, mut hi) = (pts[0], pts[0]);
        for p in &pts {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        let bbox = Rect::new(lo, hi);
        let n_rows = (n / 8).clamp(16, 4096);
        let span = (hi.y - lo.y).max(f64::MIN_POSITIVE);
        let inv_bin = n_rows as f64 / span;

        let row_of = |y: f64| -> usize { (((y - lo.y) * inv_bin) as usize).min(n_rows - 1) };
        let mut counts = vec![0u32; n_rows + 1];
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let r0 = row_of(a.y.min(b.y));
            let r1 = row_of(a.y.max(b.y));
            for r in r0..=r1 {
                counts[r + 1] += 1;
            }
        }
        for r in 0..n_rows {
            counts[r + 1] += counts[r];
        }
        let row_ptr = counts;
        let mut fill = row_ptr.clone();
        let mut row_seg = vec![0u32; row_ptr[n_rows] as usize];
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let r0 = row_of(a.y.min(b.y));
            let r1 = row_of(a.y.max(b.y));
            for r in r0..=r1 {
                row_seg[fill[r] as usize] = i as u32;
                fill[r] += 1;
            }
        }
        Polyline { pts, bbox, y0: lo.y, inv_bin, n_rows, row_ptr, row_seg }
    }

    #[inline(always)]
    pub fn len(&self) -> usize {
        self.pts.len()
    }

    #[inline(always)]
    pub fn points(&self) -> &[Vec2] {
        &self.pts
    }

    #[inline(always)]
    pub fn seg(&self, i: usize) -> (Vec2, Vec2) {
        let a = self.pts[i];
        let b = self.pts[if i + 1 == self.pts.len() { 0 } else { i + 1 }];
        (a, b)
    }

    #[inline(always)]
    pub fn bbox(&self) -> Rect {
        self.bbox
    }

    pub fn signed_area(&self) -> f64 {
        polygon_signed_area(&self.pts)
    }

    pub fn length(&self) -> f64 {
        let mut l = 0.0;
        for i in 0..self.pts.len() {
            let (a, b) = self.seg(i);
            l += a.dist(b);
        }
        l
    }

    pub fn reverse(&mut self) {
        self.pts.reverse();
        *self = Polyline::new(core::mem::take(&mut self.pts));
    }

    #[inline]
    fn row_of(&self, y: f64) -> usize {
        (((y - self.y0) * self.inv_bin).max(0.0) as usize).min(self.n_rows - 1)
    }

    /// Winding number of the closed polyline around `p` (±1 inside for a
    /// simple curve, 0 outside).
    pub fn winding(&self, p: Vec2) -> i32 {
        if !self.bbox.contains(p) {
            return 0;
        }
        let r = self.row_of(p.y);
        let mut wn = 0i32;
        let lo = self.row_ptr[r] as usize;
        let hi = self.row_ptr[r + 1] as usize;
        for &si in &self.row_seg[lo..hi] {
            let (a, b) = self.seg(si as usize);
            let up = a.y <= p.y && b.y > p.y;
            let down = b.y <= p.y && a.y > p.y;
            if up || down {
                let t = (p.y - a.y) / (b.y - a.y);
                let xi = a.x + t * (b.x - a.x);
                if xi > p.x {
                    wn += if up { 1 } else { -1 };
                }
            }
        }
        wn
    }

    #[inline]
    pub fn contains(&self, p: Vec2) -> bool {
        self.winding(p) != 0
    }

    /// Whether `p` lies within `tol` of the polyline.
    pub fn within_distance(&self, p: Vec2, tol: f64) -> bool {
        if p.x < self.bbox.lo.x - tol
            || p.x > self.bbox.hi.x + tol
            || p.y < self.bbox.lo.y - tol
            || p.y > self.bbox.hi.y + tol
        {
            return false;
        }
        let r0 = self.row_of(p.y - tol);
        let r1 = self.row_of(p.y + tol);
        let t2 = tol * tol;
        for r in r0..=r1 {
            let lo = self.row_ptr[r] as usize;
            let hi = self.row_ptr[r + 1] as usize;
            for &si in &self.row_seg[lo..hi] {
                let (a, b) = self.seg(si as usize);
                if segment_point_dist_sq(a, b, p) <= t2 {
                    return true;
                }
            }
        }
        false
    }

    /// Segment indices whose bounding box overlaps `rect`, in traversal order.
    pub fn segments_overlapping(&self, rect: &Rect, out: &mut Vec<u32>) {
        out.clear();
        let n = self.pts.len();
        for i in 0..n {
            let (a, b) = self.seg(i);
            if a.x.min(b.x) <= rect.hi.x
                && a.x.max(b.x) >= rect.lo.x
                && a.y.min(b.y) <= rect.hi.y
                && a.y.max(b.y) >= rect.lo.y
            {
                out.push(i as u32);
            }
        }
    }

    /// Maximal connected pieces of the polyline inside `rect`, stitched in
    /// traversal order (so each chain is oriented like the curve).
    pub fn clip_to_rect(&self, rect: &Rect) -> Vec<Vec<Vec2>> {
        let n = self.pts.len();
        let mut chains: Vec<Vec<Vec2>> = Vec::new();
        let mut open = false;
        let scale = (rect.width() + rect.height()).max(1e-300);
        let glue = 1e-12 * scale;
        for i in 0..n {
            let (a, b) = self.seg(i);
            // cheap bbox reject
            if a.x.min(b.x) > rect.hi.x
                || a.x.max(b.x) < rect.lo.x
                || a.y.min(b.y) > rect.hi.y
                || a.y.max(b.y) < rect.lo.y
            {
                open = false;
                continue;
            }
            match clip_segment_to_rect(a, b, rect) {
                Some((t0, t1)) if t1 > t0 => {
                    let d = b - a;
                    let p0 = if t0 == 0.0 { a } else { a + d * t0 };
                    let p1 = if t1 == 1.0 { b } else { a + d * t1 };
                    if open && t0 == 0.0 {
                        let last = chains.last_mut().unwrap();
                        if last.last().map(|q| q.dist(p0) <= glue).unwrap_or(false) {
                            last.push(p1);
                        } else {
                            chains.push(vec![p0, p1]);
                        }
                    } else {
                        chains.push(vec![p0, p1]);
                    }
                    open = t1 == 1.0;
                }
                _ => {
                    open = false;
                }
            }
        }
        // A chain may wrap around the seam between segment n-1 and segment 0.
        if chains.len() >= 2 {
            let first_start = chains[0][0];
            let last_end = *chains.last().unwrap().last().unwrap();
            if first_start.dist(last_end) <= glue {
                let first = chains.remove(0);
                let last = chains.last_mut().unwrap();
                last.extend_from_slice(&first[1..]);
            }
        }
        chains
    }
}

#[inline]
pub(crate) fn segment_point_dist_sq(a: Vec2, b: Vec2, p: Vec2) -> f64 {
    let d = b - a;
    let l2 = d.norm_sq();
    if l2 == 0.0 {
        return p.dist_sq(a);
    }
    let t = ((p - a).dot(d) / l2).clamp(0.0, 1.0);
    p.dist_sq(a + d * t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<Vec2> {
        vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ]
    }

    #[test]
    fn winding_inside_outside() {
        let pl = Polyline::new(square());
        assert_eq!(pl.winding(Vec2::new(0.5, 0.5)), 1);
        assert_eq!(pl.winding(Vec2::new(1.5, 0.5)), 0);
        assert_eq!(pl.winding(Vec2::new(-0.5, 0.5)), 0);
    }

    #[test]
    fn winding_orientation_sign() {
        let mut pts = square();
        pts.reverse();
        let pl = Polyline::new(pts);
        assert_eq!(pl.winding(Vec2::new(0.5, 0.5)), -1);
        assert!(pl.contains(Vec2::new(0.5, 0.5)));
    }

    #[test]
    fn simple_polygon_detection() {
        assert!(polygon_is_simple(&square()));
        // bowtie
        let bow = vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
        ];
        assert!(!polygon_is_simple(&bow));
    }

    #[test]
    fn clip_chain_through_rect() {
        let pl = Polyline::new(square());
        let r = Rect::new(Vec2::new(-0.25, -0.25), Vec2::new(0.5, 0.5));
        let chains = pl.clip_to_rect(&r);
        // bottom edge enters from the left corner region, left edge exits:
        // wrap-around stitching makes this one chain through the corner.
        assert_eq!(chains.len(), 1);
        let c = &chains[0];
        assert!(c.first().unwrap().dist(Vec2::new(0.0, 0.5)) < 1e-12);
        assert!(c.last().unwrap().dist(Vec2::new(0.5, 0.0)) < 1e-12);
    }

    #[test]
    fn signed_area_matches_orientation() {
        assert!((polygon_signed_area(&square()) - 1.0).abs() < 1e-15);
        let mut r = square();
        r.reverse();
        assert!((polygon_signed_area(&r) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn distance_query() {
        let pl = Polyline::new(square());
        assert!(pl.within_distance(Vec2::new(0.5, 1e-13), 1e-12));
        assert!(!pl.within_distance(Vec2::new(0.5, 0.5), 1e-12));
    }
}
