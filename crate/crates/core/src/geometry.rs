//! Plain 2D primitives in screen space (y grows downward).
//!
//! Angles are clockwise-positive on screen, which is the ordinary
//! counter-clockwise math convention seen through a y-down axis: rotating
//! `(1, 0)` by a quarter turn lands on `(0, 1)`, one step below the origin.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance used when deciding whether a point sits on a polygon edge.
pub const BOUNDARY_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("degenerate polygon: {0} vertices, at least 3 required")]
    DegeneratePolygon(usize),
    #[error("union of an empty set of rectangles")]
    EmptyUnion,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).length()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn translated(self, dx: f64, dy: f64) -> Point {
        Point::new(self.x + dx, self.y + dy)
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) * 0.5, (self.y + other.y) * 0.5)
    }

    /// Direction of `self` as seen from `center`, in screen radians.
    pub fn angle_from(self, center: Point) -> f64 {
        (self.y - center.y).atan2(self.x - center.x)
    }
}

/// A displacement between two points.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vector {
    pub dx: f64,
    pub dy: f64,
}

impl Vector {
    pub const fn new(dx: f64, dy: f64) -> Self {
        Self { dx, dy }
    }

    pub fn length(self) -> f64 {
        self.dx.hypot(self.dy)
    }

    pub fn dot(self, o: Vector) -> f64 {
        self.dx * o.dx + self.dy * o.dy
    }

    pub fn cross(self, o: Vector) -> f64 {
        self.dx * o.dy - self.dy * o.dx
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0.0 && self.dy == 0.0
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vector> {
        let len = self.length();
        (len > 0.0).then(|| Vector::new(self.dx / len, self.dy / len))
    }

    /// The vector turned a quarter turn clockwise on screen.
    pub fn perp(self) -> Vector {
        Vector::new(-self.dy, self.dx)
    }

    pub fn rotated(self, radians: f64) -> Vector {
        let (s, c) = radians.sin_cos();
        Vector::new(self.dx * c - self.dy * s, self.dx * s + self.dy * c)
    }
}

impl Sub for Point {
    type Output = Vector;
    fn sub(self, rhs: Point) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vector> for Point {
    type Output = Point;
    fn add(self, v: Vector) -> Point {
        Point::new(self.x + v.dx, self.y + v.dy)
    }
}

impl Sub<Vector> for Point {
    type Output = Point;
    fn sub(self, v: Vector) -> Point {
        Point::new(self.x - v.dx, self.y - v.dy)
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, v: Vector) -> Vector {
        Vector::new(self.dx + v.dx, self.dy + v.dy)
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, v: Vector) -> Vector {
        Vector::new(self.dx - v.dx, self.dy - v.dy)
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, k: f64) -> Vector {
        Vector::new(self.dx * k, self.dy * k)
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(-self.dx, -self.dy)
    }
}

/// Axis-aligned rectangle. Width and height are never negative.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Rect {
    pub left: f64,
    pub top: f64,
    pub width: f64,
    pub height: f64,
}

impl Rect {
    pub fn new(left: f64, top: f64, width: f64, height: f64) -> Self {
        Self {
            left,
            top,
            width: width.max(0.0),
            height: height.max(0.0),
        }
    }

    /// Smallest rectangle containing both corners, in any order.
    pub fn from_corners(a: Point, b: Point) -> Self {
        let left = a.x.min(b.x);
        let top = a.y.min(b.y);
        Rect::new(left, top, a.x.max(b.x) - left, a.y.max(b.y) - top)
    }

    pub fn right(&self) -> f64 {
        self.left + self.width
    }

    pub fn bottom(&self) -> f64 {
        self.top + self.height
    }

    pub fn top_left(&self) -> Point {
        Point::new(self.left, self.top)
    }

    pub fn center(&self) -> Point {
        Point::new(self.left + self.width * 0.5, self.top + self.height * 0.5)
    }

    /// Corners clockwise on screen starting at the top-left.
    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.left, self.top),
            Point::new(self.right(), self.top),
            Point::new(self.right(), self.bottom()),
            Point::new(self.left, self.bottom()),
        ]
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.left && p.x <= self.right() && p.y >= self.top && p.y <= self.bottom()
    }

    pub fn inflate(&self, margin: f64) -> Rect {
        Rect::new(
            self.left - margin,
            self.top - margin,
            self.width + 2.0 * margin,
            self.height + 2.0 * margin,
        )
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Rect {
        Rect {
            left: self.left + dx,
            top: self.top + dy,
            ..*self
        }
    }

    pub fn union(&self, other: &Rect) -> Rect {
        let left = self.left.min(other.left);
        let top = self.top.min(other.top);
        let right = self.right().max(other.right());
        let bottom = self.bottom().max(other.bottom());
        Rect::new(left, top, right - left, bottom - top)
    }

    /// Smallest rectangle enclosing all of `rects`, from one min/max pass
    /// over their edges; `None` when empty.
    pub fn enclosing(rects: impl IntoIterator<Item = Rect>) -> Option<Rect> {
        let mut it = rects.into_iter();
        let first = it.next()?;
        let (mut l, mut t, mut r, mut b) = (first.left, first.top, first.right(), first.bottom());
        for x in it {
            l = l.min(x.left);
            t = t.min(x.top);
            r = r.max(x.right());
            b = b.max(x.bottom());
        }
        Some(Rect::new(l, t, r - l, b - t))
    }

    /// Bounding box of a point set; `None` when empty.
    pub fn bounding(points: impl IntoIterator<Item = Point>) -> Option<Rect> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let (mut l, mut t, mut r, mut b) = (first.x, first.y, first.x, first.y);
        for p in it {
            l = l.min(p.x);
            t = t.min(p.y);
            r = r.max(p.x);
            b = b.max(p.y);
        }
        Some(Rect::new(l, t, r - l, b - t))
    }
}

/// An angle kept in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Self {
        Angle(normalize_angle(radians))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(deg: f64) -> Self {
        Angle::new(deg.to_radians())
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, o: Angle) -> Angle {
        Angle::new(self.0 + o.0)
    }
}

/// Maps any finite angle into `[0, 2π)`.
pub fn normalize_angle(radians: f64) -> f64 {
    let r = radians.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Signed smallest difference `to - from`, in `(-π, π]`.
pub fn angle_delta(from: f64, to: f64) -> f64 {
    let d = normalize_angle(to - from);
    if d > std::f64::consts::PI {
        d - TAU
    } else {
        d
    }
}

pub fn distance_point_to_segment(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Boundary-inclusive point-in-polygon test (even-odd rule).
///
/// Polygons with holes can be passed as a single keyhole ring: the bridge
/// edge is traversed twice, so its crossings cancel.
pub fn point_in_polygon(p: Point, vs: &[Point]) -> Result<bool, GeometryError> {
    if vs.len() < 3 {
        return Err(GeometryError::DegeneratePolygon(vs.len()));
    }
    let n = vs.len();
    let mut inside = false;
    for i in 0..n {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        if distance_point_to_segment(p, a, b) <= BOUNDARY_EPS {
            return Ok(true);
        }
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    Ok(inside)
}

pub fn rotate_about(p: Point, center: Point, angle: Angle) -> Point {
    rotate_about_radians(p, center, angle.radians())
}

/// Like [`rotate_about`] without normalizing the angle first.
pub fn rotate_about_radians(p: Point, center: Point, radians: f64) -> Point {
    if radians == 0.0 {
        return p;
    }
    center + (p - center).rotated(radians)
}

pub fn bounding_union(rs: &[Rect]) -> Result<Rect, GeometryError> {
    let (first, rest) = rs.split_first().ok_or(GeometryError::EmptyUnion)?;
    Ok(rest.iter().fold(*first, |acc, r| acc.union(r)))
}

/// Convexity test: consecutive edge cross products never change sign
/// (collinear vertices are tolerated) and the boundary turns exactly once.
///
/// The turning check rejects star polygons such as a pentagram, whose
/// cross products all share a sign while the outline winds twice.
pub fn is_convex(vs: &[Point]) -> Result<bool, GeometryError> {
    let n = vs.len();
    if n < 3 {
        return Err(GeometryError::DegeneratePolygon(n));
    }
    let mut sign = 0.0f64;
    let mut turning = 0.0;
    for i in 0..n {
        let e1 = vs[(i + 1) % n] - vs[i];
        let e2 = vs[(i + 2) % n] - vs[(i + 1) % n];
        let c = e1.cross(e2);
        if c != 0.0 {
            if sign == 0.0 {
                sign = c.signum();
            } else if c.signum() != sign {
                return Ok(false);
            }
        }
        if !e1.is_zero() && !e2.is_zero() {
            turning += c.atan2(e1.dot(e2));
        }
    }
    Ok((turning.abs() - TAU).abs() < 1e-6)
}

/// Largest distance between any two vertices.
pub fn span(vs: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            best = best.max(a.distance(*b));
        }
    }
    best
}

/// Arithmetic mean of the vertices.
pub fn vertex_centroid(vs: &[Point]) -> Point {
    let n = vs.len().max(1) as f64;
    let (sx, sy) = vs.iter().fold((0.0, 0.0), |(x, y), p| (x + p.x, y + p.y));
    Point::new(sx / n, sy / n)
}

/// Proper or touching intersection of segments `ab` and `cd`.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    fn orient(p: Point, q: Point, r: Point) -> f64 {
        (q - p).cross(r - p)
    }
    fn on_segment(p: Point, q: Point, r: Point) -> bool {
        r.x >= p.x.min(q.x) && r.x <= p.x.max(q.x) && r.y >= p.y.min(q.y) && r.y <= p.y.max(q.y)
    }
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0)) && ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0)) {
        return true;
    }
    (o1 == 0.0 && on_segment(a, b, c))
        || (o2 == 0.0 && on_segment(a, b, d))
        || (o3 == 0.0 && on_segment(c, d, a))
        || (o4 == 0.0 && on_segment(c, d, b))
}

/// Points along a circular arc, both ends included. `segments` ≥ 1.
pub fn arc_points(center: Point, radius: f64, start: f64, sweep: f64, segments: usize) -> Vec<Point> {
    let segments = segments.max(1);
    (0..=segments)
        .map(|i| {
            let a = start + sweep * i as f64 / segments as f64;
            Point::new(center.x + radius * a.cos(), center.y + radius * a.sin())
        })
        .collect()
}

/// Number of chords needed so a circle of `radius` deviates from its
/// inscribed polygon by at most `max_sagitta` pixels.
pub fn chord_count(radius: f64, sweep: f64, max_sagitta: f64) -> usize {
    if radius <= max_sagitta {
        return 8;
    }
    let half = (1.0 - max_sagitta / radius).acos();
    ((sweep.abs() / (2.0 * half)).ceil() as usize).clamp(8, 512)
}
