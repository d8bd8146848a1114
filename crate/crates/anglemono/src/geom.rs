//! Planar and spatial vector algebra, canonical angles, wedges, convex
//! hulls and polygon predicates.
//!
//! All coordinates are `f64`. Angular comparisons use the absolute
//! tolerance [`ANGLE_EPS`] (radians); length comparisons use
//! [`LENGTH_EPS_REL`] times the bounding-box diameter of whatever is being
//! compared. Wedges are closed: a direction exactly on a bounding ray (or
//! within tolerance of it) counts as inside.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Absolute tolerance for angular comparisons, in radians.
pub const ANGLE_EPS: f64 = 1e-9;

/// Relative tolerance for length comparisons (scaled by a bounding-box
/// diameter).
pub const LENGTH_EPS_REL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GeomError {
    #[error("zero-length vector has no direction")]
    DegenerateVector,
    #[error("all points are collinear; hull is degenerate")]
    DegenerateHull,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dist(self, other: Point2) -> f64 {
        (other - self).norm()
    }

    pub fn midpoint(self, other: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn scaled(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }

    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }
}

impl Sub for Point2 {
    type Output = Vec2;
    fn sub(self, rhs: Point2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vec2> for Point2 {
    type Output = Point2;
    fn add(self, rhs: Vec2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, k: f64) -> Vec2 {
        self.scaled(k)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// An angle canonicalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

fn canonical(r: f64) -> f64 {
    debug_assert!(r.is_finite(), "angle must be finite");
    let t = r.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    pub fn from_radians(r: f64) -> Self {
        Angle(canonical(r))
    }

    pub fn from_degrees(d: f64) -> Self {
        Angle::from_radians(d.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// Rotate by `delta` radians (either sign) and re-canonicalize.
    pub fn rotate(self, delta: f64) -> Angle {
        Angle::from_radians(self.0 + delta)
    }

    pub fn opposite(self) -> Angle {
        self.rotate(PI)
    }

    /// Counterclockwise sweep from `self` to `other`, in `[0, 2π)`.
    pub fn ccw_to(self, other: Angle) -> f64 {
        canonical(other.0 - self.0)
    }

    /// Minimal angular distance to `other`, in `[0, π]`.
    pub fn dist(self, other: Angle) -> f64 {
        let d = self.ccw_to(other);
        d.min(TAU - d)
    }

    /// Midpoint of the counterclockwise sweep from `self` to `other`.
    pub fn midpoint_ccw(self, other: Angle) -> Angle {
        self.rotate(0.5 * self.ccw_to(other))
    }

    pub fn approx_eq(self, other: Angle, eps: f64) -> bool {
        self.dist(other) <= eps
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }

    pub fn unit_vec(self) -> Vec2 {
        Vec2::new(self.0.cos(), self.0.sin())
    }
}

/// Direction of a nonzero vector as a canonical angle.
pub fn direction(v: Vec2) -> Result<Angle, GeomError> {
    if v.x == 0.0 && v.y == 0.0 {
        return Err(GeomError::DegenerateVector);
    }
    Ok(Angle::from_radians(v.y.atan2(v.x)))
}

/// Closed-wedge membership: true iff the direction of `v` is within
/// `width / 2` of `center`, boundary rays included (within [`ANGLE_EPS`]).
pub fn in_wedge(v: Vec2, center: Angle, width: Angle) -> Result<bool, GeomError> {
    let d = direction(v)?;
    Ok(dir_in_wedge(d, center, width))
}

/// Closed-wedge membership for an already-computed direction.
pub fn dir_in_wedge(dir: Angle, center: Angle, width: Angle) -> bool {
    dir.dist(center) <= 0.5 * width.radians() + ANGLE_EPS
}

/// A closed angular wedge with an apex point.
#[derive(Debug, Clone, Copy)]
pub struct Wedge {
    pub apex: Point2,
    pub center: Angle,
    pub width: Angle,
}

impl Wedge {
    pub fn new(apex: Point2, center: Angle, width: Angle) -> Self {
        debug_assert!(width.radians() > 0.0 && width.radians() < PI);
        Wedge { apex, center, width }
    }

    /// Bounding ray at `center - width/2`.
    pub fn lower_ray(self) -> Angle {
        self.center.rotate(-0.5 * self.width.radians())
    }

    /// Bounding ray at `center + width/2`.
    pub fn upper_ray(self) -> Angle {
        self.center.rotate(0.5 * self.width.radians())
    }

    pub fn contains_dir(self, dir: Angle) -> bool {
        dir_in_wedge(dir, self.center, self.width)
    }

    pub fn contains_point(self, p: Point2) -> bool {
        if p == self.apex {
            return true;
        }
        self.contains_dir(direction(p - self.apex).expect("distinct points"))
    }
}

/// Width and center of the smallest closed circular arc containing every
/// direction in `dirs`. The returned center is a witness: every direction
/// is within `width / 2` of it.
///
/// Panics if `dirs` is empty.
pub fn min_enclosing_arc(dirs: &[Angle]) -> (Angle, Angle) {
    assert!(!dirs.is_empty(), "min_enclosing_arc of no directions");
    if dirs.len() == 1 {
        return (Angle::ZERO, dirs[0]);
    }
    let mut a: Vec<f64> = dirs.iter().map(|d| d.radians()).collect();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    // Largest gap between consecutive directions; the arc is its complement.
    let mut best_gap = TAU - a[a.len() - 1] + a[0];
    let mut start = a[0]; // arc starts just after the gap
    for i in 1..a.len() {
        let gap = a[i] - a[i - 1];
        if gap > best_gap {
            best_gap = gap;
            start = a[i];
        }
    }
    let width = (TAU - best_gap).max(0.0);
    let center = Angle::from_radians(start + 0.5 * width);
    (Angle::from_radians(width), center)
}

/// Incrementally maintained closed arc over a growing set of directions.
/// `EMPTY` is the arc of no directions.
///
/// The maintained width equals the true minimal enclosing arc whenever that
/// minimum is below a half turn, and is an upper bound otherwise; pruning
/// against any width threshold under 180° is therefore exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirArc {
    start: f64,
    width: f64,
}

impl DirArc {
    pub const EMPTY: DirArc = DirArc { start: 0.0, width: -1.0 };

    pub fn is_empty(self) -> bool {
        self.width < 0.0
    }

    pub fn width(self) -> f64 {
        self.width.max(0.0)
    }

    /// Minimal arc containing this arc and one more direction.
    pub fn extend(self, d: Angle) -> DirArc {
        if self.is_empty() {
            return DirArc { start: d.radians(), width: 0.0 };
        }
        let off = Angle::from_radians(self.start).ccw_to(d);
        if off <= self.width + ANGLE_EPS {
            return self;
        }
        // either push the CCW end out to d, or pull the start back to d
        let w_ccw = off;
        let w_cw = self.width + (TAU - off);
        if w_ccw <= w_cw {
            DirArc { start: self.start, width: w_ccw }
        } else {
            DirArc { start: d.radians(), width: w_cw }
        }
    }

    /// True iff `other` lies inside this arc (within [`ANGLE_EPS`]).
    pub fn contains_arc(self, other: DirArc) -> bool {
        if other.is_empty() {
            return true;
        }
        if self.is_empty() {
            return false;
        }
        let off = Angle::from_radians(self.start).ccw_to(Angle::from_radians(other.start));
        off + other.width <= self.width + ANGLE_EPS
    }
}

/// A simple polygon with counterclockwise vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon2 {
    pub vertices: Vec<Point2>,
}

impl Polygon2 {
    pub fn new(vertices: Vec<Point2>) -> Self {
        Polygon2 { vertices }
    }

    pub fn signed_area(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        let mut a = 0.0;
        for i in 0..n {
            let j = (i + 1) % n;
            a += v[i].x * v[j].y - v[j].x * v[i].y;
        }
        0.5 * a
    }

    pub fn is_ccw(&self) -> bool {
        self.signed_area() > 0.0
    }

    pub fn bbox(&self) -> Option<(Point2, Point2)> {
        bbox(&self.vertices)
    }

    pub fn bbox_diameter(&self) -> f64 {
        self.bbox().map(|(lo, hi)| (hi - lo).norm()).unwrap_or(0.0)
    }
}

pub fn bbox(points: &[Point2]) -> Option<(Point2, Point2)> {
    let first = *points.first()?;
    let mut lo = first;
    let mut hi = first;
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    Some((lo, hi))
}

pub fn bbox_diameter(points: &[Point2]) -> f64 {
    bbox(points).map(|(lo, hi)| (hi - lo).norm()).unwrap_or(0.0)
}

/// Signed area of the triangle `(o, a, b)`, positive for a left turn.
pub fn orient(o: Point2, a: Point2, b: Point2) -> f64 {
    (a - o).cross(b - o)
}

/// Indices of the convex hull in counterclockwise order.
///
/// Points lying on the interior of hull edges are retained as hull
/// vertices; graphs need every boundary vertex flagged, collinear or not.
pub fn convex_hull_indices(points: &[Point2]) -> Result<Vec<usize>, GeomError> {
    if points.len() < 3 {
        return Err(GeomError::DegenerateHull);
    }
    let diam = bbox_diameter(points);
    let eps_area = LENGTH_EPS_REL * diam * diam;

    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| {
        let (p, q) = (points[i], points[j]);
        p.x.partial_cmp(&q.x).unwrap().then(p.y.partial_cmp(&q.y).unwrap())
    });
    idx.dedup_by(|&mut i, &mut j| points[i] == points[j]);
    if idx.len() < 3 {
        return Err(GeomError::DegenerateHull);
    }

    // Monotone chain, popping only on strict right turns so that collinear
    // boundary points survive.
    let build = |order: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut chain: Vec<usize> = Vec::new();
        for i in order {
            while chain.len() >= 2 {
                let o = points[chain[chain.len() - 2]];
                let a = points[chain[chain.len() - 1]];
                if orient(o, a, points[i]) < -eps_area {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(i);
        }
        chain
    };

    let mut lower = build(&mut idx.iter().copied());
    let mut upper = build(&mut idx.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.extend(upper);

    let hull_poly = Polygon2::new(lower.iter().map(|&i| points[i]).collect());
    if lower.len() < 3 || hull_poly.signed_area() <= eps_area {
        return Err(GeomError::DegenerateHull);
    }
    Ok(lower)
}

/// Convex hull as a counterclockwise polygon, collinear boundary points
/// retained.
pub fn convex_hull(points: &[Point2]) -> Result<Polygon2, GeomError> {
    let idx = convex_hull_indices(points)?;
    Ok(Polygon2::new(idx.into_iter().map(|i| points[i]).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Inside,
    Boundary,
    Outside,
}

/// Distance from `p` to the segment `(a, b)`.
pub fn dist_point_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a + ab.scaled(t))
}

/// Classify `p` against a simple polygon. Points within `len_eps` of the
/// boundary are [`PointLocation::Boundary`]; the interior test is a
/// crossing count.
pub fn point_in_polygon(p: Point2, poly: &Polygon2, len_eps: f64) -> PointLocation {
    let v = &poly.vertices;
    let n = v.len();
    if n == 0 {
        return PointLocation::Outside;
    }
    for i in 0..n {
        if dist_point_segment(p, v[i], v[(i + 1) % n]) <= len_eps {
            return PointLocation::Boundary;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        if (a.y > p.y) != (b.y > p.y) {
            let t = (p.y - a.y) / (b.y - a.y);
            let x = a.x + t * (b.x - a.x);
            if x > p.x {
                inside = !inside;
            }
        }
    }
    if inside {
        PointLocation::Inside
    } else {
        PointLocation::Outside
    }
}

/// True iff segments `(a, b)` and `(c, d)` intersect in at least one point,
/// including endpoint touches and collinear overlap. Callers exclude pairs
/// that legitimately share endpoints.
pub fn segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2, eps_area: f64) -> bool {
    let side = |x: f64| -> i8 {
        if x > eps_area {
            1
        } else if x < -eps_area {
            -1
        } else {
            0
        }
    };
    let d1 = side(orient(a, b, c));
    let d2 = side(orient(a, b, d));
    let d3 = side(orient(c, d, a));
    let d4 = side(orient(c, d, b));
    if d1 != d2 && d3 != d4 && (d1 != 0 || d2 != 0) && (d3 != 0 || d4 != 0) {
        return true;
    }
    let on = |p: Point2, q: Point2, r: Point2, dq: i8| -> bool {
        dq == 0
            && r.x >= p.x.min(q.x) - eps_area
            && r.x <= p.x.max(q.x) + eps_area
            && r.y >= p.y.min(q.y) - eps_area
            && r.y <= p.y.max(q.y) + eps_area
    };
    on(a, b, c, d1) || on(a, b, d, d2) || on(c, d, a, d3) || on(c, d, b, d4)
}

/// Unsigned corner angle at `p` between rays toward `prev` and `next`,
/// in `[0, π]`.
pub fn corner_angle(prev: Point2, p: Point2, next: Point2) -> f64 {
    let u = prev - p;
    let v = next - p;
    u.cross(v).abs().atan2(u.dot(v))
}

// ---------------------------------------------------------------------------
// 3D primitives for the cap module.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn xy(self) -> Point2 {
        Point2::new(self.x, self.y)
    }

    pub fn dist(self, other: Point3) -> f64 {
        (other - self).norm()
    }
}

impl Vec3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Vec3 {
        let n = self.norm();
        Vec3::new(self.x / n, self.y / n, self.z / n)
    }
}

impl Sub for Point3 {
    type Output = Vec3;
    fn sub(self, rhs: Point3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

/// Unsigned angle between two nonzero 3D vectors, in `[0, π]`.
pub fn angle_between_3d(u: Vec3, v: Vec3) -> f64 {
    u.cross(v).norm().atan2(u.dot(v))
}

/// Unit normal of the triangle `(a, b, c)`, oriented so `z >= 0`.
pub fn upward_normal(a: Point3, b: Point3, c: Point3) -> Vec3 {
    let n = (b - a).cross(c - a);
    let n = if n.z < 0.0 { Vec3::new(-n.x, -n.y, -n.z) } else { n };
    n.normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const DEG: f64 = PI / 180.0;

    #[test]
    fn direction_axes_and_diagonal() {
        assert_eq!(direction(Vec2::new(1.0, 0.0)).unwrap(), Angle::ZERO);
        assert!(direction(Vec2::new(0.0, 1.0))
            .unwrap()
            .approx_eq(Angle::from_degrees(90.0), ANGLE_EPS));
        assert!(direction(Vec2::new(-1.0, -1.0))
            .unwrap()
            .approx_eq(Angle::from_degrees(225.0), ANGLE_EPS));
        assert_eq!(direction(Vec2::new(0.0, 0.0)), Err(GeomError::DegenerateVector));
    }

    #[test]
    fn wedge_membership_is_closed_on_rays() {
        let c = Angle::from_degrees(45.0);
        let w = Angle::from_degrees(90.0);
        assert!(in_wedge(Vec2::new(1.0, 0.0), c, w).unwrap()); // lower ray
        assert!(in_wedge(Vec2::new(0.0, 1.0), c, w).unwrap()); // upper ray
        assert!(in_wedge(Vec2::new(1.0, 1.0), c, w).unwrap()); // center
        assert!(!in_wedge(Vec2::new(0.0, -1.0), c, w).unwrap());
        assert!(!in_wedge(Vec2::new(1.0, -0.01), c, w).unwrap());
    }

    #[test]
    fn min_arc_two_directions() {
        let (w, c) = min_enclosing_arc(&[Angle::ZERO, Angle::from_degrees(90.0)]);
        assert!((w.degrees() - 90.0).abs() < 1e-9);
        assert!(c.approx_eq(Angle::from_degrees(45.0), ANGLE_EPS));
    }

    #[test]
    fn min_arc_singleton() {
        let (w, c) = min_enclosing_arc(&[Angle::from_degrees(33.0)]);
        assert_eq!(w.radians(), 0.0);
        assert!(c.approx_eq(Angle::from_degrees(33.0), ANGLE_EPS));
    }

    #[test]
    fn min_arc_three_equal_gaps() {
        let dirs = [0.0, 120.0, 240.0].map(Angle::from_degrees);
        let (w, _) = min_enclosing_arc(&dirs);
        assert!((w.degrees() - 240.0).abs() < 1e-9);
    }

    #[test]
    fn hull_of_square_and_center() {
        let pts = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
            Point2::new(0.5, 0.5),
        ];
        let hull = convex_hull_indices(&pts).unwrap();
        assert_eq!(hull.len(), 4);
        assert!(!hull.contains(&4));
    }

    #[test]
    fn hull_retains_edge_midpoints() {
        let pts = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
            Point2::new(0.5, 0.0),
            Point2::new(0.0, 0.5),
            Point2::new(1.0, 0.5),
            Point2::new(0.5, 1.0),
        ];
        let hull = convex_hull_indices(&pts).unwrap();
        assert_eq!(hull.len(), 8, "collinear boundary points kept: {hull:?}");
        let poly = Polygon2::new(hull.iter().map(|&i| pts[i]).collect());
        assert!(poly.is_ccw());
    }

    #[test]
    fn hull_collinear_is_degenerate() {
        let pts: Vec<Point2> = (0..5).map(|i| Point2::new(i as f64, 2.0 * i as f64)).collect();
        assert_eq!(convex_hull_indices(&pts), Err(GeomError::DegenerateHull));
    }

    #[test]
    fn polygon_classification() {
        let tri = Polygon2::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 2.0),
        ]);
        let eps = 1e-9 * tri.bbox_diameter();
        assert_eq!(
            point_in_polygon(Point2::new(0.5, 0.5), &tri, eps),
            PointLocation::Inside
        );
        assert_eq!(
            point_in_polygon(Point2::new(0.0, 0.0), &tri, eps),
            PointLocation::Boundary
        );
        assert_eq!(
            point_in_polygon(Point2::new(5.0, 5.0), &tri, eps),
            PointLocation::Outside
        );
    }

    #[test]
    fn segment_intersection_cases() {
        let p = Point2::new;
        // crossing
        assert!(segments_intersect(p(0., 0.), p(1., 1.), p(0., 1.), p(1., 0.), 1e-12));
        // disjoint
        assert!(!segments_intersect(p(0., 0.), p(1., 0.), p(0., 1.), p(1., 1.), 1e-12));
        // T-touch
        assert!(segments_intersect(p(0., 0.), p(2., 0.), p(1., 0.), p(1., 1.), 1e-12));
        // collinear overlap
        assert!(segments_intersect(p(0., 0.), p(2., 0.), p(1., 0.), p(3., 0.), 1e-12));
        // collinear disjoint
        assert!(!segments_intersect(p(0., 0.), p(1., 0.), p(2., 0.), p(3., 0.), 1e-12));
    }

    proptest! {
        // Wedge membership commutes with rotating both vector and wedge.
        #[test]
        fn wedge_rotation_equivariance(
            vx in -10.0f64..10.0, vy in -10.0f64..10.0,
            center in 0.0f64..TAU, width in 0.05f64..3.0,
            delta in -10.0f64..10.0,
        ) {
            prop_assume!(vx.hypot(vy) > 1e-6);
            let v = Vec2::new(vx, vy);
            let c = Angle::from_radians(center);
            let w = Angle::from_radians(width);
            let dir = direction(v).unwrap();
            // rotate the direction rather than the vector to avoid fp drift
            let rotated = dir.rotate(delta);
            // skip near-boundary directions where the eps tie can flip
            prop_assume!((dir.dist(c) - 0.5 * width).abs() > 1e-7);
            prop_assume!((rotated.dist(c.rotate(delta)) - 0.5 * width).abs() > 1e-7);
            let a = dir_in_wedge(dir, c, w);
            let b = dir_in_wedge(rotated, c.rotate(delta), w);
            prop_assert_eq!(a, b);
        }

        // The arc returned by min_enclosing_arc is a valid witness wedge.
        #[test]
        fn min_arc_witness(dirs in prop::collection::vec(0.0f64..TAU, 1..12)) {
            let angles: Vec<Angle> = dirs.iter().map(|&d| Angle::from_radians(d)).collect();
            let (w, c) = min_enclosing_arc(&angles);
            for d in &angles {
                prop_assert!(d.dist(c) <= 0.5 * w.radians() + 1e-9);
            }
        }

        // Hull contains all inputs.
        #[test]
        fn hull_contains_inputs(pts in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..40)) {
            let points: Vec<Point2> = pts.iter().map(|&(x, y)| Point2::new(x, y)).collect();
            if let Ok(poly) = convex_hull(&points) {
                let eps = 1e-7 * poly.bbox_diameter().max(1.0);
                for p in &points {
                    prop_assert!(point_in_polygon(*p, &poly, eps) != PointLocation::Outside);
                }
            }
        }

        // Incremental arc upper-bounds the batch minimum and matches it
        // exactly below a half turn.
        #[test]
        fn dir_arc_matches_batch(dirs in prop::collection::vec(0.0f64..TAU, 1..10)) {
            let angles: Vec<Angle> = dirs.iter().map(|&d| Angle::from_radians(d)).collect();
            let (batch, _) = min_enclosing_arc(&angles);
            let mut arc = DirArc::EMPTY;
            for a in &angles {
                arc = arc.extend(*a);
            }
            prop_assert!(arc.width() >= batch.radians() - 1e-7);
            if batch.radians() < PI - 1e-6 {
                prop_assert!((arc.width() - batch.radians()).abs() < 1e-7,
                    "incremental {} vs batch {}", arc.width(), batch.radians());
            }
        }
    }

    #[test]
    fn corner_angle_right() {
        let a = corner_angle(Point2::new(1.0, 0.0), Point2::new(0.0, 0.0), Point2::new(0.0, 1.0));
        assert!((a - 90.0 * DEG).abs() < 1e-12);
    }
}
