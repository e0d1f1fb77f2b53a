//! Planar geometry substrate: points, poses, convex quadrangles.
//!
//! All coordinates are in meters, angles in radians. The qualitative layers
//! (topology, orientation) are built on the predicates in this module.

use serde::{Deserialize, Serialize};

/// Distance below which a point counts as lying on a boundary.
pub const BOUNDARY_EPS: f64 = 1e-9;

/// A 2-D point or vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }

    pub fn add(self, other: Point) -> Point {
        Point::new(self.x + other.x, self.y + other.y)
    }

    pub fn scale(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product of two plane vectors.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(self, other: Point) -> f64 {
        self.sub(other).norm()
    }

    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        if n < BOUNDARY_EPS {
            None
        } else {
            Some(self.scale(1.0 / n))
        }
    }

    /// Rotate counterclockwise by `theta` radians.
    pub fn rotated(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

/// Position plus heading of an oriented object (robot, box) or observer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub position: Point,
    pub theta: f64,
}

impl Pose {
    pub const fn new(x: f64, y: f64, theta: f64) -> Self {
        Pose {
            position: Point::new(x, y),
            theta,
        }
    }

    /// Map a point given in this pose's local frame into the parent frame.
    pub fn local_to_parent(&self, p: Point) -> Point {
        p.rotated(self.theta).add(self.position)
    }

    /// Map a point in the parent frame into this pose's local frame.
    pub fn parent_to_local(&self, p: Point) -> Point {
        p.sub(self.position).rotated(-self.theta)
    }

    /// The pose of the parent frame expressed in this pose's local frame.
    pub fn inverse(&self) -> Pose {
        let p = self.position.scale(-1.0).rotated(-self.theta);
        Pose {
            position: p,
            theta: -self.theta,
        }
    }

    /// Express `other` (given in the parent frame) in this pose's local frame.
    pub fn pose_to_local(&self, other: Pose) -> Pose {
        Pose {
            position: self.parent_to_local(other.position),
            theta: normalize_angle(other.theta - self.theta),
        }
    }
}

/// Wrap an angle into (-pi, pi].
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * std::f64::consts::PI);
    if t <= -std::f64::consts::PI {
        t += 2.0 * std::f64::consts::PI;
    } else if t > std::f64::consts::PI {
        t -= 2.0 * std::f64::consts::PI;
    }
    t
}

/// Where a point sits relative to a closed convex region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// A strictly convex quadrangle with counterclockwise corners.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Quad {
    pub corners: [Point; 4],
}

impl Quad {
    /// Build a quadrangle, normalizing clockwise input to counterclockwise.
    /// Rejects degenerate (non strictly convex) corner sets.
    pub fn new(mut corners: [Point; 4]) -> Result<Self, QuadError> {
        if signed_area(&corners) < 0.0 {
            corners.reverse();
        }
        let q = Quad { corners };
        if !q.is_strictly_convex() {
            return Err(QuadError::NotConvex);
        }
        Ok(q)
    }

    fn is_strictly_convex(&self) -> bool {
        for i in 0..4 {
            let a = self.corners[i];
            let b = self.corners[(i + 1) % 4];
            let c = self.corners[(i + 2) % 4];
            if b.sub(a).cross(c.sub(b)) <= BOUNDARY_EPS {
                return false;
            }
        }
        true
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        (0..4).map(move |i| (self.corners[i], self.corners[(i + 1) % 4]))
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.corners)
    }

    pub fn centroid(&self) -> Point {
        let mut c = Point::new(0.0, 0.0);
        for p in &self.corners {
            c = c.add(*p);
        }
        c.scale(0.25)
    }

    /// Length of the shortest edge.
    pub fn shortest_side(&self) -> f64 {
        self.edges()
            .map(|(a, b)| a.dist(b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Half-plane containment test with a boundary band of `eps`.
    pub fn contains(&self, p: Point, eps: f64) -> Containment {
        let mut on_boundary = false;
        for (a, b) in self.edges() {
            // Signed distance of p from edge ab (positive = interior side).
            let edge = b.sub(a);
            let len = edge.norm();
            if len < BOUNDARY_EPS {
                continue;
            }
            let d = edge.cross(p.sub(a)) / len;
            if d < -eps {
                return Containment::Outside;
            }
            if d <= eps {
                on_boundary = true;
            }
        }
        if on_boundary {
            Containment::Boundary
        } else {
            Containment::Inside
        }
    }

    /// Transform every corner by `f`.
    pub fn map(&self, mut f: impl FnMut(Point) -> Point) -> Quad {
        Quad {
            corners: [
                f(self.corners[0]),
                f(self.corners[1]),
                f(self.corners[2]),
                f(self.corners[3]),
            ],
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QuadError {
    #[error("corners do not form a strictly convex quadrangle")]
    NotConvex,
}

/// Signed area of a polygon (positive for counterclockwise winding).
pub fn signed_area(corners: &[Point]) -> f64 {
    let n = corners.len();
    let mut acc = 0.0;
    for i in 0..n {
        acc += corners[i].cross(corners[(i + 1) % n]);
    }
    acc * 0.5
}

/// Minimum distance between two segments.
pub fn segment_distance(a1: Point, a2: Point, b1: Point, b2: Point) -> f64 {
    if segments_intersect(a1, a2, b1, b2) {
        return 0.0;
    }
    point_segment_distance(a1, b1, b2)
        .min(point_segment_distance(a2, b1, b2))
        .min(point_segment_distance(b1, a1, a2))
        .min(point_segment_distance(b2, a1, a2))
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b.sub(a);
    let len2 = ab.dot(ab);
    if len2 < BOUNDARY_EPS * BOUNDARY_EPS {
        return p.dist(a);
    }
    let t = (p.sub(a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a.add(ab.scale(t)))
}

fn segments_intersect(a1: Point, a2: Point, b1: Point, b2: Point) -> bool {
    let d1 = a2.sub(a1).cross(b1.sub(a1));
    let d2 = a2.sub(a1).cross(b2.sub(a1));
    let d3 = b2.sub(b1).cross(a1.sub(b1));
    let d4 = b2.sub(b1).cross(a2.sub(b1));
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    false
}

/// Separation between two convex polygons along their edge normals.
///
/// Returns the largest minimum gap over all candidate separating axes:
/// positive means disjoint (by that margin), negative means the interiors
/// overlap (by that depth), near zero means the boundaries touch.
pub fn convex_separation(a: &Quad, b: &Quad) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for (quad, other) in [(a, b), (b, a)] {
        for (p, q) in quad.edges() {
            let edge = q.sub(p);
            let normal = match Point::new(edge.y, -edge.x).normalized() {
                Some(n) => n,
                None => continue,
            };
            let (a_min, a_max) = project(a, normal);
            let (b_min, b_max) = project(b, normal);
            // Gap between the two projection intervals on this axis.
            let gap = (b_min - a_max).max(a_min - b_max);
            if gap > best {
                best = gap;
            }
            let _ = other;
        }
    }
    best
}

fn project(q: &Quad, axis: Point) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for p in &q.corners {
        let v = p.dot(axis);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

/// Minimum distance between the boundaries of two quadrangles.
pub fn boundary_distance(a: &Quad, b: &Quad) -> f64 {
    let mut best = f64::INFINITY;
    for (a1, a2) in a.edges() {
        for (b1, b2) in b.edges() {
            best = best.min(segment_distance(a1, a2, b1, b2));
        }
    }
    best
}

/// Clip convex polygon `subject` against convex polygon `clip`
/// (Sutherland-Hodgman). Returns the intersection polygon's vertices.
pub fn clip_convex(subject: &[Point], clip: &Quad) -> Vec<Point> {
    let mut output: Vec<Point> = subject.to_vec();
    for (a, b) in clip.edges() {
        if output.is_empty() {
            break;
        }
        let input = std::mem::take(&mut output);
        let inside = |p: Point| b.sub(a).cross(p.sub(a)) >= 0.0;
        for i in 0..input.len() {
            let cur = input[i];
            let prev = input[(i + input.len() - 1) % input.len()];
            let cur_in = inside(cur);
            let prev_in = inside(prev);
            if cur_in {
                if !prev_in {
                    if let Some(x) = line_intersection(prev, cur, a, b) {
                        output.push(x);
                    }
                }
                output.push(cur);
            } else if prev_in {
                if let Some(x) = line_intersection(prev, cur, a, b) {
                    output.push(x);
                }
            }
        }
    }
    output
}

fn line_intersection(p1: Point, p2: Point, a: Point, b: Point) -> Option<Point> {
    let r = p2.sub(p1);
    let s = b.sub(a);
    let denom = r.cross(s);
    if denom.abs() < 1e-15 {
        return None;
    }
    let t = a.sub(p1).cross(s) / denom;
    Some(p1.add(r.scale(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Quad {
        Quad::new([
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn clockwise_corners_are_normalized() {
        let q = Quad::new([
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(q.area() > 0.0);
    }

    #[test]
    fn degenerate_corners_rejected() {
        let r = Quad::new([
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(0.0, 1.0),
        ]);
        assert_eq!(r, Err(QuadError::NotConvex));
    }

    #[test]
    fn containment_cases() {
        let q = unit_square();
        assert_eq!(
            q.contains(Point::new(0.5, 0.5), BOUNDARY_EPS),
            Containment::Inside
        );
        assert_eq!(
            q.contains(Point::new(5.0, 5.0), BOUNDARY_EPS),
            Containment::Outside
        );
        assert_eq!(
            q.contains(Point::new(0.5, 0.0), BOUNDARY_EPS),
            Containment::Boundary
        );
    }

    #[test]
    fn pose_round_trip() {
        let pose = Pose::new(1.0, -2.0, 0.7);
        let p = Point::new(0.3, 0.9);
        let there = pose.local_to_parent(p);
        let back = pose.parent_to_local(there);
        assert!(back.dist(p) < 1e-12);

        let inv = pose.inverse();
        let p2 = inv.local_to_parent(there);
        assert!(p2.dist(p) < 1e-12);
    }

    #[test]
    fn separation_signs() {
        let a = unit_square();
        let b = a.map(|p| p.add(Point::new(3.0, 0.0)));
        assert!(convex_separation(&a, &b) > 1.0);
        let c = a.map(|p| p.add(Point::new(0.5, 0.0)));
        assert!(convex_separation(&a, &c) < 0.0);
        let d = a.map(|p| p.add(Point::new(1.0, 0.0)));
        assert!(convex_separation(&a, &d).abs() < 1e-12);
    }

    #[test]
    fn clip_full_overlap_keeps_area() {
        let a = unit_square();
        let poly = clip_convex(&a.corners, &a);
        assert!((signed_area(&poly) - 1.0).abs() < 1e-12);
    }
}
