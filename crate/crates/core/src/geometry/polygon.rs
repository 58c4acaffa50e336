use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::planar2d::{intersect_segments, orient2d, project, signed_area2, Point2, SegmentHit};
use super::plane::Plane;
use super::point::{Aabb, Point3};
use super::scalar::sign;

/// Opaque identifier of a polygon within a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolygonId(pub u32);

impl fmt::Display for PolygonId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("polygon needs at least 3 corners, got {0}")]
    TooFewCorners(usize),
    #[error("consecutive corners {index} and {next} coincide at {point}")]
    RepeatedCorner { index: usize, next: usize, point: Point3 },
    #[error("corner {index} at {point} is not on the plane of the other corners")]
    NotCoplanar { index: usize, point: Point3 },
    #[error("all corners are collinear")]
    Degenerate,
    #[error("sides {first} and {second} intersect improperly")]
    SelfIntersecting { first: usize, second: usize },
    #[error("corner {point} maps to the plane at infinity")]
    MapsToInfinity { point: Point3 },
}

/// Sign of `det(q - p, r - p, s - p)`: positive when `s` lies on the side of
/// the plane through `p, q, r` that the right-hand normal points to.
pub fn orient3d(p: &Point3, q: &Point3, r: &Point3, s: &Point3) -> i8 {
    let u = q - p;
    let v = r - p;
    let w = s - p;
    sign(&u.dot(&v.cross(&w)))
}

/// Canonical supporting plane of a corner cycle.
pub fn supporting_plane(corners: &[Point3]) -> Result<Plane, GeometryError> {
    if corners.len() < 3 {
        return Err(GeometryError::TooFewCorners(corners.len()));
    }
    let base = &corners[0];
    let mut plane = None;
    'search: for i in 1..corners.len() {
        for j in i + 1..corners.len() {
            if let Some(pl) = Plane::through(base, &corners[i], &corners[j]) {
                plane = Some(pl);
                break 'search;
            }
        }
    }
    let plane = plane.ok_or(GeometryError::Degenerate)?;
    for (index, point) in corners.iter().enumerate() {
        if !plane.contains(point) {
            return Err(GeometryError::NotCoplanar { index, point: point.clone() });
        }
    }
    Ok(plane)
}

/// A simple closed polygon in 3-space with exact corners.
///
/// The supporting plane, projection axis, 2D image, orientation, convexity
/// and bounding box are computed once at construction.
#[derive(Clone, Debug)]
pub struct Polygon {
    id: PolygonId,
    corners: Vec<Point3>,
    plane: Plane,
    drop_axis: usize,
    projected: Vec<Point2>,
    /// +1 when the projected cycle is counterclockwise, -1 otherwise.
    orientation: i8,
    convex: bool,
    bbox: Aabb,
}

impl PartialEq for Polygon {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.corners == other.corners
    }
}

impl Eq for Polygon {}

impl Polygon {
    pub fn new(id: PolygonId, corners: Vec<Point3>) -> Result<Polygon, GeometryError> {
        let n = corners.len();
        if n < 3 {
            return Err(GeometryError::TooFewCorners(n));
        }
        for i in 0..n {
            let next = (i + 1) % n;
            if corners[i] == corners[next] {
                return Err(GeometryError::RepeatedCorner { index: i, next, point: corners[i].clone() });
            }
        }
        let plane = supporting_plane(&corners)?;
        let drop_axis = plane.dominant_axis();
        let projected: Vec<Point2> = corners.iter().map(|c| project(c, drop_axis)).collect();
        if !turns_once_convexly(&projected) {
            check_simple(&projected)?;
        }
        let orientation = sign(&signed_area2(&projected));
        if orientation == 0 {
            return Err(GeometryError::Degenerate);
        }
        let convex = (0..n).all(|i| {
            orient2d(&projected[(i + n - 1) % n], &projected[i], &projected[(i + 1) % n]) == orientation
        });
        let bbox = Aabb::of_points(&corners).expect("nonempty");
        Ok(Polygon { id, corners, plane, drop_axis, projected, orientation, convex, bbox })
    }

    pub fn id(&self) -> PolygonId {
        self.id
    }

    /// Same corners under a different identifier.
    pub fn with_id(&self, id: PolygonId) -> Polygon {
        let mut p = self.clone();
        p.id = id;
        p
    }

    pub fn corners(&self) -> &[Point3] {
        &self.corners
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn corner(&self, i: usize) -> &Point3 {
        &self.corners[i % self.corners.len()]
    }

    /// Sides as corner pairs `(corner[i], corner[i + 1])`.
    pub fn sides(&self) -> impl Iterator<Item = (&Point3, &Point3)> + '_ {
        let n = self.corners.len();
        (0..n).map(move |i| (&self.corners[i], &self.corners[(i + 1) % n]))
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    pub fn drop_axis(&self) -> usize {
        self.drop_axis
    }

    pub fn projected(&self) -> &[Point2] {
        &self.projected
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn bbox(&self) -> &Aabb {
        &self.bbox
    }

    /// Every corner is a strict extreme point: all turns have the same
    /// nonzero orientation within the supporting plane.
    pub fn is_strictly_convex(&self) -> bool {
        self.convex
    }

    pub fn corner_index(&self, p: &Point3) -> Option<usize> {
        self.corners.iter().position(|c| c == p)
    }

    /// Whether `{a, b}` is a side of this polygon (in either direction).
    pub fn has_side(&self, a: &Point3, b: &Point3) -> bool {
        let n = self.corners.len();
        match self.corner_index(a) {
            Some(i) => &self.corners[(i + 1) % n] == b || &self.corners[(i + n - 1) % n] == b,
            None => false,
        }
    }

    /// Arithmetic mean of the corners, a point in the relative interior of a
    /// convex polygon.
    pub fn centroid(&self) -> Point3 {
        let mut acc = Point3::origin();
        for c in &self.corners {
            acc = &acc + c;
        }
        acc.scale(&super::scalar::frac(1, self.corners.len() as i64))
    }
}

/// All turns have the same strict sign and the side directions wind around
/// exactly once (the x-direction of the sides changes sign twice). Such a
/// cycle is a strictly convex simple polygon.
fn turns_once_convexly(pts: &[Point2]) -> bool {
    let n = pts.len();
    let first = orient2d(&pts[n - 1], &pts[0], &pts[1]);
    if first == 0 || (1..n).any(|i| orient2d(&pts[i - 1], &pts[i], &pts[(i + 1) % n]) != first) {
        return false;
    }
    let dx: Vec<i8> = (0..n).map(|i| sign(&(&pts[(i + 1) % n].x - &pts[i].x))).filter(|&s| s != 0).collect();
    let changes = (0..dx.len()).filter(|&i| dx[i] != dx[(i + 1) % dx.len()]).count();
    changes == 2
}

/// Checks that a projected cycle is a simple polygon: non-adjacent sides are
/// disjoint and adjacent sides meet only at their common corner.
fn check_simple(pts: &[Point2]) -> Result<(), GeometryError> {
    let n = pts.len();
    for i in 0..n {
        let a = &pts[i];
        let b = &pts[(i + 1) % n];
        for j in i + 1..n {
            let c = &pts[j];
            let d = &pts[(j + 1) % n];
            let adjacent_next = j == i + 1;
            let adjacent_prev = (j + 1) % n == i;
            let hit = intersect_segments(a, b, c, d);
            let bad = match (&hit, adjacent_next, adjacent_prev) {
                (SegmentHit::None, _, _) => false,
                // Side i ends where side j starts: they may only share that corner.
                (SegmentHit::Point(t, _), true, false) => *t != num_traits::One::one(),
                (SegmentHit::Point(t, _), false, true) => !num_traits::Zero::is_zero(t),
                (SegmentHit::Point(t, _), true, true) => {
                    // Triangle-like wraparound with n == 2 cannot happen (n >= 3).
                    !num_traits::Zero::is_zero(t) && *t != num_traits::One::one()
                }
                (SegmentHit::Overlap(..), true, _) | (SegmentHit::Overlap(..), _, true) => {
                    // Collinear adjacent sides overlap beyond the shared corner
                    // only when the cycle folds back.
                    match hit {
                        SegmentHit::Overlap(ref t0, ref t1) => t0 != t1,
                        _ => unreachable!(),
                    }
                }
                _ => true,
            };
            if bad {
                return Err(GeometryError::SelfIntersecting { first: i, second: j });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::scalar::{frac, int};

    fn sq() -> Vec<Point3> {
        vec![
            Point3::from_ints(0, 0, 0),
            Point3::from_ints(1, 0, 0),
            Point3::from_ints(1, 1, 0),
            Point3::from_ints(0, 1, 0),
        ]
    }

    #[test]
    fn orient3d_basics() {
        let o = Point3::from_ints(0, 0, 0);
        let x = Point3::from_ints(1, 0, 0);
        let y = Point3::from_ints(0, 1, 0);
        let z = Point3::from_ints(0, 0, 1);
        assert_eq!(orient3d(&o, &x, &y, &Point3::from_ints(1, 1, 0)), 0);
        assert_eq!(orient3d(&o, &x, &y, &z), 1);
        assert_eq!(orient3d(&x, &o, &y, &z), -1);
    }

    #[test]
    fn unit_square_plane() {
        let p = supporting_plane(&sq()).unwrap();
        assert_eq!((p.a, p.b, p.c, p.d), (int(0), int(0), int(1), int(0)));
    }

    #[test]
    fn square_is_convex_but_not_with_midpoint() {
        let p = Polygon::new(PolygonId(0), sq()).unwrap();
        assert!(p.is_strictly_convex());
        let mut c = sq();
        c.insert(1, Point3::new(frac(1, 2), int(0), int(0)));
        let p = Polygon::new(PolygonId(0), c).unwrap();
        assert!(!p.is_strictly_convex());
    }

    #[test]
    fn rejects_bad_cycles() {
        let mut c = sq();
        c.insert(1, Point3::from_ints(0, 0, 0));
        assert!(matches!(Polygon::new(PolygonId(0), c), Err(GeometryError::RepeatedCorner { .. })));
        let bow = vec![
            Point3::from_ints(0, 0, 0),
            Point3::from_ints(1, 1, 0),
            Point3::from_ints(1, 0, 0),
            Point3::from_ints(0, 1, 0),
        ];
        assert!(matches!(Polygon::new(PolygonId(0), bow), Err(GeometryError::SelfIntersecting { .. })));
        let mut c = sq();
        c[2] = Point3::from_ints(1, 1, 1);
        assert!(matches!(Polygon::new(PolygonId(0), c), Err(GeometryError::NotCoplanar { .. })));
        let line = vec![Point3::from_ints(0, 0, 0), Point3::from_ints(1, 0, 0), Point3::from_ints(2, 0, 0)];
        assert!(Polygon::new(PolygonId(0), line).is_err());
        let fold = vec![Point3::from_ints(0, 0, 0), Point3::from_ints(2, 0, 0), Point3::from_ints(1, 0, 0), Point3::from_ints(1, 1, 0)];
        assert!(Polygon::new(PolygonId(0), fold).is_err());
    }
}
