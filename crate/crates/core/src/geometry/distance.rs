//! Exact squared Euclidean distances.

use num_traits::{Signed, Zero};

use super::planar2d::{locate, project, Location};
use super::point::Point3;
use super::polygon::Polygon;
use super::scalar::ExactScalar;

pub fn squared_distance_to_segment(p: &Point3, a: &Point3, b: &Point3) -> ExactScalar {
    let ab = b - a;
    let ap = p - a;
    let len2 = ab.squared_norm();
    let t = ap.dot(&ab);
    if !t.is_positive() || len2.is_zero() {
        return ap.squared_norm();
    }
    if t >= len2 {
        return (p - b).squared_norm();
    }
    ap.squared_norm() - &t * &t / len2
}

/// Squared distance from `p` to the closed polygon `poly`.
pub fn squared_distance_to_polygon(p: &Point3, poly: &Polygon) -> ExactScalar {
    let plane = poly.plane();
    let normal = plane.normal();
    let n2 = normal.squared_norm();
    let offset = plane.eval(p);
    let foot = p - &normal.scale(&(&offset / &n2));
    if locate(&project(&foot, poly.drop_axis()), poly.projected()) != Location::Outside {
        return &offset * &offset / n2;
    }
    poly.sides()
        .map(|(a, b)| squared_distance_to_segment(p, a, b))
        .min()
        .expect("polygon has sides")
}
