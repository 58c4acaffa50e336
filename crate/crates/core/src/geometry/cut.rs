use super::plane::{Plane, Side};
use super::point::Point3;
use super::polygon::{GeometryError, Polygon};
use super::scalar::{sign, ExactScalar};

/// Intersects `poly` with the closed half-space on side `keep` of `plane`.
///
/// Sides crossing the plane get a new corner on it; corners exactly on the
/// plane are kept. Returns `Ok(None)` when the result has empty interior,
/// and an error only if a non-convex input yields a result that is not a
/// simple polygon.
pub fn cut_polygon_by_halfspace(poly: &Polygon, plane: &Plane, keep: Side) -> Result<Option<Polygon>, GeometryError> {
    let corners = poly.corners();
    let n = corners.len();
    let values: Vec<ExactScalar> = corners.iter().map(|c| plane.eval(c)).collect();
    let signs: Vec<i8> = values.iter().map(sign).collect();
    let inside = |s: i8| keep.admits(s);
    if signs.iter().all(|&s| inside(s)) {
        return Ok(Some(poly.clone()));
    }
    let strictly_inside = |s: i8| s != 0 && inside(s);
    if !signs.iter().any(|&s| strictly_inside(s)) {
        return Ok(None);
    }
    let mut out: Vec<Point3> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let j = (i + 1) % n;
        if inside(signs[i]) {
            out.push(corners[i].clone());
        }
        if signs[i] * signs[j] < 0 {
            let t = &values[i] / (&values[i] - &values[j]);
            out.push(corners[i].lerp(&corners[j], &t));
        }
    }
    out.dedup();
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    if out.len() < 3 {
        return Ok(None);
    }
    match Polygon::new(poly.id(), out) {
        Ok(p) => Ok(Some(p)),
        Err(GeometryError::Degenerate) => Ok(None),
        Err(e) => Err(e),
    }
}
