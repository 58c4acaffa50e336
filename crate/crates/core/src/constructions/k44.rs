//! `K_{4,4}` from the published coordinate table.
//!
//! Polygon ids: 0 top, 1 bottom, 2..=5 the vertical hexagons, 6 and 7 the
//! diagonal octagons. Parts of the bipartition are `{0, 1, 6, 7}` and
//! `{2, 3, 4, 5}`.

use super::{finish, ConstructionError, ConstructionResult};
use crate::geometry::{cut_polygon_by_halfspace, frac, int, ExactScalar, Plane, Point3, Polygon, Side};
use crate::graphs::Graph;
use crate::surface::{Mode, Surface};

fn pt(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Point3 {
    Point3::new(frac(x.0, x.1), frac(y.0, y.1), frac(z.0, z.1))
}

fn whole(v: i64) -> (i64, i64) {
    (v, 1)
}

fn table() -> Vec<Vec<Point3>> {
    let w = whole;
    let p = |x: i64, y: i64, z: i64| pt(w(x), w(y), w(z));
    vec![
        vec![p(-6, 0, 10), p(-5, -1, 10), p(5, -1, 10), p(6, 0, 10), p(5, 1, 10), p(-5, 1, 10)],
        vec![p(-5, 1, -10), p(-6, 0, -10), p(-5, -1, -10), p(17, -13, -10), p(18, -12, -10), p(17, -11, -10)],
        vec![
            p(-6, 0, 10),
            p(-5, 1, 10),
            pt((-23, 5), (7, 5), (106, 11)),
            pt((-23, 5), (7, 5), (-46, 5)),
            p(-5, 1, -10),
            p(-6, 0, -10),
        ],
        vec![
            p(-6, 0, 10),
            p(-5, -1, 10),
            pt((-23, 5), (-7, 5), (106, 11)),
            pt((-23, 5), (-7, 5), (-46, 5)),
            p(-5, -1, -10),
            p(-6, 0, -10),
        ],
        vec![
            p(6, 0, 10),
            p(5, -1, 10),
            pt((23, 5), (-59, 25), (46, 5)),
            pt((82, 5), (-712, 55), (-104, 11)),
            p(17, -13, -10),
            p(18, -12, -10),
        ],
        vec![
            p(6, 0, 10),
            p(5, 1, 10),
            pt((23, 5), (7, 5), (46, 5)),
            pt((82, 5), (-52, 5), (-104, 11)),
            p(17, -11, -10),
            p(18, -12, -10),
        ],
        vec![
            p(-5, 1, 10),
            pt((-23, 5), (7, 5), (106, 11)),
            pt((82, 5), (-52, 5), (-104, 11)),
            p(17, -11, -10),
            p(17, -13, -10),
            pt((82, 5), (-712, 55), (-104, 11)),
            pt((-23, 5), (-7, 5), (106, 11)),
            p(-5, -1, 10),
        ],
        vec![
            p(-5, 1, -10),
            pt((-23, 5), (7, 5), (-46, 5)),
            pt((23, 5), (7, 5), (46, 5)),
            p(5, 1, 10),
            p(5, -1, 10),
            pt((23, 5), (-59, 25), (46, 5)),
            pt((-23, 5), (-7, 5), (-46, 5)),
            p(-5, -1, -10),
        ],
    ]
}

/// The eight polygons exactly as tabulated. Not a valid surface: each
/// diagonal octagon has one side inside the top and one inside the bottom
/// hexagon.
pub fn k44_raw() -> Surface {
    Surface::from_corners(table(), Mode::Convex).expect("tabulated polygons are planar and simple")
}

/// The tabulated surface with both octagons intersected with the slab
/// `-99/10 <= z <= 99/10`, taken literally.
///
/// This removes the offending sides but also shortens the octagons' sides
/// shared with the vertical hexagons, so those contacts cover only part of
/// a hexagon side and the result is still invalid.
pub fn k44_slab_clipped() -> Surface {
    let raw = k44_raw();
    let bound: ExactScalar = frac(99, 10);
    let below = Plane::with_normal(&Point3::from_ints(0, 0, 1), &Point3::new(int(0), int(0), bound.clone()))
        .expect("nonzero normal");
    let above = Plane::with_normal(&Point3::from_ints(0, 0, 1), &Point3::new(int(0), int(0), -bound)).expect("nonzero normal");
    let polygons: Vec<Polygon> = raw
        .polygons()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if i < 6 {
                return p.clone();
            }
            let p = cut_polygon_by_halfspace(p, &below, Side::NonPositive).expect("convex").expect("nonempty");
            cut_polygon_by_halfspace(&p, &above, Side::NonNegative).expect("convex").expect("nonempty")
        })
        .collect();
    Surface::new(polygons, Mode::Convex).expect("ids unchanged")
}

/// Sides of the octagons lying inside the top or bottom hexagon.
fn offending_sides() -> [(Point3, Point3); 4] {
    [
        (Point3::from_ints(-5, -1, 10), Point3::from_ints(-5, 1, 10)),
        (Point3::from_ints(17, -11, -10), Point3::from_ints(17, -13, -10)),
        (Point3::from_ints(5, 1, 10), Point3::from_ints(5, -1, 10)),
        (Point3::from_ints(-5, -1, -10), Point3::from_ints(-5, 1, -10)),
    ]
}

/// The same-part contacts `vert1/vert2` and `vert3/vert4`.
fn extra_sides() -> [(Point3, Point3); 2] {
    [
        (Point3::from_ints(-6, 0, 10), Point3::from_ints(-6, 0, -10)),
        (Point3::from_ints(6, 0, 10), Point3::from_ints(18, -12, -10)),
    ]
}

/// The octagons pulled off the top and bottom hexagons by side trims of
/// the four offending sides. Valid; its adjacency graph is `K_{4,4}` plus
/// the two same-part contacts.
pub fn k44_untrimmed() -> Result<Surface, ConstructionError> {
    let mut s = k44_raw();
    for (a, b) in offending_sides() {
        s = s.side_trim(&a, &b)?;
    }
    Ok(s)
}

pub fn realize_k44() -> Result<ConstructionResult, ConstructionError> {
    let mut s = k44_untrimmed()?;
    for (a, b) in extra_sides() {
        s = s.side_trim(&a, &b)?;
    }
    let mut target = Graph::empty(8);
    for top in [0, 1, 6, 7] {
        for vert in 2..6 {
            target.add_edge(top, vert).expect("in range");
        }
    }
    finish(s, &target)
}
