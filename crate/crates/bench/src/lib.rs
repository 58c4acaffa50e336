//! Shared inputs for the criterion benches.

use polysurf::geometry::{Point3, Polygon, PolygonId};
use polysurf::graphs::gnp;
use polysurf::Graph;

/// Regular-ish convex `n`-gon on the parabola `z = x^2`, lying in the plane `y = x + z`.
pub fn parabola_polygon(id: u32, n: i64, shift: i64) -> Polygon {
    let corners = (0..n)
        .map(|i| {
            let x = i - n / 2;
            Point3::from_ints(x + shift, x + x * x + shift, x * x)
        })
        .collect();
    Polygon::new(PolygonId(id), corners).expect("points on a parabola are in convex position")
}

pub fn comb_input(n: usize) -> Graph {
    gnp(n, 0.5, 7)
}
