//! Comb realization of arbitrary graphs with nonconvex polygons.
//!
//! All combs hang from a common spine (the x-axis). Vertex `v` lives in the
//! half-plane spanned by the spine and `(0, 1, v)`; in that half-plane with
//! coordinates `(x, h)` it is a strip `h in [1, 2]` over `x in [0, 2m + 1]`
//! with one tooth `[2e + 1, 2e + 2] x [0, 1]` per incident edge `e`. The
//! bottoms of the two teeth for edge `e` coincide on the spine.

use super::{finish, ConstructionError, ConstructionResult};
use crate::geometry::{int, Point3};
use crate::graphs::Graph;
use crate::surface::{Mode, Surface};

pub fn realize_comb(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    let edges = g.edges();
    let length = 2 * edges.len() as i64 + 1;
    let mut combs = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let slope = v as i64;
        let at = |x: i64, h: i64| Point3::new(int(x), int(h), int(h * slope));
        let mut corners = vec![at(0, 1)];
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a == v || b == v {
                let left = 2 * e as i64 + 1;
                corners.extend([at(left, 1), at(left, 0), at(left + 1, 0), at(left + 1, 1)]);
            }
        }
        corners.extend([at(length, 1), at(length, 2), at(0, 2)]);
        combs.push(corners);
    }
    let surface = Surface::from_corners(combs, Mode::General)?;
    finish(surface, g)
}
