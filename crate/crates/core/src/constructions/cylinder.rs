//! Realization of k-subdivisions via copies of one convex polygon arranged
//! around the z-axis.
//!
//! The template polygon has `2m` corners on a parabola-shaped convex chain:
//! corner `j` sits at height `h_j` and distance `1 - rho_j` from the axis,
//! with `rho` vanishing at both ends so that the first and last corner form
//! the long side on the unit cylinder. Short side `i` (corners `2i-1, 2i`)
//! is reserved for the `i`-th edge. The copy of vertex `v` lies in the
//! half-plane through the axis with rational direction `u_v`.

use num_traits::{One, Zero};

use super::{finish, ConstructionError, ConstructionResult};
use crate::geometry::{circle_direction, frac, int, ExactScalar, Point3};
use crate::graphs::{subdivide_graph, Graph};
use crate::surface::{Mode, Surface};

/// Heights of the template corners; the last one is pulled up by a half so
/// the chain is not symmetric.
fn template_heights(m: usize) -> Vec<ExactScalar> {
    let count = 2 * m;
    (0..count)
        .map(|j| if j + 1 < count { int(j as i64) } else { frac(4 * m as i64 - 1, 2) })
        .collect()
}

/// Corner positions `(radius, height)` of the template polygon.
pub(crate) fn template(m: usize) -> Vec<(ExactScalar, ExactScalar)> {
    let heights = template_heights(m);
    let top = heights.last().cloned().unwrap_or_else(ExactScalar::zero);
    let top2 = &top * &top;
    heights
        .into_iter()
        .map(|h| {
            let depth = &h * (&top - &h) / &top2;
            (ExactScalar::one() - depth, h)
        })
        .collect()
}

fn direction(v: usize, n: usize) -> (ExactScalar, ExactScalar) {
    circle_direction(&frac(v as i64 + 1, n as i64 + 1))
}

fn place(dir: &(ExactScalar, ExactScalar), corner: &(ExactScalar, ExactScalar)) -> Point3 {
    let (r, h) = corner;
    Point3::new(r * &dir.0, r * &dir.1, h.clone())
}

/// Realizes the `k`-subdivision of `g`. Copies keep the vertex labels of `g`;
/// the pieces of the trapezoid for edge `e` get the labels
/// [`subdivide_graph`] assigns to the subdivision vertices of `e`.
pub fn realize_subdivision_cylinder(g: &Graph, k: usize) -> Result<ConstructionResult, ConstructionError> {
    let edges = g.edges();
    if edges.len() < 2 {
        return Err(ConstructionError::TooFewEdges(edges.len()));
    }
    if k == 0 {
        return Err(ConstructionError::InvalidParameter("subdivision count must be at least 1".into()));
    }
    let target = subdivide_graph(g, k).map_err(|e| ConstructionError::InvalidParameter(e.to_string()))?;
    let n = g.n();
    let shape = template(edges.len());
    let dirs: Vec<_> = (0..n).map(|v| direction(v, n)).collect();

    let mut polygons: Vec<Vec<Point3>> = dirs.iter().map(|d| shape.iter().map(|c| place(d, c)).collect()).collect();
    for (e, &(a, b)) in edges.iter().enumerate() {
        let (lo, hi) = (&shape[2 * e], &shape[2 * e + 1]);
        let (a_lo, a_hi) = (place(&dirs[a], lo), place(&dirs[a], hi));
        let (b_lo, b_hi) = (place(&dirs[b], lo), place(&dirs[b], hi));
        let cut = |l: usize| {
            let s = frac(l as i64, k as i64);
            (a_lo.lerp(&b_lo, &s), a_hi.lerp(&b_hi, &s))
        };
        for j in 0..k {
            let (p_lo, p_hi) = cut(j);
            let (q_lo, q_hi) = cut(j + 1);
            polygons.push(vec![p_lo, p_hi, q_hi, q_lo]);
        }
    }
    let surface = Surface::from_corners(polygons, Mode::Convex)?;
    finish(surface, &target)
}
