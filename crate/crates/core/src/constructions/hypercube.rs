//! Hypercube surfaces by repeated doubling.
//!
//! Invariant between steps: every polygon is the graph of an affine function
//! over (almost) the same region of the xy-plane, the unit square with its
//! upper right corner replaced by a convex chain. The chain sides are the
//! shared ones; the sides on `x = 0`, `y = 0`, `x = 1` and `y = 1` are free.
//!
//! One step shears along z so that only the sides on `x = 1` lie below the
//! xy-plane, cuts there, glues a mirror copy across `z = 0`, slices off the
//! corner where the bottom side meets the new side in `z = 0`, and maps the
//! slice line back to `x = 1` with a projective transformation.

use num_traits::{One, Signed, Zero};

use super::{finish, ConstructionError, ConstructionResult};
use crate::geometry::{cut_polygon_by_halfspace, frac, int, ExactScalar, Point3, Polygon, PolygonId, Projective};
use crate::geometry::plane::HalfSpace;
use crate::graphs::hypercube;
use crate::surface::{Mode, Surface};

fn unit_square() -> Vec<Point3> {
    vec![
        Point3::from_ints(0, 0, 0),
        Point3::from_ints(1, 0, 0),
        Point3::from_ints(1, 1, 0),
        Point3::from_ints(0, 1, 0),
    ]
}

fn failed(why: impl Into<String>) -> ConstructionError {
    ConstructionError::VerificationFailed(why.into())
}

fn cut(corners: &[Point3], space: &HalfSpace) -> Result<Vec<Point3>, ConstructionError> {
    let poly = Polygon::new(PolygonId(0), corners.to_vec())?;
    let kept = cut_polygon_by_halfspace(&poly, &space.plane, space.keep)?.ok_or_else(|| failed("cut removed a polygon"))?;
    Ok(kept.corners().to_vec())
}

/// Doubles the surface. Polygon `i` keeps its label; its mirror image gets
/// label `i + polys.len()`.
fn double(polys: &[Vec<Point3>]) -> Result<Vec<Vec<Point3>>, ConstructionError> {
    let one = ExactScalar::one();
    let all = || polys.iter().flatten();
    let x_max = all().map(|c| &c.x).filter(|x| **x < one).max().cloned().ok_or_else(|| failed("no corner left of x = 1"))?;
    let z_max = all().map(|c| c.z.abs()).max().unwrap_or_else(ExactScalar::zero);
    let x_mid = (&one + &x_max) * frac(1, 2);
    let half_gap = (&one - &x_max) * frac(1, 2);
    let mut shear = one.clone();
    while &shear * &half_gap <= z_max {
        shear *= int(2);
    }

    // Shear, then keep z >= 0.
    let above = HalfSpace::nonnegative(&int(0), &int(0), &one, &int(0));
    let mut upper = Vec::with_capacity(polys.len());
    for p in polys {
        let sheared: Vec<Point3> =
            p.iter().map(|c| Point3::new(c.x.clone(), c.y.clone(), &c.z - &shear * (&c.x - &x_mid))).collect();
        let kept = cut(&sheared, &above)?;
        if kept.len() != p.len() {
            return Err(failed("shear cut did not trade exactly one side"));
        }
        upper.push(kept);
    }

    // The new side in z = 0 runs from `low` on y = 0 to `high`.
    let mut lows = Vec::new();
    let mut highs = Vec::new();
    for p in &upper {
        let on_floor: Vec<&Point3> = p.iter().filter(|c| c.z.is_zero()).collect();
        let [a, b] = on_floor.as_slice() else {
            return Err(failed("expected two corners in z = 0"));
        };
        let (low, high) = if a.y.is_zero() { (*a, *b) } else { (*b, *a) };
        if !low.y.is_zero() || !high.y.is_positive() {
            return Err(failed("new side does not start on y = 0"));
        }
        lows.push(low.clone());
        highs.push(high.clone());
    }
    let offset = lows.iter().map(|c| &c.x).min().cloned().expect("nonempty") * frac(1, 2);
    let mut slope = one.clone();
    for h in &highs {
        while &offset + &slope * &h.y <= h.x {
            slope *= int(2);
        }
    }

    // Mirror, then slice off the corner at `low`: keep offset + slope*y - x >= 0.
    let slice = HalfSpace::nonnegative(&-&one, &slope, &int(0), &offset);
    let mirrored = upper.iter().map(|p| p.iter().map(|c| Point3::new(c.x.clone(), c.y.clone(), -&c.z)).collect::<Vec<_>>());
    let both: Vec<Vec<Point3>> = upper.iter().cloned().chain(mirrored).collect();

    let mut map = Projective::identity();
    map.0[1][1] = &offset + &slope;
    map.0[3][1] = slope.clone();
    map.0[3][3] = offset.clone();
    let mut out = Vec::with_capacity(both.len());
    for p in &both {
        let sliced = cut(p, &slice)?;
        if sliced.len() != p.len() + 1 {
            return Err(failed("corner slice did not add exactly one side"));
        }
        out.push(sliced.iter().map(|c| map.apply(c)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(out)
}

/// Realizes the `d`-dimensional hypercube with `2^d` polygons, each a
/// `(d + 4)`-gon. Polygon `i` represents the vertex with bit label `i`.
pub fn realize_hypercube(d: u32) -> Result<ConstructionResult, ConstructionError> {
    if d > 12 {
        return Err(ConstructionError::InvalidParameter(format!("dimension {d} is too large (at most 12)")));
    }
    let mut polys = vec![unit_square()];
    for _ in 0..d {
        polys = double(&polys)?;
    }
    let surface = Surface::from_corners(polys, Mode::Convex)?;
    finish(surface, &hypercube(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        for d in 0..=3 {
            let r = realize_hypercube(d).unwrap();
            assert_eq!(r.surface.len(), 1 << d);
            assert!(r.surface.polygons().iter().all(|p| p.len() == d as usize + 4));
        }
    }

    #[test]
    fn dimension_five() {
        let r = realize_hypercube(5).unwrap();
        assert!(r.surface.polygons().iter().all(|p| p.len() == 9));
        assert_eq!(r.surface.validate().adjacency.m(), 5 * 16);
    }

    #[test]
    fn first_step_matches_hand_computation() {
        // Shear by 1 around x = 1/2, cut, slice through (1/4, 0) with slope 1.
        let next = double(&[unit_square()]).unwrap();
        let xs: Vec<ExactScalar> = next[0].iter().map(|c| c.x.clone()).collect();
        assert!(xs.iter().all(|x| !x.is_negative() && *x <= ExactScalar::one()));
        assert_eq!(next[0].len(), 5);
        let mirrored: Vec<Point3> = next[0].iter().map(|c| Point3::new(c.x.clone(), c.y.clone(), -&c.z)).collect();
        assert_eq!(next[1], mirrored);
    }
}
