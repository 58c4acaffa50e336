//! Exact 2D primitives used after projecting a planar polygon onto a
//! coordinate plane.

use num_traits::Zero;

use super::point::Point3;
use super::scalar::{raw_difference, ExactScalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: ExactScalar,
    pub y: ExactScalar,
}

impl Point2 {
    pub fn new(x: ExactScalar, y: ExactScalar) -> Self {
        Point2 { x, y }
    }
}

/// Projects `p` by dropping coordinate `drop`, keeping the other two in order.
pub fn project(p: &Point3, drop: usize) -> Point2 {
    match drop {
        0 => Point2::new(p.y.clone(), p.z.clone()),
        1 => Point2::new(p.x.clone(), p.z.clone()),
        _ => Point2::new(p.x.clone(), p.y.clone()),
    }
}

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orient2d(a: &Point2, b: &Point2, c: &Point2) -> i8 {
    // Unreduced fractions: skipping the gcd in every step is much faster
    // than `BigRational` arithmetic and the sign is all we need.
    let (n1, d1) = raw_difference(&b.x, &a.x);
    let (n2, d2) = raw_difference(&c.y, &a.y);
    let (n3, d3) = raw_difference(&b.y, &a.y);
    let (n4, d4) = raw_difference(&c.x, &a.x);
    let lhs = n1 * n2 * &d3 * &d4;
    let rhs = n3 * n4 * d1 * d2;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// Twice the signed area of the polygon.
pub fn signed_area2(poly: &[Point2]) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    for i in 0..poly.len() {
        let a = &poly[i];
        let b = &poly[(i + 1) % poly.len()];
        acc += &a.x * &b.y - &b.x * &a.y;
    }
    acc
}

fn between(v: &ExactScalar, a: &ExactScalar, b: &ExactScalar) -> bool {
    if a <= b {
        a <= v && v <= b
    } else {
        b <= v && v <= a
    }
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point2, a: &Point2, b: &Point2) -> bool {
    orient2d(a, b, p) == 0 && between(&p.x, &a.x, &b.x) && between(&p.y, &a.y, &b.y)
}

/// Intersection of two closed segments, reported as parameters along the
/// first segment `a + t (b - a)` and the second `c + u (d - c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentHit {
    None,
    /// A single common point at parameters `(t, u)`.
    Point(ExactScalar, ExactScalar),
    /// Collinear overlap; parameters along the first segment of the overlap's
    /// endpoints (`t0 <= t1`, possibly equal when the overlap is one point).
    Overlap(ExactScalar, ExactScalar),
}

/// Parameter of `p` along the line `a + t (b - a)`; `p` must lie on it and
/// `a != b`.
pub fn param_on(p: &Point2, a: &Point2, b: &Point2) -> ExactScalar {
    let dx = &b.x - &a.x;
    if !dx.is_zero() {
        (&p.x - &a.x) / dx
    } else {
        (&p.y - &a.y) / (&b.y - &a.y)
    }
}

pub fn intersect_segments(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> SegmentHit {
    let o1 = orient2d(a, b, c);
    let o2 = orient2d(a, b, d);
    let o3 = orient2d(c, d, a);
    let o4 = orient2d(c, d, b);
    if o1 == 0 && o2 == 0 {
        // Collinear: overlap along ab.
        let tc = param_on(c, a, b);
        let td = param_on(d, a, b);
        let (lo, hi) = if tc <= td { (tc, td) } else { (td, tc) };
        let zero = ExactScalar::zero();
        let one: ExactScalar = num_traits::One::one();
        let start = if lo > zero { lo } else { zero };
        let end = if hi < one { hi } else { one };
        if start > end {
            return SegmentHit::None;
        }
        return SegmentHit::Overlap(start, end);
    }
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return SegmentHit::None;
    }
    // Proper or touching intersection of non-parallel segments.
    let r = (&b.x - &a.x, &b.y - &a.y);
    let s = (&d.x - &c.x, &d.y - &c.y);
    let denom = &r.0 * &s.1 - &r.1 * &s.0;
    let qp = (&c.x - &a.x, &c.y - &a.y);
    let t = (&qp.0 * &s.1 - &qp.1 * &s.0) / &denom;
    let u = (&qp.0 * &r.1 - &qp.1 * &r.0) / &denom;
    SegmentHit::Point(t, u)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Locates `p` relative to the closed simple polygon `poly`.
pub fn locate(p: &Point2, poly: &[Point2]) -> Location {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        if on_segment(p, a, b) {
            return Location::Boundary;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let o = orient2d(a, b, p);
            if (b.y > a.y && o > 0) || (b.y < a.y && o < 0) {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::scalar::{frac, int};

    fn p(x: i64, y: i64) -> Point2 {
        Point2::new(int(x), int(y))
    }

    #[test]
    fn locate_square() {
        let sq = vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)];
        assert_eq!(locate(&p(1, 1), &sq), Location::Inside);
        assert_eq!(locate(&p(2, 1), &sq), Location::Boundary);
        assert_eq!(locate(&p(0, 0), &sq), Location::Boundary);
        assert_eq!(locate(&p(3, 1), &sq), Location::Outside);
        assert_eq!(locate(&p(-1, 0), &sq), Location::Outside);
    }

    #[test]
    fn locate_nonconvex() {
        // A "U" shape; (2, 3) is in the notch.
        let u = vec![p(0, 0), p(4, 0), p(4, 4), p(3, 4), p(3, 1), p(1, 1), p(1, 4), p(0, 4)];
        assert_eq!(locate(&p(2, 3), &u), Location::Outside);
        assert_eq!(locate(&p(2, 1), &u), Location::Boundary);
        assert_eq!(locate(&Point2::new(frac(1, 2), int(3)), &u), Location::Inside);
        assert_eq!(locate(&p(1, 4), &u), Location::Boundary);
    }

    #[test]
    fn segment_cases() {
        assert_eq!(
            intersect_segments(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)),
            SegmentHit::Point(frac(1, 2), frac(1, 2))
        );
        assert_eq!(
            intersect_segments(&p(0, 0), &p(4, 0), &p(2, 0), &p(6, 0)),
            SegmentHit::Overlap(frac(1, 2), int(1))
        );
        assert_eq!(intersect_segments(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)), SegmentHit::None);
        assert_eq!(intersect_segments(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)), SegmentHit::None);
        assert_eq!(
            intersect_segments(&p(0, 0), &p(1, 0), &p(1, 0), &p(1, 5)),
            SegmentHit::Point(int(1), int(0))
        );
    }
}
