//! Classification of how two polygons meet.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::planar2d::{intersect_segments, locate, on_segment, orient2d, project, Location, Point2, SegmentHit};
use super::plane::Plane;
use super::point::Point3;
use super::polygon::Polygon;
use super::scalar::{frac, sign, ExactScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContactTag {
    Disjoint,
    SingleCorner,
    SharedSide,
    Violation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationReason {
    /// The relative interiors overlap.
    InteriorOverlap,
    /// The intersection is a single point that is not a corner of both.
    PointNotCommonCorner,
    /// The intersection is a segment that is not a complete side of both.
    SegmentNotCommonSide,
    /// The intersection has more than one connected component.
    Disconnected,
    /// The intersection is connected but not contained in a line.
    NonCollinearContact,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationReason::InteriorOverlap => "interiors overlap",
            ViolationReason::PointNotCommonCorner => "single-point contact is not a corner of both polygons",
            ViolationReason::SegmentNotCommonSide => "segment contact is not a complete side of both polygons",
            ViolationReason::Disconnected => "intersection has several components",
            ViolationReason::NonCollinearContact => "intersection is not contained in a line",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationWitness {
    pub reason: ViolationReason,
    /// Points of the offending intersection (a midpoint, the endpoints of a
    /// segment, or one point per component).
    pub points: Vec<Point3>,
}

/// How two closed polygons intersect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    SingleCorner(Point3),
    /// The shared side, endpoints in increasing lexicographic order.
    SharedSide(Point3, Point3),
    Violation(ViolationWitness),
}

impl Contact {
    pub fn tag(&self) -> ContactTag {
        match self {
            Contact::Disjoint => ContactTag::Disjoint,
            Contact::SingleCorner(_) => ContactTag::SingleCorner,
            Contact::SharedSide(..) => ContactTag::SharedSide,
            Contact::Violation(_) => ContactTag::Violation,
        }
    }

    fn violation(reason: ViolationReason, points: Vec<Point3>) -> Contact {
        Contact::Violation(ViolationWitness { reason, points })
    }

    fn side(a: Point3, b: Point3) -> Contact {
        if a <= b {
            Contact::SharedSide(a, b)
        } else {
            Contact::SharedSide(b, a)
        }
    }
}

/// Classifies the intersection of two valid polygons (convex or not).
pub fn classify_contact(p: &Polygon, q: &Polygon) -> Contact {
    if !p.bbox().intersects(q.bbox()) {
        return Contact::Disjoint;
    }
    if p.plane() == q.plane() {
        if let Some(c) = separated_contact(p, q, false).or_else(|| separated_contact(q, p, true)) {
            return c;
        }
        return classify_coplanar(p, q);
    }
    if p.plane().is_parallel_to(q.plane()) {
        return Contact::Disjoint;
    }
    classify_transversal(p, q)
}

/// Fast path for coplanar strictly convex polygons: if some side line of
/// `p` has all of `q` in its closed outer half-plane, the contact is the
/// overlap of that side with the corners of `q` on the line. `swapped`
/// means the caller's pair is `(q, p)`.
pub(crate) fn separated_contact(p: &Polygon, q: &Polygon, swapped: bool) -> Option<Contact> {
    if !p.is_strictly_convex() || !q.is_strictly_convex() {
        return None;
    }
    let (pp, qp) = (p.projected(), q.projected());
    let outside = -p.orientation();
    let n = pp.len();
    let i = (0..n).find(|&i| {
        let (a, b) = (&pp[i], &pp[(i + 1) % n]);
        qp.iter().all(|c| {
            let o = orient2d(a, b, c);
            o == outside || o == 0
        })
    })?;
    let (a2, b2) = (&pp[i], &pp[(i + 1) % n]);
    let on_line: Vec<usize> = (0..qp.len()).filter(|&j| orient2d(a2, b2, &qp[j]) == 0).collect();
    let (a, b) = (p.corner(i), p.corner(i + 1));
    let dir = b - a;
    let (ta, tb) = (dir.dot(a), dir.dot(b));
    let inside = |x: &Point3| {
        let t = dir.dot(x);
        ta <= t && t <= tb
    };
    let (s, t) = if swapped { (q, p) } else { (p, q) };
    Some(match on_line.as_slice() {
        [] => Contact::Disjoint,
        [j] => {
            let c = q.corner(*j);
            if inside(c) {
                classify_point(s, t, c.clone())
            } else {
                Contact::Disjoint
            }
        }
        [j, k] => {
            let (c, d) = (q.corner(*j), q.corner(*k));
            let (tc, td) = (dir.dot(c), dir.dot(d));
            let (lo, lo_t, hi, hi_t) = if tc <= td { (c, tc, d, td) } else { (d, td, c, tc) };
            let (start, start_t) = if lo_t >= ta { (lo, lo_t) } else { (a, ta.clone()) };
            let (end, end_t) = if hi_t <= tb { (hi, hi_t) } else { (b, tb.clone()) };
            match start_t.cmp(&end_t) {
                std::cmp::Ordering::Greater => Contact::Disjoint,
                std::cmp::Ordering::Equal => classify_point(s, t, start.clone()),
                std::cmp::Ordering::Less => classify_segment(s, t, start.clone(), end.clone()),
            }
        }
        _ => return None,
    })
}

/// A closed interval of the common line, parametrized by `dir . x`.
#[derive(Clone, Debug)]
struct Interval {
    lo: (ExactScalar, Point3),
    hi: (ExactScalar, Point3),
}

/// `poly` intersected with the line `poly.plane ∩ other`, as sorted disjoint
/// closed intervals.
fn line_intervals(poly: &Polygon, other: &Plane, dir: &Point3) -> Vec<Interval> {
    let corners = poly.corners();
    let n = corners.len();
    let values: Vec<ExactScalar> = corners.iter().map(|c| other.eval(c)).collect();
    let signs: Vec<i8> = values.iter().map(sign).collect();
    if signs.iter().all(|&s| s > 0) || signs.iter().all(|&s| s < 0) {
        return Vec::new();
    }
    let mut breaks: Vec<(ExactScalar, Point3)> = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if signs[i] == 0 {
            breaks.push((dir.dot(&corners[i]), corners[i].clone()));
        }
        if signs[i] * signs[j] < 0 {
            let t = &values[i] / (&values[i] - &values[j]);
            let x = corners[i].lerp(&corners[j], &t);
            breaks.push((dir.dot(&x), x));
        }
    }
    breaks.sort_by(|a, b| a.0.cmp(&b.0));
    breaks.dedup_by(|a, b| a.0 == b.0);
    if breaks.is_empty() {
        return Vec::new();
    }
    if poly.is_strictly_convex() {
        let lo = breaks[0].clone();
        let hi = breaks[breaks.len() - 1].clone();
        return vec![Interval { lo, hi }];
    }
    let half = frac(1, 2);
    let mut out: Vec<Interval> = Vec::new();
    let mut current = Interval { lo: breaks[0].clone(), hi: breaks[0].clone() };
    for w in breaks.windows(2) {
        let mid = w[0].1.lerp(&w[1].1, &half);
        let inside = locate(&project(&mid, poly.drop_axis()), poly.projected()) != Location::Outside;
        if inside {
            current.hi = w[1].clone();
        } else {
            out.push(current);
            current = Interval { lo: w[1].clone(), hi: w[1].clone() };
        }
    }
    out.push(current);
    out
}

fn classify_transversal(p: &Polygon, q: &Polygon) -> Contact {
    let dir = p.plane().normal().cross(&q.plane().normal());
    let a = line_intervals(p, q.plane(), &dir);
    if a.is_empty() {
        return Contact::Disjoint;
    }
    let b = line_intervals(q, p.plane(), &dir);
    let mut comps: Vec<Interval> = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let lo = if a[i].lo.0 >= b[j].lo.0 { &a[i].lo } else { &b[j].lo };
        let hi = if a[i].hi.0 <= b[j].hi.0 { &a[i].hi } else { &b[j].hi };
        if lo.0 <= hi.0 {
            comps.push(Interval { lo: lo.clone(), hi: hi.clone() });
        }
        if a[i].hi.0 < b[j].hi.0 {
            i += 1;
        } else {
            j += 1;
        }
    }
    match comps.len() {
        0 => Contact::Disjoint,
        1 => {
            let c = comps.pop().expect("one component");
            if c.lo.0 == c.hi.0 {
                classify_point(p, q, c.lo.1)
            } else {
                classify_segment(p, q, c.lo.1, c.hi.1)
            }
        }
        _ => Contact::violation(ViolationReason::Disconnected, comps.into_iter().map(|c| c.lo.1).collect()),
    }
}

fn classify_point(p: &Polygon, q: &Polygon, x: Point3) -> Contact {
    if p.corner_index(&x).is_some() && q.corner_index(&x).is_some() {
        Contact::SingleCorner(x)
    } else {
        Contact::violation(ViolationReason::PointNotCommonCorner, vec![x])
    }
}

fn classify_segment(p: &Polygon, q: &Polygon, a: Point3, b: Point3) -> Contact {
    if p.has_side(&a, &b) && q.has_side(&a, &b) {
        Contact::side(a, b)
    } else {
        Contact::violation(ViolationReason::SegmentNotCommonSide, vec![a, b])
    }
}

/// Splits every side of `p` at its intersections with the boundary of `q`.
/// Returns the shared boundary pieces and isolated common boundary points, or
/// a violation witness if a piece of `p`'s boundary enters the interior of
/// `q` or a shared piece has both interiors on the same side.
fn boundary_contact(p: &Polygon, q: &Polygon) -> Result<(Vec<(Point3, Point3)>, Vec<Point3>), Contact> {
    let pp = p.projected();
    let qp = q.projected();
    let (np, nq) = (pp.len(), qp.len());
    let half = frac(1, 2);
    let mut pieces = Vec::new();
    let mut points = Vec::new();
    for i in 0..np {
        let (a, b) = (&pp[i], &pp[(i + 1) % np]);
        let mut params: Vec<ExactScalar> = vec![ExactScalar::zero(), num_traits::One::one()];
        for j in 0..nq {
            match intersect_segments(a, b, &qp[j], &qp[(j + 1) % nq]) {
                SegmentHit::None => {}
                SegmentHit::Point(t, _) => params.push(t),
                SegmentHit::Overlap(t0, t1) => {
                    params.push(t0);
                    params.push(t1);
                }
            }
        }
        params.sort();
        params.dedup();
        let (a3, b3) = (p.corner(i), p.corner(i + 1));
        for t in &params {
            let pt = lerp2(a, b, t);
            if locate(&pt, qp) == Location::Boundary {
                points.push(a3.lerp(b3, t));
            }
        }
        for w in params.windows(2) {
            let mid_t = (&w[0] + &w[1]) * &half;
            let mid = lerp2(a, b, &mid_t);
            match locate(&mid, qp) {
                Location::Outside => {}
                Location::Inside => {
                    return Err(Contact::violation(ViolationReason::InteriorOverlap, vec![a3.lerp(b3, &mid_t)]));
                }
                Location::Boundary => {
                    let j = (0..nq)
                        .find(|&j| on_segment(&mid, &qp[j], &qp[(j + 1) % nq]))
                        .expect("boundary point lies on some side");
                    let (c, d) = (&qp[j], &qp[(j + 1) % nq]);
                    let same_dir = sign(&((&b.x - &a.x) * (&d.x - &c.x) + (&b.y - &a.y) * (&d.y - &c.y))) > 0;
                    let p_left = p.orientation() > 0;
                    let q_left_of_ab = (q.orientation() > 0) == same_dir;
                    if p_left == q_left_of_ab {
                        return Err(Contact::violation(
                            ViolationReason::InteriorOverlap,
                            vec![a3.lerp(b3, &mid_t)],
                        ));
                    }
                    pieces.push((a3.lerp(b3, &w[0]), a3.lerp(b3, &w[1])));
                }
            }
        }
    }
    Ok((pieces, points))
}

fn lerp2(a: &Point2, b: &Point2, t: &ExactScalar) -> Point2 {
    Point2::new(&a.x + (&b.x - &a.x) * t, &a.y + (&b.y - &a.y) * t)
}

fn classify_coplanar(p: &Polygon, q: &Polygon) -> Contact {
    let (pieces, points) = match boundary_contact(p, q) {
        Ok(v) => v,
        Err(c) => return c,
    };
    if let Err(c) = boundary_contact(q, p) {
        return c;
    }
    // Connected components of pieces and points, joined at common points.
    let mut ids: BTreeMap<Point3, usize> = BTreeMap::new();
    let mut parent: Vec<usize> = Vec::new();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut node = |pt: &Point3, parent: &mut Vec<usize>| -> usize {
        *ids.entry(pt.clone()).or_insert_with(|| {
            parent.push(parent.len());
            parent.len() - 1
        })
    };
    for pt in &points {
        node(pt, &mut parent);
    }
    for (a, b) in &pieces {
        let (ia, ib) = (node(a, &mut parent), node(b, &mut parent));
        let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
        parent[ra] = rb;
    }
    if parent.is_empty() {
        return Contact::Disjoint;
    }
    let mut roots: BTreeMap<usize, Point3> = BTreeMap::new();
    let all: Vec<(Point3, usize)> = ids.iter().map(|(k, v)| (k.clone(), *v)).collect();
    for (pt, id) in &all {
        let r = find(&mut parent, *id);
        roots.entry(r).or_insert_with(|| pt.clone());
    }
    if roots.len() > 1 {
        return Contact::violation(ViolationReason::Disconnected, roots.into_values().collect());
    }
    if pieces.is_empty() {
        let x = points.into_iter().next().expect("nonempty component");
        return classify_point(p, q, x);
    }
    // All pieces must lie on one line; their union is then a single segment.
    let (a0, b0) = (&pieces[0].0, &pieces[0].1);
    let axis = p.drop_axis();
    let (a2, b2) = (project(a0, axis), project(b0, axis));
    let mut ends: Vec<Point3> = Vec::new();
    for (a, b) in &pieces {
        for x in [a, b] {
            if orient2d(&a2, &b2, &project(x, axis)) != 0 {
                return Contact::violation(ViolationReason::NonCollinearContact, vec![a0.clone(), x.clone()]);
            }
            ends.push(x.clone());
        }
    }
    for x in &points {
        if orient2d(&a2, &b2, &project(x, axis)) != 0 {
            return Contact::violation(ViolationReason::NonCollinearContact, vec![a0.clone(), x.clone()]);
        }
    }
    let dir = b0 - a0;
    let lo = ends.iter().min_by(|u, v| dir.dot(u).cmp(&dir.dot(v))).expect("nonempty").clone();
    let hi = ends.iter().max_by(|u, v| dir.dot(u).cmp(&dir.dot(v))).expect("nonempty").clone();
    classify_segment(p, q, lo, hi)
}
