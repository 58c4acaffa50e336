//! Local surface edits: corner trims, side trims and side subdivision.
//!
//! Trims move corners along their sides by a distance measured in the
//! max-norm, so every new corner stays rational and polygons sharing a side
//! move their common corners to identical points.

use num_traits::{One, Signed, Zero};

use super::{Mode, Surface, SurfaceError};
use crate::geometry::scalar::{frac, power_of_two_floor, sqrt_lower_power_of_two};
use crate::geometry::{
    classify_contact, cut_polygon_by_halfspace, squared_distance_to_polygon, Contact, ContactTag, ExactScalar, Plane,
    Point3, Polygon, PolygonId, Side,
};

/// Attempts made when a trim or offset distance must be shrunk.
const MAX_HALVINGS: usize = 64;

/// The point at max-norm distance `eps` from `v` towards `w`.
fn step_toward(v: &Point3, w: &Point3, eps: &ExactScalar) -> Point3 {
    let d = w - v;
    let len = d.max_norm();
    v + &d.scale(&(eps / len))
}

fn too_large(eps: &ExactScalar, reason: impl Into<String>) -> SurfaceError {
    SurfaceError::EpsTooLarge { eps: eps.to_string(), reason: reason.into() }
}

/// Indices of polygons having `v` as a corner.
fn incident(s: &Surface, v: &Point3) -> Vec<usize> {
    (0..s.len()).filter(|&i| s.polygon(i).corner_index(v).is_some()).collect()
}

/// Safe trim distance for corner `v`: a quarter of the smaller of the
/// shortest incident side and a lower bound on the distance from `v` to
/// every polygon not having `v` as a corner, rounded down to a power of two.
pub fn safe_corner_eps(s: &Surface, v: &Point3) -> Result<ExactScalar, SurfaceError> {
    let owners = incident(s, v);
    if owners.is_empty() {
        return Err(SurfaceError::NotACorner(v.clone()));
    }
    let mut bound: Option<ExactScalar> = None;
    fn lower(bound: &mut Option<ExactScalar>, x: ExactScalar) {
        *bound = Some(match bound.take() {
            Some(b) if b <= x => b,
            _ => x,
        })
    }
    for &i in &owners {
        let p = s.polygon(i);
        let k = p.corner_index(v).expect("incident");
        for nb in [p.corner(k + p.len() - 1), p.corner(k + 1)] {
            lower(&mut bound, (nb - v).max_norm());
        }
    }
    for (i, p) in s.polygons().iter().enumerate() {
        if owners.contains(&i) {
            continue;
        }
        // Euclidean distance is at least the max-norm distance to the box.
        if let Some(b) = &bound {
            if &p.bbox().max_norm_distance(v) >= b {
                continue;
            }
        }
        let d2 = squared_distance_to_polygon(v, p);
        if d2.is_zero() {
            return Err(SurfaceError::InvalidSurface(format!("corner {v} lies on polygon {}", p.id())));
        }
        lower(&mut bound, sqrt_lower_power_of_two(&d2));
    }
    let b = bound.expect("at least one incident side");
    Ok(power_of_two_floor(&(b * frac(1, 4))))
}

/// Safe trim distance for both endpoints of a side.
pub fn safe_side_eps(s: &Surface, a: &Point3, b: &Point3) -> Result<ExactScalar, SurfaceError> {
    Ok(safe_corner_eps(s, a)?.min(safe_corner_eps(s, b)?))
}

/// Compares the contacts of edited polygons before and after an edit:
/// shared sides must persist, no new contact may appear and no pair may
/// turn into a violation. Pairs in `dropped` must end up disjoint.
fn check_edit(
    before: &Surface,
    after: &Surface,
    modified: &[usize],
    dropped: &[(usize, usize)],
) -> Result<(), String> {
    for &i in modified {
        if after.mode() == Mode::Convex && !after.polygon(i).is_strictly_convex() {
            return Err(format!("{} is no longer strictly convex", after.polygon(i).id()));
        }
        for j in 0..after.len() {
            if j == i || (modified.contains(&j) && j < i) {
                continue;
            }
            let new = classify_contact(after.polygon(i), after.polygon(j));
            let pair = (i.min(j), i.max(j));
            if dropped.contains(&pair) {
                if new != Contact::Disjoint {
                    return Err(format!("{} and {} still touch", after.polygon(i).id(), after.polygon(j).id()));
                }
                continue;
            }
            let old = classify_contact(before.polygon(i), before.polygon(j));
            let ok = match (old.tag(), new.tag()) {
                (old, ContactTag::Violation) => old == ContactTag::Violation,
                (ContactTag::SharedSide, t) | (t, ContactTag::SharedSide) => t == ContactTag::SharedSide,
                (ContactTag::Disjoint, ContactTag::SingleCorner) => false,
                _ => true,
            };
            if !ok {
                return Err(format!(
                    "contact of {} and {} changed from {:?} to {:?}",
                    after.polygon(i).id(),
                    after.polygon(j).id(),
                    old.tag(),
                    new.tag()
                ));
            }
        }
    }
    Ok(())
}

fn replace(s: &Surface, updates: Vec<(usize, Polygon)>) -> Surface {
    let mut polygons = s.polygons().to_vec();
    for (i, p) in updates {
        polygons[i] = p;
    }
    Surface { polygons, mode: s.mode() }
}

pub(super) fn corner_trim(s: &Surface, v: &Point3, eps: &ExactScalar) -> Result<Surface, SurfaceError> {
    if !eps.is_positive() {
        return Err(too_large(eps, "trim distance must be positive"));
    }
    let owners = incident(s, v);
    if owners.is_empty() {
        return Err(SurfaceError::NotACorner(v.clone()));
    }
    let two_eps = eps + eps;
    let mut updates = Vec::new();
    for &i in &owners {
        let p = s.polygon(i);
        let k = p.corner_index(v).expect("incident");
        let (prev, next) = (p.corner(k + p.len() - 1), p.corner(k + 1));
        if (prev - v).max_norm() <= two_eps || (next - v).max_norm() <= two_eps {
            return Err(too_large(eps, "at least half the shortest incident side"));
        }
        let mut corners = Vec::with_capacity(p.len() + 1);
        for (j, c) in p.corners().iter().enumerate() {
            if j == k {
                corners.push(step_toward(v, prev, eps));
                corners.push(step_toward(v, next, eps));
            } else {
                corners.push(c.clone());
            }
        }
        let trimmed = Polygon::new(p.id(), corners).map_err(|e| too_large(eps, e.to_string()))?;
        updates.push((i, trimmed));
    }
    let after = replace(s, updates);
    check_edit(s, &after, &owners, &[]).map_err(|r| too_large(eps, r))?;
    Ok(after)
}

pub(super) fn side_trim_with_eps(s: &Surface, a: &Point3, b: &Point3, eps: &ExactScalar) -> Result<Surface, SurfaceError> {
    if !eps.is_positive() {
        return Err(too_large(eps, "trim distance must be positive"));
    }
    let owners: Vec<usize> = (0..s.len()).filter(|&i| s.polygon(i).has_side(a, b)).collect();
    if owners.is_empty() {
        return Err(SurfaceError::NotASide(a.clone(), b.clone()));
    }
    let two_eps = eps + eps;
    let mut touched = incident(s, a);
    for i in incident(s, b) {
        if !touched.contains(&i) {
            touched.push(i);
        }
    }
    touched.sort_unstable();
    let mut updates = Vec::new();
    for &i in &touched {
        let p = s.polygon(i);
        let n = p.len();
        let owns_side = owners.contains(&i);
        let mut corners = Vec::with_capacity(n + 2);
        for k in 0..n {
            let c = p.corner(k);
            if c != a && c != b {
                corners.push(c.clone());
                continue;
            }
            let (prev, next) = (p.corner(k + n - 1), p.corner(k + 1));
            for nb in [prev, next] {
                if (nb - c).max_norm() <= two_eps {
                    return Err(too_large(eps, "at least half the shortest incident side"));
                }
            }
            let other_end = if c == a { b } else { a };
            if !owns_side || prev != other_end {
                corners.push(step_toward(c, prev, eps));
            }
            if !owns_side || next != other_end {
                corners.push(step_toward(c, next, eps));
            }
        }
        let trimmed = Polygon::new(p.id(), corners).map_err(|e| too_large(eps, e.to_string()))?;
        updates.push((i, trimmed));
    }
    let after = replace(s, updates);
    let mut dropped = Vec::new();
    for (x, &i) in owners.iter().enumerate() {
        for &j in &owners[x + 1..] {
            dropped.push((i.min(j), i.max(j)));
        }
    }
    check_edit(s, &after, &touched, &dropped).map_err(|r| too_large(eps, r))?;
    Ok(after)
}

/// Side trim with the safe distance, halving it while local revalidation
/// fails. Returns the result and the distance used.
fn side_trim_auto(s: &Surface, a: &Point3, b: &Point3) -> Result<(Surface, ExactScalar), SurfaceError> {
    let mut eps = safe_side_eps(s, a, b)?;
    let mut last = None;
    for _ in 0..MAX_HALVINGS {
        match side_trim_with_eps(s, a, b, &eps) {
            Ok(t) => return Ok((t, eps)),
            Err(e @ SurfaceError::EpsTooLarge { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
        eps = eps * frac(1, 2);
    }
    Err(last.expect("at least one attempt"))
}

pub(super) fn side_trim(s: &Surface, a: &Point3, b: &Point3) -> Result<Surface, SurfaceError> {
    side_trim_auto(s, a, b).map(|(t, _)| t)
}

/// Whether `p` lies on the closed segment `xy`.
fn on_segment(p: &Point3, x: &Point3, y: &Point3) -> bool {
    let d = y - x;
    let e = p - x;
    if !d.cross(&e).is_zero() {
        return false;
    }
    let t = d.dot(&e);
    !t.is_negative() && t <= d.dot(&d)
}

/// `poly` with `m` inserted between the adjacent corners `x` and `y`.
fn insert_between(poly: &Polygon, x: &Point3, y: &Point3, m: &Point3) -> Result<Polygon, SurfaceError> {
    let n = poly.len();
    let k = poly.corner_index(x).expect("trimmed corner present");
    let mut corners = poly.corners().to_vec();
    if poly.corner(k + 1) == y {
        corners.insert(k + 1, m.clone());
    } else {
        debug_assert_eq!(poly.corner(k + n - 1), y);
        corners.insert(k, m.clone());
    }
    Ok(Polygon::new(poly.id(), corners)?)
}

/// Cuts the corner `m` off `poly` with the plane parallel to `dir` and to
/// the polygon's normal at max-norm distance `delta` from `m`. Returns the
/// cut polygon and its new corners on `x m` and `m y`.
fn cut_near(
    poly: &Polygon,
    m: &Point3,
    dir: &Point3,
    x: &Point3,
    y: &Point3,
    delta: &ExactScalar,
) -> Option<(Polygon, Point3, Point3)> {
    let mut inward = dir.cross(&poly.plane().normal());
    if inward.dot(&(&poly.centroid() - m)).is_negative() {
        inward = -&inward;
    }
    let inward = inward.scale(&(ExactScalar::one() / inward.max_norm()));
    let plane = Plane::with_normal(&inward, &(m + &inward.scale(delta)))?;
    let keep = if plane.side_of(m) < 0 { Side::NonNegative } else { Side::NonPositive };
    let cut = cut_polygon_by_halfspace(poly, &plane, keep).ok()??;
    if cut.len() != poly.len() + 1 || cut.corner_index(m).is_some() {
        return None;
    }
    let fresh: Vec<&Point3> = cut.corners().iter().filter(|c| poly.corner_index(c).is_none()).collect();
    if fresh.len() != 2 {
        return None;
    }
    let (px, py) = if on_segment(fresh[0], x, m) { (fresh[0], fresh[1]) } else { (fresh[1], fresh[0]) };
    if !on_segment(px, x, m) || !on_segment(py, m, y) {
        return None;
    }
    let (px, py) = (px.clone(), py.clone());
    Some((cut, px, py))
}

pub(super) fn subdivide_side(s: &Surface, a: &Point3, b: &Point3) -> Result<(Surface, PolygonId), SurfaceError> {
    let owners: Vec<usize> = (0..s.len()).filter(|&i| s.polygon(i).has_side(a, b)).collect();
    match owners.len() {
        0 => return Err(SurfaceError::NotASide(a.clone(), b.clone())),
        1 => return Err(SurfaceError::NoSecondPolygon(a.clone(), b.clone())),
        2 => {}
        _ => return Err(SurfaceError::TooManyPolygons(a.clone(), b.clone())),
    }
    for &i in &owners {
        if !s.polygon(i).is_strictly_convex() {
            return Err(SurfaceError::NotConvex(s.polygon(i).id()));
        }
    }
    let (trimmed, eps) = side_trim_auto(s, a, b)?;
    let m = a.midpoint(b);
    let dir = b - a;
    // The trim replaced a and b by their neighbors' step points; find them
    // as the corners of the trimmed polygon that are new.
    let mut reopened = Vec::new();
    for &i in &owners {
        let p = trimmed.polygon(i);
        let k = p.corners().iter().position(|c| !s.polygon(i).corners().contains(c)).expect("trimmed corners exist");
        let (x, y) = if s.polygon(i).corner_index(p.corner(k + 1)).is_none() {
            (p.corner(k).clone(), p.corner(k + 1).clone())
        } else {
            (p.corner(k + p.len() - 1).clone(), p.corner(k).clone())
        };
        // Orient so that x is the step point next to a.
        let (x, y) = if (&x - a).max_norm() < (&x - b).max_norm() { (x, y) } else { (y, x) };
        reopened.push((i, insert_between(p, &x, &y, &m)?, x, y));
    }
    let new_id = trimmed.fresh_id();
    let mut delta = eps * frac(1, 2);
    for _ in 0..MAX_HALVINGS {
        if let Some(result) = try_subdivide(s, &trimmed, &reopened, &m, &dir, &delta, new_id) {
            return Ok((result, new_id));
        }
        delta = delta * frac(1, 2);
    }
    Err(SurfaceError::DeltaInfeasible)
}

fn try_subdivide(
    original: &Surface,
    trimmed: &Surface,
    reopened: &[(usize, Polygon, Point3, Point3)],
    m: &Point3,
    dir: &Point3,
    delta: &ExactScalar,
    new_id: PolygonId,
) -> Option<Surface> {
    let mut cuts = Vec::new();
    for (i, poly, x, y) in reopened {
        let (cut, px, py) = cut_near(poly, m, dir, x, y, delta)?;
        cuts.push((*i, cut, px, py));
    }
    let (p_idx, q_idx) = (cuts[0].0, cuts[1].0);
    let bridge = Polygon::new(new_id, vec![cuts[0].2.clone(), cuts[0].3.clone(), cuts[1].3.clone(), cuts[1].2.clone()]).ok()?;
    let mut polygons = trimmed.polygons().to_vec();
    polygons[p_idx] = cuts[0].1.clone();
    polygons[q_idx] = cuts[1].1.clone();
    polygons.push(bridge);
    let after = Surface { polygons, mode: trimmed.mode() };
    let r_idx = after.len() - 1;
    if after.mode() == Mode::Convex && !after.polygon(r_idx).is_strictly_convex() {
        return None;
    }
    for j in 0..r_idx {
        let c = classify_contact(after.polygon(r_idx), after.polygon(j));
        let want = if j == p_idx || j == q_idx { ContactTag::SharedSide } else { ContactTag::Disjoint };
        if c.tag() != want {
            return None;
        }
    }
    // Apart from the edge now routed through the bridge, the former owners
    // must relate to everything else as they did originally.
    check_edit(original, &after.without(&[new_id]), &[p_idx, q_idx], &[(p_idx.min(q_idx), p_idx.max(q_idx))]).ok()?;
    Some(after)
}
