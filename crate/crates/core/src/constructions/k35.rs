//! `K_{3,5}` inside a triangular prism.
//!
//! The prism stands over the triangle `(0,0), (1,0), (0,1)`; face `i` is the
//! rectangle over the base edge from corner `i` to corner `i+1`, with local
//! coordinates `(s, z)`, `s` in `[0, 1]`. Each of the five colorful polygons
//! lies in a plane given by its heights on the three vertical edges, so it
//! meets face `i` in a line. On every face the five lines bound a convex
//! cell in which they all appear as sides. The gray polygon of that face has
//! a short side on each of the five cell sides, at a chosen position along
//! it, and the colorful polygon is the hexagon spanned by its three short
//! sides.
//!
//! The published construction gives no coordinates. The values below were
//! found by [`search_k35_parameters`] and are re-verified on every call.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{finish, ConstructionError, ConstructionResult};
use crate::geometry::{frac, int, ExactScalar, Plane, Point3, PolygonId};
use crate::graphs::complete_bipartite;
use crate::surface::{Mode, Surface};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K35Parameters {
    /// Heights of the five colorful planes on the three vertical prism edges.
    pub heights: [[i64; 3]; 5],
    /// Where each colorful polygon touches each face, in eighths of the
    /// cell side, `1..=7`.
    pub positions: [[i64; 3]; 5],
}

/// Frozen parameters; see [`search_k35_parameters`].
pub const K35_PARAMETERS: K35Parameters = K35Parameters {
    heights: [[-3, 2, -8], [-4, 6, -1], [1, -5, 3], [6, -6, 2], [-5, -5, 1]],
    positions: [[5, 6, 3], [7, 2, 5], [4, 7, 5], [4, 5, 2], [4, 5, 2]],
};

type P2 = (ExactScalar, ExactScalar);

fn strip() -> (ExactScalar, ExactScalar) {
    (frac(1, 10), frac(9, 10))
}

fn base_corner(i: usize) -> (ExactScalar, ExactScalar) {
    match i % 3 {
        0 => (int(0), int(0)),
        1 => (int(1), int(0)),
        _ => (int(0), int(1)),
    }
}

/// Point of face `i` at local coordinates `(s, z)`.
fn lift(face: usize, p: &P2) -> Point3 {
    let (a, b) = (base_corner(face), base_corner(face + 1));
    let (s, z) = p;
    let one_minus = ExactScalar::one() - s;
    Point3::new(&a.0 * &one_minus + &b.0 * s, &a.1 * &one_minus + &b.1 * s, z.clone())
}

/// Height of line `color` on face `face` at `s`.
fn line_at(params: &K35Parameters, color: usize, face: usize, s: &ExactScalar) -> ExactScalar {
    let h = &params.heights[color];
    let (lo, hi) = (int(h[face]), int(h[(face + 1) % 3]));
    &lo + (hi - &lo) * s
}

/// Keeps the part of a convex polygon where `sign * (z - line(s)) >= 0`.
fn clip(poly: &[P2], params: &K35Parameters, color: usize, face: usize, sign: i8) -> Vec<P2> {
    let value = |p: &P2| {
        let d = &p.1 - line_at(params, color, face, &p.0);
        if sign > 0 {
            d
        } else {
            -d
        }
    };
    let vals: Vec<ExactScalar> = poly.iter().map(value).collect();
    let n = poly.len();
    let mut out = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if !vals[i].is_negative() {
            out.push(poly[i].clone());
        }
        if (vals[i].is_negative() && vals[j].is_positive()) || (vals[i].is_positive() && vals[j].is_negative()) {
            let t = &vals[i] / (&vals[i] - &vals[j]);
            out.push((&poly[i].0 + (&poly[j].0 - &poly[i].0) * &t, &poly[i].1 + (&poly[j].1 - &poly[i].1) * &t));
        }
    }
    out.dedup();
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// The cell of face `face` lying below the lines in `above` and above the
/// others, with the index of the side on each color's line, if every line
/// contributes a side and the strip boundaries are the only other sides.
fn face_cell_with(params: &K35Parameters, face: usize, above: u32) -> Option<(Vec<P2>, [usize; 5])> {
    let (lo, hi) = strip();
    let far = int(params.heights.iter().flatten().map(|h| h.abs()).max().unwrap_or(0) + 1);
    let mut cell: Vec<P2> = vec![(lo.clone(), -far.clone()), (hi.clone(), -far.clone()), (hi, far.clone()), (lo, far)];
    for color in 0..5 {
        let sign = if above & (1 << color) != 0 { -1 } else { 1 };
        cell = clip(&cell, params, color, face, sign);
        if cell.len() < 3 {
            return None;
        }
    }
    let n = cell.len();
    let mut sides = [usize::MAX; 5];
    for i in 0..n {
        let (a, b) = (&cell[i], &cell[(i + 1) % n]);
        let on: Vec<usize> = (0..5)
            .filter(|&c| a.1 == line_at(params, c, face, &a.0) && b.1 == line_at(params, c, face, &b.0))
            .collect();
        match on.as_slice() {
            [c] => sides[*c] = i,
            [] if a.0 == b.0 => {}
            _ => return None,
        }
    }
    sides.iter().all(|&s| s != usize::MAX).then_some((cell, sides))
}

/// The first full cell of face `face` over all choices of sides.
fn face_cell(params: &K35Parameters, face: usize) -> Option<(Vec<P2>, [usize; 5])> {
    (0u32..32).find_map(|above| face_cell_with(params, face, above))
}

/// The short piece of side `a`-`b` centered at `position` eighths of the way
/// along it.
fn contact_piece(a: &P2, b: &P2, position: i64) -> (P2, P2) {
    let at = |t: ExactScalar| (&a.0 + (&b.0 - &a.0) * &t, &a.1 + (&b.1 - &a.1) * &t);
    let center = frac(position, 8);
    let half = frac(1, 64);
    (at(&center - &half), at(center + half))
}

/// Builds the eight polygons: gray ids `0..3`, colorful ids `3..8`.
pub fn k35_surface(params: &K35Parameters) -> Result<Surface, ConstructionError> {
    let fail = |why: String| ConstructionError::CoordinateDerivationFailed(why);
    let mut gray = Vec::new();
    let mut contact: Vec<Vec<(Point3, Point3)>> = vec![Vec::new(); 5];
    if params.positions.iter().flatten().any(|&p| !(1..=7).contains(&p)) {
        return Err(fail("contact positions must lie in 1..=7".into()));
    }
    for face in 0..3 {
        let (cell, sides) = face_cell(params, face).ok_or_else(|| fail(format!("face {face} has no cell bounded by all five lines")))?;
        let n = cell.len();
        let mut pieces: Vec<Option<(P2, P2)>> = vec![None; n];
        for color in 0..5 {
            let i = sides[color];
            pieces[i] = Some(contact_piece(&cell[i], &cell[(i + 1) % n], params.positions[color][face]));
        }
        gray.push(pieces.iter().flatten().flat_map(|(p, q)| [lift(face, p), lift(face, q)]).collect());
        for color in 0..5 {
            let (p, q) = pieces[sides[color]].as_ref().expect("every color has a side");
            let (p, q) = if p.0 <= q.0 { (p, q) } else { (q, p) };
            contact[color].push((lift(face, p), lift(face, q)));
        }
    }
    let colorful = contact.into_iter().map(|segs| segs.into_iter().flat_map(|(a, b)| [a, b]).collect());
    Surface::from_corners(gray.into_iter().chain(colorful).collect(), Mode::Convex).map_err(|e| fail(e.to_string()))
}

pub fn realize_k35() -> Result<ConstructionResult, ConstructionError> {
    realize_k35_with(&K35_PARAMETERS)
}

pub fn realize_k35_with(params: &K35Parameters) -> Result<ConstructionResult, ConstructionError> {
    let surface = k35_surface(params)?;
    let certificates = k35_certificates(&surface);
    if let Some(c) = certificates.iter().find(|c| !c.disjoint) {
        return Err(ConstructionError::CoordinateDerivationFailed(format!(
            "colorful polygons {} and {} meet on their common line",
            c.pair.0, c.pair.1
        )));
    }
    finish(surface, &complete_bipartite(3, 5)).map_err(|e| match e {
        ConstructionError::VerificationFailed(why) => ConstructionError::CoordinateDerivationFailed(why),
        other => other,
    })
}

/// Disjointness certificate for two colorful polygons: both are cut by the
/// line where their planes meet, and the two cut segments do not overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K35Certificate {
    pub pair: (PolygonId, PolygonId),
    /// The part of the first polygon on the second polygon's plane.
    pub first_on_line: Option<(Point3, Point3)>,
    /// The part of the second polygon on the first polygon's plane.
    pub second_on_line: Option<(Point3, Point3)>,
    pub disjoint: bool,
}

/// Segment of the convex polygon `corners` lying on `plane`, if any.
fn section(corners: &[Point3], plane: &Plane, dir: &Point3) -> Option<(Point3, Point3)> {
    let n = corners.len();
    let vals: Vec<ExactScalar> = corners.iter().map(|c| plane.eval(c)).collect();
    let mut hits = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if vals[i].is_zero() {
            hits.push(corners[i].clone());
        } else if (vals[i].is_positive() && vals[j].is_negative()) || (vals[i].is_negative() && vals[j].is_positive()) {
            let t = &vals[i] / (&vals[i] - &vals[j]);
            hits.push(corners[i].lerp(&corners[j], &t));
        }
    }
    let lo = hits.iter().min_by(|a, b| dir.dot(a).cmp(&dir.dot(b)))?.clone();
    let hi = hits.iter().max_by(|a, b| dir.dot(a).cmp(&dir.dot(b)))?.clone();
    Some((lo, hi))
}

/// Certificates for all ten pairs of colorful polygons (ids `3..8`).
pub fn k35_certificates(surface: &Surface) -> Vec<K35Certificate> {
    let mut out = Vec::new();
    for i in 3..8u32 {
        for j in i + 1..8 {
            let (p, q) = match (surface.get(PolygonId(i)), surface.get(PolygonId(j))) {
                (Some(p), Some(q)) => (p, q),
                _ => continue,
            };
            let dir = p.plane().normal().cross(&q.plane().normal());
            let (a, b) = if dir.is_zero() {
                (None, None)
            } else {
                (section(p.corners(), q.plane(), &dir), section(q.corners(), p.plane(), &dir))
            };
            let disjoint = match (&a, &b) {
                (Some((a0, a1)), Some((b0, b1))) => dir.dot(a1) < dir.dot(b0) || dir.dot(b1) < dir.dot(a0),
                _ => true,
            };
            out.push(K35Certificate { pair: (p.id(), q.id()), first_on_line: a, second_on_line: b, disjoint });
        }
    }
    out
}

/// Random search for heights in `-range..=range` giving full cells on all
/// faces, then for contact positions making the colorful polygons disjoint.
/// Returns the first hit and the number of height sets tried.
pub fn search_k35_parameters(seed: u64, range: i64, attempts: usize) -> Option<(K35Parameters, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=attempts {
        let mut params = K35Parameters { heights: [[0; 3]; 5], positions: [[4; 3]; 5] };
        for h in params.heights.iter_mut().flatten() {
            *h = rng.gen_range(-range..=range);
        }
        if (0..3).any(|f| face_cell(&params, f).is_none()) {
            continue;
        }
        for _ in 0..300 {
            for p in params.positions.iter_mut().flatten() {
                *p = rng.gen_range(1..=7);
            }
            if realize_k35_with(&params).is_ok() {
                return Some((params, attempt));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_parameters_realize_k35() {
        let result = realize_k35().expect("frozen parameters verify");
        assert_eq!(result.stats.polygons, 8);
        assert_eq!(result.surface.adjacency_graph().unwrap(), complete_bipartite(3, 5));
        assert_eq!(result.realization.vertex_map.len(), 8);
        for id in 0..3 {
            assert!(result.surface.get(PolygonId(id)).unwrap().corners().len() >= 10);
        }
    }

    #[test]
    fn fixture_matches_frozen_parameters() {
        let fixture: K35Parameters = serde_json::from_str(include_str!("../../fixtures/k35.json")).unwrap();
        assert_eq!(fixture, K35_PARAMETERS);
    }

    #[test]
    fn certificates_cover_all_colorful_pairs() {
        let surface = k35_surface(&K35_PARAMETERS).unwrap();
        let certificates = k35_certificates(&surface);
        assert_eq!(certificates.len(), 10);
        assert!(certificates.iter().all(|c| c.disjoint));
    }

    #[test]
    fn middle_contacts_collide() {
        let params = K35Parameters { positions: [[4; 3]; 5], ..K35_PARAMETERS };
        let err = realize_k35_with(&params).unwrap_err();
        assert!(matches!(err, ConstructionError::CoordinateDerivationFailed(_)), "{err}");
    }

    #[test]
    fn rejects_bad_positions() {
        let params = K35Parameters { positions: [[0; 3]; 5], ..K35_PARAMETERS };
        assert!(realize_k35_with(&params).is_err());
    }

    #[test]
    #[ignore = "parameter search; run manually to re-derive the frozen heights"]
    fn search() {
        let (params, attempts) = search_k35_parameters(1, 8, 200_000).expect("found");
        println!("{params:?} after {attempts} attempts");
    }
}
