//! Brute-force oracles and random inputs shared by the integration tests.
//! Nothing here calls the library predicates being checked.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use polysurf::geometry::{frac, int, ContactTag, ExactScalar, Point3};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn p(x: i64, y: i64, z: i64) -> Point3 {
    Point3::from_ints(x, y, z)
}

fn sub(a: &Point3, b: &Point3) -> [ExactScalar; 3] {
    [&a.x - &b.x, &a.y - &b.y, &a.z - &b.z]
}

fn cross(u: &[ExactScalar; 3], v: &[ExactScalar; 3]) -> [ExactScalar; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

fn dot(u: &[ExactScalar; 3], v: &[ExactScalar; 3]) -> ExactScalar {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

fn signum(v: &ExactScalar) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Determinant by the Leibniz formula over all 24 permutations.
fn det4(m: &[[ExactScalar; 4]; 4]) -> ExactScalar {
    let mut total = ExactScalar::zero();
    let mut perm = [0usize, 1, 2, 3];
    fn parity(p: &[usize; 4]) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }
    fn permutations(k: usize, perm: &mut [usize; 4], out: &mut Vec<[usize; 4]>) {
        if k == 4 {
            out.push(*perm);
            return;
        }
        for i in k..4 {
            perm.swap(k, i);
            permutations(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    let mut all = Vec::new();
    permutations(0, &mut perm, &mut all);
    for perm in all {
        let mut term = int(1);
        for (row, &col) in perm.iter().enumerate() {
            term *= &m[row][col];
        }
        if parity(&perm) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Orientation of four points from the homogeneous 4x4 determinant. The
/// determinant with rows `(x, y, z, 1)` is minus the triple product of
/// `q - p, r - p, s - p`.
pub fn orient3d_oracle(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> i8 {
    let row = |q: &Point3| [q.x.clone(), q.y.clone(), q.z.clone(), int(1)];
    -signum(&det4(&[row(a), row(b), row(c), row(d)]))
}

/// Whether `x` lies in the closed convex polygon `poly` (any orientation).
pub fn in_convex(poly: &[Point3], x: &Point3) -> bool {
    let n = cross(&sub(&poly[1], &poly[0]), &sub(&poly[2], &poly[0]));
    let normal = (0..poly.len())
        .map(|i| cross(&sub(&poly[(i + 1) % poly.len()], &poly[i]), &sub(&poly[(i + 2) % poly.len()], &poly[i])))
        .find(|v| v.iter().any(|c| !c.is_zero()))
        .unwrap_or(n);
    if !dot(&normal, &sub(x, &poly[0])).is_zero() {
        return false;
    }
    let signs: Vec<i8> = (0..poly.len())
        .map(|i| signum(&dot(&normal, &cross(&sub(&poly[(i + 1) % poly.len()], &poly[i]), &sub(x, &poly[i])))))
        .collect();
    signs.iter().all(|&s| s >= 0) || signs.iter().all(|&s| s <= 0)
}

/// Intersection point of segments `ab` and `cd` if they are coplanar, not
/// parallel and cross in a single point.
fn segment_crossing(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> Option<Point3> {
    let u = sub(b, a);
    let v = sub(d, c);
    let w = sub(c, a);
    let uv = cross(&u, &v);
    if uv.iter().all(|x| x.is_zero()) || !dot(&w, &uv).is_zero() {
        return None;
    }
    let uv2 = dot(&uv, &uv);
    let t = dot(&cross(&w, &v), &uv) / &uv2;
    let s = dot(&cross(&w, &u), &uv) / &uv2;
    let unit = |r: &ExactScalar| !r.is_negative() && r <= &int(1);
    (unit(&t) && unit(&s)).then(|| a.lerp(b, &t))
}

/// Intersection point of segment `ab` with the plane of `poly`, if it is
/// a single point.
fn segment_plane(a: &Point3, b: &Point3, poly: &[Point3]) -> Option<Point3> {
    let n = cross(&sub(&poly[1], &poly[0]), &sub(&poly[2], &poly[0]));
    let fa = dot(&n, &sub(a, &poly[0]));
    let fb = dot(&n, &sub(b, &poly[0]));
    if fa == fb || (fa.is_positive() && fb.is_positive()) || (fa.is_negative() && fb.is_negative()) {
        return None;
    }
    let t = &fa / (&fa - &fb);
    Some(a.lerp(b, &t))
}

fn is_side(poly: &[Point3], a: &Point3, b: &Point3) -> bool {
    (0..poly.len()).any(|i| {
        let (x, y) = (&poly[i], &poly[(i + 1) % poly.len()]);
        (x == a && y == b) || (x == b && y == a)
    })
}

/// Contact class of two strictly convex polygons from the point set of
/// their intersection: every vertex of the intersection is a corner of one
/// polygon, a crossing of two sides, or a side meeting the other plane.
pub fn contact_oracle(p: &[Point3], q: &[Point3]) -> ContactTag {
    let mut candidates: Vec<Point3> = Vec::new();
    candidates.extend(p.iter().cloned());
    candidates.extend(q.iter().cloned());
    for (poly, other) in [(p, q), (q, p)] {
        for i in 0..poly.len() {
            let (a, b) = (&poly[i], &poly[(i + 1) % poly.len()]);
            if let Some(x) = segment_plane(a, b, other) {
                candidates.push(x);
            }
            for j in 0..other.len() {
                if let Some(x) = segment_crossing(a, b, &other[j], &other[(j + 1) % other.len()]) {
                    candidates.push(x);
                }
            }
        }
    }
    let mut common: Vec<Point3> = candidates.into_iter().filter(|x| in_convex(p, x) && in_convex(q, x)).collect();
    common.sort_by(|a, b| (&a.x, &a.y, &a.z).cmp(&(&b.x, &b.y, &b.z)));
    common.dedup();
    match common.len() {
        0 => ContactTag::Disjoint,
        1 => {
            if p.contains(&common[0]) && q.contains(&common[0]) {
                ContactTag::SingleCorner
            } else {
                ContactTag::Violation
            }
        }
        _ => {
            let (a, b) = (&common[0], &common[common.len() - 1]);
            let dir = sub(b, a);
            let collinear = common.iter().all(|x| cross(&dir, &sub(x, a)).iter().all(|c| c.is_zero()));
            if collinear && is_side(p, a, b) && is_side(q, a, b) {
                ContactTag::SharedSide
            } else {
                ContactTag::Violation
            }
        }
    }
}

/// Random small integer point.
pub fn random_point(rng: &mut ChaCha8Rng, range: i64) -> Point3 {
    p(rng.gen_range(-range..=range), rng.gen_range(-range..=range), rng.gen_range(-range..=range))
}

fn collinear(a: &Point3, b: &Point3, c: &Point3) -> bool {
    cross(&sub(b, a), &sub(c, a)).iter().all(|x| x.is_zero())
}

/// Random triangle or parallelogram with small integer corners.
pub fn random_convex(rng: &mut ChaCha8Rng, range: i64) -> Vec<Point3> {
    loop {
        let a = random_point(rng, range);
        let b = random_point(rng, range);
        let c = random_point(rng, range);
        if collinear(&a, &b, &c) {
            continue;
        }
        if rng.gen_bool(0.5) {
            return vec![a, b, c];
        }
        let d = &(&a + &c) - &b;
        return vec![a, b, c, d];
    }
}

/// A second polygon placed to make touching and coplanar cases common.
pub fn random_partner(rng: &mut ChaCha8Rng, first: &[Point3], range: i64) -> Vec<Point3> {
    loop {
        let candidate = match rng.gen_range(0..5) {
            0 => random_convex(rng, range),
            1 => {
                // Shares a side, third corner anywhere.
                let i = rng.gen_range(0..first.len());
                let (a, b) = (first[i].clone(), first[(i + 1) % first.len()].clone());
                vec![b, a, random_point(rng, range)]
            }
            2 => {
                // Shares a corner.
                let a = first[rng.gen_range(0..first.len())].clone();
                vec![a, random_point(rng, range), random_point(rng, range)]
            }
            3 => {
                // Coplanar with the first polygon.
                let u = sub(&first[1], &first[0]);
                let v = sub(&first[2], &first[0]);
                let pick = |rng: &mut ChaCha8Rng| {
                    let (s, t) = (frac(rng.gen_range(-4..=4), 2), frac(rng.gen_range(-4..=4), 2));
                    Point3::new(
                        &first[0].x + &s * &u[0] + &t * &v[0],
                        &first[0].y + &s * &u[1] + &t * &v[1],
                        &first[0].z + &s * &u[2] + &t * &v[2],
                    )
                };
                vec![pick(rng), pick(rng), pick(rng)]
            }
            _ => {
                // Corner on a side of the first polygon.
                let i = rng.gen_range(0..first.len());
                let m = first[i].midpoint(&first[(i + 1) % first.len()]);
                vec![m, random_point(rng, range), random_point(rng, range)]
            }
        };
        if candidate.len() == 3 && collinear(&candidate[0], &candidate[1], &candidate[2]) {
            continue;
        }
        if candidate.iter().enumerate().any(|(i, x)| candidate[..i].contains(x)) {
            continue;
        }
        return candidate;
    }
}

/// Random strictly convex polygon with 3 to 8 corners: points on a parabola
/// arc in the plane, closed by the long chord, mapped into 3D by an integer
/// affine map.
pub fn random_convex_polygon(rng: &mut ChaCha8Rng) -> Vec<Point3> {
    let k = rng.gen_range(3..=8);
    let mut xs: Vec<i64> = Vec::new();
    while xs.len() < k {
        let x = rng.gen_range(-6..=6);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    xs.sort();
    loop {
        let origin = random_point(rng, 4);
        let u = random_point(rng, 3);
        let v = random_point(rng, 3);
        if cross(&sub(&u, &Point3::origin()), &sub(&v, &Point3::origin())).iter().all(|c| c.is_zero()) {
            continue;
        }
        return xs
            .iter()
            .map(|&x| {
                let (a, b) = (int(x), int(x * x));
                Point3::new(&origin.x + &a * &u.x + &b * &v.x, &origin.y + &a * &u.y + &b * &v.y, &origin.z + &a * &u.z + &b * &v.z)
            })
            .collect();
    }
}

/// Twice the area of a planar polygon, projected away from `axis`.
pub fn projected_double_area(poly: &[Point3], axis: usize) -> ExactScalar {
    let (i, j) = match axis {
        0 => (1, 2),
        1 => (2, 0),
        _ => (0, 1),
    };
    let mut total = ExactScalar::zero();
    for k in 0..poly.len() {
        let (a, b) = (&poly[k], &poly[(k + 1) % poly.len()]);
        total += a.coord(i) * b.coord(j) - a.coord(j) * b.coord(i);
    }
    total.abs()
}

/// Corners of the convex hull of coplanar points, in cyclic order, with
/// points on hull sides dropped. Gift wrapping in the plane with normal `n`.
pub fn planar_hull(points: &[Point3], normal: &Point3) -> Vec<Point3> {
    let mut pts: Vec<Point3> = points.to_vec();
    pts.sort_by(|a, b| (&a.x, &a.y, &a.z).cmp(&(&b.x, &b.y, &b.z)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let n = sub(normal, &Point3::origin());
    let turn = |a: &Point3, b: &Point3, c: &Point3| signum(&dot(&n, &cross(&sub(b, a), &sub(c, a))));
    let start = pts[0].clone();
    let mut hull = vec![start.clone()];
    let mut current = start.clone();
    loop {
        let mut next = if pts[0] == current { pts[1].clone() } else { pts[0].clone() };
        for x in &pts {
            if *x == current {
                continue;
            }
            let t = turn(&current, &next, x);
            let farther = || dot(&sub(x, &current), &sub(x, &current)) > dot(&sub(&next, &current), &sub(&next, &current));
            if t < 0 || (t == 0 && farther()) {
                next = x.clone();
            }
        }
        if next == start {
            break;
        }
        hull.push(next.clone());
        current = next;
        if hull.len() > pts.len() {
            break;
        }
    }
    hull
}
