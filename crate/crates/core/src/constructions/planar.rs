//! Flat realization of planar graphs.
//!
//! The graph is padded and augmented to a triangulation, one extra vertex is
//! stacked into a face, and the dual (a 3-connected cubic planar graph) is
//! drawn with Tutte's barycentric method around the three faces of the
//! stacked vertex. The faces of that drawing are the polygons. Polygons of
//! the helper vertices are removed and the augmentation edges undone with
//! side trims.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{finish, ConstructionError, ConstructionResult};
use crate::geometry::{ExactScalar, Point3, PolygonId};
use crate::graphs::{is_planar, planar_embedding, Graph};
use crate::surface::{Mode, Surface};

/// Adds edges until `g` (connected or not, at least 3 vertices) is a
/// triangulation. Every added chord joins two vertices on a common face of
/// the current embedding, so planarity is preserved.
fn triangulate(g: &Graph) -> Graph {
    let mut h = g.clone();
    let comps = h.components();
    for c in &comps[1..] {
        h.add_edge(comps[0][0], c[0]).expect("different components");
    }
    loop {
        let emb = planar_embedding(&h).expect("chords inside faces keep the graph planar");
        let mut added = false;
        for face in emb.faces() {
            // A fan of chords from one boundary point never crosses itself.
            let Some(&u) = face.iter().find(|&&u| face.iter().any(|&v| v != u && !h.has_edge(u, v))) else {
                continue;
            };
            for &v in &face {
                if v != u && !h.has_edge(u, v) {
                    h.add_edge(u, v).expect("checked absent");
                    added = true;
                }
            }
        }
        if !added {
            return h;
        }
    }
}

/// Solves `a x = b` for a symmetric positive definite integer matrix with
/// fraction-free Gaussian elimination; `b` has `cols` right-hand sides.
fn solve_spd(mut a: Vec<Vec<BigInt>>, mut b: Vec<Vec<BigInt>>) -> Vec<Vec<ExactScalar>> {
    let k = a.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    for p in 0..k {
        let pivot = a[p][p].clone();
        assert!(!pivot.is_zero(), "leading minors of a positive definite matrix are nonzero");
        let (head, tail) = a.split_at_mut(p + 1);
        let (bhead, btail) = b.split_at_mut(p + 1);
        let row_p = &head[p];
        let rhs_p = &bhead[p];
        for (row, rhs) in tail.iter_mut().zip(btail.iter_mut()) {
            let factor = row[p].clone();
            for j in p + 1..k {
                row[j] = (&row[j] * &pivot - &factor * &row_p[j]) / &prev;
            }
            for j in 0..cols {
                rhs[j] = (&rhs[j] * &pivot - &factor * &rhs_p[j]) / &prev;
            }
            row[p] = BigInt::zero();
        }
        prev = pivot;
    }
    let mut x: Vec<Vec<ExactScalar>> = vec![vec![ExactScalar::zero(); cols]; k];
    for i in (0..k).rev() {
        for c in 0..cols {
            let mut acc = ExactScalar::from_integer(b[i][c].clone());
            for j in i + 1..k {
                if !a[i][j].is_zero() {
                    acc -= ExactScalar::from_integer(a[i][j].clone()) * &x[j][c];
                }
            }
            x[i][c] = acc / ExactScalar::from_integer(a[i][i].clone());
        }
    }
    x
}

/// Polygons (as corner lists in the plane `z = 0`) for the dual drawing of
/// triangulation `t`, where `outer` is a vertex of degree 3 whose dual face
/// becomes the outer triangle. Entry `v` is the polygon of vertex `v`.
fn dual_drawing(t: &Graph, outer: usize) -> Vec<Vec<Point3>> {
    let emb = planar_embedding(t).expect("triangulation is planar");
    // Face index of every half-edge.
    let mut face_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut faces: Vec<Vec<(usize, usize)>> = Vec::new();
    for v in 0..t.n() {
        for &w in emb.rotation(v) {
            if face_of.contains_key(&(v, w)) {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut half = (v, w);
            loop {
                face_of.insert(half, id);
                walk.push(half);
                half = emb.next_half_edge(half.0, half.1);
                if half == (v, w) {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    let fixed: Vec<usize> = emb.rotation(outer).iter().map(|&w| face_of[&(outer, w)]).collect();
    let anchors = [(0, 0), (1, 0), (0, 1)];
    let mut unknown = vec![usize::MAX; faces.len()];
    let mut count = 0;
    for (f, slot) in unknown.iter_mut().enumerate() {
        if !fixed.contains(&f) {
            *slot = count;
            count += 1;
        }
    }
    let mut a = vec![vec![BigInt::zero(); count]; count];
    let mut b = vec![vec![BigInt::zero(); 2]; count];
    for (f, walk) in faces.iter().enumerate() {
        let row = unknown[f];
        if row == usize::MAX {
            continue;
        }
        a[row][row] = BigInt::from(walk.len() as i64);
        for &(x, y) in walk {
            let g = face_of[&(y, x)];
            if let Some(k) = fixed.iter().position(|&h| h == g) {
                b[row][0] += anchors[k].0;
                b[row][1] += anchors[k].1;
            } else {
                a[row][unknown[g]] -= 1;
            }
        }
    }
    let solution = solve_spd(a, b);
    let position = |f: usize| -> Point3 {
        if let Some(k) = fixed.iter().position(|&h| h == f) {
            Point3::from_ints(anchors[k].0, anchors[k].1, 0)
        } else {
            let s = &solution[unknown[f]];
            Point3::new(s[0].clone(), s[1].clone(), ExactScalar::zero())
        }
    };
    (0..t.n()).map(|v| emb.rotation(v).iter().map(|&w| position(face_of[&(v, w)])).collect()).collect()
}

pub fn realize_planar_flat(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    if !is_planar(g) {
        return Err(ConstructionError::NotPlanar);
    }
    let n = g.n();
    if n == 0 {
        return finish(Surface::new(Vec::new(), Mode::Convex)?, g);
    }
    let mut padded = g.clone();
    while padded.n() < 4 {
        padded.add_vertex();
    }
    let mut t = triangulate(&padded);
    debug_assert_eq!(t.m(), 3 * t.n() - 6);
    let face = planar_embedding(&t).expect("planar").faces().swap_remove(0);
    let outer = t.add_vertex();
    for &v in &face {
        t.add_edge(outer, v).expect("fresh vertex");
    }
    let drawing = dual_drawing(&t, outer);
    let helpers: Vec<PolygonId> = (n..t.n()).map(|v| PolygonId(v as u32)).collect();
    let mut surface = Surface::from_corners(drawing, Mode::Convex)?.without(&helpers);
    for (u, v) in t.edges() {
        if v >= n || g.has_edge(u, v) {
            continue;
        }
        let (a, b) = surface
            .shared_side(PolygonId(u as u32), PolygonId(v as u32))
            .ok_or_else(|| ConstructionError::VerificationFailed(format!("augmentation edge {u}-{v} has no shared side")))?;
        surface = surface.side_trim(&a, &b)?;
    }
    finish(surface, g)
}
