//! A family of surfaces whose adjacency graphs have average degree close
//! to 12.
//!
//! One grid holds `m = 2l^2 + 2l + 1` octagons of a truncated square tiling,
//! turned so the square holes have horizontal and vertical sides. Octagon
//! `(p, q)` with `|p|, |q| <= l` and `p = q (mod 2)` is centered at
//! `3/2 (p, q)` with corners `(+-1, +-1/2)` and `(+-1/2, +-1)`. All corners of
//! an octagon lie on a circle, so lifting the grid to the paraboloid
//! `z = x^2 + y^2` keeps each octagon planar. Every axis-parallel octagon side
//! is pushed out into a two-corner chain whose middle side, the connector,
//! stays on the octagon's plane. Vertical connectors on one line span a
//! vertical polygon; horizontal connectors each sit at their own height.
//!
//! The lifted grid is stood upright with the lift pointing away from the
//! z-axis, and `m` copies are placed around the axis. A horizontal polygon
//! joins the `m` copies of one horizontal connector.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{finish, ConstructionError, ConstructionResult};
use crate::geometry::{circle_direction, frac, int, ExactScalar, Point3};
use crate::graphs::Graph;
use crate::surface::{Mode, Surface};

type P2 = (ExactScalar, ExactScalar);

/// Statistics of one member of the family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub ell: usize,
    /// Octagons per grid, which is also the number of grid copies.
    pub cells_per_grid: usize,
    pub polygons: usize,
    pub adjacencies: usize,
    pub average_degree: f64,
    /// Octagons whose four diagonal grid neighbors all exist.
    pub inner_octagons: usize,
    /// Inner octagons with exactly eight neighbors in the surface.
    pub inner_octagons_with_eight: usize,
    /// Whether `adjacencies >= 6 * inner_octagons`.
    pub six_per_inner_octagon: bool,
}

struct Grid {
    ell: i64,
    cells: Vec<(i64, i64)>,
}

impl Grid {
    fn new(ell: usize) -> Grid {
        let ell = ell as i64;
        let mut cells = Vec::new();
        for q in -ell..=ell {
            for p in -ell..=ell {
                if (p - q).rem_euclid(2) == 0 {
                    cells.push((p, q));
                }
            }
        }
        Grid { ell, cells }
    }

    fn m(&self) -> usize {
        self.cells.len()
    }

    fn index(&self, cell: (i64, i64)) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell)
    }

    fn is_inner(&self, (p, q): (i64, i64)) -> bool {
        p.abs() < self.ell && q.abs() < self.ell
    }

    /// Index of the vertical line through the left (`right == false`) or
    /// right connectors of column `p`.
    fn vertical_line(&self, p: i64, right: bool) -> usize {
        (2 * (p + self.ell)) as usize + usize::from(right)
    }

    fn vertical_lines(&self) -> usize {
        (4 * self.ell + 2) as usize
    }
}

fn center((p, q): (i64, i64)) -> P2 {
    (frac(3 * p, 2), frac(3 * q, 2))
}

/// Height of the octagon plane of `cell` over the point `pt`.
fn lift(cell: (i64, i64), pt: &P2) -> ExactScalar {
    let c = center(cell);
    let two = int(2);
    &two * (&c.0 * &pt.0 + &c.1 * &pt.1) - (&c.0 * &c.0 + &c.1 * &c.1) + frac(5, 4)
}

fn vertical_rise() -> ExactScalar {
    frac(1, 16)
}

/// Horizontal connector `i` rises a little more than the previous one, so
/// no two of them share a line.
fn horizontal_rise(i: usize, m: usize) -> ExactScalar {
    frac(1, 16) + frac(i as i64, 10 * (m * m) as i64)
}

/// The sixteen corners of cell `k`, counterclockwise, with the connectors
/// as corner pairs `(2, 3)` right, `(6, 7)` top, `(10, 11)` left and
/// `(14, 15)` bottom.
fn sixteen_gon(grid: &Grid, k: usize) -> Vec<P2> {
    let (cx, cy) = center(grid.cells[k]);
    let m = grid.m();
    let (a, inset) = (frac(1, 2), frac(1, 8));
    let (rv, top, bottom) = (vertical_rise(), horizontal_rise(2 * k + 1, m), horizontal_rise(2 * k, m));
    let one = ExactScalar::one();
    let rel = [
        (a.clone(), -&one),
        (one.clone(), -&a),
        (&one + &rv, &inset - &a),
        (&one + &rv, &a - &inset),
        (one.clone(), a.clone()),
        (a.clone(), one.clone()),
        (&a - &inset, &one + &top),
        (&inset - &a, &one + &top),
        (-&a, one.clone()),
        (-&one, a.clone()),
        (-&one - &rv, &a - &inset),
        (-&one - &rv, &inset - &a),
        (-&one, -&a),
        (-&a, -&one),
        (&inset - &a, -&one - &bottom),
        (&a - &inset, -&one - &bottom),
    ];
    rel.into_iter().map(|(x, y)| (&cx + x, &cy + y)).collect()
}

/// Places copy `j` of the lifted grid: the grid's x runs around the axis,
/// its y becomes the height and the lift pushes away from the axis.
struct Placement {
    dirs: Vec<P2>,
    radius: ExactScalar,
    lift_scale: ExactScalar,
}

impl Placement {
    fn new(ell: usize, copies: usize) -> Placement {
        let width = 2 * ell as i64 + 2;
        let dirs = (0..copies)
            .map(|j| {
                // tan(pi j / copies), rounded to 1/64, as the half-angle parameter.
                let t = (std::f64::consts::PI * j as f64 / copies as f64).tan();
                circle_direction(&frac((t * 64.0).round() as i64, 64))
            })
            .collect();
        Placement { dirs, radius: int(copies as i64 * width), lift_scale: frac(1, 16 * width * width) }
    }

    fn place(&self, j: usize, pt: &P2, height: &ExactScalar) -> Point3 {
        let (c, s) = &self.dirs[j];
        let r = &self.radius + &self.lift_scale * height;
        let t = &pt.0;
        Point3::new(&r * c - t * s, &r * s + t * c, pt.1.clone())
    }
}

fn push_edge(g: &mut Graph, a: usize, b: usize) {
    g.add_edge(a, b).expect("ids are in range");
}

/// Builds member `ell >= 1` of the family.
///
/// Polygon ids: cell `k` of copy `j` is `j * m + k`; vertical polygon `v`
/// of copy `j` follows at `m^2 + j * (4 ell + 2) + v`; the horizontal
/// polygon through connector `i` (bottom of cell `k` is `2k`, top `2k+1`)
/// comes last at `m^2 + m (4 ell + 2) + i`.
pub fn density_family(ell: usize) -> Result<ConstructionResult, ConstructionError> {
    if ell == 0 {
        return Err(ConstructionError::InvalidParameter("ell must be at least 1".into()));
    }
    let grid = Grid::new(ell);
    let m = grid.m();
    let lines = grid.vertical_lines();
    let place = Placement::new(ell, m);
    let shapes: Vec<Vec<P2>> = (0..m).map(|k| sixteen_gon(&grid, k)).collect();
    let heights: Vec<Vec<ExactScalar>> =
        shapes.iter().enumerate().map(|(k, s)| s.iter().map(|pt| lift(grid.cells[k], pt)).collect()).collect();

    let mut polygons: Vec<Vec<Point3>> = Vec::new();
    for j in 0..m {
        for k in 0..m {
            polygons.push(shapes[k].iter().zip(&heights[k]).map(|(pt, h)| place.place(j, pt, h)).collect());
        }
    }

    // Vertical connectors grouped by line, as (corner, corner, height, height).
    let mut on_line: Vec<Vec<(P2, P2, ExactScalar, ExactScalar)>> = vec![Vec::new(); lines];
    for (k, &(p, _)) in grid.cells.iter().enumerate() {
        let (s, h) = (&shapes[k], &heights[k]);
        on_line[grid.vertical_line(p, true)].push((s[2].clone(), s[3].clone(), h[2].clone(), h[3].clone()));
        on_line[grid.vertical_line(p, false)].push((s[11].clone(), s[10].clone(), h[11].clone(), h[10].clone()));
    }
    for j in 0..m {
        for connectors in on_line.iter_mut() {
            connectors.sort_by(|a, b| a.0 .1.cmp(&b.0 .1));
            let mut corners = Vec::with_capacity(2 * connectors.len() + 1);
            for (lo, hi, hl, hh) in connectors.iter() {
                corners.push(place.place(j, lo, hl));
                corners.push(place.place(j, hi, hh));
            }
            let first = &connectors[0].0;
            let last = &connectors[connectors.len() - 1].1;
            let peak = connectors.iter().flat_map(|c| [&c.2, &c.3]).max().cloned().unwrap_or_else(ExactScalar::zero);
            let apex = (first.0.clone(), (&first.1 + &last.1) / int(2));
            corners.push(place.place(j, &apex, &(peak + int(1))));
            polygons.push(corners);
        }
    }

    for k in 0..m {
        for (lo, hi) in [(14, 15), (7, 6)] {
            let (s, h) = (&shapes[k], &heights[k]);
            polygons.push((0..m).flat_map(|j| [place.place(j, &s[lo], &h[lo]), place.place(j, &s[hi], &h[hi])]).collect());
        }
    }

    let target = expected_graph(&grid);
    let surface = Surface::from_corners(polygons, Mode::Convex)?;
    finish(surface, &target)
}

/// The adjacency graph the construction is meant to have, in its id order.
fn expected_graph(grid: &Grid) -> Graph {
    let m = grid.m();
    let lines = grid.vertical_lines();
    let vertical_base = m * m;
    let horizontal_base = vertical_base + m * lines;
    let mut g = Graph::empty(horizontal_base + 2 * m);
    for j in 0..m {
        for (k, &(p, q)) in grid.cells.iter().enumerate() {
            let id = j * m + k;
            for (dp, dq) in [(1, 1), (1, -1)] {
                if let Some(other) = grid.index((p + dp, q + dq)) {
                    push_edge(&mut g, id, j * m + other);
                }
            }
            for right in [false, true] {
                push_edge(&mut g, id, vertical_base + j * lines + grid.vertical_line(p, right));
            }
            for side in 0..2 {
                push_edge(&mut g, id, horizontal_base + 2 * k + side);
            }
        }
    }
    g
}

/// Degree statistics of a member built by [`density_family`].
pub fn density_report(ell: usize, result: &ConstructionResult) -> DensityReport {
    let grid = Grid::new(ell);
    let m = grid.m();
    let adjacency = result.surface.validate().adjacency;
    let polygons = adjacency.n();
    let adjacencies = adjacency.m();
    let inner: Vec<usize> = (0..m)
        .flat_map(|j| grid.cells.iter().enumerate().filter(|(_, &c)| grid.is_inner(c)).map(move |(k, _)| j * m + k))
        .collect();
    let with_eight = inner.iter().filter(|&&id| adjacency.degree(id) == 8).count();
    DensityReport {
        ell,
        cells_per_grid: m,
        polygons,
        adjacencies,
        average_degree: if polygons == 0 { 0.0 } else { 2.0 * adjacencies as f64 / polygons as f64 },
        inner_octagons: inner.len(),
        inner_octagons_with_eight: with_eight,
        six_per_inner_octagon: adjacencies >= 6 * inner.len(),
    }
}
