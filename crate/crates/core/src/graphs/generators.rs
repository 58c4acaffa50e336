//! Deterministic and seeded graph generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("simple");
        }
    }
    g
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).expect("simple");
        }
    }
    g
}

/// `Q_d`: vertices are `d`-bit labels, adjacent at Hamming distance 1.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for bit in 0..d {
            let v = u ^ (1 << bit);
            if u < v {
                g.add_edge(u, v).expect("simple");
            }
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v).expect("simple");
    }
    g
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).expect("simple");
    }
    g
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).expect("simple");
        g.add_edge(i, i + 5).expect("simple");
        g.add_edge(i + 5, (i + 2) % 5 + 5).expect("simple");
    }
    g
}

/// Replaces every edge by a path with `k` internal vertices.
///
/// Original vertices keep their labels. The internal vertices of the `e`-th
/// edge `(u, v)` in sorted edge order (`u < v`) are `n + e*k .. n + (e+1)*k`,
/// listed from `u` towards `v`.
pub fn subdivide_graph(g: &Graph, k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter("subdivision count must be at least 1".into()));
    }
    let n = g.n();
    let edges = g.edges();
    let mut out = Graph::empty(n + edges.len() * k);
    for (e, &(u, v)) in edges.iter().enumerate() {
        let mut prev = u;
        for j in 0..k {
            let x = n + e * k + j;
            out.add_edge(prev, x).expect("fresh vertex");
            prev = x;
        }
        out.add_edge(prev, v).expect("fresh vertex");
    }
    Ok(out)
}

/// `K_{3,3}` on parts `{0,1,2}` and `{3,4,5}` plus the triangle `0,1,2`.
pub fn triple_stacked_triangle() -> Graph {
    let mut g = complete_bipartite(3, 3);
    for (u, v) in [(0, 1), (1, 2), (0, 2)] {
        g.add_edge(u, v).expect("simple");
    }
    g
}

/// Random 3-tree on `n >= 4` vertices.
///
/// Algorithm (kept stable so fixtures are reproducible): a `ChaCha8Rng` is
/// seeded with `seed` via `seed_from_u64`. Vertices `0..4` form `K4`, whose
/// triangles are listed as `[0,1,2], [0,1,3], [0,2,3], [1,2,3]`. For
/// `v = 4..n`, an index `i = rng.gen_range(0..len)` picks a triangle
/// `[a,b,c]` from the list; `v` is joined to `a, b, c`, and the triangles
/// `[a,b,v], [a,c,v], [b,c,v]` are appended in that order.
pub fn random_three_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidParameter(format!("a 3-tree needs at least 4 vertices, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = complete(4);
    let mut triangles: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n {
        let [a, b, c] = triangles[rng.gen_range(0..triangles.len())];
        g.add_vertex();
        for x in [a, b, c] {
            g.add_edge(x, v).expect("fresh vertex");
        }
        triangles.push([a, b, v]);
        triangles.push([a, c, v]);
        triangles.push([b, c, v]);
    }
    Ok(g)
}

/// Erdős–Rényi graph `G(n, p)` from a seeded `ChaCha8Rng`, deciding the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("simple");
            }
        }
    }
    g
}

/// Random planar graph on `n` vertices: a stacked triangulation (each new
/// vertex inserted into a uniformly random face), then every edge is kept
/// with a probability drawn once from `[0.4, 1.0)`, and finally the labels
/// are shuffled.
pub fn random_planar(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    if n >= 2 {
        g.add_edge(0, 1).expect("simple");
    }
    if n >= 3 {
        g.add_edge(1, 2).expect("simple");
        g.add_edge(0, 2).expect("simple");
    }
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        for x in [a, b, c] {
            g.add_edge(x, v).expect("fresh vertex");
        }
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let keep = rng.gen_range(0.4..1.0);
    let mut out = Graph::empty(n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    for (u, v) in g.edges() {
        if rng.gen_bool(keep) {
            out.add_edge(perm[u], perm[v]).expect("simple");
        }
    }
    out
}
