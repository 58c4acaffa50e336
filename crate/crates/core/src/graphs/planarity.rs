//! Left-right planarity test (Brandes' formulation of de Fraysseix and
//! Rosenstiehl's criterion) with construction of a combinatorial embedding.

use std::collections::HashMap;

use super::Graph;

/// Rotation system: for every vertex, its neighbors in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    fn position(&self, v: usize, w: usize) -> usize {
        self.rotation[v].iter().position(|&x| x == w).expect("half-edge present")
    }

    /// Half-edge following `(v, w)` along its face: `(w, x)` where `x` is the
    /// neighbor preceding `v` in the clockwise rotation at `w`.
    pub fn next_half_edge(&self, v: usize, w: usize) -> (usize, usize) {
        let rot = &self.rotation[w];
        let i = self.position(w, v);
        (w, rot[(i + rot.len() - 1) % rot.len()])
    }

    /// All faces as cyclic vertex sequences; each half-edge appears in
    /// exactly one face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut faces = Vec::new();
        for v in 0..self.rotation.len() {
            for &w in &self.rotation[v] {
                if seen.contains_key(&(v, w)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, w);
                loop {
                    seen.insert((a, b), ());
                    face.push(a);
                    let (c, d) = self.next_half_edge(a, b);
                    a = c;
                    b = d;
                    if (a, b) == (v, w) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks Euler's formula per component: `V - E + F = 2` for every
    /// component with at least one edge.
    pub fn satisfies_euler(&self, g: &Graph) -> bool {
        let faces = self.faces();
        let comps = g.components();
        let mut comp_of = vec![0; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut f = vec![0i64; comps.len()];
        for face in &faces {
            f[comp_of[face[0]]] += 1;
        }
        comps.iter().enumerate().all(|(i, c)| {
            let e: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            e == 0 || c.len() as i64 - e as i64 + f[i] == 2
        })
    }
}

pub fn is_planar(g: &Graph) -> bool {
    LrState::new(g).run().is_some()
}

/// A planar rotation system for `g`, or `None` if `g` is not planar.
pub fn planar_embedding(g: &Graph) -> Option<Embedding> {
    LrState::new(g).run()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

const NONE: usize = usize::MAX;

struct LrState<'a> {
    g: &'a Graph,
    height: Vec<usize>,
    roots: Vec<usize>,
    // Oriented edges, indexed by id.
    src: Vec<usize>,
    tgt: Vec<usize>,
    oriented: HashMap<(usize, usize), usize>,
    out_edges: Vec<Vec<usize>>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    ref_: Vec<usize>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    rotation: Vec<Vec<usize>>,
}

impl<'a> LrState<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        LrState {
            g,
            height: vec![NONE; n],
            roots: Vec::new(),
            src: Vec::new(),
            tgt: Vec::new(),
            oriented: HashMap::new(),
            out_edges: vec![Vec::new(); n],
            parent_edge: vec![NONE; n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting_depth: Vec::new(),
            ref_: Vec::new(),
            side: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
            left_ref: vec![NONE; n],
            right_ref: vec![NONE; n],
            rotation: vec![Vec::new(); n],
        }
    }

    fn run(mut self) -> Option<Embedding> {
        let n = self.g.n();
        if n > 2 && self.g.m() > 3 * n - 6 {
            return None;
        }
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.dfs_orientation(v);
            }
        }
        let m = self.src.len();
        self.ref_ = vec![NONE; m];
        self.side = vec![1; m];
        self.lowpt_edge = vec![NONE; m];
        self.stack_bottom = vec![0; m];
        for v in 0..n {
            let mut edges = std::mem::take(&mut self.out_edges[v]);
            edges.sort_by_key(|&e| self.nesting_depth[e]);
            self.out_edges[v] = edges;
        }
        for r in self.roots.clone() {
            if !self.dfs_testing(r) {
                return None;
            }
        }
        for e in 0..m {
            let s = self.sign(e);
            self.nesting_depth[e] *= s;
        }
        for v in 0..n {
            let mut edges = std::mem::take(&mut self.out_edges[v]);
            edges.sort_by_key(|&e| self.nesting_depth[e]);
            self.rotation[v] = edges.iter().map(|&e| self.tgt[e]).collect();
            self.out_edges[v] = edges;
        }
        for r in self.roots.clone() {
            self.dfs_embedding(r);
        }
        Some(Embedding { rotation: self.rotation })
    }

    fn dfs_orientation(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            if self.oriented.contains_key(&(v, w)) || self.oriented.contains_key(&(w, v)) {
                continue;
            }
            let vw = self.src.len();
            self.src.push(v);
            self.tgt.push(w);
            self.oriented.insert((v, w), vw);
            self.out_edges[v].push(vw);
            self.lowpt.push(self.height[v]);
            self.lowpt2.push(self.height[v]);
            self.nesting_depth.push(0);
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.dfs_orientation(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < self.height[v] {
                self.nesting_depth[vw] += 1;
            }
            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) if !i.empty() => self.lowpt[h] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => NONE,
        }
    }

    fn dfs_testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let edges = self.out_edges[v].clone();
        for (idx, &ei) in edges.iter().enumerate() {
            let w = self.tgt[ei];
            self.stack_bottom[ei] = self.stack.len();
            if ei == self.parent_edge[w] {
                if !self.dfs_testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval { low: Some(ei), high: Some(ei) },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    if e != NONE {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    }
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn set_ref(&mut self, edge: Option<usize>, target: Option<usize>) {
        if let Some(x) = edge {
            self.ref_[x] = target.unwrap_or(NONE);
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges on stack");
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            let qrl = q.right.low.expect("nonempty right interval");
            if self.lowpt[qrl] > self.lowpt[e] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.ref_[qrl] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("nonempty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().expect("nonempty");
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.tgt[h] != u {
                    break;
                }
                p.left.high = self.opt_ref(h);
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.ref_[l] = p.right.low.unwrap_or(NONE);
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.tgt[h] != u {
                    break;
                }
                p.right.high = self.opt_ref(h);
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.ref_[r] = p.left.low.unwrap_or(NONE);
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                let pick = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    (Some(l), None) => Some(l),
                    _ => hr,
                };
                self.ref_[e] = pick.unwrap_or(NONE);
            }
        }
    }

    fn opt_ref(&self, e: usize) -> Option<usize> {
        let r = self.ref_[e];
        (r != NONE).then_some(r)
    }

    /// Resolves the side of `e` relative to its reference chain.
    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        while let Some(r) = self.opt_ref(*chain.last().expect("nonempty")) {
            chain.push(r);
        }
        // Fold from the end of the chain back to `e`.
        for k in (0..chain.len() - 1).rev() {
            let (x, r) = (chain[k], chain[k + 1]);
            self.side[x] *= self.side[r];
            self.ref_[x] = NONE;
        }
        self.side[e]
    }

    fn insert_after(&mut self, v: usize, w: usize, reference: usize) {
        let rot = &mut self.rotation[v];
        let i = rot.iter().position(|&x| x == reference).expect("reference neighbor present");
        rot.insert(i + 1, w);
    }

    fn insert_before(&mut self, v: usize, w: usize, reference: usize) {
        let rot = &mut self.rotation[v];
        let i = rot.iter().position(|&x| x == reference).expect("reference neighbor present");
        rot.insert(i, w);
    }

    fn dfs_embedding(&mut self, v: usize) {
        let edges = self.out_edges[v].clone();
        for ei in edges {
            let w = self.tgt[ei];
            if ei == self.parent_edge[w] {
                self.rotation[w].insert(0, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.dfs_embedding(w);
            } else if self.side[ei] == 1 {
                let r = self.right_ref[w];
                self.insert_after(w, v, r);
            } else {
                let l = self.left_ref[w];
                self.insert_before(w, v, l);
                self.left_ref[w] = v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::generators::*;

    #[test]
    fn small_cases() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(is_planar(&complete_bipartite(2, 7)));
        assert!(!is_planar(&petersen()));
        assert!(!is_planar(&triple_stacked_triangle()));
        assert!(is_planar(&hypercube(3)));
        assert!(!is_planar(&hypercube(4)));
        assert!(is_planar(&Graph::empty(3)));
    }

    #[test]
    fn embeddings_satisfy_euler() {
        for g in [complete(4), hypercube(3), cycle(7), path(5), complete_bipartite(2, 5)] {
            let emb = planar_embedding(&g).unwrap();
            assert!(emb.satisfies_euler(&g));
        }
        for seed in 0..50 {
            let g = random_planar(25, seed);
            let emb = planar_embedding(&g).expect("generator output is planar");
            assert!(emb.satisfies_euler(&g), "seed {seed}");
        }
    }
}
