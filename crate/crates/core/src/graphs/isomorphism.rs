//! Graph isomorphism by color refinement followed by backtracking.

use std::collections::BTreeMap;

use super::{BitSet, Graph};

/// Returns `map` with `map[v]` the image in `b` of vertex `v` of `a`, such
/// that `uv` is an edge of `a` exactly when `map[u] map[v]` is an edge of `b`.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.m() != b.m() {
        return None;
    }
    let n = a.n();
    let (ca, cb) = refine(a, b);
    let mut hist_a = BTreeMap::new();
    let mut hist_b = BTreeMap::new();
    for v in 0..n {
        *hist_a.entry(ca[v]).or_insert(0usize) += 1;
        *hist_b.entry(cb[v]).or_insert(0usize) += 1;
    }
    if hist_a != hist_b {
        return None;
    }
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_color.entry(cb[v]).or_default().push(v);
    }
    let order = search_order(a, &ca, &hist_a);
    let rows_b = b.bit_rows();
    let mut state = Search {
        a,
        b,
        rows_b: &rows_b,
        ca: &ca,
        cb: &cb,
        by_color: &by_color,
        order: &order,
        map: vec![usize::MAX; n],
        used: BitSet::new(n),
    };
    state.extend(0).then_some(state.map)
}

/// Joint color refinement of both graphs, so equal colors are comparable
/// across them.
fn refine(a: &Graph, b: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut ca: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    let mut classes = count_classes(&ca, &cb);
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..a.n()).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.n()).map(|v| sig(b, &cb, v)).collect();
        for s in sa.iter().chain(&sb) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        ca = sa.iter().map(|s| palette[s]).collect();
        cb = sb.iter().map(|s| palette[s]).collect();
        let now = count_classes(&ca, &cb);
        if now == classes {
            return (ca, cb);
        }
        classes = now;
    }
}

fn count_classes(ca: &[usize], cb: &[usize]) -> usize {
    let mut all: Vec<usize> = ca.iter().chain(cb).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Vertices of `a` ordered for matching: start from the rarest color, then
/// always take the unplaced vertex with most placed neighbors.
fn search_order(a: &Graph, ca: &[usize], hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = a.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], std::cmp::Reverse(hist[&ca[v]]), a.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        for &w in a.neighbors(v) {
            links[w] += 1;
        }
        order.push(v);
    }
    order
}

struct Search<'a> {
    a: &'a Graph,
    b: &'a Graph,
    rows_b: &'a [BitSet],
    ca: &'a [usize],
    cb: &'a [usize],
    by_color: &'a BTreeMap<usize, Vec<usize>>,
    order: &'a [usize],
    map: Vec<usize>,
    used: BitSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mapped_nb: Vec<usize> =
            self.a.neighbors(v).iter().map(|&w| self.map[w]).filter(|&x| x != usize::MAX).collect();
        let candidates: Vec<usize> = match mapped_nb.first() {
            Some(&x) => self.b.neighbors(x).iter().copied().filter(|&h| self.ca[v] == self.cb[h]).collect(),
            None => self.by_color[&self.ca[v]].clone(),
        };
        for h in candidates {
            if self.used.contains(h) || !self.consistent(h, &mapped_nb) {
                continue;
            }
            self.map[v] = h;
            self.used.insert(h);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(h);
            self.map[v] = usize::MAX;
        }
        false
    }

    /// `h` is adjacent to every image of a mapped neighbor and to no other
    /// mapped vertex.
    fn consistent(&self, h: usize, mapped_nb: &[usize]) -> bool {
        if !mapped_nb.iter().all(|&x| self.rows_b[h].contains(x)) {
            return false;
        }
        let placed_nb = self.b.neighbors(h).iter().filter(|&&x| self.used.contains(x)).count();
        placed_nb == mapped_nb.len()
    }
}
