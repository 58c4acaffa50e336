//! Subgraph search: a general backtracking matcher for small patterns and a
//! common-neighborhood search for `K_{5,t}`.

use super::{BitSet, Graph, GraphError};

/// Largest pattern accepted by [`contains_subgraph`].
pub const MAX_PATTERN_VERTICES: usize = 10;

/// Finds an injective map `pattern -> host` sending every pattern edge to a
/// host edge (not necessarily induced). Returns the image of each pattern
/// vertex.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    if pattern.n() > MAX_PATTERN_VERTICES {
        return Err(GraphError::PatternTooLarge { got: pattern.n(), max: MAX_PATTERN_VERTICES });
    }
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    let order = match_order(pattern);
    let rows = host.bit_rows();
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = BitSet::new(host.n());
    let found = extend(host, pattern, &rows, &order, 0, &mut image, &mut used);
    Ok(found.then_some(image))
}

/// Pattern vertices ordered so that each one (after the first of its
/// component) has a previously placed neighbor; higher degrees first.
fn match_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    rows: &[BitSet],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut BitSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let anchors: Vec<usize> = pattern.neighbors(p).iter().map(|&w| image[w]).filter(|&h| h != usize::MAX).collect();
    let candidates: Vec<usize> = match anchors.first() {
        Some(&a) => host.neighbors(a).to_vec(),
        None => (0..host.n()).collect(),
    };
    for h in candidates {
        if used.contains(h) || host.degree(h) < pattern.degree(p) {
            continue;
        }
        if !anchors.iter().all(|&a| rows[a].contains(h)) {
            continue;
        }
        image[p] = h;
        used.insert(h);
        if extend(host, pattern, rows, order, depth + 1, image, used) {
            return true;
        }
        used.remove(h);
        image[p] = usize::MAX;
    }
    false
}

/// Five vertices and at least `t` of their common neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K5tWitness {
    pub hubs: [usize; 5],
    pub common: Vec<usize>,
}

/// Searches for `K_{5,t}` by enumerating 5-sets of vertices of degree at
/// least `t` and intersecting their neighborhoods, pruning as soon as the
/// running intersection drops below `t`.
pub fn contains_k5t(host: &Graph, t: usize) -> Option<K5tWitness> {
    let t = t.max(1);
    let rows = host.bit_rows();
    let cands: Vec<usize> = (0..host.n()).filter(|&v| host.degree(v) >= t).collect();
    let mut chosen = Vec::with_capacity(5);
    let mut full = BitSet::new(host.n());
    for v in 0..host.n() {
        full.insert(v);
    }
    k5t_search(&rows, &cands, 0, &mut chosen, &full, t)
}

fn k5t_search(
    rows: &[BitSet],
    cands: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    common: &BitSet,
    t: usize,
) -> Option<K5tWitness> {
    if chosen.len() == 5 {
        let hubs = [chosen[0], chosen[1], chosen[2], chosen[3], chosen[4]];
        let common: Vec<usize> = common.iter().collect();
        return Some(K5tWitness { hubs, common });
    }
    let need = 5 - chosen.len();
    for i in start..cands.len() {
        if cands.len() - i < need {
            break;
        }
        let v = cands[i];
        let mut next = common.clone();
        next.intersect_with(&rows[v]);
        if next.count() < t {
            continue;
        }
        chosen.push(v);
        if let Some(w) = k5t_search(rows, cands, i + 1, chosen, &next, t) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::generators::*;

    fn check_witness(host: &Graph, pattern: &Graph, image: &[usize]) {
        let mut seen = image.to_vec();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), image.len());
        for (u, v) in pattern.edges() {
            assert!(host.has_edge(image[u], image[v]));
        }
    }

    #[test]
    fn small_patterns() {
        let tst = triple_stacked_triangle();
        let k33 = complete_bipartite(3, 3);
        let w = contains_subgraph(&tst, &k33).unwrap().unwrap();
        check_witness(&tst, &k33, &w);

        let s = subdivide_graph(&complete(5), 1).unwrap();
        assert_eq!(contains_subgraph(&s, &complete(5)).unwrap(), None);

        let w = contains_subgraph(&complete(6), &complete(5)).unwrap().unwrap();
        check_witness(&complete(6), &complete(5), &w);

        assert!(matches!(
            contains_subgraph(&complete(12), &complete(11)),
            Err(GraphError::PatternTooLarge { got: 11, max: 10 })
        ));
    }

    #[test]
    fn k5t_cases() {
        let w = contains_k5t(&complete_bipartite(5, 81), 81).unwrap();
        assert_eq!(w.hubs, [0, 1, 2, 3, 4]);
        assert_eq!(w.common.len(), 81);
        assert_eq!(contains_k5t(&complete_bipartite(5, 80), 81), None);
        assert_eq!(contains_k5t(&hypercube(6), 81), None);
    }

    #[test]
    fn hypercube_common_neighborhoods_are_small() {
        // Any 5-set with a common neighbor x lies inside N(x), so scanning
        // the 5-subsets of every neighborhood finds the maximum exactly.
        let q = hypercube(6);
        let mut best = 0;
        for x in 0..q.n() {
            let nb = q.neighbors(x);
            for skip in 0..nb.len() {
                let five: Vec<usize> = nb.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                let cnt = (0..q.n()).filter(|&y| five.iter().all(|&h| q.has_edge(h, y))).count();
                best = best.max(cnt);
            }
        }
        assert_eq!(best, 1);
        assert!(contains_k5t(&q, 2).is_none());
        assert!(contains_k5t(&q, 1).is_some());
        assert!(contains_k5t(&q, 81).is_none());
    }
}
