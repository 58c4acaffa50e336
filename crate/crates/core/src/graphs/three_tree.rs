//! Recognition of 3-trees by repeated removal of stacked vertices.

use super::Graph;

/// Construction sequence of a 3-tree: start from the `K4` on `base`, then
/// stack each `(v, [a, b, c])` in order onto the triangle `abc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTreeSequence {
    pub base: [usize; 4],
    pub stacks: Vec<(usize, [usize; 3])>,
}

impl ThreeTreeSequence {
    /// Rebuilds the graph described by the sequence on `n` vertices.
    pub fn replay(&self, n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..4 {
            for j in i + 1..4 {
                g.add_edge(self.base[i], self.base[j]).expect("distinct base vertices");
            }
        }
        for &(v, tri) in &self.stacks {
            for x in tri {
                g.add_edge(v, x).expect("fresh stacked vertex");
            }
        }
        g
    }
}

/// Returns a construction sequence if `g` is a 3-tree.
///
/// A 3-tree with more than four vertices always has a degree-3 vertex whose
/// neighbors form a triangle, and removing it leaves a 3-tree; so greedy
/// elimination succeeds exactly on 3-trees.
pub fn is_three_tree(g: &Graph) -> Option<ThreeTreeSequence> {
    let n = g.n();
    if n < 4 || g.m() != 3 * n - 6 {
        return None;
    }
    let mut h = g.clone();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut removed = Vec::new();
    let mut queue: Vec<usize> = (0..n).filter(|&v| h.degree(v) == 3).collect();
    while remaining > 4 {
        let mut found = None;
        while let Some(v) = queue.pop() {
            if alive[v] && h.degree(v) == 3 && is_triangle(&h, h.neighbors(v)) {
                found = Some(v);
                break;
            }
        }
        let v = found?;
        let nb = h.neighbors(v).to_vec();
        let tri = [nb[0], nb[1], nb[2]];
        for &x in &nb {
            h.remove_edge(v, x);
        }
        alive[v] = false;
        remaining -= 1;
        removed.push((v, tri));
        for &x in &nb {
            if h.degree(x) == 3 {
                queue.push(x);
            }
        }
    }
    let base: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let base = [base[0], base[1], base[2], base[3]];
    for i in 0..4 {
        for j in i + 1..4 {
            if !h.has_edge(base[i], base[j]) {
                return None;
            }
        }
    }
    removed.reverse();
    Some(ThreeTreeSequence { base, stacks: removed })
}

fn is_triangle(g: &Graph, nb: &[usize]) -> bool {
    g.has_edge(nb[0], nb[1]) && g.has_edge(nb[1], nb[2]) && g.has_edge(nb[0], nb[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::generators::*;

    /// Exhaustive oracle: tries every elimination order.
    fn three_tree_by_search(g: &Graph) -> bool {
        let n = g.n();
        if n < 4 {
            return false;
        }
        if n == 4 {
            return g.m() == 6;
        }
        (0..n).any(|v| {
            g.degree(v) == 3 && is_triangle(g, g.neighbors(v)) && {
                let rest: Vec<usize> = (0..n).filter(|&w| w != v).collect();
                three_tree_by_search(&g.induced(&rest))
            }
        })
    }

    #[test]
    fn k4_is_base_case() {
        let seq = is_three_tree(&complete(4)).unwrap();
        assert!(seq.stacks.is_empty());
    }

    #[test]
    fn triple_stacked_triangle_agrees_with_search() {
        let g = triple_stacked_triangle();
        assert_eq!(is_three_tree(&g).is_some(), three_tree_by_search(&g));
    }

    #[test]
    fn small_graphs_agree_with_search() {
        for seed in 0..40 {
            let g = random_three_tree(7, seed).unwrap();
            assert!(three_tree_by_search(&g));
            let mut h = g.clone();
            let (u, v) = g.edges()[seed as usize % g.m()];
            h.remove_edge(u, v);
            assert_eq!(is_three_tree(&h).is_some(), three_tree_by_search(&h));
        }
        assert!(!three_tree_by_search(&complete(5)));
        assert!(is_three_tree(&complete(5)).is_none());
    }

    #[test]
    fn generator_round_trip() {
        for seed in 0..100 {
            let g = random_three_tree(30, seed).unwrap();
            let seq = is_three_tree(&g).expect("generated graph is a 3-tree");
            assert_eq!(seq.stacks.len(), 26);
            assert_eq!(seq.replay(30), g);
        }
    }
}
