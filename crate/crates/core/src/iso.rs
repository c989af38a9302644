//! Graph isomorphism by signature-pruned backtracking.
//!
//! Intended for the small graphs this crate works with (n <= 10 or so);
//! the pruning is a degree/neighbour-degree refinement, which is plenty
//! at that size.

use crate::graph::Graph;

/// Vertex signature: degree plus the sorted multiset of neighbour degrees.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    let adj = g.adjacency();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = adj[v].iter().map(|&w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

struct Matcher {
    n: usize,
    a: Vec<Vec<bool>>,
    b: Vec<Vec<bool>>,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Matcher {
    fn extend(&mut self, depth: usize, image: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if depth == self.n {
            return true;
        }
        let u = self.order[depth];
        for idx in 0..self.candidates[u].len() {
            let w = self.candidates[u][idx];
            if used[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&p| {
                self.a[u][p] == self.b[w][image[p]]
            });
            if !consistent {
                continue;
            }
            image[u] = w;
            used[w] = true;
            if self.extend(depth + 1, image, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }
}

impl Graph {
    /// Isomorphism test against `other`.
    pub fn is_isomorphic_to(&self, other: &Graph) -> bool {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return false;
        }
        let n = self.n();
        if n == 0 {
            return true;
        }
        let sig_a = signatures(self);
        let sig_b = signatures(other);
        {
            let mut sa = sig_a.clone();
            let mut sb = sig_b.clone();
            sa.sort();
            sb.sort();
            if sa != sb {
                return false;
            }
        }
        // candidate images: vertices of `other` with the same signature
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&w| sig_b[w] == sig_a[u]).collect())
            .collect();
        // match the most constrained vertices first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&u| (candidates[u].len(), std::cmp::Reverse(sig_a[u].0)));
        let mut matcher = Matcher {
            n,
            a: adjacency_matrix(self),
            b: adjacency_matrix(other),
            order,
            candidates,
        };
        matcher.extend(0, &mut vec![0; n], &mut vec![false; n])
    }
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_is_k22() {
        assert!(Graph::cycle(4).is_isomorphic_to(&Graph::complete_bipartite(2, 2)));
    }

    #[test]
    fn p3_is_not_k3() {
        assert!(!Graph::path(3).is_isomorphic_to(&Graph::complete(3)));
    }

    #[test]
    fn same_degree_sequence_different_graphs() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let two_triangles = Graph::complete(3).union(&Graph::complete(3));
        assert!(!Graph::cycle(6).is_isomorphic_to(&two_triangles));
        // C5 + C3 vs C8: both 2-regular on 8 vertices
        let c5c3 = Graph::cycle(5).union(&Graph::complete(3));
        assert!(!Graph::cycle(8).is_isomorphic_to(&c5c3));
    }

    #[test]
    fn relabelled_graph_matches() {
        let g = Graph::new(6, vec![(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
            .unwrap();
        // relabel via the permutation v -> (v * 5 + 1) % 6
        let perm = |v: usize| (v * 5 + 1) % 6;
        let h = Graph::new(6, g.edges().map(|(u, v)| (perm(u), perm(v))).collect::<Vec<_>>())
            .unwrap();
        assert!(g.is_isomorphic_to(&h));
        assert!(h.is_isomorphic_to(&g));
    }

    #[test]
    fn empty_and_trivial() {
        assert!(Graph::empty(0).is_isomorphic_to(&Graph::empty(0)));
        assert!(Graph::empty(3).is_isomorphic_to(&Graph::empty(3)));
        assert!(!Graph::empty(3).is_isomorphic_to(&Graph::empty(4)));
    }
}
