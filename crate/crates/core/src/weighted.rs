//! Weighted multigraphs with exact rational weights.

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} not allowed")]
    Loop(usize),
    #[error("edge weight must be positive")]
    NonPositiveWeight,
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
}

/// Undirected multigraph on `0..n` with positive rational edge weights.
/// Parallel edges are allowed and kept separate; endpoints are stored
/// `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(usize, usize, BigRational)>,
}

impl WeightedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, WeightError>
    where
        I: IntoIterator<Item = (usize, usize, BigRational)>,
    {
        let mut out = Vec::new();
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(WeightError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(WeightError::Loop(u));
            }
            if w <= BigRational::zero() {
                return Err(WeightError::NonPositiveWeight);
            }
            out.push((u.min(v), u.max(v), w));
        }
        Ok(WeightedGraph { n, edges: out })
    }

    /// Unit-weight copy of a simple graph.
    pub fn from_graph(g: &Graph) -> Self {
        let one = || BigRational::from_integer(1.into());
        WeightedGraph {
            n: g.n(),
            edges: g.edges().map(|(u, v)| (u, v, one())).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &(usize, usize, BigRational)> {
        self.edges.iter()
    }

    /// Number of incident edge slots (parallel edges counted separately).
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b, _)| a == v || b == v).count()
    }

    /// Indices into the edge list of the edges incident to `v`.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].0 == v || self.edges[i].1 == v)
            .collect()
    }

    /// Weighted Laplacian: `L = D - A` where `A` sums parallel weights
    /// and `D` holds the weighted degrees.
    pub fn laplacian(&self) -> Vec<Vec<BigRational>> {
        let mut l = vec![vec![BigRational::zero(); self.n]; self.n];
        for (u, v, w) in &self.edges {
            l[*u][*v] -= w;
            l[*v][*u] -= w;
            l[*u][*u] += w;
            l[*v][*v] += w;
        }
        l
    }

    /// Connectivity in the underlying multigraph.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for (u, v, _) in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    pub(crate) fn from_parts(n: usize, edges: Vec<(usize, usize, BigRational)>) -> Self {
        WeightedGraph { n, edges }
    }
}

/// Contracts edge `e` of a simple graph: the endpoints merge, the edge
/// itself disappears, other edges keep their identity (so parallel edges
/// can appear), and vertices are relabelled downward to stay contiguous.
/// The result is a unit-weight multigraph.
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<WeightedGraph, WeightError> {
    if !g.has_edge(u, v) {
        for x in [u, v] {
            if x >= g.n() {
                return Err(WeightError::VertexOutOfRange { vertex: x, n: g.n() });
            }
        }
        return Err(WeightError::MissingEdge(u.min(v), u.max(v)));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let relabel = |x: usize| {
        let x = if x == gone { keep } else { x };
        if x > gone {
            x - 1
        } else {
            x
        }
    };
    let one = || BigRational::from_integer(1.into());
    let edges = g
        .edges()
        .filter(|&(a, b)| (a, b) != (keep, gone))
        .map(|(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            (a.min(b), a.max(b), one())
        })
        .collect();
    Ok(WeightedGraph { n: g.n() - 1, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn laplacian_of_weighted_triangle() {
        // triangle with weights 1, 2, 1/2 on (0,1), (0,2), (1,2)
        let g = WeightedGraph::new(3, vec![(0, 1, rat(1, 1)), (0, 2, rat(2, 1)), (1, 2, rat(1, 2))])
            .unwrap();
        let l = g.laplacian();
        assert_eq!(l[0][0], rat(3, 1));
        assert_eq!(l[1][1], rat(3, 2));
        assert_eq!(l[2][2], rat(5, 2));
        assert_eq!(l[0][1], rat(-1, 1));
        assert_eq!(l[1][2], rat(-1, 2));
        // rows sum to zero
        for row in &l {
            assert_eq!(row.iter().cloned().sum::<BigRational>(), rat(0, 1));
        }
    }

    #[test]
    fn parallel_edges_sum_in_laplacian() {
        let g =
            WeightedGraph::new(2, vec![(0, 1, rat(1, 3)), (1, 0, rat(2, 3))]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(0), 2);
        let l = g.laplacian();
        assert_eq!(l[0][1], rat(-1, 1));
        assert_eq!(l[0][0], rat(1, 1));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            WeightedGraph::new(2, vec![(0, 0, rat(1, 1))]),
            Err(WeightError::Loop(0))
        );
        assert_eq!(
            WeightedGraph::new(2, vec![(0, 1, rat(0, 1))]),
            Err(WeightError::NonPositiveWeight)
        );
        assert_eq!(
            WeightedGraph::new(2, vec![(0, 1, rat(-1, 2))]),
            Err(WeightError::NonPositiveWeight)
        );
        assert_eq!(
            WeightedGraph::new(2, vec![(0, 2, rat(1, 1))]),
            Err(WeightError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn contract_triangle_edge_gives_parallel_pair() {
        let g = Graph::complete(3);
        let c = contract_edge(&g, 0, 1).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.edge_count(), 2);
        // both surviving edges join the merged vertex to vertex 1 (old 2)
        for (u, v, _) in c.edges() {
            assert_eq!((*u, *v), (0, 1));
        }
    }

    #[test]
    fn contract_path_edge() {
        let g = Graph::path(4);
        let c = contract_edge(&g, 1, 2).unwrap();
        assert_eq!(c.n(), 3);
        let ends: Vec<(usize, usize)> = c.edges().map(|&(u, v, _)| (u, v)).collect();
        assert_eq!(ends, vec![(0, 1), (1, 2)]);
        assert!(matches!(
            contract_edge(&g, 0, 2),
            Err(WeightError::MissingEdge(0, 2))
        ));
    }
}
