//! Spanning-tree counts.
//!
//! [`tau`] and [`tau_weighted`] go through Laplacian minors and exact
//! determinants. [`tau_oracle`] is a deliberately independent brute
//! force — subset enumeration plus union-find — used to cross-check the
//! algebraic path in tests. [`tau_generalized_join`] multiplies shifted
//! eigenvalue products of the parts against a weighted count of the base
//! graph.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{det_bareiss, det_rational};
use crate::weighted::WeightedGraph;

/// Exact spanning-tree count (or weighted spanning-tree sum).
///
/// Always non-negative; integral whenever all edge weights are integers.
/// Displays as a plain decimal integer when integral and as `p/q`
/// otherwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TreeCount(BigRational);

impl TreeCount {
    pub fn zero() -> Self {
        TreeCount(BigRational::zero())
    }

    pub fn one() -> Self {
        TreeCount(BigRational::one())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The count as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }
}

impl From<BigRational> for TreeCount {
    fn from(r: BigRational) -> Self {
        assert!(!r.is_negative(), "tree counts are non-negative");
        TreeCount(r)
    }
}

impl From<BigInt> for TreeCount {
    fn from(i: BigInt) -> Self {
        TreeCount::from(BigRational::from_integer(i))
    }
}

impl From<u64> for TreeCount {
    fn from(i: u64) -> Self {
        TreeCount(BigRational::from_integer(i.into()))
    }
}

impl fmt::Display for TreeCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.to_integer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for TreeCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeCount({})", self)
    }
}

/// Integer Laplacian `D - A` of a simple graph.
fn laplacian_int(g: &Graph) -> Vec<Vec<BigInt>> {
    let n = g.n();
    let mut l = vec![vec![BigInt::zero(); n]; n];
    for (u, v) in g.edges() {
        l[u][v] -= 1;
        l[v][u] -= 1;
        l[u][u] += 1;
        l[v][v] += 1;
    }
    l
}

/// Drops the last row and column.
fn principal_minor<T>(mut m: Vec<Vec<T>>) -> Vec<Vec<T>> {
    m.pop();
    for row in &mut m {
        row.pop();
    }
    m
}

/// Number of spanning trees via the matrix-tree theorem: any cofactor of
/// the Laplacian. Graphs on 0 or 1 vertices have one spanning tree
/// (themselves); disconnected graphs have 0.
pub fn tau(g: &Graph) -> TreeCount {
    TreeCount::from(det_bareiss(principal_minor(laplacian_int(g))))
}

/// Weighted spanning-tree sum: each spanning tree contributes the
/// product of its edge weights.
pub fn tau_weighted(g: &WeightedGraph) -> TreeCount {
    TreeCount::from(det_rational(principal_minor(g.laplacian())))
}

/// Brute-force spanning-tree count: enumerates all `(n-1)`-edge subsets
/// and keeps the acyclic spanning ones, tested with union-find. Shares
/// no code with [`tau`]; this is the oracle the algebraic path is
/// checked against.
pub fn tau_oracle(g: &Graph) -> TreeCount {
    let n = g.n();
    if n <= 1 {
        return TreeCount::one();
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let need = n - 1;
    if edges.len() < need {
        return TreeCount::zero();
    }
    let mut count: u64 = 0;
    let mut chosen = Vec::with_capacity(need);
    subsets(&edges, 0, need, n, &mut chosen, &mut count);
    TreeCount::from(count)
}

fn subsets(
    edges: &[(usize, usize)],
    from: usize,
    need: usize,
    n: usize,
    chosen: &mut Vec<(usize, usize)>,
    count: &mut u64,
) {
    if need == 0 {
        if spans_acyclically(chosen, n) {
            *count += 1;
        }
        return;
    }
    // not enough edges left to finish the subset
    if edges.len() - from < need {
        return;
    }
    for i in from..edges.len() {
        chosen.push(edges[i]);
        subsets(edges, i + 1, need - 1, n, chosen, count);
        chosen.pop();
    }
}

/// `n - 1` edges form a spanning tree iff no union-find merge closes a
/// cycle.
fn spans_acyclically(edges: &[(usize, usize)], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Exact product of the shifted Laplacian spectrum:
/// `det(L_H + c I) / c = prod_k (mu_k + c)` over the nonzero-index
/// eigenvalues `mu_1 >= ... >= mu_{n-1}` (and the zero eigenvalue
/// contributes the divided-out factor `c`). Requires `c > 0`; the value
/// is rational even when individual eigenvalues are not.
pub fn eigen_shift_product(h: &Graph, c: &BigRational) -> BigRational {
    assert!(c.is_positive(), "shift must be positive");
    let mut m: Vec<Vec<BigRational>> = laplacian_int(h)
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += c;
    }
    det_rational(m) / c
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JoinCountError {
    #[error("base graph must be connected")]
    DisconnectedBase,
    #[error("expected {expected} parts, got {got}")]
    PartCountMismatch { expected: usize, got: usize },
    #[error("part {0} is empty; parts must have at least one vertex")]
    EmptyPart(usize),
}

/// Spanning-tree count of the generalized join `G[H_1, ..., H_n]`
/// without assembling it: the product over parts of
/// `eigen_shift_product(H_i, c_i) / |H_i|` — where `c_i` sums the part
/// sizes adjacent to `i` in `G` — times the weighted count of `G` with
/// edge `ij` weighted `|H_i| * |H_j|`.
pub fn tau_generalized_join(g: &Graph, parts: &[Graph]) -> Result<TreeCount, JoinCountError> {
    if parts.len() != g.n() {
        return Err(JoinCountError::PartCountMismatch { expected: g.n(), got: parts.len() });
    }
    if !g.is_connected() {
        return Err(JoinCountError::DisconnectedBase);
    }
    if let Some(i) = parts.iter().position(|p| p.n() == 0) {
        return Err(JoinCountError::EmptyPart(i));
    }
    if g.n() == 1 {
        return Ok(tau(&parts[0]));
    }
    let sizes: Vec<BigRational> = parts
        .iter()
        .map(|p| BigRational::from_integer(p.n().into()))
        .collect();
    let mut acc = BigRational::one();
    for (i, part) in parts.iter().enumerate() {
        let c: BigRational = g.neighbors(i).into_iter().map(|j| sizes[j].clone()).sum();
        acc *= eigen_shift_product(part, &c) / &sizes[i];
    }
    let weighted = WeightedGraph::new(
        g.n(),
        g.edges().map(|(i, j)| (i, j, &sizes[i] * &sizes[j])),
    )
    .expect("base edges are valid and part sizes positive");
    acc *= tau_weighted(&weighted).into_ratio();
    Ok(TreeCount::from(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn display_formats() {
        assert_eq!(TreeCount::from(16u64).to_string(), "16");
        assert_eq!(TreeCount::from(rat(7, 2)).to_string(), "7/2");
        assert_eq!(TreeCount::zero().to_string(), "0");
        assert_eq!(TreeCount::from(16u64).as_integer(), Some(BigInt::from(16)));
        assert_eq!(TreeCount::from(rat(7, 2)).as_integer(), None);
    }

    #[test]
    fn tau_known_graphs() {
        assert_eq!(tau(&Graph::path(3)), TreeCount::one());
        assert_eq!(tau(&Graph::cycle(4)), TreeCount::from(4u64));
        assert_eq!(tau(&Graph::complete(4)), TreeCount::from(16u64));
        // Cayley: tau(K_n) = n^(n-2)
        assert_eq!(tau(&Graph::complete(7)), TreeCount::from(16807u64));
        // tau(K_{p,q}) = p^(q-1) q^(p-1)
        assert_eq!(tau(&Graph::complete_bipartite(2, 3)), TreeCount::from(12u64));
        assert_eq!(tau(&Graph::complete_bipartite(3, 3)), TreeCount::from(81u64));
    }

    #[test]
    fn tau_degenerate_cases() {
        assert_eq!(tau(&Graph::empty(1)), TreeCount::one());
        assert_eq!(tau(&Graph::empty(0)), TreeCount::one());
        assert_eq!(tau(&Graph::empty(4)), TreeCount::zero());
        let disconnected = Graph::new(5, vec![(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(tau(&disconnected), TreeCount::zero());
    }

    #[test]
    fn oracle_matches_on_named_graphs() {
        for g in [
            Graph::path(5),
            Graph::cycle(6),
            Graph::complete(5),
            Graph::complete_bipartite(2, 3),
            Graph::complete(4).delete_edge(0, 1).unwrap(),
            Graph::new(5, vec![(0, 1), (1, 2), (3, 4)]).unwrap(),
        ] {
            assert_eq!(tau(&g), tau_oracle(&g), "mismatch on {:?}", g);
        }
    }

    #[test]
    fn weighted_triangle_example() {
        // weights 1, 2, 3 on the triangle: sum over the three 2-edge trees
        // of weight products = 2 + 3 + 6 = 11
        let g = WeightedGraph::new(
            3,
            vec![(0, 1, rat(1, 1)), (0, 2, rat(2, 1)), (1, 2, rat(3, 1))],
        )
        .unwrap();
        assert_eq!(tau_weighted(&g), TreeCount::from(11u64));
    }

    #[test]
    fn weighted_rational_and_parallel() {
        // parallel pair with weights 1/2 and 1/3 behaves like one edge of
        // weight 5/6
        let g = WeightedGraph::new(2, vec![(0, 1, rat(1, 2)), (0, 1, rat(1, 3))]).unwrap();
        assert_eq!(tau_weighted(&g), TreeCount::from(rat(5, 6)));
    }

    #[test]
    fn unit_weights_recover_plain_count() {
        let g = Graph::complete(4).delete_edge(1, 2).unwrap();
        assert_eq!(tau_weighted(&WeightedGraph::from_graph(&g)), tau(&g));
    }

    #[test]
    fn eigen_shift_product_examples() {
        // K2: spectrum {0, 2}; esp(K2, c) = c + 2
        assert_eq!(eigen_shift_product(&Graph::complete(2), &rat(3, 1)), rat(5, 1));
        // empty graph on m vertices: esp = c^(m-1)
        assert_eq!(eigen_shift_product(&Graph::empty(3), &rat(2, 1)), rat(4, 1));
        // K3: spectrum {0, 3, 3}; esp(K3, 1) = 16
        assert_eq!(eigen_shift_product(&Graph::complete(3), &rat(1, 1)), rat(16, 1));
        // rational shift
        assert_eq!(eigen_shift_product(&Graph::complete(2), &rat(1, 2)), rat(5, 2));
    }

    #[test]
    fn generalized_join_matches_assembled_graph() {
        // K2 base with empty parts of sizes 2 and 3 is K_{2,3}
        let base = Graph::complete(2);
        let parts = [Graph::empty(2), Graph::empty(3)];
        let by_formula = tau_generalized_join(&base, &parts).unwrap();
        assert_eq!(by_formula, TreeCount::from(12u64));
        let assembled = base.generalized_join(&parts).unwrap();
        assert_eq!(by_formula, tau(&assembled));
    }

    #[test]
    fn generalized_join_single_vertex_base() {
        let base = Graph::complete(1);
        let c5 = Graph::cycle(5);
        assert_eq!(
            tau_generalized_join(&base, std::slice::from_ref(&c5)).unwrap(),
            TreeCount::from(5u64)
        );
    }

    #[test]
    fn generalized_join_errors() {
        let base = Graph::empty(2);
        assert_eq!(
            tau_generalized_join(&base, &[Graph::empty(1), Graph::empty(1)]),
            Err(JoinCountError::DisconnectedBase)
        );
        let base = Graph::complete(2);
        assert_eq!(
            tau_generalized_join(&base, &[Graph::empty(1)]),
            Err(JoinCountError::PartCountMismatch { expected: 2, got: 1 })
        );
        assert_eq!(
            tau_generalized_join(&base, &[Graph::empty(0), Graph::empty(1)]),
            Err(JoinCountError::EmptyPart(0))
        );
    }

    #[test]
    #[should_panic(expected = "non-negative")]
    fn negative_count_rejected() {
        let _ = TreeCount::from(rat(-1, 1));
    }
}
