//! Electrical reductions with an exact multiplier ledger.
//!
//! Three weight-preserving moves on a [`WeightedGraph`] — parallel merge,
//! serial merge, and the mesh-to-star transformation — each compensated
//! by a rational multiplier so that `multiplier * tau_weighted(current)`
//! never changes. Reducing all the way down therefore recovers the
//! weighted spanning-tree count of the original graph.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::count::{tau_weighted, TreeCount};
use crate::weighted::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("serial merge needs degree exactly 2 at vertex {vertex} (found {degree})")]
    SerialDegree { vertex: usize, degree: usize },
    #[error("serial merge at {vertex} would form a loop: both edges lead to the same neighbour")]
    SerialParallelPair { vertex: usize },
    #[error("vertex {0} is a terminal and cannot be merged away")]
    SerialTerminal(usize),
    #[error("mesh-to-star needs at least 2 distinct vertices (got {0})")]
    MeshTooSmall(usize),
    #[error("mesh-to-star vertex list repeats vertex {0}")]
    MeshDuplicateVertex(usize),
    #[error("mesh-to-star: no edge between {0} and {1}")]
    MeshMissingEdge(usize, usize),
    #[error("mesh-to-star: more than one edge between {0} and {1}; merge parallels first")]
    MeshParallelEdge(usize, usize),
    #[error("mesh-to-star: edge ({0}, {1}) has non-unit weight")]
    MeshNonUnitWeight(usize, usize),
}

/// One performed reduction step, recorded with the vertex labels of the
/// graph *at the time of the step* (serial merges relabel vertices above
/// the removed one downward).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceStep {
    /// `merged` parallel edges between `u` and `v` collapsed into one of
    /// weight `weight` (the sum).
    Parallel { u: usize, v: usize, merged: usize, weight: BigRational },
    /// Degree-2 vertex `removed` with edges to `u` (weight `a`) and `w`
    /// (weight `b`) replaced by edge `(u, w)` of weight `a*b/(a+b)`;
    /// the ledger multiplier gained the factor `a + b`.
    Serial {
        removed: usize,
        u: usize,
        w: usize,
        a: BigRational,
        b: BigRational,
        weight: BigRational,
        factor: BigRational,
    },
    /// Unit clique on `clique` replaced by a star centred at the new
    /// vertex `center` with edge weights `size`; the ledger multiplier
    /// gained the factor `1 / size^2`.
    MeshToStar { clique: Vec<usize>, center: usize, size: usize },
}

fn fmt_rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for ReduceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceStep::Parallel { u, v, merged, weight } => write!(
                f,
                "parallel merge: {} edges ({}, {}) -> weight {}",
                merged,
                u,
                v,
                fmt_rat(weight)
            ),
            ReduceStep::Serial { removed, u, w, weight, factor, .. } => write!(
                f,
                "serial merge at {}: ({}, {}) + ({}, {}) -> ({}, {}) weight {}, multiplier x {}",
                removed,
                u,
                removed,
                removed,
                w,
                u,
                w,
                fmt_rat(weight),
                fmt_rat(factor)
            ),
            ReduceStep::MeshToStar { clique, center, size } => write!(
                f,
                "mesh-to-star on {:?}: new center {} with {} edges of weight {}, multiplier x 1/{}",
                clique,
                center,
                size,
                size,
                size * size
            ),
        }
    }
}

/// A weighted graph together with the rational multiplier accumulated by
/// reductions and an optional set of terminal vertices that serial
/// merges must not remove.
///
/// Invariant: `multiplier * tau_weighted(graph)` equals
/// `tau_weighted(original)` at all times.
#[derive(Debug, Clone)]
pub struct ReductionLedger {
    graph: WeightedGraph,
    multiplier: BigRational,
    terminals: BTreeSet<usize>,
}

impl ReductionLedger {
    pub fn new(graph: WeightedGraph) -> Self {
        ReductionLedger { graph, multiplier: BigRational::one(), terminals: BTreeSet::new() }
    }

    /// Marks vertices that must survive all serial merges.
    pub fn with_terminals<I>(graph: WeightedGraph, terminals: I) -> Result<Self, ReduceError>
    where
        I: IntoIterator<Item = usize>,
    {
        let n = graph.n();
        let mut set = BTreeSet::new();
        for t in terminals {
            if t >= n {
                return Err(ReduceError::VertexOutOfRange { vertex: t, n });
            }
            set.insert(t);
        }
        Ok(ReductionLedger { graph, multiplier: BigRational::one(), terminals: set })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn multiplier(&self) -> &BigRational {
        &self.multiplier
    }

    pub fn terminals(&self) -> impl Iterator<Item = usize> + '_ {
        self.terminals.iter().copied()
    }

    /// `multiplier * tau_weighted(current graph)` — the invariant value,
    /// i.e. the weighted spanning-tree count of the original graph.
    pub fn tau(&self) -> TreeCount {
        TreeCount::from(&self.multiplier * tau_weighted(&self.graph).into_ratio())
    }

    /// Collapses every parallel bundle into a single edge carrying the
    /// weight sum. Leaves the multiplier unchanged. Returns one step per
    /// collapsed bundle (empty if the graph was already simple).
    pub fn merge_parallel(&mut self) -> Vec<ReduceStep> {
        let mut groups: BTreeMap<(usize, usize), (usize, BigRational)> = BTreeMap::new();
        for (u, v, w) in self.graph.edges() {
            let entry = groups
                .entry((*u, *v))
                .or_insert_with(|| (0, BigRational::from_integer(0.into())));
            entry.0 += 1;
            entry.1 += w;
        }
        let steps: Vec<ReduceStep> = groups
            .iter()
            .filter(|(_, (count, _))| *count >= 2)
            .map(|(&(u, v), &(count, ref weight))| ReduceStep::Parallel {
                u,
                v,
                merged: count,
                weight: weight.clone(),
            })
            .collect();
        if !steps.is_empty() {
            let edges = groups
                .into_iter()
                .map(|((u, v), (_, w))| (u, v, w))
                .collect();
            self.graph = WeightedGraph::from_parts(self.graph.n(), edges);
        }
        steps
    }

    /// Replaces the degree-2 non-terminal vertex `v` (edges `(u, v, a)`
    /// and `(v, w, b)` with `u != w`) by the single edge `(u, w)` of
    /// weight `ab/(a+b)`, multiplying the ledger by `a + b`. Vertices
    /// above `v` are relabelled down by one.
    pub fn merge_serial(&mut self, v: usize) -> Result<ReduceStep, ReduceError> {
        let n = self.graph.n();
        if v >= n {
            return Err(ReduceError::VertexOutOfRange { vertex: v, n });
        }
        if self.terminals.contains(&v) {
            return Err(ReduceError::SerialTerminal(v));
        }
        let incident = self.graph.incident(v);
        if incident.len() != 2 {
            return Err(ReduceError::SerialDegree { vertex: v, degree: incident.len() });
        }
        let other = |idx: usize| -> (usize, BigRational) {
            let (a, b, w) = &self.graph.edges().nth(idx).cloned().unwrap();
            (if *a == v { *b } else { *a }, w.clone())
        };
        let (u, a) = other(incident[0]);
        let (w, b) = other(incident[1]);
        if u == w {
            return Err(ReduceError::SerialParallelPair { vertex: v });
        }
        let sum = &a + &b;
        let weight = &a * &b / &sum;
        let step = ReduceStep::Serial {
            removed: v,
            u,
            w,
            a: a.clone(),
            b: b.clone(),
            weight: weight.clone(),
            factor: sum.clone(),
        };
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let mut edges: Vec<(usize, usize, BigRational)> = self
            .graph
            .edges()
            .enumerate()
            .filter(|(i, _)| !incident.contains(i))
            .map(|(_, (x, y, wt))| {
                let (x, y) = (relabel(*x), relabel(*y));
                (x.min(y), x.max(y), wt.clone())
            })
            .collect();
        let (nu, nw) = (relabel(u), relabel(w));
        edges.push((nu.min(nw), nu.max(nw), weight));
        self.graph = WeightedGraph::from_parts(n - 1, edges);
        self.terminals = self.terminals.iter().map(|&t| relabel(t)).collect();
        self.multiplier *= sum;
        Ok(step)
    }

    /// Replaces the unit-weight clique on `clique` by a star: internal
    /// edges vanish, a new centre vertex appears with an edge of weight
    /// `s = clique.len()` to each clique vertex, and the multiplier
    /// gains `1/s^2`. The clique vertices stay in place (they may have
    /// other incident edges).
    pub fn mesh_to_star(&mut self, clique: &[usize]) -> Result<ReduceStep, ReduceError> {
        let n = self.graph.n();
        let s = clique.len();
        if s < 2 {
            return Err(ReduceError::MeshTooSmall(s));
        }
        let mut seen = BTreeSet::new();
        for &v in clique {
            if v >= n {
                return Err(ReduceError::VertexOutOfRange { vertex: v, n });
            }
            if !seen.insert(v) {
                return Err(ReduceError::MeshDuplicateVertex(v));
            }
        }
        // every pair must carry exactly one edge, of weight 1
        let one = BigRational::one();
        let mut internal: Vec<usize> = Vec::new();
        for i in 0..s {
            for j in i + 1..s {
                let (a, b) = (clique[i].min(clique[j]), clique[i].max(clique[j]));
                let matching: Vec<usize> = self
                    .graph
                    .edges()
                    .enumerate()
                    .filter(|(_, (x, y, _))| (*x, *y) == (a, b))
                    .map(|(idx, _)| idx)
                    .collect();
                match matching.len() {
                    0 => return Err(ReduceError::MeshMissingEdge(a, b)),
                    1 => {
                        let (_, _, w) = self.graph.edges().nth(matching[0]).unwrap();
                        if *w != one {
                            return Err(ReduceError::MeshNonUnitWeight(a, b));
                        }
                        internal.push(matching[0]);
                    }
                    _ => return Err(ReduceError::MeshParallelEdge(a, b)),
                }
            }
        }
        let center = n;
        let weight = BigRational::from_integer(s.into());
        let mut edges: Vec<(usize, usize, BigRational)> = self
            .graph
            .edges()
            .enumerate()
            .filter(|(i, _)| !internal.contains(i))
            .map(|(_, e)| e.clone())
            .collect();
        let mut sorted_clique: Vec<usize> = clique.to_vec();
        sorted_clique.sort_unstable();
        for &v in &sorted_clique {
            edges.push((v, center, weight.clone()));
        }
        self.graph = WeightedGraph::from_parts(n + 1, edges);
        self.multiplier /= BigRational::from_integer((s * s).into());
        Ok(ReduceStep::MeshToStar { clique: sorted_clique, center, size: s })
    }

    /// Runs parallel and serial merges to a fixpoint: all parallel
    /// bundles first, then one serial merge (lowest eligible vertex),
    /// repeating until neither applies. Terminals are never merged away.
    pub fn reduce(&mut self) -> Vec<ReduceStep> {
        let mut trace = Vec::new();
        loop {
            trace.extend(self.merge_parallel());
            let eligible = (0..self.graph.n()).find(|&v| {
                !self.terminals.contains(&v) && self.serial_eligible(v)
            });
            match eligible {
                Some(v) => {
                    let step = self.merge_serial(v).expect("eligibility checked");
                    trace.push(step);
                }
                None => return trace,
            }
        }
    }

    fn serial_eligible(&self, v: usize) -> bool {
        let incident = self.graph.incident(v);
        if incident.len() != 2 {
            return false;
        }
        let ends: Vec<usize> = incident
            .iter()
            .map(|&i| {
                let (a, b, _) = self.graph.edges().nth(i).unwrap();
                if *a == v {
                    *b
                } else {
                    *a
                }
            })
            .collect();
        ends[0] != ends[1]
    }
}

/// Reduces a copy of `g` to a fixpoint and returns the recovered
/// weighted spanning-tree count. Always equals `tau_weighted(g)`.
pub fn reduce_to_tau(g: &WeightedGraph) -> TreeCount {
    let mut ledger = ReductionLedger::new(g.clone());
    ledger.reduce();
    ledger.tau()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn unit(g: &Graph) -> WeightedGraph {
        WeightedGraph::from_graph(g)
    }

    #[test]
    fn parallel_merge_sums_weights() {
        let g = WeightedGraph::new(2, vec![(0, 1, rat(1, 2)), (0, 1, rat(1, 3))]).unwrap();
        let mut ledger = ReductionLedger::new(g);
        let before = ledger.tau();
        let steps = ledger.merge_parallel();
        assert_eq!(
            steps,
            vec![ReduceStep::Parallel { u: 0, v: 1, merged: 2, weight: rat(5, 6) }]
        );
        assert_eq!(ledger.graph().edge_count(), 1);
        assert_eq!(ledger.multiplier(), &rat(1, 1));
        assert_eq!(ledger.tau(), before);
        // idempotent: nothing left to merge
        assert!(ledger.merge_parallel().is_empty());
    }

    #[test]
    fn serial_merge_on_path() {
        // 0 -a- 1 -b- 2 with a = 2, b = 3
        let g = WeightedGraph::new(3, vec![(0, 1, rat(2, 1)), (1, 2, rat(3, 1))]).unwrap();
        let mut ledger = ReductionLedger::new(g);
        let before = ledger.tau();
        assert_eq!(before, TreeCount::from(6u64));
        let step = ledger.merge_serial(1).unwrap();
        match step {
            ReduceStep::Serial { removed, weight, factor, .. } => {
                assert_eq!(removed, 1);
                assert_eq!(weight, rat(6, 5));
                assert_eq!(factor, rat(5, 1));
            }
            other => panic!("unexpected step {:?}", other),
        }
        assert_eq!(ledger.graph().n(), 2);
        assert_eq!(ledger.multiplier(), &rat(5, 1));
        assert_eq!(ledger.tau(), before);
    }

    #[test]
    fn serial_needs_degree_two() {
        let mut ledger = ReductionLedger::new(unit(&Graph::complete(4)));
        assert_eq!(
            ledger.merge_serial(0),
            Err(ReduceError::SerialDegree { vertex: 0, degree: 3 })
        );
        // triangle vertices do have degree 2: the merge applies and keeps
        // the invariant
        let mut tri = ReductionLedger::new(unit(&Graph::complete(3)));
        let before = tri.tau();
        tri.merge_serial(0).unwrap();
        assert_eq!(tri.multiplier(), &rat(2, 1));
        assert_eq!(tri.tau(), before);
    }

    #[test]
    fn serial_rejects_terminal_and_parallel_pair() {
        let path = WeightedGraph::new(3, vec![(0, 1, rat(1, 1)), (1, 2, rat(1, 1))]).unwrap();
        let mut ledger = ReductionLedger::with_terminals(path, [1]).unwrap();
        assert_eq!(ledger.merge_serial(1), Err(ReduceError::SerialTerminal(1)));

        let doubled = WeightedGraph::new(2, vec![(0, 1, rat(1, 1)), (0, 1, rat(2, 1))]).unwrap();
        let mut ledger = ReductionLedger::new(doubled);
        assert_eq!(
            ledger.merge_serial(0),
            Err(ReduceError::SerialParallelPair { vertex: 0 })
        );
        assert_eq!(
            ledger.merge_serial(5),
            Err(ReduceError::VertexOutOfRange { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn mesh_to_star_on_triangle() {
        let mut ledger = ReductionLedger::new(unit(&Graph::complete(3)));
        let before = ledger.tau();
        assert_eq!(before, TreeCount::from(3u64));
        let step = ledger.mesh_to_star(&[0, 1, 2]).unwrap();
        assert_eq!(
            step,
            ReduceStep::MeshToStar { clique: vec![0, 1, 2], center: 3, size: 3 }
        );
        assert_eq!(ledger.graph().n(), 4);
        assert_eq!(ledger.graph().edge_count(), 3);
        assert_eq!(ledger.multiplier(), &rat(1, 9));
        assert_eq!(ledger.tau(), before);
    }

    #[test]
    fn mesh_to_star_inside_larger_graph() {
        // K4 with a pendant vertex; star the K4
        let g = Graph::complete(4).union(&Graph::empty(1)).add_edge(3, 4).unwrap();
        let mut ledger = ReductionLedger::new(unit(&g));
        let before = ledger.tau();
        ledger.mesh_to_star(&[0, 1, 2, 3]).unwrap();
        assert_eq!(ledger.tau(), before);
        // and reduce the rest of the way
        ledger.reduce();
        assert_eq!(ledger.tau(), before);
    }

    #[test]
    fn mesh_to_star_errors() {
        let mut ledger = ReductionLedger::new(unit(&Graph::path(3)));
        assert_eq!(ledger.mesh_to_star(&[0]), Err(ReduceError::MeshTooSmall(1)));
        assert_eq!(
            ledger.mesh_to_star(&[0, 0]),
            Err(ReduceError::MeshDuplicateVertex(0))
        );
        assert_eq!(
            ledger.mesh_to_star(&[0, 2]),
            Err(ReduceError::MeshMissingEdge(0, 2))
        );
        let heavy = WeightedGraph::new(2, vec![(0, 1, rat(2, 1))]).unwrap();
        let mut ledger = ReductionLedger::new(heavy);
        assert_eq!(
            ledger.mesh_to_star(&[0, 1]),
            Err(ReduceError::MeshNonUnitWeight(0, 1))
        );
        let doubled =
            WeightedGraph::new(2, vec![(0, 1, rat(1, 2)), (0, 1, rat(1, 2))]).unwrap();
        let mut ledger = ReductionLedger::new(doubled);
        assert_eq!(
            ledger.mesh_to_star(&[0, 1]),
            Err(ReduceError::MeshParallelEdge(0, 1))
        );
    }

    #[test]
    fn reduce_collapses_cycle_with_pendant() {
        // C4 with a pendant: tau = 4
        let g = Graph::cycle(4).union(&Graph::empty(1)).add_edge(0, 4).unwrap();
        let mut ledger = ReductionLedger::new(unit(&g));
        let trace = ledger.reduce();
        assert!(!trace.is_empty());
        assert_eq!(ledger.tau(), TreeCount::from(4u64));
        // fully reduced: no degree-2 vertex with distinct neighbours left
        assert!(ledger.graph().n() <= 2);
    }

    #[test]
    fn reduce_to_tau_equals_direct_count() {
        for g in [
            Graph::complete(4),
            Graph::cycle(5),
            Graph::complete_bipartite(2, 3),
            Graph::path(6),
        ] {
            assert_eq!(reduce_to_tau(&unit(&g)), tau_weighted(&unit(&g)), "on {:?}", g);
        }
    }

    #[test]
    fn terminals_survive_reduction() {
        let g = unit(&Graph::path(5));
        let mut ledger = ReductionLedger::with_terminals(g, [0, 4]).unwrap();
        ledger.reduce();
        // interior vertices all merged away, terminals remain
        assert_eq!(ledger.graph().n(), 2);
        assert_eq!(ledger.terminals().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(ledger.tau(), TreeCount::one());
        assert_eq!(
            ReductionLedger::with_terminals(unit(&Graph::path(2)), [7]).unwrap_err(),
            ReduceError::VertexOutOfRange { vertex: 7, n: 2 }
        );
    }
}
