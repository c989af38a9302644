//! Simple undirected graphs with deterministic edge order.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised by graph constructors and editing operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} not allowed")]
    Loop(usize),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("shift endpoints must be distinct (got {0})")]
    ShiftSameVertex(usize),
    #[error("partial shift requires x adjacent to v and outside N[w] (v={v}, x={x}, w={w})")]
    ShiftPrecondition { v: usize, x: usize, w: usize },
    #[error("expected {expected} parts, got {got}")]
    PartCountMismatch { expected: usize, got: usize },
}

/// Simple undirected graph on vertex set `0..n`.
///
/// Edges are stored as a sorted set of `(min, max)` pairs, so iteration
/// order — and everything derived from it, such as text output and census
/// reports — is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    /// Builds a graph from an edge list. Endpoint order and duplicate
    /// mentions of an edge are irrelevant; loops and out-of-range
    /// endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            let (u, v) = g.check_pair(u, v)?;
            g.edges.insert((u, v));
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(usize, usize), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok((u.min(v), u.max(v)))
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph { n, edges: edges.collect() }
    }

    /// Complete bipartite graph `K_{p,q}` with sides `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let edges = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)));
        Graph { n: p + q, edges: edges.collect() }
    }

    /// Path on `n` vertices, edges `(i, i+1)`.
    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|v| (v - 1, v)).collect() }
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.edges.insert((0, n - 1));
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted `(min, max)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        assert!(v < self.n);
        let mut out: Vec<usize> = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    /// Adjacency lists for all vertices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n);
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Minimum degree; 0 for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Copy of the graph with edge `e` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let (u, v) = self.check_pair(u, v)?;
        if self.edges.contains(&(u, v)) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let mut g = self.clone();
        g.edges.insert((u, v));
        Ok(g)
    }

    /// Copy of the graph with edge `e` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let (u, v) = self.check_pair(u, v)?;
        if !self.edges.contains(&(u, v)) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.edges.remove(&(u, v));
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph { n: self.n + other.n, edges }
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = self.union(other);
        for u in 0..shift {
            for v in shift..g.n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    /// Complement within the same vertex set.
    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.edges.contains(&(u, v)))
            .collect();
        Graph { n: self.n, edges }
    }

    /// Connectivity check via breadth-first search. Graphs on 0 or 1
    /// vertices count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(v) = queue.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Proper 2-colouring if one exists: `(side0, side1)`, both sorted.
    /// Within each component the lowest-numbered vertex goes to side 0.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let side = |c: u8| (0..self.n).filter(|&v| color[v] == c).collect();
        Some((side(0), side(1)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Moves a single edge endpoint: deletes `vx` and adds `wx`.
    /// Requires `x` adjacent to `v` and outside the closed neighbourhood
    /// of `w`.
    pub fn partial_shift(&self, v: usize, x: usize, w: usize) -> Result<Graph, GraphError> {
        for u in [v, x, w] {
            if u >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
            }
        }
        if !self.has_edge(v, x) || x == w || self.has_edge(w, x) {
            return Err(GraphError::ShiftPrecondition { v, x, w });
        }
        let mut g = self.clone();
        g.edges.remove(&(v.min(x), v.max(x)));
        g.edges.insert((w.min(x), w.max(x)));
        Ok(g)
    }

    /// Full shift from `v` to `w`: every neighbour of `v` outside `N[w]`
    /// loses its edge to `v` and gains one to `w`. The set of moved
    /// vertices is determined on the input graph.
    pub fn shift(&self, v: usize, w: usize) -> Result<Graph, GraphError> {
        for u in [v, w] {
            if u >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
            }
        }
        if v == w {
            return Err(GraphError::ShiftSameVertex(v));
        }
        let moved: Vec<usize> = self
            .neighbors(v)
            .into_iter()
            .filter(|&x| x != w && !self.has_edge(w, x))
            .collect();
        let mut g = self.clone();
        for x in moved {
            g.edges.remove(&(v.min(x), v.max(x)));
            g.edges.insert((w.min(x), w.max(x)));
        }
        Ok(g)
    }

    /// Generalized join: replaces vertex `i` of `self` by the graph
    /// `parts[i]` and connects all vertices of `parts[i]` and `parts[j]`
    /// whenever `ij` is an edge of `self`. Parts occupy consecutive
    /// vertex ranges in order.
    pub fn generalized_join(&self, parts: &[Graph]) -> Result<Graph, GraphError> {
        if parts.len() != self.n {
            return Err(GraphError::PartCountMismatch { expected: self.n, got: parts.len() });
        }
        let mut offset = Vec::with_capacity(self.n + 1);
        let mut total = 0usize;
        for part in parts {
            offset.push(total);
            total += part.n();
        }
        offset.push(total);
        let mut edges = BTreeSet::new();
        for (i, part) in parts.iter().enumerate() {
            edges.extend(part.edges().map(|(u, v)| (u + offset[i], v + offset[i])));
        }
        for (i, j) in self.edges() {
            for u in offset[i]..offset[i + 1] {
                for v in offset[j]..offset[j + 1] {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
        }
        Ok(Graph { n: total, edges })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
