//! Vertex and edge connectivity via unit-capacity max-flow.

use crate::graph::Graph;

/// Dense residual network for the tiny flow problems that arise here.
/// `cap[u][v]` always holds the residual capacity of arc `u -> v`.
struct DenseFlow {
    n: usize,
    cap: Vec<Vec<i32>>,
}

impl DenseFlow {
    fn new(n: usize) -> Self {
        DenseFlow { n, cap: vec![vec![0; n]; n] }
    }

    fn add_arc(&mut self, u: usize, v: usize, c: i32) {
        self.cap[u][v] += c;
    }

    /// Edmonds-Karp: repeatedly augment along a shortest residual path.
    fn max_flow(&mut self, s: usize, t: usize) -> i32 {
        let mut total = 0;
        loop {
            let Some(parent) = self.bfs(s, t) else {
                return total;
            };
            let mut bottleneck = i32::MAX;
            let mut v = t;
            while v != s {
                let u = parent[v];
                bottleneck = bottleneck.min(self.cap[u][v]);
                v = u;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.cap[u][v] -= bottleneck;
                self.cap[v][u] += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }

    fn bfs(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        parent[s] = s;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in 0..self.n {
                if parent[v] == usize::MAX && self.cap[u][v] > 0 {
                    parent[v] = u;
                    if v == t {
                        return Some(parent);
                    }
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Vertices reachable from `s` in the residual network; after a
    /// maximum flow this is the source side of a minimum cut.
    fn residual_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for (v, &c) in self.cap[u].iter().enumerate() {
                if c > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

impl Graph {
    /// Vertex connectivity.
    ///
    /// Disconnected graphs (including the empty graph on >= 2 vertices)
    /// have connectivity 0; complete graphs `K_n` have `n - 1`; otherwise
    /// this is the minimum over all non-adjacent pairs `(u, v)` of the
    /// number of internally disjoint `u`-`v` paths, computed by max-flow
    /// on the vertex-split network.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n();
        if n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        if self.edge_count() == n * (n - 1) / 2 {
            return n - 1;
        }
        let mut best = usize::MAX;
        for u in 0..n {
            for v in u + 1..n {
                if self.has_edge(u, v) {
                    continue;
                }
                best = best.min(self.local_vertex_connectivity(u, v));
            }
        }
        best
    }

    /// Number of internally disjoint paths between the non-adjacent pair
    /// `(u, v)`: max-flow where each vertex other than `u`, `v` is split
    /// into an in/out pair joined by a unit arc.
    fn local_vertex_connectivity(&self, s: usize, t: usize) -> usize {
        let n = self.n();
        // node 2i = "in" copy of i, 2i + 1 = "out" copy
        let mut net = DenseFlow::new(2 * n);
        for v in 0..n {
            let c = if v == s || v == t { n as i32 } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, c);
        }
        for (a, b) in self.edges() {
            net.add_arc(2 * a + 1, 2 * b, 1);
            net.add_arc(2 * b + 1, 2 * a, 1);
        }
        net.max_flow(2 * s + 1, 2 * t) as usize
    }

    /// Edge connectivity. Disconnected graphs and `K_1` have edge
    /// connectivity 0.
    pub fn edge_connectivity(&self) -> usize {
        self.edge_connectivity_with_cut().0
    }

    /// Edge connectivity together with one side of a minimum edge cut
    /// (the side containing vertex 0, sorted). For a disconnected graph
    /// the side is the component of vertex 0 and the cut size is 0.
    pub fn edge_connectivity_with_cut(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        if n <= 1 {
            return (0, (0..n).collect());
        }
        let mut best = usize::MAX;
        let mut best_side: Vec<usize> = Vec::new();
        for t in 1..n {
            let mut net = DenseFlow::new(n);
            for (a, b) in self.edges() {
                net.add_arc(a, b, 1);
                net.add_arc(b, a, 1);
            }
            let flow = net.max_flow(0, t) as usize;
            if flow < best {
                best = flow;
                let side = net.residual_side(0);
                best_side = (0..n).filter(|&v| side[v]).collect();
                if best == 0 {
                    break;
                }
            }
        }
        (best, best_side)
    }
}
