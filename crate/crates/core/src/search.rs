//! Exhaustive census over small graph classes.
//!
//! A [`ClassSpec`] names the connected graphs of a given order with
//! prescribed vertex or edge connectivity, optionally an exact minimum
//! degree, and optionally restricted to bipartite graphs. Enumeration is
//! over labeled graphs — a bitmask over the vertex pairs, or over the
//! `p x (n-p)` bipartite adjacency patterns per split — with filters
//! ordered cheapest-first. The census records the maximum spanning-tree
//! count and all maximizers up to isomorphism, and [`verify_theorem`]
//! compares the result against the predicted bound and extremal graphs.
//!
//! For bipartite classes, `class_size` counts matching patterns once per
//! split with `p <= n - p` (so isomorphic graphs appearing under
//! different splits are counted separately); the maximizer list is
//! deduplicated by isomorphism and is therefore split-independent.
//!
//! Censuses are deterministic for every worker count: the mask space is
//! cut into fixed chunks, workers fill per-chunk trackers, and results
//! merge in chunk order; maximizer lists are finally sorted by their
//! graph6 encoding.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::count::{tau, TreeCount};
use crate::extremal::{
    bound_bipartite, bound_conn, bound_econn_mindeg, bound_vconn_mindeg, build_bip_extremal,
    build_clique_join, build_m, BipVariant, JoinParams, MParams,
};
use crate::graph::Graph;
use crate::io::to_graph6;

const NONBIP_DEFAULT_CAP: usize = 7;
const NONBIP_HARD_CAP: usize = 8;
const BIP_CAP: usize = 9;
/// Masks per work unit; small enough to split n = 7 across workers,
/// large enough to keep per-chunk overhead negligible.
const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid class spec: {0}")]
    InvalidSpec(&'static str),
    #[error("order {n} exceeds the enumeration cap {cap} (bipartite: {bipartite})")]
    SizeLimit { n: usize, cap: usize, bipartite: bool },
    #[error("class is empty")]
    EmptyClass,
    #[error("batched censuses must share the order and bipartite flag")]
    MixedBatch,
    #[error("theorem {0} requires --delta")]
    DeltaRequired(TheoremId),
    #[error("theorem {0} does not take --delta")]
    DeltaForbidden(TheoremId),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("unknown connectivity kind `{0}` (expected `vertex-conn` or `edge-conn`)")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectivityKind {
    Vertex,
    Edge,
}

impl ConnectivityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ConnectivityKind::Vertex => "vertex-conn",
            ConnectivityKind::Edge => "edge-conn",
        }
    }
}

impl fmt::Display for ConnectivityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConnectivityKind {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, SearchError> {
        match s {
            "vertex-conn" | "vertex" => Ok(ConnectivityKind::Vertex),
            "edge-conn" | "edge" => Ok(ConnectivityKind::Edge),
            other => Err(SearchError::UnknownKind(other.to_string())),
        }
    }
}

/// A class of connected labeled graphs: order `n`, vertex or edge
/// connectivity exactly `r`, optionally minimum degree exactly
/// `min_degree`, optionally bipartite only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSpec {
    pub kind: ConnectivityKind,
    pub n: usize,
    pub r: usize,
    pub min_degree: Option<usize>,
    pub bipartite: bool,
}

impl ClassSpec {
    pub fn new(
        kind: ConnectivityKind,
        n: usize,
        r: usize,
        min_degree: Option<usize>,
        bipartite: bool,
    ) -> Result<Self, SearchError> {
        let spec = ClassSpec { kind, n, r, min_degree, bipartite };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.r < 1 {
            return Err(SearchError::InvalidSpec("connectivity r must be at least 1"));
        }
        if self.n < self.r + 1 {
            return Err(SearchError::InvalidSpec("connectivity r requires n >= r + 1"));
        }
        if let Some(d) = self.min_degree {
            if d < self.r {
                return Err(SearchError::InvalidSpec(
                    "min degree below the connectivity value makes the class empty",
                ));
            }
            if d > self.n - 1 {
                return Err(SearchError::InvalidSpec("min degree must be at most n - 1"));
            }
        }
        Ok(())
    }

    /// Cheap per-graph filters that do not need flow computations.
    fn precheck(&self, min_deg: usize) -> bool {
        min_deg >= self.r && self.min_degree.is_none_or(|d| min_deg == d)
    }

    /// Every member has minimum degree at least `max(r, min_degree)`,
    /// hence at least `ceil(n d / 2)` edges; connectedness needs
    /// `n - 1`.
    fn edge_floor(&self) -> usize {
        let d = self.min_degree.unwrap_or(self.r).max(self.r);
        (self.n * d).div_ceil(2).max(self.n.saturating_sub(1))
    }
}

/// The theorems the census can verify, each binding a class spec shape,
/// a bound evaluator, and a predicted-extremal generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    /// Connected graphs with vertex connectivity `r`.
    Conn,
    /// Vertex connectivity `r` and minimum degree exactly `delta`.
    VconnMindeg,
    /// Edge connectivity `r` and minimum degree exactly `delta > r`.
    EconnMindeg,
    /// Edge connectivity `r` with minimum degree equal to `r`.
    EconnEq,
    /// Bipartite, vertex connectivity `r`.
    BipVconn,
    /// Bipartite, edge connectivity `r`.
    BipEconn,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Conn,
        TheoremId::VconnMindeg,
        TheoremId::EconnMindeg,
        TheoremId::EconnEq,
        TheoremId::BipVconn,
        TheoremId::BipEconn,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Conn => "conn",
            TheoremId::VconnMindeg => "vconn-mindeg",
            TheoremId::EconnMindeg => "econn-mindeg",
            TheoremId::EconnEq => "econn-eq",
            TheoremId::BipVconn => "bip-vconn",
            TheoremId::BipEconn => "bip-econn",
        }
    }

    fn takes_delta(self) -> bool {
        matches!(self, TheoremId::VconnMindeg | TheoremId::EconnMindeg)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, SearchError> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| SearchError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

/// Knobs shared by all census entry points.
#[derive(Debug, Clone, Copy, Default)]
pub struct CensusOptions {
    /// Worker threads; `None` uses the process-wide default pool.
    pub jobs: Option<usize>,
    /// Raises the enumeration cap, clamped to the hard limits
    /// (8 non-bipartite, 9 bipartite).
    pub max_n: Option<usize>,
}

/// Census result, optionally annotated with a theorem prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub spec: ClassSpec,
    /// Labeled members for plain classes; matching `(split, pattern)`
    /// pairs for bipartite classes.
    pub class_size: u64,
    pub max_tau: TreeCount,
    /// All maximizers, pairwise non-isomorphic, sorted by graph6.
    pub maximizers: Vec<Graph>,
    pub predicted_bound: Option<TreeCount>,
    pub predicted_extremals: Option<Vec<Graph>>,
    pub verdict: Verdict,
}

/// Serialization mirror of [`CensusReport`]: counts as decimal strings,
/// graphs as graph6.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub spec: SpecDoc,
    pub class_size: u64,
    pub max_tau: String,
    pub maximizers: Vec<String>,
    pub predicted_bound: Option<String>,
    pub predicted_extremals: Option<Vec<String>>,
    pub verdict: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecDoc {
    pub kind: &'static str,
    pub n: usize,
    pub r: usize,
    pub delta: Option<usize>,
    pub bipartite: bool,
}

impl CensusReport {
    pub fn doc(&self) -> ReportDoc {
        ReportDoc {
            spec: SpecDoc {
                kind: self.spec.kind.as_str(),
                n: self.spec.n,
                r: self.spec.r,
                delta: self.spec.min_degree,
                bipartite: self.spec.bipartite,
            },
            class_size: self.class_size,
            max_tau: self.max_tau.to_string(),
            maximizers: self.maximizers.iter().map(to_graph6).collect(),
            predicted_bound: self.predicted_bound.as_ref().map(TreeCount::to_string),
            predicted_extremals: self
                .predicted_extremals
                .as_ref()
                .map(|gs| gs.iter().map(to_graph6).collect()),
            verdict: self.verdict.as_str(),
        }
    }
}

fn effective_cap(bipartite: bool, opts: &CensusOptions) -> usize {
    let (default_cap, hard_cap) = if bipartite {
        (BIP_CAP, BIP_CAP)
    } else {
        (NONBIP_DEFAULT_CAP, NONBIP_HARD_CAP)
    };
    match opts.max_n {
        None => default_cap,
        Some(m) => default_cap.max(m.min(hard_cap)),
    }
}

fn check_cap(n: usize, bipartite: bool, opts: &CensusOptions) -> Result<(), SearchError> {
    let cap = effective_cap(bipartite, opts);
    if n > cap {
        return Err(SearchError::SizeLimit { n, cap, bipartite });
    }
    Ok(())
}

/// Vertex pairs in the fixed enumeration order; bit `i` of a mask is
/// `pairs[i]`.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// One enumeration stratum: the full pair space, or the bipartite
/// patterns of a `(p, n-p)` split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stratum {
    AllPairs,
    Split(usize),
}

fn strata(spec: &ClassSpec) -> Vec<Stratum> {
    if spec.bipartite {
        (1..=spec.n / 2).map(Stratum::Split).collect()
    } else {
        vec![Stratum::AllPairs]
    }
}

fn stratum_bits(n: usize, s: Stratum) -> u32 {
    match s {
        Stratum::AllPairs => (n * (n - 1) / 2) as u32,
        Stratum::Split(p) => (p * (n - p)) as u32,
    }
}

/// Candidate graph data reconstructed from a mask: adjacency rows as
/// bitmasks plus degree information.
struct Candidate {
    n: usize,
    adj: [u32; 16],
    min_deg: usize,
}

impl Candidate {
    fn build(
        n: usize,
        stratum: Stratum,
        pairs: &[(usize, usize)],
        mask: u64,
        edge_floor: usize,
    ) -> Option<Self> {
        let edge_count = mask.count_ones() as usize;
        if edge_count < edge_floor {
            return None;
        }
        let mut adj = [0u32; 16];
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = edge_of(stratum, pairs, n, i);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let min_deg = (0..n).map(|v| adj[v].count_ones() as usize).min().unwrap_or(0);
        Some(Candidate { n, adj, min_deg })
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    fn realize(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            let mut bits = self.adj[u] & !((1u32 << (u + 1)) - 1);
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                edges.push((u, v));
            }
        }
        Graph::new(self.n, edges).expect("mask edges are valid")
    }
}

fn edge_of(stratum: Stratum, pairs: &[(usize, usize)], n: usize, bit: usize) -> (usize, usize) {
    match stratum {
        Stratum::AllPairs => pairs[bit],
        Stratum::Split(p) => {
            let q = n - p;
            (bit / q, p + bit % q)
        }
    }
}

/// Per-spec accumulator: member count, running maximum, argmax list in
/// encounter order.
#[derive(Debug, Clone)]
struct Tracker {
    count: u64,
    best: Option<TreeCount>,
    argmax: Vec<Graph>,
}

impl Tracker {
    fn new() -> Self {
        Tracker { count: 0, best: None, argmax: Vec::new() }
    }

    fn add(&mut self, t: &TreeCount, g: &Graph) {
        self.count += 1;
        match &self.best {
            Some(b) if t < b => {}
            Some(b) if t == b => self.argmax.push(g.clone()),
            _ => {
                self.best = Some(t.clone());
                self.argmax = vec![g.clone()];
            }
        }
    }

    fn merge(&mut self, other: Tracker) {
        self.count += other.count;
        match (&self.best, &other.best) {
            (_, None) => {}
            (None, Some(_)) => {
                self.best = other.best;
                self.argmax = other.argmax;
            }
            (Some(a), Some(b)) => {
                if b > a {
                    self.best = other.best;
                    self.argmax = other.argmax;
                } else if b == a {
                    self.argmax.extend(other.argmax);
                }
            }
        }
    }
}

/// Classifies every mask in `start..end` of a stratum against all specs,
/// updating one tracker per spec. The specs all share `n` and the
/// bipartite flag; connectivity values and tau are computed at most once
/// per graph.
fn scan_range(
    specs: &[ClassSpec],
    stratum: Stratum,
    pairs: &[(usize, usize)],
    start: u64,
    end: u64,
    trackers: &mut [Tracker],
) {
    let n = specs[0].n;
    let edge_floor = specs.iter().map(ClassSpec::edge_floor).min().unwrap_or(0);
    for mask in start..end {
        let Some(cand) = Candidate::build(n, stratum, pairs, mask, edge_floor) else {
            continue;
        };
        if !specs.iter().any(|s| s.precheck(cand.min_deg)) {
            continue;
        }
        if !cand.is_connected() {
            continue;
        }
        let graph = cand.realize();
        let mut kappa: Option<usize> = None;
        let mut kappa_edge: Option<usize> = None;
        let mut tau_val: Option<TreeCount> = None;
        for (i, spec) in specs.iter().enumerate() {
            if !spec.precheck(cand.min_deg) {
                continue;
            }
            let value = match spec.kind {
                ConnectivityKind::Vertex => {
                    *kappa.get_or_insert_with(|| graph.vertex_connectivity())
                }
                ConnectivityKind::Edge => *kappa_edge.get_or_insert_with(|| {
                    let (k, side) = graph.edge_connectivity_with_cut();
                    // an edge cut below the minimum degree isolates
                    // >= delta + 1 vertices on each side
                    if k < cand.min_deg {
                        debug_assert!(
                            side.len() > cand.min_deg
                                && n - side.len() > cand.min_deg,
                            "small edge cut with an undersized side on {:?}",
                            graph
                        );
                    }
                    k
                }),
            };
            if value != spec.r {
                continue;
            }
            let t = tau_val.get_or_insert_with(|| tau(&graph));
            trackers[i].add(t, &graph);
        }
    }
}

fn run_in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

fn dedup_by_isomorphism(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    for g in graphs {
        if !out.iter().any(|h| h.is_isomorphic_to(&g)) {
            out.push(g);
        }
    }
    out
}

/// Runs one shared enumeration pass for several specs over the same
/// order and bipartite flag, returning one report per spec (verdict
/// `NOT_APPLICABLE`, no predictions). Reports are identical for every
/// worker count.
pub fn census_many(
    specs: &[ClassSpec],
    opts: &CensusOptions,
) -> Result<Vec<CensusReport>, SearchError> {
    let Some(first) = specs.first() else {
        return Ok(Vec::new());
    };
    for spec in specs {
        spec.validate()?;
        if spec.n != first.n || spec.bipartite != first.bipartite {
            return Err(SearchError::MixedBatch);
        }
    }
    check_cap(first.n, first.bipartite, opts)?;
    let n = first.n;
    let pairs = pair_list(n);
    // fixed work units: (stratum, mask range) in deterministic order
    let mut tasks: Vec<(Stratum, u64, u64)> = Vec::new();
    for stratum in strata(first) {
        let total = 1u64 << stratum_bits(n, stratum);
        let mut start = 0;
        while start < total {
            let end = (start + CHUNK).min(total);
            tasks.push((stratum, start, end));
            start = end;
        }
    }
    let per_task: Vec<Vec<Tracker>> = run_in_pool(opts.jobs, || {
        tasks
            .par_iter()
            .map(|&(stratum, start, end)| {
                let mut trackers = vec![Tracker::new(); specs.len()];
                scan_range(specs, stratum, &pairs, start, end, &mut trackers);
                trackers
            })
            .collect()
    });
    // merge in task order so ties resolve identically for any job count
    let mut merged = vec![Tracker::new(); specs.len()];
    for task_trackers in per_task {
        for (m, t) in merged.iter_mut().zip(task_trackers) {
            m.merge(t);
        }
    }
    Ok(specs
        .iter()
        .zip(merged)
        .map(|(spec, tracker)| {
            let mut maximizers = dedup_by_isomorphism(tracker.argmax);
            maximizers.sort_by_cached_key(to_graph6);
            CensusReport {
                spec: *spec,
                class_size: tracker.count,
                max_tau: tracker.best.unwrap_or_else(TreeCount::zero),
                maximizers,
                predicted_bound: None,
                predicted_extremals: None,
                verdict: Verdict::NotApplicable,
            }
        })
        .collect())
}

/// Census of a single class. Errors on an empty class.
pub fn census(spec: &ClassSpec, opts: &CensusOptions) -> Result<CensusReport, SearchError> {
    let report = census_many(std::slice::from_ref(spec), opts)?
        .pop()
        .expect("one spec in, one report out");
    if report.class_size == 0 {
        return Err(SearchError::EmptyClass);
    }
    Ok(report)
}

/// Lazy stream over the members of a class, in mask order (split by
/// split for bipartite specs).
pub struct ClassIter {
    spec: ClassSpec,
    pairs: Vec<(usize, usize)>,
    strata: Vec<Stratum>,
    stratum_idx: usize,
    mask: u64,
    total: u64,
}

impl ClassIter {
    fn stratum_total(&self) -> u64 {
        1u64 << stratum_bits(self.spec.n, self.strata[self.stratum_idx])
    }
}

impl Iterator for ClassIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.stratum_idx < self.strata.len() {
            if self.mask >= self.total {
                self.stratum_idx += 1;
                if self.stratum_idx < self.strata.len() {
                    self.mask = 0;
                    self.total = self.stratum_total();
                }
                continue;
            }
            let mask = self.mask;
            self.mask += 1;
            let stratum = self.strata[self.stratum_idx];
            let floor = self.spec.edge_floor();
            let Some(cand) = Candidate::build(self.spec.n, stratum, &self.pairs, mask, floor)
            else {
                continue;
            };
            if !self.spec.precheck(cand.min_deg) || !cand.is_connected() {
                continue;
            }
            let graph = cand.realize();
            let value = match self.spec.kind {
                ConnectivityKind::Vertex => graph.vertex_connectivity(),
                ConnectivityKind::Edge => graph.edge_connectivity(),
            };
            if value == self.spec.r {
                return Some(graph);
            }
        }
        None
    }
}

/// Streams exactly the labeled members of the class (per split for
/// bipartite specs, see the module docs).
pub fn enumerate_class(spec: &ClassSpec, opts: &CensusOptions) -> Result<ClassIter, SearchError> {
    spec.validate()?;
    check_cap(spec.n, spec.bipartite, opts)?;
    let strata = strata(spec);
    let mut iter = ClassIter {
        spec: *spec,
        pairs: pair_list(spec.n),
        strata,
        stratum_idx: 0,
        mask: 0,
        total: 0,
    };
    iter.total = iter.stratum_total();
    Ok(iter)
}

/// Theorem domain test: `true` when `(n, r, delta)` is inside the
/// stated hypotheses.
pub fn theorem_applies(id: TheoremId, n: usize, r: usize, delta: Option<usize>) -> bool {
    if r < 1 {
        return false;
    }
    match id {
        TheoremId::Conn | TheoremId::EconnEq => n > r,
        TheoremId::VconnMindeg => {
            let Some(d) = delta else { return false };
            d >= r && n + r >= 2 * (d + 1)
        }
        TheoremId::EconnMindeg => {
            let Some(d) = delta else { return false };
            d > r && n >= 2 * d + 2
        }
        TheoremId::BipVconn | TheoremId::BipEconn => n >= 2 * r,
    }
}

fn class_spec_for(id: TheoremId, n: usize, r: usize, delta: Option<usize>) -> ClassSpec {
    match id {
        TheoremId::Conn => ClassSpec {
            kind: ConnectivityKind::Vertex,
            n,
            r,
            min_degree: None,
            bipartite: false,
        },
        TheoremId::VconnMindeg => ClassSpec {
            kind: ConnectivityKind::Vertex,
            n,
            r,
            min_degree: delta,
            bipartite: false,
        },
        TheoremId::EconnMindeg => ClassSpec {
            kind: ConnectivityKind::Edge,
            n,
            r,
            min_degree: delta,
            bipartite: false,
        },
        TheoremId::EconnEq => ClassSpec {
            kind: ConnectivityKind::Edge,
            n,
            r,
            min_degree: Some(r),
            bipartite: false,
        },
        TheoremId::BipVconn => ClassSpec {
            kind: ConnectivityKind::Vertex,
            n,
            r,
            min_degree: None,
            bipartite: true,
        },
        TheoremId::BipEconn => ClassSpec {
            kind: ConnectivityKind::Edge,
            n,
            r,
            min_degree: None,
            bipartite: true,
        },
    }
}

/// Predicted bound and extremal graphs for an in-domain parameter tuple.
fn prediction(id: TheoremId, n: usize, r: usize, delta: Option<usize>) -> (TreeCount, Vec<Graph>) {
    let join = |parts: Vec<usize>| {
        build_clique_join(&JoinParams::new(r, parts).expect("parts positive in domain"))
    };
    match id {
        TheoremId::Conn | TheoremId::EconnEq => {
            let bound = bound_conn(n, r).expect("domain checked");
            let extremal = if n == r + 1 {
                Graph::complete(n)
            } else {
                join(vec![1, n - r - 1])
            };
            (bound, vec![extremal])
        }
        TheoremId::VconnMindeg => {
            let d = delta.expect("delta checked");
            let bound = bound_vconn_mindeg(n, r, d).expect("domain checked");
            (bound, vec![join(vec![d - r + 1, n - d - 1])])
        }
        TheoremId::EconnMindeg => {
            let d = delta.expect("delta checked");
            let bound = bound_econn_mindeg(n, r, d).expect("domain checked");
            let m = MParams::new(n - d - 1, d + 1, r).expect("domain checked");
            (bound, vec![build_m(&m)])
        }
        TheoremId::BipVconn | TheoremId::BipEconn => {
            let bound = bound_bipartite(n, r).expect("domain checked");
            let mut extremals = Vec::new();
            if n >= 2 * r + 2 {
                extremals
                    .push(build_bip_extremal(n, r, BipVariant::A).expect("domain checked"));
                if r == 1 && n.is_multiple_of(2) {
                    extremals
                        .push(build_bip_extremal(n, r, BipVariant::B).expect("domain checked"));
                }
            } else {
                // n = 2r or 2r + 1: the balanced complete bipartite graph
                extremals.push(Graph::complete_bipartite(r, n - r));
            }
            extremals.sort_by_cached_key(to_graph6);
            (bound, extremals)
        }
    }
}

fn not_applicable_report(id: TheoremId, n: usize, r: usize, delta: Option<usize>) -> CensusReport {
    CensusReport {
        spec: class_spec_for(id, n, r, delta),
        class_size: 0,
        max_tau: TreeCount::zero(),
        maximizers: Vec::new(),
        predicted_bound: None,
        predicted_extremals: None,
        verdict: Verdict::NotApplicable,
    }
}

fn attach_prediction(mut report: CensusReport, id: TheoremId) -> CensusReport {
    let (n, r, delta) = (report.spec.n, report.spec.r, report.spec.min_degree);
    let (bound, extremals) = prediction(id, n, r, delta);
    let bound_ok = report.max_tau == bound;
    let sets_match = report.maximizers.len() == extremals.len()
        && report
            .maximizers
            .iter()
            .all(|m| extremals.iter().any(|e| e.is_isomorphic_to(m)))
        && extremals
            .iter()
            .all(|e| report.maximizers.iter().any(|m| m.is_isomorphic_to(e)));
    report.verdict = if bound_ok && sets_match { Verdict::Pass } else { Verdict::Fail };
    report.predicted_bound = Some(bound);
    report.predicted_extremals = Some(extremals);
    report
}

/// Verifies several theorem instances over one shared enumeration pass.
/// All in-domain instances must target the same order and bipartite
/// flag; out-of-domain instances yield `NOT_APPLICABLE` reports without
/// being enumerated.
pub fn verify_many(
    instances: &[(TheoremId, usize, usize, Option<usize>)],
    opts: &CensusOptions,
) -> Result<Vec<CensusReport>, SearchError> {
    for &(id, _, _, delta) in instances {
        if id.takes_delta() && delta.is_none() {
            return Err(SearchError::DeltaRequired(id));
        }
        if !id.takes_delta() && delta.is_some() {
            return Err(SearchError::DeltaForbidden(id));
        }
    }
    let mut specs: Vec<ClassSpec> = Vec::new();
    let mut slot: Vec<Option<usize>> = Vec::new();
    for &(id, n, r, delta) in instances {
        if theorem_applies(id, n, r, delta) {
            slot.push(Some(specs.len()));
            specs.push(class_spec_for(id, n, r, delta));
        } else {
            slot.push(None);
        }
    }
    let reports = census_many(&specs, opts)?;
    Ok(instances
        .iter()
        .zip(slot)
        .map(|(&(id, n, r, delta), s)| match s {
            Some(i) => attach_prediction(reports[i].clone(), id),
            None => not_applicable_report(id, n, r, delta),
        })
        .collect())
}

/// Runs the census for one theorem instance and checks the bound and
/// the equality case. Out-of-domain parameters give a report with
/// verdict `NOT_APPLICABLE`.
pub fn verify_theorem(
    id: TheoremId,
    n: usize,
    r: usize,
    delta: Option<usize>,
    opts: &CensusOptions,
) -> Result<CensusReport, SearchError> {
    Ok(verify_many(&[(id, n, r, delta)], opts)?
        .pop()
        .expect("one instance in, one report out"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> CensusOptions {
        CensusOptions::default()
    }

    fn spec(kind: ConnectivityKind, n: usize, r: usize, d: Option<usize>, bip: bool) -> ClassSpec {
        ClassSpec::new(kind, n, r, d, bip).unwrap()
    }

    #[test]
    fn enumerate_p3_labelings() {
        let s = spec(ConnectivityKind::Vertex, 3, 1, Some(1), false);
        let members: Vec<Graph> = enumerate_class(&s, &opts()).unwrap().collect();
        assert_eq!(members.len(), 3);
        for g in &members {
            assert!(g.is_isomorphic_to(&Graph::path(3)));
        }
    }

    #[test]
    fn enumerate_k3_only() {
        let s = spec(ConnectivityKind::Vertex, 3, 2, None, false);
        let members: Vec<Graph> = enumerate_class(&s, &opts()).unwrap().collect();
        assert_eq!(members, vec![Graph::complete(3)]);
    }

    #[test]
    fn enumerate_bipartite_k22() {
        let s = spec(ConnectivityKind::Vertex, 4, 2, None, true);
        let members: Vec<Graph> = enumerate_class(&s, &opts()).unwrap().collect();
        assert_eq!(members.len(), 1);
        assert!(members[0].is_isomorphic_to(&Graph::complete_bipartite(2, 2)));
    }

    #[test]
    fn hand_counted_class_sizes_at_n4() {
        // connected 4-vertex graphs: 16 trees, 12 paws, 3 C4, 6 diamonds, 1 K4
        let cases = [
            (ConnectivityKind::Vertex, 1, None, 28u64),
            (ConnectivityKind::Vertex, 2, None, 9),
            (ConnectivityKind::Vertex, 3, None, 1),
            (ConnectivityKind::Edge, 1, None, 28),
            (ConnectivityKind::Edge, 2, None, 9),
            (ConnectivityKind::Edge, 3, None, 1),
            (ConnectivityKind::Vertex, 1, Some(1), 28),
            (ConnectivityKind::Vertex, 2, Some(2), 9),
        ];
        for (kind, r, d, expected) in cases {
            let s = spec(kind, 4, r, d, false);
            let got = enumerate_class(&s, &opts()).unwrap().count() as u64;
            assert_eq!(got, expected, "kind={kind:?} r={r} d={d:?}");
            let report = census(&s, &opts()).unwrap();
            assert_eq!(report.class_size, expected);
        }
    }

    #[test]
    fn census_vconn_n5_example() {
        let s = spec(ConnectivityKind::Vertex, 5, 1, Some(1), false);
        let report = census(&s, &opts()).unwrap();
        assert_eq!(report.max_tau, TreeCount::from(16u64));
        assert_eq!(report.maximizers.len(), 1);
        let expected = build_clique_join(&JoinParams::new(1, vec![1, 3]).unwrap());
        assert!(report.maximizers[0].is_isomorphic_to(&expected));
    }

    #[test]
    fn census_econn_n6_example() {
        let s = spec(ConnectivityKind::Edge, 6, 1, Some(2), false);
        let report = census(&s, &opts()).unwrap();
        assert_eq!(report.max_tau, TreeCount::from(9u64));
        assert_eq!(report.maximizers.len(), 1);
        let m = build_m(&MParams::new(3, 3, 1).unwrap());
        assert!(report.maximizers[0].is_isomorphic_to(&m));
    }

    #[test]
    fn census_bipartite_n6_two_maximizers() {
        let s = spec(ConnectivityKind::Vertex, 6, 1, None, true);
        let report = census(&s, &opts()).unwrap();
        assert_eq!(report.max_tau, TreeCount::from(12u64));
        assert_eq!(report.maximizers.len(), 2);
    }

    #[test]
    fn empty_class_is_an_error() {
        // kappa = 1 with delta = 3 on 4 vertices: impossible
        let s = spec(ConnectivityKind::Vertex, 4, 1, Some(3), false);
        assert_eq!(census(&s, &opts()), Err(SearchError::EmptyClass));
    }

    #[test]
    fn size_limits() {
        let s = spec(ConnectivityKind::Vertex, 8, 1, None, false);
        assert_eq!(
            census_many(&[s], &opts()).unwrap_err(),
            SearchError::SizeLimit { n: 8, cap: 7, bipartite: false }
        );
        // the override admits n = 8 (only probe the stream head; a full
        // sweep is out of test budget)
        let with_override = CensusOptions { jobs: None, max_n: Some(8) };
        let mut iter = enumerate_class(&s, &with_override).unwrap();
        let first = iter.next().expect("stream yields members");
        assert_eq!(first.n(), 8);
        assert_eq!(first.vertex_connectivity(), 1);
        // and clamps at the hard limit
        let s9 = spec(ConnectivityKind::Vertex, 9, 1, None, false);
        assert_eq!(
            enumerate_class(&s9, &CensusOptions { jobs: None, max_n: Some(12) })
                .err()
                .unwrap(),
            SearchError::SizeLimit { n: 9, cap: 8, bipartite: false }
        );
        let sbip = spec(ConnectivityKind::Vertex, 10, 1, None, true);
        assert_eq!(
            enumerate_class(&sbip, &CensusOptions { jobs: None, max_n: Some(12) })
                .err()
                .unwrap(),
            SearchError::SizeLimit { n: 10, cap: 9, bipartite: true }
        );
    }

    #[test]
    fn census_deterministic_across_job_counts() {
        let s = spec(ConnectivityKind::Vertex, 6, 2, None, false);
        let base = census(&s, &CensusOptions { jobs: Some(1), max_n: None }).unwrap();
        for jobs in [2, 3, 5] {
            let other = census(&s, &CensusOptions { jobs: Some(jobs), max_n: None }).unwrap();
            assert_eq!(base, other, "jobs={jobs}");
        }
    }

    #[test]
    fn mixed_batch_rejected() {
        let a = spec(ConnectivityKind::Vertex, 5, 1, None, false);
        let b = spec(ConnectivityKind::Vertex, 6, 1, None, false);
        assert_eq!(census_many(&[a, b], &opts()).unwrap_err(), SearchError::MixedBatch);
        let c = spec(ConnectivityKind::Vertex, 5, 1, None, true);
        assert_eq!(census_many(&[a, c], &opts()).unwrap_err(), SearchError::MixedBatch);
    }

    #[test]
    fn invalid_specs_rejected() {
        assert_eq!(
            ClassSpec::new(ConnectivityKind::Vertex, 4, 0, None, false).unwrap_err(),
            SearchError::InvalidSpec("connectivity r must be at least 1")
        );
        assert!(ClassSpec::new(ConnectivityKind::Vertex, 4, 4, None, false).is_err());
        assert!(ClassSpec::new(ConnectivityKind::Vertex, 4, 2, Some(1), false).is_err());
        assert!(ClassSpec::new(ConnectivityKind::Vertex, 4, 1, Some(4), false).is_err());
    }

    #[test]
    fn verify_vconn_mindeg_small() {
        let report =
            verify_theorem(TheoremId::VconnMindeg, 6, 1, Some(2), &opts()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        // bound 1*6^0*3^1*(1+6-3)^{6-4} = 3*16 = 48
        assert_eq!(report.max_tau, TreeCount::from(48u64));
        assert_eq!(report.maximizers.len(), 1);
    }

    #[test]
    fn verify_econn_eq_small() {
        let report = verify_theorem(TheoremId::EconnEq, 5, 2, None, &opts()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.max_tau, TreeCount::from(40u64));
    }

    #[test]
    fn verify_conn_small() {
        for (n, r) in [(5, 1), (5, 2), (5, 4), (6, 3), (2, 1)] {
            let report = verify_theorem(TheoremId::Conn, n, r, None, &opts()).unwrap();
            assert_eq!(report.verdict, Verdict::Pass, "n={n} r={r}");
            assert_eq!(report.maximizers.len(), 1, "n={n} r={r}");
        }
    }

    #[test]
    fn verify_out_of_domain_is_not_applicable() {
        // econn-mindeg needs n >= 2 delta + 2
        let report = verify_theorem(TheoremId::EconnMindeg, 5, 1, Some(2), &opts()).unwrap();
        assert_eq!(report.verdict, Verdict::NotApplicable);
        assert_eq!(report.predicted_bound, None);
        // delta plumbing errors are hard errors, not NA
        assert_eq!(
            verify_theorem(TheoremId::VconnMindeg, 6, 1, None, &opts()).unwrap_err(),
            SearchError::DeltaRequired(TheoremId::VconnMindeg)
        );
        assert_eq!(
            verify_theorem(TheoremId::Conn, 6, 1, Some(2), &opts()).unwrap_err(),
            SearchError::DeltaForbidden(TheoremId::Conn)
        );
    }

    #[test]
    fn verify_bip_vconn_n4() {
        let report = verify_theorem(TheoremId::BipVconn, 4, 2, None, &opts()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.max_tau, TreeCount::from(4u64));
        assert_eq!(report.maximizers.len(), 1);
        // r = 1, n = 4: two maximizers (P4 and the star)
        let report = verify_theorem(TheoremId::BipVconn, 4, 1, None, &opts()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.maximizers.len(), 2);
    }

    #[test]
    fn theorem_id_round_trips() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!(
            "nope".parse::<TheoremId>().unwrap_err(),
            SearchError::UnknownTheorem("nope".into())
        );
    }
}
