//! Extremal families, their closed-form spanning-tree counts, and the
//! associated upper bounds.
//!
//! Closed forms are evaluated in exact rational arithmetic because the
//! exponents can be negative for legal parameters (for example the
//! square `M^2_{2,2}` hits `n^{-1}` twice); the result is asserted to be
//! a non-negative integer at the end.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use thiserror::Error;

use crate::count::TreeCount;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("clique join needs at least one part, every part of positive size")]
    BadJoinParts,
    #[error("M-graph parameters must satisfy n1 >= n2 >= q >= 1 (got n1={n1}, n2={n2}, q={q})")]
    BadMParams { n1: usize, n2: usize, q: usize },
    #[error("bipartite extremal variant a requires r >= 1 and n >= 2r+2 (got n={n}, r={r})")]
    BipVariantADomain { n: usize, r: usize },
    #[error("bipartite extremal variant b requires r = 1 and even n >= 4 (got n={n}, r={r})")]
    BipVariantBDomain { n: usize, r: usize },
    #[error("{bound} bound requires {requirement} (got {got})")]
    BoundDomain { bound: &'static str, requirement: &'static str, got: String },
    #[error("{lemma} checker requires {requirement}")]
    LemmaDomain { lemma: &'static str, requirement: &'static str },
}

/// `base^exp` for rational base and possibly negative integer exponent.
/// `0^0 = 1`; a zero base with negative exponent is a caller bug.
fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    if base.is_zero() {
        return match exp.cmp(&0) {
            Ordering::Greater => BigRational::zero(),
            Ordering::Equal => BigRational::one(),
            Ordering::Less => panic!("zero base with negative exponent"),
        };
    }
    let p = Pow::pow(base.clone(), exp.unsigned_abs() as u32);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

fn rat(x: usize) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Exponents here are small differences of part sizes; keep the casts in
/// one place.
fn exp(x: usize, minus: usize) -> i64 {
    x as i64 - minus as i64
}

/// Asserts the closed form produced an integer and wraps it.
fn finish(r: BigRational) -> TreeCount {
    assert!(r.is_integer(), "closed form must evaluate to an integer, got {}", r);
    TreeCount::from(r)
}

/// Parameters of the clique join `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinParams {
    pub s: usize,
    pub parts: Vec<usize>,
}

impl JoinParams {
    pub fn new(s: usize, parts: Vec<usize>) -> Result<Self, ExtremalError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(ExtremalError::BadJoinParts);
        }
        Ok(JoinParams { s, parts })
    }

    pub fn order(&self) -> usize {
        self.s + self.parts.iter().sum::<usize>()
    }
}

/// Builds `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t})`: clique vertices first, then
/// the parts in order.
pub fn build_clique_join(p: &JoinParams) -> Graph {
    let parts = p
        .parts
        .iter()
        .fold(Graph::empty(0), |acc, &ni| acc.union(&Graph::complete(ni)));
    Graph::complete(p.s).join(&parts)
}

/// Closed form `n^{s-1} s^{t-1} prod (s+n_i)^{n_i-1}` for the clique
/// join. Zero when `s = 0` with two or more parts (the graph is
/// disconnected).
pub fn tau_clique_join(p: &JoinParams) -> TreeCount {
    let n = p.order();
    let t = p.parts.len();
    let mut acc = rat_pow(&rat(n), exp(p.s, 1)) * rat_pow(&rat(p.s), exp(t, 1));
    for &ni in &p.parts {
        acc *= rat_pow(&rat(p.s + ni), exp(ni, 1));
    }
    finish(acc)
}

/// Parameters of `M^q_{n1,n2}`: disjoint cliques `K_{n1}` and `K_{n2}`
/// joined by a `q`-edge matching, with `n1 >= n2 >= q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MParams {
    pub n1: usize,
    pub n2: usize,
    pub q: usize,
}

impl MParams {
    pub fn new(n1: usize, n2: usize, q: usize) -> Result<Self, ExtremalError> {
        if !(n1 >= n2 && n2 >= q && q >= 1) {
            return Err(ExtremalError::BadMParams { n1, n2, q });
        }
        Ok(MParams { n1, n2, q })
    }

    pub fn order(&self) -> usize {
        self.n1 + self.n2
    }
}

/// Builds `M^q_{n1,n2}`: vertices `0..n1` and `n1..n1+n2`, matching
/// edges `(i, n1+i)` for `i < q`.
pub fn build_m(p: &MParams) -> Graph {
    let mut g = Graph::complete(p.n1).union(&Graph::complete(p.n2));
    for i in 0..p.q {
        g = g.add_edge(i, p.n1 + i).expect("matching endpoints distinct and fresh");
    }
    g
}

/// Closed form `q n1^{n1-q-1} n2^{n2-q-1} (n1 n2 + n)^{q-1}`.
pub fn tau_m(p: &MParams) -> TreeCount {
    let n = p.order();
    let acc = rat(p.q)
        * rat_pow(&rat(p.n1), exp(p.n1, p.q + 1))
        * rat_pow(&rat(p.n2), exp(p.n2, p.q + 1))
        * rat_pow(&rat(p.n1 * p.n2 + n), exp(p.q, 1));
    finish(acc)
}

/// Sizes of the six independent sets of a B-graph. The fixed adjacency
/// pattern joins `I1` to `I4 ∪ I5`, `I2` to `I4 ∪ I5 ∪ I6`, and `I3` to
/// `I5 ∪ I6`; the two sides of the bipartition are `I1 ∪ I2 ∪ I3` and
/// `I4 ∪ I5 ∪ I6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BParams {
    pub a: [usize; 6],
}

impl BParams {
    pub fn new(a: [usize; 6]) -> Self {
        BParams { a }
    }

    pub fn order(&self) -> usize {
        self.a.iter().sum()
    }

    /// Sizes of the two sides.
    pub fn sides(&self) -> (usize, usize) {
        (
            self.a[0] + self.a[1] + self.a[2],
            self.a[3] + self.a[4] + self.a[5],
        )
    }
}

/// Which `I_x`–`I_y` pairs are completely joined.
const B_PATTERN: [(usize, usize); 7] =
    [(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)];

/// Builds the B-graph with parts laid out consecutively:
/// `I1, I2, ..., I6`.
pub fn build_b(p: &BParams) -> Graph {
    let mut offset = [0usize; 7];
    for i in 0..6 {
        offset[i + 1] = offset[i] + p.a[i];
    }
    let mut edges = Vec::new();
    for (x, y) in B_PATTERN {
        for u in offset[x]..offset[x + 1] {
            for v in offset[y]..offset[y + 1] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(p.order(), edges).expect("indices in range by construction")
}

/// The first factor of the B-graph count: a product of six powers whose
/// bases are sums of adjacent part sizes.
fn tau_b_factor1(a: &[usize; 6]) -> Option<BigRational> {
    let pairs = [
        (a[0] + a[1] + a[2], exp(a[4], 1)),
        (a[3] + a[4] + a[5], exp(a[1], 1)),
        (a[0] + a[1], exp(a[3], 1)),
        (a[1] + a[2], exp(a[5], 1)),
        (a[3] + a[4], exp(a[0], 1)),
        (a[4] + a[5], exp(a[2], 1)),
    ];
    // a zero base with a negative exponent means the factorised form does
    // not apply; the caller falls back to case analysis
    if pairs.iter().any(|&(b, e)| b == 0 && e < 0) {
        return None;
    }
    Some(
        pairs
            .iter()
            .map(|&(b, e)| rat_pow(&rat(b), e))
            .product(),
    )
}

/// The second factor: an 8-term polynomial in the part sizes.
fn tau_b_factor2(a: &[usize; 6]) -> BigInt {
    let b = |i: usize| BigInt::from(a[i]);
    let (a1, a2, a3, a4, a5, a6) = (b(0), b(1), b(2), b(3), b(4), b(5));
    &a2 * &a2 * &a5 * &a5
        + &a2 * &a2 * &a5 * (&a4 + &a6)
        + &a2 * &a5 * &a5 * (&a1 + &a3)
        + &a2 * &a2 * &a4 * &a6
        + &a5 * &a5 * &a1 * &a3
        + &a2 * &a5 * (&a1 + &a3) * (&a4 + &a6)
        + &a2 * &a4 * &a6 * (&a1 + &a3)
        + &a5 * &a1 * &a3 * (&a4 + &a6)
}

/// Spanning-tree count of the B-graph via the factorised closed form.
///
/// Parameterizations that make the graph disconnected give 0. The rare
/// connected cases where the factorised form is indeterminate (a zero
/// base under a negative exponent) are exactly complete bipartite
/// graphs, counted by `p^{q-1} q^{p-1}` instead.
pub fn tau_b(p: &BParams) -> TreeCount {
    let n = p.order();
    if n == 0 {
        return TreeCount::one();
    }
    match tau_b_factor1(&p.a) {
        Some(f1) => finish(f1 * BigRational::from_integer(tau_b_factor2(&p.a))),
        None => {
            let g = build_b(p);
            if !g.is_connected() {
                return TreeCount::zero();
            }
            if n == 1 {
                return TreeCount::one();
            }
            let (x, y) = p.sides();
            assert_eq!(
                g.edge_count(),
                x * y,
                "indeterminate connected B-graph must be complete bipartite"
            );
            finish(rat_pow(&rat(x), exp(y, 1)) * rat_pow(&rat(y), exp(x, 1)))
        }
    }
}

/// The two extremal bipartite constructions of the census theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipVariant {
    /// `B(1, 0, floor((n-1)/2), 0, r, ceil((n-1)/2) - r)`: a balanced-ish
    /// complete bipartite graph plus one vertex of degree `r`.
    A,
    /// `B(1, 0, n/2, 0, 1, n/2 - 2)` for `r = 1`, even `n`: the
    /// alternative maximizer with the pendant on the other side.
    B,
}

/// Parameters of the extremal bipartite graph for order `n` and
/// connectivity `r`.
pub fn bip_extremal_params(n: usize, r: usize, variant: BipVariant) -> Result<BParams, ExtremalError> {
    match variant {
        BipVariant::A => {
            if r == 0 || n < 2 * r + 2 {
                return Err(ExtremalError::BipVariantADomain { n, r });
            }
            let lo = (n - 1) / 2;
            let hi = n / 2; // = ceil((n-1)/2)
            Ok(BParams::new([1, 0, lo, 0, r, hi - r]))
        }
        BipVariant::B => {
            if r != 1 || !n.is_multiple_of(2) || n < 4 {
                return Err(ExtremalError::BipVariantBDomain { n, r });
            }
            Ok(BParams::new([1, 0, n / 2, 0, 1, n / 2 - 2]))
        }
    }
}

pub fn build_bip_extremal(n: usize, r: usize, variant: BipVariant) -> Result<Graph, ExtremalError> {
    Ok(build_b(&bip_extremal_params(n, r, variant)?))
}

/// Theorem bound for connected graphs with connectivity `r`:
/// `r n^{r-1} (n-1)^{n-r-2}`, attained by `K_r ∨ (K_1 ∪ K_{n-r-1})`.
pub fn bound_conn(n: usize, r: usize) -> Result<TreeCount, ExtremalError> {
    if r < 1 || n < r + 1 {
        return Err(ExtremalError::BoundDomain {
            bound: "conn",
            requirement: "r >= 1 and n >= r+1",
            got: format!("n={n}, r={r}"),
        });
    }
    Ok(finish(
        rat(r) * rat_pow(&rat(n), exp(r, 1)) * rat_pow(&rat(n - 1), exp(n, r + 2)),
    ))
}

/// Bound for vertex connectivity `r` and minimum degree `delta`:
/// `r n^{r-1} (delta+1)^{delta-r} (r+n-delta-1)^{n-delta-2}`.
pub fn bound_vconn_mindeg(n: usize, r: usize, delta: usize) -> Result<TreeCount, ExtremalError> {
    if r < 1 || delta < r || n + r < 2 * (delta + 1) {
        return Err(ExtremalError::BoundDomain {
            bound: "vconn-mindeg",
            requirement: "delta >= r >= 1 and n >= 2(delta+1)-r",
            got: format!("n={n}, r={r}, delta={delta}"),
        });
    }
    Ok(finish(
        rat(r)
            * rat_pow(&rat(n), exp(r, 1))
            * rat_pow(&rat(delta + 1), exp(delta, r))
            * rat_pow(&rat(r + n - delta - 1), exp(n, delta + 2)),
    ))
}

/// Bound for edge connectivity `r` strictly below the minimum degree:
/// `r (delta+1)^{delta-r} (n-delta-1)^{n-delta-r-2} ((delta+1)(n-delta-1)+n)^{r-1}`.
pub fn bound_econn_mindeg(n: usize, r: usize, delta: usize) -> Result<TreeCount, ExtremalError> {
    if r < 1 || delta <= r || n < 2 * delta + 2 {
        return Err(ExtremalError::BoundDomain {
            bound: "econn-mindeg",
            requirement: "delta > r >= 1 and n >= 2 delta + 2",
            got: format!("n={n}, r={r}, delta={delta}"),
        });
    }
    Ok(finish(
        rat(r)
            * rat_pow(&rat(delta + 1), exp(delta, r))
            * rat_pow(&rat(n - delta - 1), exp(n, delta + r + 2))
            * rat_pow(&rat((delta + 1) * (n - delta - 1) + n), exp(r, 1)),
    ))
}

/// Bound for bipartite graphs with connectivity `r`:
/// `r floor((n+1)/2)^{r-1} floor((n-1)/2)^{ceil((n-1)/2)-r} ceil((n-1)/2)^{floor((n-3)/2)}`.
/// The last exponent is `-1` at `n = 2`, handled by the rational
/// evaluation.
pub fn bound_bipartite(n: usize, r: usize) -> Result<TreeCount, ExtremalError> {
    if r < 1 || n < 2 * r {
        return Err(ExtremalError::BoundDomain {
            bound: "bipartite",
            requirement: "r >= 1 and n >= 2r",
            got: format!("n={n}, r={r}"),
        });
    }
    let lo = (n - 1) / 2; // floor((n-1)/2)
    let hi = n / 2; // ceil((n-1)/2)
    let last_exp = (n as i64 - 3).div_euclid(2); // floor((n-3)/2), may be -1
    Ok(finish(
        rat(r)
            * rat_pow(&rat(n.div_ceil(2)), exp(r, 1))
            * rat_pow(&rat(lo), exp(hi, r))
            * rat_pow(&rat(hi), last_exp),
    ))
}

/// Lemma check: `f(x) = (s+x+1)^x / (s+x)^{x-1}` is strictly increasing,
/// i.e. `f(x+1) > f(x)`, verified by exact cross-multiplication:
/// `(s+x+2)^{x+1} (s+x)^{x-1} > (s+x+1)^{2x}`.
pub fn check_lemma_f(s: u64, x: u64) -> Result<bool, ExtremalError> {
    if x < 2 {
        return Err(ExtremalError::LemmaDomain {
            lemma: "f-monotonicity",
            requirement: "x >= 2",
        });
    }
    let b = |v: u64| BigInt::from(v);
    let lhs = Pow::pow(b(s + x + 2), x + 1) * Pow::pow(b(s + x), x - 1);
    let rhs = Pow::pow(b(s + x + 1), 2 * x);
    Ok(lhs > rhs)
}

/// Compares two products of rational powers exactly: raises both sides
/// to the least common multiple of the exponent denominators (a
/// positive power, hence order-preserving on positive values), after
/// which every exponent is an integer and both sides are rationals.
/// All bases must be positive.
fn pow_product_cmp(
    lhs: &[(BigRational, BigRational)],
    rhs: &[(BigRational, BigRational)],
) -> Ordering {
    let mut scale = BigInt::one();
    for (base, e) in lhs.iter().chain(rhs.iter()) {
        assert!(base > &BigRational::zero(), "bases must be positive");
        scale = scale.lcm(e.denom());
    }
    let eval = |side: &[(BigRational, BigRational)]| -> BigRational {
        side.iter()
            .map(|(base, e)| {
                let ie = (e * BigRational::from_integer(scale.clone())).to_integer();
                rat_pow(base, ie.to_i64().expect("exponent too large"))
            })
            .product()
    };
    eval(lhs).cmp(&eval(rhs))
}

/// Lemma check: for `alpha, beta > 0` and `alpha + beta > gamma`,
/// `alpha^{beta-gamma} beta^{alpha-gamma} <= ((alpha+beta)/2)^{alpha+beta-2gamma}`.
pub fn check_ineq_1(
    alpha: &BigRational,
    beta: &BigRational,
    gamma: &BigRational,
) -> Result<bool, ExtremalError> {
    let zero = BigRational::zero();
    if !(alpha > &zero && beta > &zero && &(alpha + beta) > gamma) {
        return Err(ExtremalError::LemmaDomain {
            lemma: "power-mean inequality",
            requirement: "alpha, beta > 0 and alpha + beta > gamma",
        });
    }
    let two = BigRational::from_integer(2.into());
    let ord = pow_product_cmp(
        &[
            (alpha.clone(), beta - gamma),
            (beta.clone(), alpha - gamma),
        ],
        &[(
            (alpha + beta) / &two,
            alpha + beta - gamma - gamma,
        )],
    );
    Ok(ord != Ordering::Greater)
}

/// Lemma check: for `gamma, xi > 0` and `alpha, beta >= xi`,
/// `alpha^{alpha-gamma} beta^{beta-gamma} <= xi^{xi-gamma} (alpha+beta-xi)^{alpha+beta-xi-gamma}`.
pub fn check_ineq_2(
    alpha: &BigRational,
    beta: &BigRational,
    gamma: &BigRational,
    xi: &BigRational,
) -> Result<bool, ExtremalError> {
    let zero = BigRational::zero();
    if !(gamma > &zero && xi > &zero && alpha >= xi && beta >= xi) {
        return Err(ExtremalError::LemmaDomain {
            lemma: "endpoint-maximum inequality",
            requirement: "gamma, xi > 0 and alpha, beta >= xi",
        });
    }
    let merged = alpha + beta - xi;
    let ord = pow_product_cmp(
        &[
            (alpha.clone(), alpha - gamma),
            (beta.clone(), beta - gamma),
        ],
        &[
            (xi.clone(), xi - gamma),
            (merged.clone(), &merged - gamma),
        ],
    );
    Ok(ord != Ordering::Greater)
}
