//! Exact independent-set counting.
//!
//! The general-graph engine applies the elimination identity
//! `i(G) = i(G - v) + i(G - N[v])` with a maximum-degree pivot, after
//! factoring over connected components (`i` is multiplicative on disjoint
//! unions). Small subproblems are memoized. Everything is cross-checked by
//! [`brute_force_count`], which enumerates all `2^n` subsets and is kept
//! deliberately independent of the engine's code path.
//!
//! Trees get a dedicated linear-time pass based on rooted pairs `(a, b)`:
//! the number of independent sets containing / not containing the root.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::{BigCount, Error, Result};

/// Hard representation limit of the elimination engine (vertices are bits
/// of a `u128`).
const ENGINE_HARD_LIMIT: usize = 128;

/// Vertex ceiling for the brute-force oracle.
pub const BRUTE_FORCE_LIMIT: usize = 25;

/// Vertex ceiling for membership-pattern tables on non-forest graphs.
const PATTERN_SET_LIMIT: usize = 4;

/// Resource guards for the exact engine.
#[derive(Debug, Clone)]
pub struct CountConfig {
    /// Inputs with more vertices than this are rejected rather than risking
    /// a runaway exponential recursion. Capped at 128 by the engine's
    /// bitmask representation.
    pub max_exact_vertices: usize,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            max_exact_vertices: 64,
        }
    }
}

/// Independence counts of a rooted tree, split by root membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedPair {
    /// Independent sets containing the root.
    pub a: BigCount,
    /// Independent sets not containing the root (always counts the empty
    /// set).
    pub b: BigCount,
}

impl RootedPair {
    pub fn new(a: impl Into<BigCount>, b: impl Into<BigCount>) -> Self {
        RootedPair {
            a: a.into(),
            b: b.into(),
        }
    }

    /// `i(T) = a + b`.
    pub fn total(&self) -> BigCount {
        &self.a + &self.b
    }
}

/// Number of independent sets of `g` (the empty set included), using the
/// default resource guard.
pub fn count(g: &Graph) -> Result<BigCount> {
    count_with_config(g, &CountConfig::default())
}

/// [`count`] with an explicit resource guard.
pub fn count_with_config(g: &Graph, cfg: &CountConfig) -> Result<BigCount> {
    let mut engine = Engine::new(g, cfg)?;
    Ok(engine.count_alive(engine.full))
}

/// Number of vertex covers of `g`.
///
/// `S` is a vertex cover iff `V - S` is independent, so the two families
/// are equinumerous; this alias exists so cover-side arguments read the way
/// they are stated.
pub fn count_vertex_covers(g: &Graph) -> Result<BigCount> {
    count(g)
}

/// Brute-force oracle: subset-DP over all `2^n` vertex subsets.
pub fn brute_force_count(g: &Graph) -> Result<BigCount> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::BruteForceTooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let adj = adjacency_masks_u32(g);
    // independent[S] = independent[S minus lowest bit] and no edge from the
    // lowest bit into the rest.
    let total_subsets: usize = 1 << n;
    let mut independent = vec![0u64; total_subsets.div_ceil(64)];
    let set = |bits: &mut [u64], i: usize| bits[i / 64] |= 1 << (i % 64);
    let get = |bits: &[u64], i: usize| bits[i / 64] >> (i % 64) & 1 == 1;
    set(&mut independent, 0);
    let mut total: u64 = 1;
    let mut carry = BigCount::zero();
    for s in 1..total_subsets {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        if get(&independent, rest) && adj[v] & (rest as u32) == 0 {
            set(&mut independent, s);
            total += 1;
            if total == u64::MAX {
                carry += total;
                total = 0;
            }
        }
    }
    Ok(carry + total)
}

/// Post-order rooted-pair DP over a tree.
pub fn rooted_pair(t: &Graph, root: usize) -> Result<RootedPair> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if root >= t.vertex_count() {
        return Err(Error::VertexOutOfRange {
            v: root,
            n: t.vertex_count(),
        });
    }
    Ok(rooted_pair_unchecked(t, root))
}

fn rooted_pair_unchecked(t: &Graph, root: usize) -> RootedPair {
    let n = t.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut a: Vec<BigCount> = vec![BigCount::one(); n];
    let mut b: Vec<BigCount> = vec![BigCount::one(); n];
    for &u in order.iter().rev() {
        for &w in t.neighbors(u) {
            if parent[w] == u {
                let (aw, bw) = (a[w].clone(), b[w].clone());
                a[u] *= &bw;
                b[u] *= aw + bw;
            }
        }
    }
    RootedPair {
        a: a[root].clone(),
        b: b[root].clone(),
    }
}

/// Linear-time `i` for trees and forests (product over components).
pub fn count_tree(t: &Graph) -> Result<BigCount> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut total = BigCount::one();
    for comp in t.components() {
        let sub = t.induced_keep(&comp)?;
        total *= rooted_pair_unchecked(&sub, 0).total();
    }
    Ok(total)
}

/// Counts of independent sets resolved by cardinality; entry `k` is the
/// number of independent sets of size `k`, and the list always has `n + 1`
/// entries (zeros beyond the independence number).
///
/// Forests are handled by a polynomial rooted-pair DP with no size limit;
/// other graphs fall back to subset enumeration and are guarded at 25
/// vertices.
pub fn count_by_size(g: &Graph) -> Result<Vec<BigCount>> {
    let n = g.vertex_count();
    if g.is_forest() {
        let mut total = vec![BigCount::one()];
        for comp in g.components() {
            let sub = g.induced_keep(&comp)?;
            let (a, b) = size_polynomials(&sub, 0);
            total = poly_mul(&total, &poly_add(&a, &b));
        }
        total.resize(n + 1, BigCount::zero());
        return Ok(total);
    }
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::BruteForceTooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let adj = adjacency_masks_u32(g);
    let total_subsets: usize = 1 << n;
    let mut independent = vec![0u64; total_subsets.div_ceil(64)];
    let set = |bits: &mut [u64], i: usize| bits[i / 64] |= 1 << (i % 64);
    let get = |bits: &[u64], i: usize| bits[i / 64] >> (i % 64) & 1 == 1;
    set(&mut independent, 0);
    let mut buckets = vec![0u64; n + 1];
    buckets[0] = 1;
    for s in 1..total_subsets {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        if get(&independent, rest) && adj[v] & (rest as u32) == 0 {
            set(&mut independent, s);
            buckets[s.count_ones() as usize] += 1;
        }
    }
    Ok(buckets.into_iter().map(BigCount::from).collect())
}

/// Size-resolved rooted pair: coefficient `k` of each polynomial counts the
/// independent sets of size `k` containing (`a`) or avoiding (`b`) the root.
fn size_polynomials(t: &Graph, root: usize) -> (Vec<BigCount>, Vec<BigCount>) {
    let n = t.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut a: Vec<Vec<BigCount>> = vec![vec![BigCount::one()]; n];
    let mut b: Vec<Vec<BigCount>> = vec![vec![BigCount::one()]; n];
    for &u in order.iter().rev() {
        for &w in t.neighbors(u) {
            if parent[w] == u {
                a[u] = poly_mul(&a[u], &b[w]);
                let both = poly_add(&a[w], &b[w]);
                b[u] = poly_mul(&b[u], &both);
            }
        }
        // The root vertex itself contributes one element to every set
        // counted by `a`.
        a[u].insert(0, BigCount::zero());
    }
    (a[root].clone(), b[root].clone())
}

fn poly_add(x: &[BigCount], y: &[BigCount]) -> Vec<BigCount> {
    let mut out = vec![BigCount::zero(); x.len().max(y.len())];
    for (i, c) in x.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in y.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn poly_mul(x: &[BigCount], y: &[BigCount]) -> Vec<BigCount> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigCount::zero(); x.len() + y.len() - 1];
    for (i, cx) in x.iter().enumerate() {
        if cx.is_zero() {
            continue;
        }
        for (j, cy) in y.iter().enumerate() {
            out[i + j] += cx * cy;
        }
    }
    out
}

/// Independent-set counts classified by their intersection with a small
/// vertex set `s`.
///
/// `counts[p]` is the number of independent sets `I` with
/// `I ∩ s = { s[i] : bit i of p set }`. The vector has `2^|s|` entries and
/// sums to `count(g)`. `cover_counts` gives the same table for vertex
/// covers (the complement pattern).
#[derive(Debug, Clone)]
pub struct MembershipTable {
    pub vertices: Vec<usize>,
    pub counts: Vec<BigCount>,
}

impl MembershipTable {
    /// Cover-side view: entry `p` counts the vertex covers `J` with
    /// `J ∩ s` equal to pattern `p`.
    pub fn cover_counts(&self) -> Vec<BigCount> {
        let full = self.counts.len() - 1;
        (0..self.counts.len())
            .map(|p| self.counts[full ^ p].clone())
            .collect()
    }

    /// Number of independent sets whose intersection with `s` is exactly
    /// the named subset.
    pub fn independent_with_exactly(&self, members: &[usize]) -> &BigCount {
        let mut pattern = 0usize;
        for m in members {
            let i = self
                .vertices
                .iter()
                .position(|v| v == m)
                .expect("vertex is part of the pattern set");
            pattern |= 1 << i;
        }
        &self.counts[pattern]
    }
}

/// Builds the membership table for `|s| <= 4` labeled vertices.
pub fn count_with_and_without(g: &Graph, s: &[usize]) -> Result<MembershipTable> {
    count_with_and_without_config(g, s, &CountConfig::default())
}

pub fn count_with_and_without_config(
    g: &Graph,
    s: &[usize],
    cfg: &CountConfig,
) -> Result<MembershipTable> {
    if s.len() > PATTERN_SET_LIMIT {
        return Err(Error::PatternSetTooLarge {
            k: s.len(),
            limit: PATTERN_SET_LIMIT,
        });
    }
    let n = g.vertex_count();
    for &v in s {
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameter(
            "pattern vertices must be distinct".into(),
        ));
    }

    let mut engine = Engine::new(g, cfg)?;
    let s_mask: u128 = s.iter().map(|&v| 1u128 << v).sum();
    let mut counts = Vec::with_capacity(1 << s.len());
    for pattern in 0..(1u32 << s.len()) {
        let chosen: Vec<usize> = s
            .iter()
            .enumerate()
            .filter(|(i, _)| pattern >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let independent = chosen
            .iter()
            .all(|&u| chosen.iter().all(|&v| u == v || !g.has_edge(u, v)));
        if !independent {
            counts.push(BigCount::zero());
            continue;
        }
        let mut blocked = s_mask;
        for &u in &chosen {
            blocked |= engine.adj[u];
        }
        counts.push(engine.count_alive(engine.full & !blocked));
    }
    Ok(MembershipTable {
        vertices: s.to_vec(),
        counts,
    })
}

fn adjacency_masks_u32(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().map(|&w| 1u32 << w).sum())
        .collect()
}

struct Engine {
    adj: Vec<u128>,
    full: u128,
    memo: HashMap<Box<[u16]>, BigCount>,
}

/// Subgraphs at most this large are memoized under a compacted adjacency
/// key; bounded memory, and the big wins are on small repeated fragments.
const MEMO_LIMIT: u32 = 16;

impl Engine {
    fn new(g: &Graph, cfg: &CountConfig) -> Result<Self> {
        let n = g.vertex_count();
        let limit = cfg.max_exact_vertices.min(ENGINE_HARD_LIMIT);
        if n > limit {
            return Err(Error::TooManyVertices { n, limit });
        }
        let adj: Vec<u128> = (0..n)
            .map(|v| g.neighbors(v).iter().map(|&w| 1u128 << w).sum())
            .collect();
        let full = if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        };
        Ok(Engine {
            adj,
            full,
            memo: HashMap::new(),
        })
    }

    fn count_alive(&mut self, alive: u128) -> BigCount {
        if alive == 0 {
            return BigCount::one();
        }
        let comp = self.component(alive);
        if comp != alive {
            return self.count_alive(comp) * self.count_alive(alive & !comp);
        }
        let k = alive.count_ones();
        let key = if k <= MEMO_LIMIT {
            let key = self.compact_key(alive);
            if let Some(hit) = self.memo.get(&key) {
                return hit.clone();
            }
            Some(key)
        } else {
            None
        };
        // Pivot on a maximum-degree vertex, lowest id on ties.
        let mut pivot = usize::MAX;
        let mut best = 0u32;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let deg = (self.adj[v] & alive).count_ones();
            if pivot == usize::MAX || deg > best {
                pivot = v;
                best = deg;
            }
        }
        let total = if best == 0 {
            // Edgeless connected graph: the single vertex.
            BigCount::from(2u32)
        } else {
            let bit = 1u128 << pivot;
            self.count_alive(alive & !bit)
                + self.count_alive(alive & !(self.adj[pivot] | bit))
        };
        if let Some(key) = key {
            self.memo.insert(key, total.clone());
        }
        total
    }

    /// Connected component of the lowest alive bit.
    fn component(&self, alive: u128) -> u128 {
        let mut comp = 1u128 << alive.trailing_zeros();
        loop {
            let mut grown = comp;
            let mut rest = comp;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= self.adj[v] & alive;
            }
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    /// Order-preserving compaction of the induced subgraph to a hashable
    /// key.
    fn compact_key(&self, alive: u128) -> Box<[u16]> {
        let mut ids = [0usize; MEMO_LIMIT as usize];
        let mut count = 0;
        let mut rest = alive;
        while rest != 0 {
            ids[count] = rest.trailing_zeros() as usize;
            count += 1;
            rest &= rest - 1;
        }
        let ids = &ids[..count];
        let mut key = Vec::with_capacity(count);
        for &v in ids {
            let mut mask = 0u16;
            for (j, &w) in ids.iter().enumerate() {
                if self.adj[v] >> w & 1 == 1 {
                    mask |= 1 << j;
                }
            }
            key.push(mask);
        }
        key.into_boxed_slice()
    }
}
