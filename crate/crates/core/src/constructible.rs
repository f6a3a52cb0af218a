//! Tree-constructible numbers: the rooting/merging closure that generates
//! them, exact decisions against the enumerated tree spectrum, witness
//! replay, forest constructibility under two conventions, and the
//! `v = 2^t a + b` decomposition of constructible values.
//!
//! A positive integer is *constructible on trees* when some tree `T` has
//! `i(T) = v`. The search works on rooted pairs `(a, b)` (counts of
//! independent sets containing / avoiding the root): rooting a new vertex
//! maps `(a, b) -> (b, a+b)`, overlaying roots multiplies coordinatewise,
//! and overlaying with an endpoint-rooted path `P_n` multiplies by
//! `(F_n, F_{n+1})`. Every pair in the closure therefore belongs to an
//! actual rooted tree, which `replay` rebuilds and re-counts as a hard
//! postcondition.

use std::collections::{BTreeSet, HashMap};

use num_traits::One;

use crate::bounds::fib;
use crate::count::{count_tree, rooted_pair, RootedPair};
use crate::graph::Graph;
use crate::trees::{tree_value_spectrum, Spectrum, SpectrumWitness, ENUMERATION_LIMIT};
use crate::{BigCount, Error, Result};

/// Rooting: a new vertex is attached above the root and becomes the root.
pub fn root_op(p: &RootedPair) -> RootedPair {
    RootedPair {
        a: p.b.clone(),
        b: &p.a + &p.b,
    }
}

/// Merging with the path `P_n` rooted at an endpoint, whose pair is
/// `(F_n, F_{n+1})`; `n = 1` is the identity.
pub fn merge_path_op(p: &RootedPair, n: usize) -> RootedPair {
    assert!(n >= 1, "path length must be >= 1");
    RootedPair {
        a: fib(n) * &p.a,
        b: fib(n + 1) * &p.b,
    }
}

/// Merging two rooted trees by overlaying their roots.
pub fn merge_general(p: &RootedPair, q: &RootedPair) -> RootedPair {
    RootedPair {
        a: &p.a * &q.a,
        b: &p.b * &q.b,
    }
}

/// How a node of the search DAG was derived from its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeOp {
    /// The base pair `(1, 2)`: `K_2` rooted at an endpoint.
    Base,
    Root,
    /// Merge with `P_n`.
    MergePath(usize),
    /// Merge with another generated node (by index).
    MergeGeneral(usize),
}

/// A generated rooted pair with its derivation.
#[derive(Debug, Clone)]
pub struct PairNode {
    pub pair: RootedPair,
    pub parent: Option<usize>,
    pub op: NodeOp,
    /// Distance from the base node in derivation steps.
    pub level: usize,
}

/// Which merges the search closure performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Rooting plus merges with paths only, as in the published algorithm.
    Algorithm1,
    /// Rooting plus merges between any two generated nodes.
    Complete,
}

/// Limits for [`generate`].
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Only pairs with `a + b <= sum_limit` are kept. Every operation
    /// strictly increases the sum, so the closure below the limit is
    /// finite and complete.
    pub sum_limit: BigCount,
    /// Cap on `n` for path merges (the sum limit prunes long paths first,
    /// so the default is generous).
    pub max_path_merge: usize,
    pub mode: SearchMode,
    /// Optional cap on derivation depth, mirroring the published
    /// level-by-level "triangle"; `None` runs to the sum-bounded closure.
    pub max_levels: Option<usize>,
}

impl SearchConfig {
    pub fn new(sum_limit: impl Into<BigCount>, mode: SearchMode) -> Result<Self> {
        let sum_limit = sum_limit.into();
        if sum_limit < BigCount::from(3u32) {
            return Err(Error::InvalidParameter(
                "sum limit must be at least 3 (the base node)".into(),
            ));
        }
        Ok(SearchConfig {
            sum_limit,
            max_path_merge: 64,
            mode,
            max_levels: None,
        })
    }
}

/// The set of pairs generated by a search, with parent links intact.
#[derive(Debug, Clone)]
pub struct Generated {
    nodes: Vec<PairNode>,
}

impl Generated {
    pub fn nodes(&self) -> &[PairNode] {
        &self.nodes
    }

    /// The distinct`a + b` sums, i.e. the constructible numbers this run
    /// certifies.
    pub fn sums(&self) -> BTreeSet<BigCount> {
        self.nodes.iter().map(|n| n.pair.total()).collect()
    }

    /// Rebuilds the rooted tree behind node `idx` by replaying its
    /// derivation from the base, and verifies that the rebuilt tree's
    /// rooted pair equals the stored one.
    pub fn replay(&self, idx: usize) -> Result<(Graph, usize)> {
        let node = self
            .nodes
            .get(idx)
            .ok_or_else(|| Error::Internal(format!("no node {idx}")))?;
        let (graph, root) = self.rebuild(idx)?;
        let check = rooted_pair(&graph, root)?;
        if check != node.pair {
            return Err(Error::Internal(format!(
                "replay of node {idx} produced pair ({}, {}) instead of ({}, {})",
                check.a, check.b, node.pair.a, node.pair.b
            )));
        }
        Ok((graph, root))
    }

    fn rebuild(&self, idx: usize) -> Result<(Graph, usize)> {
        let node = &self.nodes[idx];
        match &node.op {
            NodeOp::Base => Ok((Graph::from_edges(2, &[(0, 1)])?, 0)),
            NodeOp::Root => {
                let (g, root) = self.rebuild(node.parent.expect("non-base has a parent"))?;
                let n = g.vertex_count();
                let mut edges = g.edges();
                edges.push((root, n));
                Ok((Graph::from_edges(n + 1, &edges)?, n))
            }
            NodeOp::MergePath(len) => {
                let (g, root) = self.rebuild(node.parent.expect("non-base has a parent"))?;
                let n = g.vertex_count();
                let mut edges = g.edges();
                let mut prev = root;
                for k in 0..len - 1 {
                    edges.push((prev, n + k));
                    prev = n + k;
                }
                Ok((Graph::from_edges(n + len - 1, &edges)?, root))
            }
            NodeOp::MergeGeneral(other) => {
                let (g, root) = self.rebuild(node.parent.expect("non-base has a parent"))?;
                let (h, h_root) = self.rebuild(*other)?;
                let base = g.vertex_count();
                // Append h's vertices except its root, overlaying the roots.
                let mut remap = vec![usize::MAX; h.vertex_count()];
                remap[h_root] = root;
                let mut next = base;
                for v in 0..h.vertex_count() {
                    if v != h_root {
                        remap[v] = next;
                        next += 1;
                    }
                }
                let mut edges = g.edges();
                edges.extend(h.edges().into_iter().map(|(u, v)| (remap[u], remap[v])));
                Ok((Graph::from_edges(next, &edges)?, root))
            }
        }
    }
}

/// Runs the closure of the base pair `(1, 2)` under the configured
/// operations, deduplicating by pair (two trees with equal `i` but
/// different pairs generate different futures, so deduplicating by sum
/// would lose reachable numbers).
pub fn generate(cfg: &SearchConfig) -> Generated {
    let mut nodes: Vec<PairNode> = Vec::new();
    let mut seen: HashMap<(BigCount, BigCount), usize> = HashMap::new();

    let base = RootedPair::new(1u8, 2u8);
    seen.insert((base.a.clone(), base.b.clone()), 0);
    nodes.push(PairNode {
        pair: base,
        parent: None,
        op: NodeOp::Base,
        level: 0,
    });

    let mut cursor = 0;
    while cursor < nodes.len() {
        let level = nodes[cursor].level;
        if cfg.max_levels.is_some_and(|cap| level >= cap) {
            cursor += 1;
            continue;
        }
        let pair = nodes[cursor].pair.clone();

        let mut try_add = |nodes: &mut Vec<PairNode>,
                           seen: &mut HashMap<(BigCount, BigCount), usize>,
                           cand: RootedPair,
                           op: NodeOp| {
            if cand.total() > cfg.sum_limit {
                return;
            }
            let key = (cand.a.clone(), cand.b.clone());
            if seen.contains_key(&key) {
                return;
            }
            seen.insert(key, nodes.len());
            nodes.push(PairNode {
                pair: cand,
                parent: Some(cursor),
                op,
                level: level + 1,
            });
        };

        try_add(&mut nodes, &mut seen, root_op(&pair), NodeOp::Root);
        for n in 2..=cfg.max_path_merge {
            let cand = merge_path_op(&pair, n);
            if cand.total() > cfg.sum_limit {
                break; // the merged sum is monotone in n
            }
            try_add(&mut nodes, &mut seen, cand, NodeOp::MergePath(n));
        }
        if cfg.mode == SearchMode::Complete {
            for j in 0..=cursor {
                let cand = merge_general(&pair, &nodes[j].pair);
                try_add(&mut nodes, &mut seen, cand, NodeOp::MergeGeneral(j));
            }
        }
        cursor += 1;
    }
    Generated { nodes }
}

/// Result of an exact constructibility decision.
#[derive(Debug, Clone)]
pub struct Decision {
    pub value: BigCount,
    /// A smallest-order witness tree when the value is constructible.
    pub witness: Option<SpectrumWitness>,
}

impl Decision {
    pub fn constructible(&self) -> bool {
        self.witness.is_some()
    }
}

/// Largest tree order that could still attain the value `v`
/// (`F_{n+2} <= v`).
pub fn decidable_order(v: &BigCount) -> usize {
    let mut n = 1;
    while fib(n + 3) <= *v {
        n += 1;
    }
    n
}

/// Exact decision for `v >= 2`, enumerating all trees that could attain the
/// value. Errors when that would require trees with more than 20 vertices.
pub fn decide(v: &BigCount) -> Result<Decision> {
    if *v < BigCount::from(2u32) {
        return Err(Error::InvalidParameter(format!(
            "constructibility is decided for integers >= 2, got {v}"
        )));
    }
    let n_max = decidable_order(v);
    if n_max > ENUMERATION_LIMIT {
        return Err(Error::NotDecidable {
            value: v.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let spectrum = tree_value_spectrum(n_max)?;
    decide_with(v, &spectrum)
}

/// [`decide`] against a prebuilt spectrum (which must cover `v`).
pub fn decide_with(v: &BigCount, spectrum: &Spectrum) -> Result<Decision> {
    if *v < BigCount::from(2u32) {
        return Err(Error::InvalidParameter(format!(
            "constructibility is decided for integers >= 2, got {v}"
        )));
    }
    Ok(Decision {
        value: v.clone(),
        witness: spectrum.lookup(v)?.cloned(),
    })
}

/// Where a fraction table draws its constructible set from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FractionSource {
    Algorithm1,
    Complete,
    Exact,
}

/// One partition row of the non-constructible fraction report.
#[derive(Debug, Clone)]
pub struct FractionRow {
    pub lo: u64,
    pub hi: u64,
    pub constructible: u64,
    pub width: u64,
}

impl FractionRow {
    /// Non-constructible fraction of the row, as an exact rational
    /// `(numerator, denominator)`.
    pub fn non_constructible_fraction(&self) -> (u64, u64) {
        (self.width - self.constructible, self.width)
    }
}

/// Fractions of non-constructible numbers over the partitions
/// `[1, w], [w+1, 2w], ...` up to `bound` (full rows only).
pub fn fractions(width: u64, bound: u64, source: FractionSource) -> Result<Vec<FractionRow>> {
    if width == 0 || bound < width {
        return Err(Error::InvalidParameter(format!(
            "need 0 < width <= bound, got width={width}, bound={bound}"
        )));
    }
    let constructible: BTreeSet<u64> = match source {
        FractionSource::Exact => {
            let bound_big = BigCount::from(bound);
            let n_max = decidable_order(&bound_big);
            if n_max > ENUMERATION_LIMIT {
                return Err(Error::NotDecidable {
                    value: bound.to_string(),
                    limit: ENUMERATION_LIMIT,
                });
            }
            let spectrum = tree_value_spectrum(n_max)?;
            spectrum
                .values()
                .keys()
                .take_while(|v| **v <= bound_big)
                .map(|v| u64::try_from(v).expect("bounded by a u64"))
                .collect()
        }
        FractionSource::Algorithm1 | FractionSource::Complete => {
            let mode = if source == FractionSource::Algorithm1 {
                SearchMode::Algorithm1
            } else {
                SearchMode::Complete
            };
            let cfg = SearchConfig::new(bound, mode)?;
            generate(&cfg)
                .sums()
                .into_iter()
                .map(|v| u64::try_from(&v).expect("bounded by a u64"))
                .collect()
        }
    };
    let mut rows = Vec::new();
    let mut lo = 1u64;
    while lo + width - 1 <= bound {
        let hi = lo + width - 1;
        let count = constructible.range(lo..=hi).count() as u64;
        rows.push(FractionRow {
            lo,
            hi,
            constructible: count,
            width,
        });
        lo += width;
    }
    Ok(rows)
}

/// Forest-constructibility conventions. Under the standard product rule the
/// count of a disjoint union is the product of the component counts. The
/// source text instead asserts `i(2 K_2) = 2 i(K_2) = 4`, reading a union
/// of `k` equal trees as `k` times one tree's count; that reading is kept
/// available as `Paper` (with the caveat that its printed example is not
/// arithmetically consistent: `i(K_2) = 3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForestConvention {
    Product,
    Paper,
}

/// How a forest-constructible value was assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestWitness {
    /// Tree values multiplying to the target (product convention).
    Product(Vec<u64>),
    /// `k` disjoint copies of a tree with value `t` (paper convention,
    /// `v = k * t`).
    Multiple { copies: u64, tree_value: u64 },
}

#[derive(Debug, Clone)]
pub struct ForestDecision {
    pub value: u64,
    pub witness: Option<ForestWitness>,
}

impl ForestDecision {
    pub fn constructible(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decides forest constructibility of `v >= 2` under the chosen convention.
pub fn forest_decide(v: u64, convention: ForestConvention) -> Result<ForestDecision> {
    if v < 2 {
        return Err(Error::InvalidParameter(format!(
            "forest constructibility is decided for integers >= 2, got {v}"
        )));
    }
    let bound = BigCount::from(v);
    let n_max = decidable_order(&bound);
    if n_max > ENUMERATION_LIMIT {
        return Err(Error::NotDecidable {
            value: v.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let spectrum = tree_value_spectrum(n_max)?;
    let tree_vals: BTreeSet<u64> = spectrum
        .values()
        .keys()
        .take_while(|t| **t <= bound)
        .map(|t| u64::try_from(t).expect("bounded by a u64"))
        .collect();

    let witness = match convention {
        ForestConvention::Paper => tree_vals
            .iter()
            .find(|&&t| v % t == 0)
            .map(|&t| ForestWitness::Multiple {
                copies: v / t,
                tree_value: t,
            }),
        ForestConvention::Product => {
            // factors[x]: some tree value d dividing x with x/d forest-
            // constructible (or x itself a tree value).
            let mut factors: Vec<Option<u64>> = vec![None; (v + 1) as usize];
            for x in 2..=v {
                if tree_vals.contains(&x) {
                    factors[x as usize] = Some(x);
                    continue;
                }
                factors[x as usize] = tree_vals
                    .iter()
                    .take_while(|&&d| d * d <= x || d <= x)
                    .find(|&&d| d < x && x % d == 0 && factors[(x / d) as usize].is_some())
                    .copied();
            }
            factors[v as usize].map(|_| {
                let mut parts = Vec::new();
                let mut rest = v;
                while let Some(d) = factors[rest as usize] {
                    parts.push(d);
                    if d == rest {
                        break;
                    }
                    rest /= d;
                }
                ForestWitness::Product(parts)
            })
        }
    };
    Ok(ForestDecision { value: v, witness })
}

/// The `v = 2^t a + b` decomposition of a constructible value.
#[derive(Debug, Clone)]
pub enum Decomposition {
    /// `v = 2^r + 1`, attained by the star `K_{1,r}`.
    Star { r: u32 },
    /// `v = 2^t a + b` with `a = i(T')`, `b = i(T' - x)`, obtained by
    /// splitting a deepest support vertex (and its `t` leaves) off a
    /// non-star witness tree.
    Split {
        t: u32,
        a: BigCount,
        b: BigCount,
        /// The reduced tree `T'` (compacted ids).
        tree: Graph,
        /// The attachment vertex `x` within `tree`.
        x: usize,
    },
}

/// Decomposes a constructible `v`: star values return their exponent, all
/// others are split as `2^t a + b`, verified exactly.
pub fn decompose(v: &BigCount) -> Result<Decomposition> {
    let decision = decide(v)?;
    let Some(witness) = decision.witness else {
        return Err(Error::InvalidParameter(format!(
            "{v} is not constructible on trees"
        )));
    };
    // v = 2^r + 1 iff v - 1 is a power of two.
    let minus_one = v - BigCount::one();
    if minus_one.count_ones() == 1 {
        return Ok(Decomposition::Star {
            r: minus_one.trailing_zeros().expect("nonzero") as u32,
        });
    }

    let t = witness.code.to_graph();
    // Root at the smallest leaf; take a deepest vertex p, its support s,
    // and s's one non-leaf neighbor x.
    let leaf = (0..t.vertex_count())
        .find(|&u| t.degree(u) == 1)
        .expect("a non-star tree has a leaf");
    let dist = t.bfs_distances(leaf);
    let depth_of = |u: usize| dist[u].expect("tree is connected");
    let max_depth = (0..t.vertex_count()).map(depth_of).max().expect("nonempty");
    debug_assert!(max_depth >= 3, "non-star trees have eccentricity >= 3 from any leaf");
    let p = (0..t.vertex_count())
        .find(|&u| depth_of(u) == max_depth)
        .expect("some vertex is deepest");
    let support = t.neighbors(p)[0];
    let x = *t
        .neighbors(support)
        .iter()
        .find(|&&u| depth_of(u) + 1 == depth_of(support))
        .expect("the support has a parent");

    let mut removed: Vec<usize> = t
        .neighbors(support)
        .iter()
        .copied()
        .filter(|&u| u != x)
        .collect();
    let exponent = removed.len() as u32; // deg(support) - 1 leaves
    removed.push(support);

    let reduced = t.induced_delete(&removed)?;
    let x_new = x - removed.iter().filter(|&&r| r < x).count();
    let a = count_tree(&reduced)?;
    let b = count_tree(&reduced.induced_delete(&[x_new])?)?;

    let recombined = (BigCount::one() << exponent) * &a + &b;
    if recombined != *v {
        return Err(Error::Internal(format!(
            "decomposition 2^{exponent} * {a} + {b} = {recombined} does not recover {v}"
        )));
    }
    Ok(Decomposition::Split {
        t: exponent,
        a,
        b,
        tree: reduced,
        x: x_new,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::brute_force_count;
    use crate::generators::star;
    use crate::trees::canonical_code;

    fn big(n: u64) -> BigCount {
        BigCount::from(n)
    }

    fn pair(a: u64, b: u64) -> RootedPair {
        RootedPair::new(a, b)
    }

    #[test]
    fn pair_operations() {
        assert_eq!(root_op(&pair(1, 2)), pair(2, 3));
        assert_eq!(root_op(&pair(2, 3)), pair(3, 5));
        assert_eq!(root_op(&pair(2, 6)), pair(6, 8));

        assert_eq!(merge_path_op(&pair(1, 2), 1), pair(1, 2)); // identity
        assert_eq!(merge_path_op(&pair(1, 2), 3), pair(2, 6));
        assert_eq!(merge_path_op(&pair(2, 3), 3), pair(4, 9));

        assert_eq!(merge_general(&pair(2, 3), &pair(2, 3)), pair(4, 9));
        assert_eq!(merge_general(&pair(4, 5), &pair(4, 5)), pair(16, 25));
        assert_eq!(merge_general(&pair(7, 9), &pair(1, 1)), pair(7, 9));
    }

    #[test]
    fn small_algorithm1_closure() {
        let cfg = SearchConfig::new(10u32, SearchMode::Algorithm1).unwrap();
        let sums: Vec<u64> = generate(&cfg)
            .sums()
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect();
        assert_eq!(sums, vec![3, 5, 8, 9]);
        // Matching the spectrum's constructible values, except 2 = i(P_1)
        // which the K_2-based triangle cannot reach.
        let spectrum = tree_value_spectrum(4).unwrap();
        let expected: Vec<u64> = spectrum
            .values()
            .keys()
            .filter(|v| **v <= big(10) && **v > big(2))
            .map(|v| u64::try_from(v).unwrap())
            .collect();
        assert_eq!(sums, expected);
    }

    #[test]
    fn closure_soundness_by_replay() {
        let cfg = SearchConfig::new(60u32, SearchMode::Complete).unwrap();
        let generated = generate(&cfg);
        for idx in 0..generated.nodes().len() {
            let (graph, root) = generated.replay(idx).unwrap();
            let node = &generated.nodes()[idx];
            assert_eq!(rooted_pair(&graph, root).unwrap(), node.pair);
            assert_eq!(count_tree(&graph).unwrap(), node.pair.total());
            if graph.vertex_count() <= 16 {
                assert_eq!(brute_force_count(&graph).unwrap(), node.pair.total());
            }
        }
    }

    #[test]
    fn merge_of_two_spiders() {
        // (4,5) is K_{1,3} rooted at a leaf; merging two copies overlays
        // the leaf-roots into a 7-vertex double spider with i = 41.
        let cfg = SearchConfig::new(41u32, SearchMode::Complete).unwrap();
        let generated = generate(&cfg);
        let target = pair(16, 25);
        let idx = generated
            .nodes()
            .iter()
            .position(|n| n.pair == target)
            .expect("(16,25) is reachable in complete mode");
        let (graph, _root) = generated.replay(idx).unwrap();
        assert_eq!(graph.vertex_count(), 7);
        assert_eq!(brute_force_count(&graph).unwrap(), big(41));
    }

    #[test]
    fn mode_inclusion() {
        for limit in [50u32, 200] {
            let a1 = generate(&SearchConfig::new(limit, SearchMode::Algorithm1).unwrap()).sums();
            let all = generate(&SearchConfig::new(limit, SearchMode::Complete).unwrap()).sums();
            assert!(a1.is_subset(&all), "limit {limit}");
            let spectrum = tree_value_spectrum(decidable_order(&big(limit as u64))).unwrap();
            let exact: BTreeSet<BigCount> = spectrum.values().keys().cloned().collect();
            assert!(all.is_subset(&exact), "limit {limit}");
        }
    }

    #[test]
    fn level_capped_generation() {
        let mut cfg = SearchConfig::new(1000u32, SearchMode::Algorithm1).unwrap();
        cfg.max_levels = Some(2);
        let generated = generate(&cfg);
        assert!(generated.nodes().iter().all(|n| n.level <= 2));
        // The triangle's first two levels below sum 1000.
        assert!(generated.nodes().len() > 3);
    }

    #[test]
    fn decisions() {
        for v in [4u64, 6, 7, 10, 11] {
            assert!(!decide(&big(v)).unwrap().constructible(), "{v}");
        }
        let nine = decide(&big(9)).unwrap();
        let witness = nine.witness.unwrap();
        assert_eq!(witness.order, 4);
        assert_eq!(
            canonical_code(&witness.code.to_graph()).unwrap(),
            canonical_code(&star(3)).unwrap()
        );
        let thirteen = decide(&big(13)).unwrap();
        let witness = thirteen.witness.unwrap();
        assert_eq!(witness.order, 5);
        assert_eq!(
            witness.code.to_graph().diameter_path().unwrap().length(),
            4 // P_5
        );
        assert!(decide(&big(1)).is_err());
    }

    #[test]
    fn decide_agrees_with_direct_spectrum_scan() {
        let spectrum = tree_value_spectrum(10).unwrap();
        for v in 2..=100u64 {
            let fast = decide_with(&big(v), &spectrum).unwrap().constructible();
            let slow = spectrum.values().contains_key(&big(v));
            assert_eq!(fast, slow, "v = {v}");
        }
    }

    #[test]
    fn fraction_rows() {
        let rows = fractions(10, 10, FractionSource::Exact).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].constructible, 5); // {2, 3, 5, 8, 9}
        assert_eq!(rows[0].non_constructible_fraction(), (5, 10));

        // The algorithm-1 closure can only miss constructibles.
        let exact = fractions(10, 100, FractionSource::Exact).unwrap();
        let approx = fractions(10, 100, FractionSource::Algorithm1).unwrap();
        for (e, a) in exact.iter().zip(&approx) {
            assert!(a.constructible <= e.constructible);
        }
        assert!(fractions(0, 10, FractionSource::Exact).is_err());
    }

    #[test]
    fn forest_decisions() {
        let d = forest_decide(4, ForestConvention::Paper).unwrap();
        assert!(d.constructible());
        assert_eq!(
            d.witness.unwrap(),
            ForestWitness::Multiple {
                copies: 2,
                tree_value: 2
            }
        );
        let d = forest_decide(4, ForestConvention::Product).unwrap();
        assert_eq!(d.witness.unwrap(), ForestWitness::Product(vec![2, 2]));
        let d = forest_decide(6, ForestConvention::Product).unwrap();
        assert_eq!(d.witness.unwrap(), ForestWitness::Product(vec![2, 3]));
        // 7 is prime and not a tree value: not even forest-constructible.
        assert!(!forest_decide(7, ForestConvention::Product)
            .unwrap()
            .constructible());
        assert!(!forest_decide(7, ForestConvention::Paper)
            .unwrap()
            .constructible());
    }

    #[test]
    fn decompositions() {
        match decompose(&big(8)).unwrap() {
            Decomposition::Split { t, a, b, .. } => {
                assert_eq!((t, a, b), (1, big(3), big(2)));
            }
            other => panic!("expected a split, got {other:?}"),
        }
        match decompose(&big(9)).unwrap() {
            Decomposition::Star { r } => assert_eq!(r, 3),
            other => panic!("expected a star, got {other:?}"),
        }
        match decompose(&big(13)).unwrap() {
            Decomposition::Split { t, a, b, .. } => {
                assert_eq!((t, a, b), (1, big(5), big(3)));
            }
            other => panic!("expected a split, got {other:?}"),
        }
        assert!(decompose(&big(4)).is_err());
    }

    #[test]
    fn decomposition_postcondition_holds_up_to_120() {
        let spectrum = tree_value_spectrum(9).unwrap();
        for v in 2..=120u64 {
            if !decide_with(&big(v), &spectrum).unwrap().constructible() {
                continue;
            }
            match decompose(&big(v)).unwrap() {
                Decomposition::Star { r } => {
                    assert_eq!(big(v), (BigCount::one() << r) + BigCount::one());
                }
                Decomposition::Split { t, a, b, tree, x } => {
                    assert_eq!(big(v), (BigCount::one() << t) * &a + &b);
                    // b <= a <= 2b, and the fields really are counts of the
                    // returned tree.
                    assert!(b <= a && a <= big(2) * &b);
                    assert_eq!(count_tree(&tree).unwrap(), a);
                    assert_eq!(
                        count_tree(&tree.induced_delete(&[x]).unwrap()).unwrap(),
                        b
                    );
                }
            }
        }
    }
}
