//! Exhaustive enumeration of non-isomorphic free trees, canonical codes,
//! and the value spectrum of `i(T)` over all trees up to a vertex bound.
//!
//! Rooted trees are generated as canonical level sequences in decreasing
//! lexicographic order by the Beyer-Hedetniemi successor rule (each rooted
//! isomorphism class appears exactly once, children subtrees in
//! non-increasing sequence order). Free trees are obtained by keeping
//! exactly the sequences whose root is the centroid, with a deterministic
//! tie-break for bicentroidal trees; no pairwise isomorphism testing is
//! involved.

use std::collections::BTreeMap;

use crate::count::count_tree;
use crate::graph::Graph;
use crate::{BigCount, Error, Result};

/// Enumeration is guarded here; n = 20 already has 823065 trees.
pub const ENUMERATION_LIMIT: usize = 20;

/// Canonical level sequence of a free tree (depths in preorder, root 0).
///
/// Two trees are isomorphic iff their codes are equal. The code is the
/// canonical rooted level sequence at the centroid; bicentroidal trees are
/// rooted at the centroid whose remainder-half sequence dominates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCode(pub Vec<u32>);

impl TreeCode {
    /// Decodes the level sequence into a graph; vertex `i` is the `i`-th
    /// entry, its parent the nearest earlier entry one level up.
    pub fn to_graph(&self) -> Graph {
        decode_level_sequence(&self.0)
    }

    /// Compact text form, e.g. `0-1-2-1`.
    pub fn to_text(&self) -> String {
        self.0
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join("-")
    }
}

fn decode_level_sequence(seq: &[u32]) -> Graph {
    let n = seq.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new(); // stack[l] = latest vertex at level l
    for (v, &level) in seq.iter().enumerate() {
        stack.truncate(level as usize);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Graph::from_edges(n, &edges).expect("level sequences decode to valid trees")
}

/// Canonical rooted level sequence: children subtrees sorted so the
/// concatenation is lexicographically maximal.
fn canonical_rooted_sequence(t: &Graph, root: usize) -> Vec<u32> {
    fn rec(t: &Graph, v: usize, parent: usize, depth: u32) -> Vec<u32> {
        let mut child_seqs: Vec<Vec<u32>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rec(t, w, v, depth + 1))
            .collect();
        child_seqs.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![depth];
        for s in child_seqs {
            out.extend(s);
        }
        out
    }
    rec(t, root, usize::MAX, 0)
}

/// Centroid(s) of a tree: the one or two vertices minimizing the largest
/// component of `T - v`.
fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    if n == 1 {
        return vec![0];
    }
    // Subtree sizes from an arbitrary root.
    let root = 0;
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
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let mut best = usize::MAX;
    let mut out = Vec::new();
    for v in 0..n {
        let mut largest = n - size[v]; // the component through the parent
        for &w in t.neighbors(v) {
            if parent[w] == v {
                largest = largest.max(size[w]);
            }
        }
        if largest < best {
            best = largest;
            out = vec![v];
        } else if largest == best {
            out.push(v);
        }
    }
    out
}

/// Canonical code of an arbitrary tree. Produces exactly the sequences that
/// [`enumerate_trees`] emits, so codes can be compared across sources.
pub fn canonical_code(t: &Graph) -> Result<TreeCode> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let cs = centroids(t);
    match cs.as_slice() {
        [c] => Ok(TreeCode(canonical_rooted_sequence(t, *c))),
        [c1, c2] => {
            // Compare the two halves as rooted trees; root at the centroid
            // whose own half dominates.
            let half = |a: usize, b: usize| {
                let mut keep = vec![a];
                let mut stack = vec![a];
                let mut seen = vec![false; t.vertex_count()];
                seen[a] = true;
                seen[b] = true;
                while let Some(u) = stack.pop() {
                    for &w in t.neighbors(u) {
                        if !seen[w] {
                            seen[w] = true;
                            keep.push(w);
                            stack.push(w);
                        }
                    }
                }
                keep.sort_unstable();
                let sub = t.induced_keep(&keep).expect("ids in range");
                let local_root = keep.binary_search(&a).expect("kept");
                canonical_rooted_sequence(&sub, local_root)
            };
            let h1 = half(*c1, *c2);
            let h2 = half(*c2, *c1);
            let root = if h1 >= h2 { *c1 } else { *c2 };
            Ok(TreeCode(canonical_rooted_sequence(t, root)))
        }
        _ => Err(Error::Internal("a tree has one or two centroids".into())),
    }
}

/// Iterator over one representative per isomorphism class of free trees on
/// `n` vertices, in decreasing level-sequence order.
pub struct FreeTrees {
    n: usize,
    next_seq: Option<Vec<u32>>,
}

/// Enumerates all non-isomorphic free trees on `n` vertices
/// (`1 <= n <= 20`).
pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationOutOfRange {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(FreeTrees {
        n,
        next_seq: Some((0..n as u32).collect()),
    })
}

impl FreeTrees {
    /// Beyer-Hedetniemi successor: find the last entry above level 1, and
    /// repeat the block ending before it that starts at its parent's level.
    fn advance(seq: &[u32]) -> Option<Vec<u32>> {
        let p = seq.iter().rposition(|&l| l >= 2)?;
        let q = seq[..p]
            .iter()
            .rposition(|&l| l == seq[p] - 1)
            .expect("a parent level exists");
        let mut next = seq.to_vec();
        for i in p..next.len() {
            next[i] = next[i - (p - q)];
        }
        Some(next)
    }

    /// Keep a rooted sequence iff its root is the canonical centroid.
    fn is_free_canonical(seq: &[u32]) -> bool {
        let n = seq.len();
        if n <= 2 {
            return true;
        }
        // Root-subtree slices: maximal blocks of entries >= 1.
        let mut slices: Vec<(usize, usize)> = Vec::new();
        let mut start = 1;
        for i in 2..n {
            if seq[i] == 1 {
                slices.push((start, i));
                start = i;
            }
        }
        slices.push((start, n));
        let largest = slices.iter().map(|&(s, e)| e - s).max().unwrap_or(0);
        if 2 * largest < n {
            // Root is the unique centroid.
            return true;
        }
        if 2 * largest > n {
            return false;
        }
        // Bicentroidal: the big subtree is one half; compare it to the
        // remainder rooted here and keep the dominant rooting.
        let (bs, be) = *slices
            .iter()
            .find(|&&(s, e)| e - s == largest)
            .expect("a largest slice exists");
        let big: Vec<u32> = seq[bs..be].iter().map(|&l| l - 1).collect();
        let mut rest: Vec<u32> = Vec::with_capacity(n - largest);
        rest.push(0);
        rest.extend_from_slice(&seq[1..bs]);
        rest.extend_from_slice(&seq[be..]);
        rest >= big
    }
}

impl Iterator for FreeTrees {
    type Item = TreeCode;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some(seq) = self.next_seq.take() {
            let keep = Self::is_free_canonical(&seq);
            self.next_seq = Self::advance(&seq);
            if keep {
                debug_assert_eq!(seq.len(), self.n);
                return Some(TreeCode(seq));
            }
        }
        None
    }
}

/// One witness tree per attainable value of `i(T)`.
#[derive(Debug, Clone)]
pub struct SpectrumWitness {
    /// Vertex count of the witness (the smallest over all trees attaining
    /// the value).
    pub order: usize,
    pub code: TreeCode,
}

/// The set of values `i(T)` over all trees with at most `n_max` vertices,
/// with a smallest witness for each.
///
/// Because `i(T) >= F_{n+2}` for trees of order `n`, the spectrum decides
/// membership exactly for every value below `F_{n_max + 2}`; the cutoff
/// logic lives here so partial spectra cannot be misread as complete.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub n_max: usize,
    values: BTreeMap<BigCount, SpectrumWitness>,
    decidable_below: BigCount,
}

impl Spectrum {
    pub fn values(&self) -> &BTreeMap<BigCount, SpectrumWitness> {
        &self.values
    }

    /// Exclusive upper end of the decidable range (`F_{n_max+2}`).
    pub fn decidable_below(&self) -> &BigCount {
        &self.decidable_below
    }

    pub fn decides(&self, v: &BigCount) -> bool {
        *v < self.decidable_below
    }

    /// Exact constructibility decision: `Ok(Some(witness))` if some tree
    /// attains `v`, `Ok(None)` if provably none does, error if `v` is
    /// beyond this spectrum's range.
    pub fn lookup(&self, v: &BigCount) -> Result<Option<&SpectrumWitness>> {
        if !self.decides(v) {
            return Err(Error::NotDecidable {
                value: v.to_string(),
                limit: self.n_max,
            });
        }
        Ok(self.values.get(v))
    }
}

/// Computes `i(T)` for every tree with at most `n_max` vertices and records
/// the first witness per value (smallest order, then enumeration order).
pub fn tree_value_spectrum(n_max: usize) -> Result<Spectrum> {
    if n_max == 0 || n_max > ENUMERATION_LIMIT {
        return Err(Error::EnumerationOutOfRange {
            n: n_max,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut values: BTreeMap<BigCount, SpectrumWitness> = BTreeMap::new();
    for n in 1..=n_max {
        for code in enumerate_trees(n)? {
            let value = count_tree(&code.to_graph())?;
            values
                .entry(value)
                .or_insert_with(|| SpectrumWitness { order: n, code });
        }
    }
    Ok(Spectrum {
        n_max,
        values,
        decidable_below: crate::bounds::fib(n_max + 2),
    })
}

/// Fraction of trees of each order whose `i(T)` is even — exploratory
/// census, not asserted against anything.
pub fn parity_census(n_max: usize) -> Result<Vec<(usize, u64, u64)>> {
    if n_max == 0 || n_max > ENUMERATION_LIMIT {
        return Err(Error::EnumerationOutOfRange {
            n: n_max,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut even = 0u64;
        let mut total = 0u64;
        for code in enumerate_trees(n)? {
            let value = count_tree(&code.to_graph())?;
            total += 1;
            if !value.bit(0) {
                even += 1;
            }
        }
        out.push((n, even, total));
    }
    Ok(out)
}
