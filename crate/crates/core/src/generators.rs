//! Deterministic builders for every graph family the toolkit reasons about.
//!
//! Vertex labeling conventions are part of each builder's contract so that
//! counts conditioned on named vertices are reproducible:
//!
//! - `path`/`cycle` label vertices `0..n` along the walk; `star` puts the
//!   center at id 0.
//! - `h_graph(n, k)` labels the cycle `0..k` and attaches the `n-k` leaves
//!   to vertex 0.
//! - `sgon_chain` grows a linear chain of even `s`-gons left to right. The
//!   leftmost free vertical edge is `(w, x)` with `w` the bottom endpoint
//!   and `x` the top; the rightmost free vertical edge is `(v1, v2)` with
//!   `v2` on top. Both pairs are returned in the label map.
//! - `l_benzenoid` bridges the right end of one hexagon chain to the end of
//!   another through a new edge `y z`, closing a new hexagon
//!   `v1 v2 y z x2 x1`.
//! - `r_benzenoid` glues a chain of `m+1` hexagons onto a chain of `n+2`
//!   hexagons by identifying three vertex pairs, producing a branched
//!   benzenoid with one internal vertex.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;
use crate::{Error, Result};

/// A graph together with a name → vertex-id map for the labeled vertices
/// that composition formulas quantify over.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
}

impl LabeledGraph {
    pub fn label(&self, name: &str) -> usize {
        self.labels[name]
    }
}

/// Parameters of a linear chain of even-sided polygons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainSpec {
    s: usize,
    n: usize,
}

impl ChainSpec {
    pub fn new(s: usize, n: usize) -> Result<Self> {
        if s < 4 || s % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "gon size must be an even integer >= 4, got {s}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("chain length must be >= 1".into()));
        }
        Ok(ChainSpec { s, n })
    }

    pub fn gon_size(&self) -> usize {
        self.s
    }

    pub fn length(&self) -> usize {
        self.n
    }
}

/// The path on `n` vertices. `path(0)` is the empty graph.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

/// The star `K_{1,leaves}`, center at id 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
}

/// The unicyclic graph `H_{n,k}`: a `k`-cycle (ids `0..k`) with `n-k`
/// pendant leaves attached to vertex 0.
pub fn h_graph(n: usize, k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be >= 3, got {k}"
        )));
    }
    if n < k {
        return Err(Error::InvalidParameter(format!(
            "H_(n,k) needs n >= k, got n={n}, k={k}"
        )));
    }
    let mut edges: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
    edges.push((0, k - 1));
    edges.extend((k..n).map(|v| (0, v)));
    Graph::from_edges(n, &edges)
}

/// A caterpillar: spine path on ids `0..spine`, then `leaf_counts[i]` leaves
/// appended to spine vertex `i`, new ids issued in spine order.
pub fn caterpillar(spine: usize, leaf_counts: &[usize]) -> Result<Graph> {
    if spine == 0 {
        return Err(Error::InvalidParameter("spine must be nonempty".into()));
    }
    if leaf_counts.len() != spine {
        return Err(Error::InvalidParameter(format!(
            "expected {spine} leaf counts, got {}",
            leaf_counts.len()
        )));
    }
    let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for (i, &k) in leaf_counts.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(next, &edges)
}

/// The order-`2n` tree with a perfect matching that maximizes the number of
/// independent sets: a star `K_{1,n}` (center 0, leaves `1..=n`) with one
/// extra leaf appended to each of the leaves `1..=n-1` (leaf `i` gets child
/// `n+i`). The center stays matched to leaf `n`.
pub fn pm_extremal_tree(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("order parameter must be >= 1".into()));
    }
    let mut edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
    edges.extend((1..n).map(|i| (i, n + i)));
    Graph::from_edges(2 * n, &edges)
}

/// Internal structure of an s-gon chain: the graph plus, per gon, the
/// vertical (top, bottom) pair that is free when the gon is appended. For
/// gon `k >= 1` that pair becomes the shared edge with gon `k+1`.
struct SgonChainParts {
    graph: Graph,
    free_pairs: Vec<(usize, usize)>,
    /// New vertex ids of each gon after the first, in path order from the
    /// top shared vertex to the bottom one.
    gon_new: Vec<Vec<usize>>,
}

fn build_sgon_chain(spec: ChainSpec) -> SgonChainParts {
    let (s, n) = (spec.s, spec.n);
    let half = (s - 2) / 2;
    let mut edges: Vec<(usize, usize)> = (1..s).map(|v| (v - 1, v)).collect();
    edges.push((0, s - 1));
    // Gon 1: cycle 0..s with w=0 (bottom left), x=1 (top left); its free
    // right vertical edge is (s/2, s/2+1), top first.
    let mut free_pairs = vec![(s / 2, s / 2 + 1)];
    let mut gon_new = Vec::new();
    let mut next = s;
    for _ in 1..n {
        let (top, bottom) = *free_pairs.last().unwrap();
        let fresh: Vec<usize> = (next..next + s - 2).collect();
        next += s - 2;
        edges.push((top, fresh[0]));
        for w in fresh.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((fresh[s - 3], bottom));
        free_pairs.push((fresh[half - 1], fresh[half]));
        gon_new.push(fresh);
    }
    let graph = Graph::from_edges(next, &edges).expect("chain edges are valid");
    SgonChainParts {
        graph,
        free_pairs,
        gon_new,
    }
}

/// Linear chain of `n` s-gons glued along vertical edges. Vertex count is
/// `n(s-2) + 2`. Labels: `w`, `x` (left free vertical edge, bottom/top) and
/// `v1`, `v2` (right free vertical edge, bottom/top).
pub fn sgon_chain(spec: ChainSpec) -> LabeledGraph {
    let parts = build_sgon_chain(spec);
    let (right_top, right_bottom) = *parts.free_pairs.last().unwrap();
    let labels = BTreeMap::from([
        ("w".to_string(), 0),
        ("x".to_string(), 1),
        ("v2".to_string(), right_top),
        ("v1".to_string(), right_bottom),
    ]);
    LabeledGraph {
        graph: parts.graph,
        labels,
    }
}

/// Convenience wrapper for hexagon chains.
pub fn hexagon_chain(n: usize) -> Result<LabeledGraph> {
    Ok(sgon_chain(ChainSpec::new(6, n)?))
}

/// The L-shaped benzenoid: hexagon chains `G` (length `m`) and `H` (length
/// `n`) joined through a new edge `y z` so that `v1 v2 y z x2 x1` closes a
/// new hexagon, where `(v1, v2)` is the free right pair of `G` and
/// `(x1, x2)` the free left pair of `H`.
pub fn l_benzenoid(m: usize, n: usize) -> Result<LabeledGraph> {
    let g = build_sgon_chain(ChainSpec::new(6, m)?);
    let h = build_sgon_chain(ChainSpec::new(6, n)?);
    let offset = g.graph.vertex_count();
    let y = offset + h.graph.vertex_count();
    let z = y + 1;
    let (v2, v1) = *g.free_pairs.last().unwrap();
    let x1 = offset; // H's w (bottom of its left vertical edge)
    let x2 = offset + 1; // H's x (top)

    let mut edges = g.graph.edges();
    edges.extend(h.graph.edges().into_iter().map(|(a, b)| (a + offset, b + offset)));
    edges.push((v2, y));
    edges.push((y, z));
    edges.push((z, x2));
    edges.push((x1, v1));

    let graph = Graph::from_edges(z + 1, &edges)?;
    let labels = BTreeMap::from([
        ("v1".to_string(), v1),
        ("v2".to_string(), v2),
        ("x1".to_string(), x1),
        ("x2".to_string(), x2),
        ("y".to_string(), y),
        ("z".to_string(), z),
    ]);
    Ok(LabeledGraph { graph, labels })
}

/// The branched benzenoid obtained from a chain `G` of `m+1` hexagons and a
/// chain `H` of `n+2` hexagons by identifying three vertex pairs:
/// `x5 = v10`, `x4 = v5`, `x3 = v6`.
///
/// `x1 x6 x5 x4 x3 x2` is the last hexagon of `G` (with `x1 x2` its shared
/// edge); `v3..v6` and `v7..v10` are the new vertices of the last two
/// hexagons of `H`, and `(v1, v2)` is the edge shared between hexagons `n`
/// and `n+1` of `H`. All sixteen labels are returned; the three identified
/// pairs map to the same ids.
pub fn r_benzenoid(m: usize, n: usize) -> Result<LabeledGraph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("r_benzenoid needs m, n >= 1".into()));
    }
    let g = build_sgon_chain(ChainSpec::new(6, m + 1)?);
    let h = build_sgon_chain(ChainSpec::new(6, n + 2)?);

    // G-side labels: the last hexagon's shared pair and its outer path.
    let (x1, x2) = g.free_pairs[m - 1]; // shared edge between gons m and m+1
    let outer = &g.gon_new[m - 1]; // x6 x5 x4 x3, from x1 to x2
    let (x6, x5, x4, x3) = (outer[0], outer[1], outer[2], outer[3]);

    // H-side labels, in H-local ids.
    let (hv2, hv1) = h.free_pairs[n - 1];
    let pen = &h.gon_new[n - 1]; // gon n+1: v3 v4 v5 v6
    let last = &h.gon_new[n]; // gon n+2: v7 v8 v9 v10
    let (hv3, hv4, hv5, hv6) = (pen[0], pen[1], pen[2], pen[3]);
    let (hv7, hv8, hv9, hv10) = (last[0], last[1], last[2], last[3]);

    // Identify H's v10, v5, v6 with G's x5, x4, x3; remaining H vertices get
    // fresh ids after G's, order-preservingly.
    let gn = g.graph.vertex_count();
    let mut remap = vec![usize::MAX; h.graph.vertex_count()];
    remap[hv10] = x5;
    remap[hv5] = x4;
    remap[hv6] = x3;
    let mut next = gn;
    for v in 0..h.graph.vertex_count() {
        if remap[v] == usize::MAX {
            remap[v] = next;
            next += 1;
        }
    }

    let mut edge_set: BTreeSet<(usize, usize)> = g.graph.edges().into_iter().collect();
    for (a, b) in h.graph.edges() {
        let (a, b) = (remap[a], remap[b]);
        edge_set.insert((a.min(b), a.max(b)));
    }
    let edges: Vec<_> = edge_set.into_iter().collect();
    let graph = Graph::from_edges(next, &edges)?;

    let labels = BTreeMap::from([
        ("x1".to_string(), x1),
        ("x2".to_string(), x2),
        ("x3".to_string(), x3),
        ("x4".to_string(), x4),
        ("x5".to_string(), x5),
        ("x6".to_string(), x6),
        ("v1".to_string(), remap[hv1]),
        ("v2".to_string(), remap[hv2]),
        ("v3".to_string(), remap[hv3]),
        ("v4".to_string(), remap[hv4]),
        ("v5".to_string(), remap[hv5]),
        ("v6".to_string(), remap[hv6]),
        ("v7".to_string(), remap[hv7]),
        ("v8".to_string(), remap[hv8]),
        ("v9".to_string(), remap[hv9]),
        ("v10".to_string(), remap[hv10]),
    ]);
    Ok(LabeledGraph { graph, labels })
}
