//! Simple undirected graphs with dense 0-based vertex ids, the structural
//! predicates used by the counting and bounds modules, and the on-disk
//! edge-list format shared by the whole toolkit.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::{Error, Result};

/// An immutable simple undirected graph.
///
/// Invariants, enforced at construction: no self-loops, no parallel edges,
/// all neighbor ids in `0..n`, adjacency symmetric, neighbor lists sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

/// A path of vertices realizing the diameter of a connected graph.
///
/// Consecutive entries are adjacent, all entries are distinct, and the
/// number of edges equals the diameter. Shortest paths are induced, so no
/// chord can exist between non-consecutive entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

impl PathWitness {
    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list, validating
    /// simplicity and vertex ranges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge incident to vertex {v}"
                )));
            }
        }
        Ok(Graph { adjacency })
    }

    /// The empty graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `start`; unreachable vertices get `None`.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// True iff the graph is connected and acyclic. The empty graph is not
    /// a tree; the single vertex is.
    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.edge_count() == n - 1 && self.is_connected()
    }

    /// True iff every component is a tree.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// Returns a bipartition `(A, B)` with both sides independent, or `None`
    /// if the graph contains an odd cycle. Isolated vertices go to side `A`
    /// of their (singleton) component.
    pub fn is_bipartite(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (v, c) in color.iter().enumerate() {
            match c {
                Some(false) => a.push(v),
                Some(true) => b.push(v),
                None => unreachable!(),
            }
        }
        Some((a, b))
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// Computed edge by edge: the shortest cycle through an edge `uv` is one
    /// plus the `u`-`v` distance with that edge removed.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            if let Some(d) = self.distance_avoiding_edge(u, v) {
                let cyc = d + 1;
                if best.map_or(true, |b| cyc < b) {
                    best = Some(cyc);
                }
            }
        }
        best
    }

    fn distance_avoiding_edge(&self, from: usize, to: usize) -> Option<usize> {
        let mut dist = vec![None; self.vertex_count()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if (u == from && w == to) || (u == to && w == from) {
                    continue;
                }
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist[to]
    }

    /// A path realizing the maximum pairwise distance of a connected graph.
    ///
    /// Deterministic: among all pairs at maximum distance, the
    /// lexicographically smallest `(a, b)` with `a < b` is chosen, and the
    /// path from `a` greedily steps to the smallest-id neighbor closer to
    /// `b`, which minimizes intermediate ids.
    pub fn diameter_path(&self) -> Result<PathWitness> {
        let n = self.vertex_count();
        if n == 0 || !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best: Option<(usize, usize, usize)> = None; // (dist, a, b)
        for a in 0..n {
            let dist = self.bfs_distances(a);
            for b in (a + 1)..n {
                let d = dist[b].expect("connected");
                let candidate = (d, a, b);
                let better = match best {
                    None => true,
                    Some((bd, ba, bb)) => {
                        d > bd || (d == bd && (a, b) < (ba, bb))
                    }
                };
                if better {
                    best = Some(candidate);
                }
            }
        }
        let Some((d, a, b)) = best else {
            // Single vertex: diameter 0.
            return Ok(PathWitness { vertices: vec![0] });
        };
        let to_b = self.bfs_distances(b);
        let mut path = vec![a];
        let mut cur = a;
        for step in (0..d).rev() {
            let next = self.adjacency[cur]
                .iter()
                .copied()
                .find(|&w| to_b[w] == Some(step))
                .expect("a shortest path step must exist");
            path.push(next);
            cur = next;
        }
        debug_assert_eq!(cur, b);
        Ok(PathWitness { vertices: path })
    }

    /// Maximum matching size of a forest, by repeatedly matching a leaf to
    /// its support. Errors on graphs containing a cycle.
    pub fn matching_number_forest(&self) -> Result<usize> {
        if !self.is_forest() {
            return Err(Error::NotAForest);
        }
        let n = self.vertex_count();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut matched = 0;
        while let Some(leaf) = stack.pop() {
            if !alive[leaf] || deg[leaf] != 1 {
                continue;
            }
            let support = self.adjacency[leaf]
                .iter()
                .copied()
                .find(|&w| alive[w])
                .expect("a degree-1 vertex has a live neighbor");
            matched += 1;
            alive[leaf] = false;
            alive[support] = false;
            for &w in &self.adjacency[support] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        Ok(matched)
    }

    /// Induced subgraph after deleting `removed`, with the surviving ids
    /// compacted order-preservingly (old id order is kept).
    pub fn induced_delete(&self, removed: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in removed {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            gone[v] = true;
        }
        let mut remap = vec![usize::MAX; n];
        let mut kept = 0;
        for v in 0..n {
            if !gone[v] {
                remap[v] = kept;
                kept += 1;
            }
        }
        let mut adjacency = vec![Vec::new(); kept];
        for v in 0..n {
            if gone[v] {
                continue;
            }
            for &w in &self.adjacency[v] {
                if !gone[w] {
                    adjacency[remap[v]].push(remap[w]);
                }
            }
        }
        Ok(Graph { adjacency })
    }

    /// Induced subgraph keeping exactly `kept` (order-preserving compaction).
    pub fn induced_keep(&self, kept: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut keep = vec![false; n];
        for &v in kept {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            keep[v] = true;
        }
        let removed: Vec<usize> = (0..n).filter(|&v| !keep[v]).collect();
        self.induced_delete(&removed)
    }

    /// Graph with one edge removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("no edge {u}-{v}")));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&w| w != v);
        adjacency[v].retain(|&w| w != u);
        Ok(Graph { adjacency })
    }

    /// Serializes to the toolkit's edge-list format: a header line `n m`,
    /// then one `u v` line per edge with `u < v`, lexicographically sorted.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vertex_count(), edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format. Blank lines and lines starting with `#`
    /// are ignored anywhere in the file.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let parse = |s: Option<&str>| -> Result<usize> {
                s.and_then(|t| t.parse().ok()).ok_or(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected two integers, got {line:?}"),
                })
            };
            let a = parse(fields.next())?;
            let b = parse(fields.next())?;
            if fields.next().is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: "trailing fields".into(),
                });
            }
            match header {
                None => header = Some((a, b)),
                Some(_) => {
                    if a >= b {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("edges must satisfy u < v, got {a} {b}"),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing 'n m' header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{caterpillar, cycle, h_graph, path, star};

    #[test]
    fn construction_rejects_invalid() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 2)]).is_ok());
    }

    #[test]
    fn tree_predicate() {
        assert!(path(4).is_tree());
        assert!(!cycle(6).unwrap().is_tree());
        // Two disjoint edges.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_tree());
        assert!(g.is_forest());
        assert!(!Graph::empty(0).is_tree());
        assert!(Graph::empty(1).is_tree());
    }

    #[test]
    fn bipartite_predicate() {
        assert!(cycle(6).unwrap().is_bipartite().is_some());
        assert!(cycle(5).unwrap().is_bipartite().is_none());
        let (a, b) = cycle(6).unwrap().is_bipartite().unwrap();
        assert_eq!(a.len() + b.len(), 6);
        // Both sides independent.
        let g = cycle(6).unwrap();
        for side in [&a, &b] {
            for &u in side {
                for &v in side {
                    assert!(u == v || !g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(6).unwrap().girth(), Some(6));
        assert_eq!(h_graph(7, 4).unwrap().girth(), Some(4));
        assert_eq!(path(10).girth(), None);
        assert_eq!(star(5).girth(), None);
        // Girth is infinite exactly when each component is a tree.
        let forest = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(forest.girth(), None);
        assert!(forest.is_forest());
    }

    #[test]
    fn diameter_paths() {
        let w = path(5).diameter_path().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.length(), 4);

        // Star: leaf-center-leaf, smallest leaf ids win the tie-break.
        let w = star(4).diameter_path().unwrap();
        assert_eq!(w.vertices, vec![1, 0, 2]);
        assert_eq!(w.length(), 2);

        // Caterpillar with spine 3, one leaf per spine vertex.
        let g = caterpillar(3, &[1, 1, 1]).unwrap();
        let w = g.diameter_path().unwrap();
        assert_eq!(w.length(), 4);
        for pair in w.vertices.windows(2) {
            assert!(g.has_edge(pair[0], pair[1]));
        }

        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(disconnected.diameter_path().is_err());
    }

    #[test]
    fn diameter_matches_bfs_eccentricity() {
        for g in [path(7), star(6), caterpillar(4, &[2, 0, 1, 3]).unwrap()] {
            let witness = g.diameter_path().unwrap();
            let ecc = (0..g.vertex_count())
                .map(|v| {
                    g.bfs_distances(v)
                        .into_iter()
                        .map(|d| d.unwrap())
                        .max()
                        .unwrap()
                })
                .max()
                .unwrap();
            assert_eq!(witness.length(), ecc);
        }
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(path(4).matching_number_forest().unwrap(), 2);
        assert_eq!(star(5).matching_number_forest().unwrap(), 1);
        let three_edges = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(three_edges.matching_number_forest().unwrap(), 3);
        assert!(cycle(4).unwrap().matching_number_forest().is_err());
    }

    /// Brute-force maximum matching, for cross-checking the greedy DP.
    fn brute_force_matching(g: &Graph) -> usize {
        let edges = g.edges();
        fn rec(edges: &[(usize, usize)], used: u64) -> usize {
            if edges.is_empty() {
                return 0;
            }
            let (u, v) = edges[0];
            let rest = &edges[1..];
            let skip = rec(rest, used);
            if used & (1 << u) == 0 && used & (1 << v) == 0 {
                (1 + rec(rest, used | (1 << u) | (1 << v))).max(skip)
            } else {
                skip
            }
        }
        rec(&edges, 0)
    }

    #[test]
    fn matching_agrees_with_brute_force_on_small_forests() {
        let mut cases = vec![path(1), path(7), star(6)];
        cases.push(caterpillar(3, &[2, 2, 2]).unwrap());
        cases.push(caterpillar(5, &[0, 1, 0, 2, 0]).unwrap());
        cases.push(Graph::from_edges(9, &[(0, 1), (1, 2), (3, 4), (5, 6), (6, 7), (6, 8)]).unwrap());
        for g in cases {
            assert!(g.vertex_count() <= 12);
            assert_eq!(
                g.matching_number_forest().unwrap(),
                brute_force_matching(&g),
                "mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn induced_deletion() {
        let p3 = path(4).induced_delete(&[3]).unwrap();
        assert_eq!(p3, path(3));
        let p5 = cycle(6).unwrap().induced_delete(&[0]).unwrap();
        assert!(p5.is_tree());
        assert_eq!(p5.vertex_count(), 5);
        assert_eq!(p5.diameter_path().unwrap().length(), 4);
        // C6 minus a closed neighborhood N[v] leaves P3.
        let c6 = cycle(6).unwrap();
        let closed: Vec<usize> = std::iter::once(0).chain(c6.neighbors(0).iter().copied()).collect();
        let p3 = c6.induced_delete(&closed).unwrap();
        assert!(p3.is_tree());
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(p3.edge_count(), 2);

        assert!(path(4).induced_delete(&[9]).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = h_graph(7, 4).unwrap();
        let text = g.to_edge_list();
        let back = Graph::from_edge_list(&text).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn edge_list_ignores_comments_and_blanks() {
        let text = "# a comment\n\n4 3\n0 1\n# middle\n1 2\n\n2 3\n# labels {\"w\":0}\n";
        let g = Graph::from_edge_list(text).unwrap();
        assert_eq!(g, path(4));
    }

    #[test]
    fn edge_list_rejects_malformed() {
        assert!(Graph::from_edge_list("").is_err());
        assert!(Graph::from_edge_list("2 1\n1 0\n").is_err()); // u >= v
        assert!(Graph::from_edge_list("2 2\n0 1\n").is_err()); // count mismatch
        assert!(Graph::from_edge_list("2 1\n0 1 9\n").is_err()); // trailing field
    }
}
