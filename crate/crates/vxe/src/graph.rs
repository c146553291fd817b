//! Finite simple graphs: construction, edge-list I/O, and the combinatorial
//! quantities the spectral layer builds on (degrees, closed walks,
//! eccentricity, bipartitions, quadrangle detection, components).
//!
//! Vertices are `0..n`. Graphs are undirected, loop-free, and without
//! multi-edges; duplicate edge insertions are accepted and ignored.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::num::Real;

/// Maximum walk length accepted by [`Graph::closed_walk_count`].
pub const MAX_WALK_LENGTH: u32 = 32;

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Graph {
    /// Creates an edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    /// Builds a graph on `n` vertices from an edge iterator.
    ///
    /// Rejects self-loops and out-of-range endpoints; duplicate edges are
    /// silently deduplicated.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the undirected edge `{u, v}`.
    ///
    /// Inserting an edge that is already present is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(Error::OutOfRange {
                what: "vertex",
                value: u,
                limit: n,
            });
        }
        if v >= n {
            return Err(Error::OutOfRange {
                what: "vertex",
                value: v,
                limit: n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether `{u, v}` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `(min degree, max degree)` over all vertices; `(0, 0)` when `n = 0`.
    pub fn degree_extremes(&self) -> (usize, usize) {
        let mut lo = usize::MAX;
        let mut hi = 0usize;
        for nbrs in &self.adj {
            lo = lo.min(nbrs.len());
            hi = hi.max(nbrs.len());
        }
        if self.adj.is_empty() {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    /// Number of closed walks of length `k` that start and end at `v`.
    ///
    /// Exact integer dynamic programming over neighbor sums; `k = 0` counts
    /// the empty walk. Lengths above [`MAX_WALK_LENGTH`] are rejected, and
    /// counts that exceed 64-bit range report [`Error::Overflow`].
    pub fn closed_walk_count(&self, v: usize, k: u32) -> Result<u64> {
        self.check_vertex(v)?;
        if k > MAX_WALK_LENGTH {
            return Err(Error::OutOfRange {
                what: "walk length",
                value: k as usize,
                limit: MAX_WALK_LENGTH as usize,
            });
        }
        if k == 0 {
            return Ok(1);
        }
        let n = self.n();
        // counts[u] = number of length-t walks from v to u.
        let mut counts = vec![0u64; n];
        counts[v] = 1;
        let mut next = vec![0u64; n];
        for _ in 0..k {
            for u in 0..n {
                let mut acc: u64 = 0;
                for &w in self.adj[u].iter() {
                    acc = acc
                        .checked_add(counts[w])
                        .ok_or(Error::Overflow { vertex: v, k })?;
                }
                next[u] = acc;
            }
            std::mem::swap(&mut counts, &mut next);
        }
        Ok(counts[v])
    }

    /// BFS distances from `v`; `usize::MAX` marks unreachable vertices.
    fn bfs_distances(&self, v: usize) -> Vec<usize> {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in self.adj[u].iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Whether the graph is connected. Graphs with at most one vertex count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Maximum distance from `v` to any vertex.
    ///
    /// Errors with [`Error::Disconnected`] when some vertex is unreachable
    /// from `v`.
    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        let dist = self.bfs_distances(v);
        let mut ecc = 0;
        for &d in &dist {
            if d == usize::MAX {
                return Err(Error::Disconnected);
            }
            ecc = ecc.max(d);
        }
        Ok(ecc)
    }

    /// Two-colors the graph if it is bipartite.
    ///
    /// Returns `(part1, part2)` as ascending vertex lists, or `None` when an
    /// odd cycle exists. In every component the lowest-numbered vertex is
    /// placed in part 1, so isolated vertices always land in part 1.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in self.adj[u].iter() {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let part1 = (0..n).filter(|&v| color[v] == 0).collect();
        let part2 = (0..n).filter(|&v| color[v] == 1).collect();
        Some((part1, part2))
    }

    /// Whether `v` lies on some 4-cycle.
    ///
    /// Exhaustive check: two distinct neighbors of `v` with a common second
    /// neighbor other than `v` close a quadrangle through `v`.
    pub fn quadrangle_through(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        for (idx, &a) in nbrs.iter().enumerate() {
            for &b in nbrs.iter().skip(idx + 1) {
                for &w in self.adj[a].iter() {
                    if w != v && self.adj[b].contains(&w) {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    /// Extracts the connected component containing `v` as its own graph.
    ///
    /// Returns the component and the relabeling map: entry `i` of the map is
    /// the original id of the component's vertex `i`. Component vertices keep
    /// their relative order.
    pub fn component_of(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        let dist = self.bfs_distances(v);
        let members: Vec<usize> = (0..self.n()).filter(|&u| dist[u] != usize::MAX).collect();
        let mut index_of = vec![usize::MAX; self.n()];
        for (new, &orig) in members.iter().enumerate() {
            index_of[orig] = new;
        }
        let mut comp = Graph::new(members.len());
        for &orig in &members {
            for &w in self.adj[orig].iter() {
                if orig < w {
                    comp.add_edge(index_of[orig], index_of[w])?;
                }
            }
        }
        Ok((comp, members))
    }

    /// Applies a vertex relabeling: edge `{u, v}` becomes `{perm[u], perm[v]}`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::BadParameters {
                reason: format!("permutation length {} != {}", perm.len(), self.n()),
            });
        }
        let mut seen = vec![false; self.n()];
        for &p in perm {
            if p >= self.n() || seen[p] {
                return Err(Error::BadParameters {
                    reason: "not a permutation".into(),
                });
            }
            seen[p] = true;
        }
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Dense adjacency matrix, row-major `n × n`.
    pub fn adjacency_matrix<R: Real>(&self) -> Vec<R> {
        let n = self.n();
        let mut a = vec![R::zero(); n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = R::one();
            a[v * n + u] = R::one();
        }
        a
    }

    /// Errors with [`Error::OutOfRange`] unless `v < n`.
    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                what: "vertex",
                value: v,
                limit: self.n(),
            })
        }
    }
}

/// Parses the plain-text edge-list format.
///
/// Rules:
/// - UTF-8 text, one item per line; leading and trailing whitespace ignored.
/// - Blank lines and lines starting with `#` are skipped.
/// - An optional first significant line `n <count>` fixes the vertex count.
/// - Every other line is `<u> <v>`, two whitespace-separated vertex ids.
/// - Without a header the vertex count is `1 + max id` (0 for no edges).
/// - Duplicate edges are deduplicated; self-loops are errors.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_id: Option<usize> = None;
    let mut saw_significant_line = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if !saw_significant_line && tokens[0] == "n" {
            saw_significant_line = true;
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line,
                    reason: "header must be exactly `n <count>`".into(),
                });
            }
            let count = tokens[1].parse::<usize>().map_err(|_| Error::Parse {
                line,
                reason: format!("invalid vertex count `{}`", tokens[1]),
            })?;
            declared_n = Some(count);
            continue;
        }
        saw_significant_line = true;
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                reason: format!("expected `<u> <v>`, found {} tokens", tokens.len()),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(tokens.iter()) {
            *slot = tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                reason: format!("invalid vertex id `{tok}` (ids are non-negative integers)"),
            })?;
        }
        let [u, v] = ids;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if let Some(nd) = declared_n {
            if u >= nd || v >= nd {
                return Err(Error::Parse {
                    line,
                    reason: format!("vertex id {} exceeds declared count {nd}", u.max(v)),
                });
            }
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u.max(v))));
        edges.push((u, v));
    }

    let n = declared_n.unwrap_or(match max_id {
        Some(m) => m + 1,
        None => 0,
    });
    Graph::from_edges(n, edges)
}

/// Serializes a graph in the format accepted by [`parse_edge_list`],
/// with an explicit `n` header so isolated vertices survive a round trip.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", g.n()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Generates `how_many` pseudo-random graphs, reproducibly for a fixed seed.
///
/// Each graph draws its vertex count uniformly from `1..=n_max` and an
/// Erdős–Rényi edge probability uniformly from `(0, 1)`. Within every full
/// block of ten graphs, position 9 is resampled until bipartite and position
/// 10 until connected unless the block already produced such instances, so
/// each full block contains at least one connected and one bipartite graph.
pub fn random_corpus(seed: u64, n_max: usize, how_many: usize) -> Vec<Graph> {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(how_many);
    let mut block_has_connected = false;
    let mut block_has_bipartite = false;
    for i in 0..how_many {
        let pos = i % 10;
        if pos == 0 {
            block_has_connected = false;
            block_has_bipartite = false;
        }
        let mut g = sample_er(&mut rng, n_max);
        if pos == 8 && !block_has_bipartite {
            while g.bipartition().is_none() {
                g = sample_er(&mut rng, n_max);
            }
        }
        if pos == 9 && !block_has_connected {
            while !g.is_connected() {
                g = sample_er(&mut rng, n_max);
            }
        }
        block_has_connected |= g.is_connected();
        block_has_bipartite |= g.bipartition().is_some();
        out.push(g);
    }
    out
}

fn sample_er(rng: &mut ChaCha8Rng, n_max: usize) -> Graph {
    let n = rng.gen_range(1..=n_max);
    let p = loop {
        let p: f64 = rng.gen();
        if p > 0.0 {
            break p;
        }
    };
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v).expect("sampled edge is valid");
            }
        }
    }
    g
}
