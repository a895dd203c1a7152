//! Exact representation of small simple graphs, with a specialization for
//! complete multipartite structure.
//!
//! Vertex identity is positional: a vertex is its index in `0..n`. Labels are
//! cosmetic and only used by the text formats and reports.

use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on graph size; everything is stored in `u64` bitsets.
pub const MAX_VERTICES: usize = 64;

/// Vertices for which the exact chromatic-number search is guaranteed.
pub const CHROMATIC_EXACT_LIMIT: usize = 16;

/// A subset of the vertices of some graph, stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &v in indices {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite simple graph on at most [`MAX_VERTICES`] vertices.
///
/// `parts` is present exactly when the graph was constructed as a complete
/// multipartite graph (or induced from one): every within-part pair is a
/// non-edge and every cross-part pair is an edge.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    parts: Option<Vec<VertexSet>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The null graph: zero vertices, zero edges.
    pub fn null() -> Self {
        Graph {
            n: 0,
            adj: Vec::new(),
            parts: None,
            labels: None,
        }
    }

    /// Graph on `n` vertices with no edges and no part structure.
    pub fn edgeless(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    /// Builds a general simple graph from an edge list. Loops are rejected,
    /// duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capability {
                what: "graph representation",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph {
            n,
            adj,
            parts: None,
            labels: None,
        })
    }

    /// Builds the complete multipartite graph with the given part sizes.
    ///
    /// Labels follow the conventions used throughout the crate: a part of
    /// size two at (1-based) position `i` gets `u{i}`, `v{i}`; the first part
    /// of size four gets `x1..x4`; everything else gets generic names.
    pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(Error::InvalidArgument(
                "complete multipartite graph needs at least one part".into(),
            ));
        }
        if let Some(_zero) = part_sizes.iter().find(|&&s| s == 0) {
            return Err(Error::InvalidArgument("part sizes must be positive".into()));
        }
        let n: usize = part_sizes.iter().sum();
        if n > MAX_VERTICES {
            return Err(Error::Capability {
                what: "graph representation",
                limit: MAX_VERTICES,
                actual: n,
            });
        }

        let mut parts = Vec::with_capacity(part_sizes.len());
        let mut labels = Vec::with_capacity(n);
        let mut next = 0usize;
        let mut x_part_used = false;
        for (idx, &size) in part_sizes.iter().enumerate() {
            let part_no = idx + 1;
            let mut mask = VertexSet::EMPTY;
            for pos in 0..size {
                mask = mask.with(next + pos);
            }
            match size {
                2 => {
                    labels.push(format!("u{part_no}"));
                    labels.push(format!("v{part_no}"));
                }
                4 if !x_part_used => {
                    x_part_used = true;
                    for j in 1..=4 {
                        labels.push(format!("x{j}"));
                    }
                }
                1 => labels.push(format!("w{part_no}")),
                s => {
                    for j in 1..=s {
                        labels.push(format!("p{part_no}_{j}"));
                    }
                }
            }
            parts.push(mask);
            next += size;
        }

        let full = VertexSet::full(n);
        let mut adj = vec![0u64; n];
        for part in &parts {
            let others = full.minus(*part).bits();
            for v in part.iter() {
                adj[v] = others;
            }
        }

        Ok(Graph {
            n,
            adj,
            parts: Some(parts),
            labels: Some(labels),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn parts(&self) -> Option<&[VertexSet]> {
        self.parts.as_deref()
    }

    /// Part sizes in part order, when the graph carries part structure.
    pub fn part_sizes(&self) -> Option<Vec<usize>> {
        self.parts
            .as_ref()
            .map(|ps| ps.iter().map(|p| p.len()).collect())
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Resolves a text token to a vertex: by label when labels exist,
    /// otherwise by decimal index.
    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            return labels.iter().position(|l| l == name);
        }
        name.parse::<usize>().ok().filter(|&v| v < self.n)
    }

    pub fn is_complete(&self) -> bool {
        let full = self.full_set();
        (0..self.n).all(|v| VertexSet(self.adj[v]) == full.without(v))
    }

    /// Removes one edge, returning a general graph (part structure does not
    /// survive edge removal).
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidArgument(format!("no edge ({u},{v})")));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1u64 << v);
        adj[v] &= !(1u64 << u);
        Ok(Graph {
            n: self.n,
            adj,
            parts: None,
            labels: self.labels.clone(),
        })
    }

    /// The subgraph induced by `s`, with vertices renumbered in ascending
    /// order of their old indices. Part structure and labels restrict; parts
    /// that become empty are dropped. An empty `s` yields the null graph.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset_of(self.full_set()) {
            return Err(Error::InvalidArgument(format!(
                "vertex set {s:?} is not a subset of a {}-vertex graph",
                self.n
            )));
        }
        let old: Vec<usize> = s.iter().collect();
        let m = old.len();
        let mut new_index = vec![usize::MAX; self.n];
        for (new, &v) in old.iter().enumerate() {
            new_index[v] = new;
        }
        let mut adj = vec![0u64; m];
        for (new, &v) in old.iter().enumerate() {
            for w in VertexSet(self.adj[v]).intersect(s).iter() {
                adj[new] |= 1u64 << new_index[w];
            }
        }
        let parts = self.parts.as_ref().map(|ps| {
            ps.iter()
                .filter_map(|p| {
                    let restricted: Vec<usize> =
                        p.intersect(s).iter().map(|v| new_index[v]).collect();
                    if restricted.is_empty() {
                        None
                    } else {
                        Some(VertexSet::from_indices(&restricted))
                    }
                })
                .collect::<Vec<_>>()
        });
        let labels = self
            .labels
            .as_ref()
            .map(|ls| old.iter().map(|&v| ls[v].clone()).collect());
        Ok(Graph {
            n: m,
            adj,
            parts,
            labels,
        })
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::InvalidArgument(format!("no vertex {v}")));
        }
        self.induced_subgraph(self.full_set().without(v))
    }

    /// Exact vertex independence number. Uses the closed form (largest part)
    /// when part structure is present, otherwise bitset branch and bound.
    /// The null graph has independence number 0.
    pub fn independence_number(&self) -> usize {
        if let Some(parts) = &self.parts {
            return parts.iter().map(|p| p.len()).max().unwrap_or(0);
        }
        if self.n == 0 {
            return 0;
        }
        let mut best = 0usize;
        alpha_branch_bound(&self.adj, self.full_set().bits(), 0, &mut best);
        best
    }

    /// Exact chromatic number. Complete multipartite graphs read off the
    /// number of parts; general graphs are limited to
    /// [`CHROMATIC_EXACT_LIMIT`] vertices.
    pub fn chromatic_number(&self) -> Result<usize> {
        if let Some(parts) = &self.parts {
            return Ok(parts.len());
        }
        if self.n == 0 {
            return Ok(0);
        }
        if self.n > CHROMATIC_EXACT_LIMIT {
            return Err(Error::Capability {
                what: "exact chromatic number of an unstructured graph",
                limit: CHROMATIC_EXACT_LIMIT,
                actual: self.n,
            });
        }
        if self.edge_count() == 0 {
            return Ok(1);
        }
        for k in 2..=self.n {
            if k_colorable(&self.adj, self.n, k) {
                return Ok(k);
            }
        }
        unreachable!("every graph on n vertices is n-colorable")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}", self.n, self.edge_count())?;
        if let Some(sizes) = self.part_sizes() {
            write!(f, ", parts={sizes:?}")?;
        }
        write!(f, ")")
    }
}

/// Greedy clique cover of `cand`: an upper bound on the independence number
/// of the induced subgraph (each clique contributes at most one vertex).
fn clique_cover_bound(adj: &[u64], cand: u64) -> usize {
    let mut cliques: Vec<u64> = Vec::new();
    let mut bits = cand;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let placed = cliques
            .iter_mut()
            .find(|c| **c & !adj[v] == 0)
            .map(|c| *c |= 1u64 << v)
            .is_some();
        if !placed {
            cliques.push(1u64 << v);
        }
    }
    cliques.len()
}

fn alpha_branch_bound(adj: &[u64], cand: u64, current: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(current);
        return;
    }
    if current + clique_cover_bound(adj, cand) <= *best {
        return;
    }
    // Branch on a candidate of maximum degree within cand.
    let mut pick = cand.trailing_zeros() as usize;
    let mut pick_deg = 0usize;
    let mut bits = cand;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (adj[v] & cand).count_ones() as usize;
        if d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    // Include pick.
    alpha_branch_bound(adj, cand & !adj[pick] & !(1u64 << pick), current + 1, best);
    // Exclude pick.
    alpha_branch_bound(adj, cand & !(1u64 << pick), current, best);
}

/// Backtracking k-colorability with the usual symmetry break: vertex i may
/// only use colors `0..=min(i, k-1)` relative to the highest color used so far.
fn k_colorable(adj: &[u64], n: usize, k: usize) -> bool {
    fn rec(adj: &[u64], n: usize, k: usize, v: usize, colors: &mut [usize], used: usize) -> bool {
        if v == n {
            return true;
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            let conflict = VertexSet::from_bits(adj[v])
                .iter()
                .any(|w| w < v && colors[w] == c);
            if !conflict {
                colors[v] = c;
                if rec(adj, n, k, v + 1, colors, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![0usize; n];
    rec(adj, n, k, 0, &mut colors, 0)
}
