//! Bitmask graphs on at most [`MAX_VERTICES`] vertices.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 30;

/// A set of vertices stored as a bitmask; bit `v` is vertex `v`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending vertex lists of two sets.
    pub fn cmp_lex(self, other: VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// All subsets of `self`, in ascending order of their bitmask.
    pub fn submasks(self) -> impl Iterator<Item = VertexSet> {
        let universe = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == universe {
                None
            } else {
                // Standard "next submask in increasing order" step.
                Some((cur.wrapping_sub(universe)) & universe)
            };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
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

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let verts = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = verts.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(verts.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Subsets of a universe ordered by size, then lexicographically by their
/// ascending vertex lists. This is the order in which every "least subset"
/// witness in the crate is defined.
pub struct SizeLexSubsets {
    verts: Vec<usize>,
    k: usize,
    idx: Vec<usize>,
    done: bool,
}

impl SizeLexSubsets {
    pub fn new(universe: VertexSet) -> Self {
        Self::starting_at(universe, 0)
    }

    /// Same order, skipping subsets smaller than `min_size`.
    pub fn starting_at(universe: VertexSet, min_size: usize) -> Self {
        let verts = universe.to_vec();
        let done = min_size > verts.len();
        SizeLexSubsets {
            k: min_size,
            idx: (0..min_size).collect(),
            verts,
            done,
        }
    }
}

impl Iterator for SizeLexSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().map(|&i| self.verts[i]).collect();
        let m = self.verts.len();
        let k = self.k;
        // advance to the next k-combination in lexicographic order
        let mut i = k;
        while i > 0 && self.idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            if k == m {
                self.done = true;
            } else {
                self.k += 1;
                self.idx = (0..self.k).collect();
            }
        } else {
            self.idx[i - 1] += 1;
            for j in i..k {
                self.idx[j] = self.idx[j - 1] + 1;
            }
        }
        Some(out)
    }
}

/// Two-coloring of a bipartite graph: `a` holds the side containing the
/// lowest vertex of each component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

/// A finite simple undirected graph on vertices `0..n`, `n <= 30`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood bitmasks, rejecting asymmetric or
    /// reflexive input.
    pub fn from_adjacency(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let range = VertexSet::full(n).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !range != 0 {
                return Err(Error::InvalidEdge {
                    u,
                    v: (row & !range).trailing_zeros() as usize,
                    n,
                });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in VertexSet(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
            g.adj[u] = row;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge { u, v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Sets the neighbourhood of `v` among the vertices below it. Used by
    /// vertex-extension generators; `lower` must only contain vertices `< v`.
    pub(crate) fn set_lower_neighbourhood(&mut self, v: usize, lower: VertexSet) {
        debug_assert!(lower.bits() >> v == 0);
        for u in 0..v {
            self.adj[u] &= !(1 << v);
        }
        self.adj[v] = (self.adj[v] & !((1u32 << v) - 1)) | lower.bits();
        for u in lower {
            self.adj[u] |= 1 << v;
        }
    }

    /// Same graph with one more isolated vertex.
    pub(crate) fn with_extra_vertex(&self) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        let mut g = *self;
        g.n += 1;
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (VertexSet(self.adj[u]) - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Edges with both endpoints in `s`.
    pub fn edge_count_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.neighbours(v) & s).len())
            .sum::<usize>()
            / 2
    }

    pub fn adjacency_rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (self.neighbours(v) & s).is_empty())
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s.without(v)).is_subset(self.neighbours(v)))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// `G[s]`, relabelled so that the members of `s` become `0..|s|` in
    /// ascending order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        self.induced_with_labels(s).0
    }

    /// `G[s]` together with the map from new labels back to original ones.
    pub fn induced_with_labels(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let s = s & self.vertices();
        let labels = s.to_vec();
        let mut g = Graph {
            n: labels.len(),
            adj: [0; MAX_VERTICES],
        };
        for (i, &u) in labels.iter().enumerate() {
            let mut row = 0u32;
            for (j, &w) in labels.iter().enumerate() {
                if self.adj[u] >> w & 1 == 1 {
                    row |= 1 << j;
                }
            }
            g.adj[i] = row;
        }
        (g, labels)
    }

    /// Graph on the same vertex set with the vertices of `s` made isolated.
    /// Unlike [`Graph::induced_subgraph`] this keeps original labels.
    pub fn restrict(&self, s: VertexSet) -> Graph {
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = if s.contains(v) { self.adj[v] & s.0 } else { 0 };
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    pub fn is_triangle_free_within(&self, s: VertexSet) -> bool {
        s.iter().all(|u| {
            (self.neighbours(u) & s)
                .iter()
                .filter(|&v| v > u)
                .all(|v| self.adj[u] & self.adj[v] & s.0 == 0)
        })
    }

    pub fn is_bipartite(&self) -> Option<Bipartition> {
        self.two_coloring().ok()
    }

    /// BFS two-coloring. On failure returns an odd cycle (as a vertex
    /// sequence, consecutive vertices adjacent, last adjacent to first).
    pub fn two_coloring(&self) -> std::result::Result<Bipartition, Vec<usize>> {
        let n = self.n;
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbours(u) {
                    if side[w] == u8::MAX {
                        side[w] = side[u] ^ 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Err(odd_cycle_from_tree(&parent, u, w));
                    }
                }
            }
        }
        let a = (0..n).filter(|&v| side[v] == 0).collect();
        let b = (0..n).filter(|&v| side[v] == 1).collect();
        Ok(Bipartition { a, b })
    }
}

// Joins the tree paths from `u` and `w` to their lowest common ancestor.
fn odd_cycle_from_tree(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 0 && j > 0 && pu[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    // pu[i] == pw[j] is the common ancestor
    let mut cycle: Vec<usize> = pu[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    cycle
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
