use super::clique::clique_number;
use super::coloring::{chromatic_number, is_k_colorable_within};
use crate::graph::{Graph, VertexSet};

/// Widest graph for which per-subset tables are kept.
pub const CACHE_CAP: usize = 24;

const UNKNOWN: u8 = u8::MAX;

/// Per-graph memo of clique number, chromatic number and perfection of
/// induced subgraphs, indexed by vertex subset.
///
/// The clique table is filled eagerly by the recurrence
/// `w(S) = max(w(S - v), 1 + w(S & N(v)))` with `v = min S`; the other
/// tables fill lazily. Graphs wider than [`CACHE_CAP`] get no tables and
/// every query is recomputed. A cache belongs to one graph and one run.
pub struct SubsetCache {
    graph: Graph,
    omega: Vec<u8>,
    chi: Vec<u8>,
    perfect: Vec<u8>,
}

impl SubsetCache {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        if n > CACHE_CAP {
            return SubsetCache {
                graph: *g,
                omega: Vec::new(),
                chi: Vec::new(),
                perfect: Vec::new(),
            };
        }
        let size = 1usize << n;
        let mut omega = vec![0u8; size];
        for bits in 1..size {
            let v = bits.trailing_zeros() as usize;
            let without = omega[bits & (bits - 1)];
            let with = 1 + omega[bits & g.neighbours(v).bits() as usize];
            omega[bits] = without.max(with);
        }
        SubsetCache {
            graph: *g,
            omega,
            chi: vec![UNKNOWN; size],
            perfect: vec![UNKNOWN; size],
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn tabled(&self) -> bool {
        !self.omega.is_empty()
    }

    pub fn omega(&self, s: VertexSet) -> usize {
        if self.tabled() {
            self.omega[s.bits() as usize] as usize
        } else {
            clique_number(&self.graph, s)
        }
    }

    pub fn chi(&mut self, s: VertexSet) -> usize {
        if !self.tabled() {
            return chromatic_number(&self.graph, s);
        }
        let i = s.bits() as usize;
        if self.chi[i] == UNKNOWN {
            self.chi[i] = chromatic_number(&self.graph, s) as u8;
        }
        self.chi[i] as usize
    }

    /// Cached chromatic number, if already computed.
    pub fn chi_if_known(&self, s: VertexSet) -> Option<usize> {
        self.chi
            .get(s.bits() as usize)
            .filter(|&&c| c != UNKNOWN)
            .map(|&c| c as usize)
    }

    /// Whether `G[s]` is perfect, straight from the definition: every
    /// induced subgraph has chi = omega. Recurses on one-vertex deletions.
    pub fn is_perfect(&mut self, s: VertexSet) -> bool {
        if s.len() <= 3 {
            // every graph on at most three vertices is perfect
            return true;
        }
        let i = s.bits() as usize;
        if self.tabled() && self.perfect[i] != UNKNOWN {
            return self.perfect[i] == 1;
        }
        let result = s.iter().all(|v| self.is_perfect(s.without(v))) && self.chi_equals_omega(s);
        if self.tabled() {
            self.perfect[i] = result as u8;
        }
        result
    }

    fn chi_equals_omega(&mut self, s: VertexSet) -> bool {
        if let Some(c) = self.chi_if_known(s) {
            return c == self.omega(s);
        }
        let w = self.omega(s);
        let ok = is_k_colorable_within(&self.graph, s, w);
        if ok && self.tabled() {
            self.chi[s.bits() as usize] = w as u8;
        }
        ok
    }
}
