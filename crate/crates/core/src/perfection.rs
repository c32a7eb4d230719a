//! Perfection by two independent routes: the definition (chi = omega on
//! every induced subgraph) and the absence of odd holes and odd antiholes.

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Class, PropertyReport};
use crate::error::{check_cap, Error, Result};
use crate::graph::{Graph, SizeLexSubsets, VertexSet};
use crate::invariants::SubsetCache;

/// Widest graph the definition route accepts (it sweeps all `2^n` subsets).
pub const DEFINITION_CAP: usize = 16;

/// An induced cycle of odd length at least 5, in cyclic order. The first
/// vertex is the smallest; the second is the smaller of its two neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycleWitness {
    pub vertices: Vec<usize>,
}

impl OddCycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Checks the witness against `g`: odd, at least 5 long, distinct
    /// vertices, consecutive pairs adjacent and no chords.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        is_induced_odd_cycle(g, &self.vertices)
    }
}

pub(crate) fn is_induced_odd_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 5 || k.is_multiple_of(2) || cycle.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let set: VertexSet = cycle.iter().copied().collect();
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (0..k).filter(|&j| j != i).all(|j| {
            let consecutive = (i + 1) % k == j || (j + 1) % k == i;
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Induced subgraph on which chi exceeds omega.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImperfectionWitness {
    pub subset: VertexSet,
    pub chi: usize,
    pub omega: usize,
}

pub fn find_odd_hole(g: &Graph) -> Option<OddCycleWitness> {
    find_odd_hole_within(g, g.vertices()).0
}

/// Shortest odd hole of `G[s]` (lexicographically least vertex set among
/// the shortest), in original labels, plus the number of search nodes.
pub fn find_odd_hole_within(g: &Graph, s: VertexSet) -> (Option<OddCycleWitness>, u64) {
    let s = s & g.vertices();
    let mut search = HoleSearch {
        g,
        best: None,
        max_len: s.len(),
        nodes: 0,
    };
    for start in s {
        let allowed = s - VertexSet::full(start + 1);
        for v1 in g.neighbours(start) & allowed {
            let mut path = vec![start, v1];
            search.extend(allowed, &mut path, VertexSet::singleton(start).with(v1));
        }
    }
    let best = search.best.map(|(_, _, mut cycle)| {
        if cycle[1] > cycle[cycle.len() - 1] {
            cycle[1..].reverse();
        }
        OddCycleWitness { vertices: cycle }
    });
    (best, search.nodes)
}

struct HoleSearch<'a> {
    g: &'a Graph,
    best: Option<(usize, VertexSet, Vec<usize>)>,
    max_len: usize,
    nodes: u64,
}

impl HoleSearch<'_> {
    // `path` is an induced path starting at its minimum vertex `path[0]`.
    fn extend(&mut self, allowed: VertexSet, path: &mut Vec<usize>, on_path: VertexSet) {
        self.nodes += 1;
        let start = path[0];
        let last = *path.last().expect("path is non-empty");
        let interior = on_path.without(start).without(last);
        for w in (self.g.neighbours(last) & allowed) - on_path {
            let nw = self.g.neighbours(w);
            if !(nw & interior).is_empty() {
                continue;
            }
            if nw.contains(start) {
                let len = path.len() + 1;
                if len >= 5 && len % 2 == 1 {
                    self.offer(on_path.with(w), path, w);
                }
                continue;
            }
            if path.len() + 2 <= self.max_len {
                path.push(w);
                self.extend(allowed, path, on_path.with(w));
                path.pop();
            }
        }
    }

    fn offer(&mut self, set: VertexSet, path: &[usize], closing: usize) {
        let len = set.len();
        let better = match &self.best {
            None => true,
            Some((blen, bset, _)) => len < *blen || (len == *blen && set.cmp_lex(*bset).is_lt()),
        };
        if better {
            let mut cycle = path.to_vec();
            cycle.push(closing);
            self.best = Some((len, set, cycle));
            self.max_len = len;
        }
    }
}

/// Odd hole of the complement of `G[s]`, i.e. an odd antihole of `G[s]`.
pub fn find_odd_antihole_within(g: &Graph, s: VertexSet) -> (Option<OddCycleWitness>, u64) {
    find_odd_hole_within(&g.complement(), s)
}

/// Perfection of `G[s]` with no odd hole and no odd antihole.
pub fn is_perfect_within(g: &Graph, s: VertexSet) -> bool {
    s.len() <= 4
        || (find_odd_hole_within(g, s).0.is_none() && find_odd_antihole_within(g, s).0.is_none())
}

/// Perfection decided by the absence of odd holes and odd antiholes.
pub fn is_perfect_by_spgt(g: &Graph) -> bool {
    is_perfect_within(g, g.vertices())
}

/// Perfection straight from the definition. `None` means perfect; otherwise
/// the least violating subset (by size, then lexicographically), which is a
/// minimal imperfect induced subgraph.
pub fn is_perfect_by_definition(
    g: &Graph,
    cache: &mut SubsetCache,
) -> Result<Option<ImperfectionWitness>> {
    check_cap("definition-based perfection", g.order(), DEFINITION_CAP)?;
    ensure_owner(g, cache)?;
    for s in SizeLexSubsets::starting_at(g.vertices(), 5) {
        let chi = cache.chi(s);
        let omega = cache.omega(s);
        if chi != omega {
            return Ok(Some(ImperfectionWitness {
                subset: s,
                chi,
                omega,
            }));
        }
    }
    Ok(None)
}

pub(crate) fn ensure_owner(g: &Graph, cache: &SubsetCache) -> Result<()> {
    if cache.graph() == g {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "subset cache was built for a different graph".into(),
        ))
    }
}

/// Decides perfection with a certificate either way.
///
/// Triangle-free inputs take the bipartite shortcut (positive certificate:
/// the bipartition). Otherwise the odd hole / odd antihole search runs; a
/// negative verdict carries the hole or antihole found.
pub fn is_perfect(g: &Graph) -> PropertyReport {
    let (holds, certificate, nodes) = if g.is_triangle_free() {
        match g.two_coloring() {
            Ok(bp) => (true, Certificate::Bipartition { a: bp.a, b: bp.b }, 0),
            Err(_) => {
                let (hole, nodes) = find_odd_hole_within(g, g.vertices());
                let hole = hole.expect("non-bipartite triangle-free graphs have an odd hole");
                (false, Certificate::OddHole(hole.vertices), nodes)
            }
        }
    } else {
        let (hole, n1) = find_odd_hole_within(g, g.vertices());
        match hole {
            Some(h) => (false, Certificate::OddHole(h.vertices), n1),
            None => {
                let (anti, n2) = find_odd_antihole_within(g, g.vertices());
                match anti {
                    Some(a) => (false, Certificate::OddAntihole(a.vertices), n1 + n2),
                    None => (true, Certificate::NoOddHoleOrAntihole, n1 + n2),
                }
            }
        }
    };
    PropertyReport {
        class: Class::Perfect,
        holds,
        certificate,
        nodes_searched: nodes,
    }
}

/// [`is_perfect`], additionally cross-checked against the definition route
/// when the graph is small enough. Disagreement is an internal error.
pub fn is_perfect_checked(g: &Graph) -> Result<PropertyReport> {
    let report = is_perfect(g);
    if g.order() <= DEFINITION_CAP {
        let mut cache = SubsetCache::new(g);
        let by_definition = is_perfect_by_definition(g, &mut cache)?.is_none();
        if by_definition != report.holds {
            return Err(Error::Internal(format!(
                "perfection routes disagree on {}: definition says {by_definition}, hole search says {}",
                crate::format::write_graph6(g),
                report.holds
            )));
        }
    }
    Ok(report)
}
