//! Exact, certificate-producing checkers for 2-perfect, perfectly
//! divisible, nice, stable-perfect and 2-divisible graphs.
//!
//! Hereditary sweeps visit non-empty vertex subsets by size and then
//! lexicographically, so a negative verdict reports a minimal obstruction.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Class, ClassVerdict};
use crate::error::{check_cap, Error, Result};
use crate::format::write_graph6;
use crate::graph::{Graph, SizeLexSubsets, VertexSet};
use crate::invariants::{is_k_colorable, is_k_colorable_within, optimal_coloring, SubsetCache};
use crate::perfection::{ensure_owner, is_perfect, is_perfect_within};

/// Per-class vertex caps.
pub mod limits {
    pub const TWO_PERFECT: usize = 24;
    pub const PERFECTLY_DIVISIBLE: usize = 12;
    pub const NICE: usize = 14;
    pub const STABLE_PERFECT: usize = 24;
    pub const TWO_DIVISIBLE: usize = 12;
}

pub fn cap_for(class: Class) -> usize {
    match class {
        Class::Perfect => crate::graph::MAX_VERTICES,
        Class::TwoPerfect => limits::TWO_PERFECT,
        Class::PerfectlyDivisible => limits::PERFECTLY_DIVISIBLE,
        Class::Nice => limits::NICE,
        Class::StablePerfect => limits::STABLE_PERFECT,
        Class::TwoDivisible => limits::TWO_DIVISIBLE,
    }
}

/// A split of a vertex set into two disjoint parts; either may be empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition2 {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl From<Partition2> for Certificate {
    fn from(p: Partition2) -> Self {
        Certificate::Partition2 { a: p.a, b: p.b }
    }
}

fn verdict(
    class: Class,
    holds: bool,
    certificate: Certificate,
    nodes_searched: u64,
) -> ClassVerdict {
    ClassVerdict {
        class,
        holds,
        certificate,
        nodes_searched,
    }
}

/// 2-perfect: the vertex set splits into two parts that both induce
/// perfect graphs. Triangle-free graphs are decided by 4-colorability
/// (pairing color classes); others by [`is_2perfect_search`].
pub fn is_2perfect(g: &Graph) -> Result<ClassVerdict> {
    check_cap("2-perfect check", g.order(), limits::TWO_PERFECT)?;
    if !g.is_triangle_free() {
        return is_2perfect_search(g);
    }
    Ok(match is_k_colorable(g, 4) {
        Some(col) => {
            let classes = col.classes();
            let pick = |idx: &[usize]| {
                idx.iter()
                    .filter_map(|&i| classes.get(i))
                    .fold(VertexSet::EMPTY, |acc, &c| acc | c)
            };
            let p = Partition2 {
                a: pick(&[0, 1]),
                b: pick(&[2, 3]),
            };
            verdict(Class::TwoPerfect, true, p.into(), 1)
        }
        None => verdict(
            Class::TwoPerfect,
            false,
            Certificate::NotColorable { k: 4 },
            1,
        ),
    })
}

/// 2-perfect by direct search: vertices are placed in ascending order,
/// trying side `a` before side `b`, and a branch is cut as soon as a side
/// stops being perfect. The certificate is the first partition reached.
pub fn is_2perfect_search(g: &Graph) -> Result<ClassVerdict> {
    check_cap("2-perfect check", g.order(), limits::TWO_PERFECT)?;
    let mut search = SplitSearch {
        g,
        memo: HashMap::new(),
        nodes: 0,
    };
    let found = search.place(0, VertexSet::EMPTY, VertexSet::EMPTY);
    Ok(match found {
        Some(p) => verdict(Class::TwoPerfect, true, p.into(), search.nodes),
        None => verdict(
            Class::TwoPerfect,
            false,
            Certificate::Exhausted,
            search.nodes,
        ),
    })
}

struct SplitSearch<'a> {
    g: &'a Graph,
    memo: HashMap<VertexSet, bool>,
    nodes: u64,
}

impl SplitSearch<'_> {
    fn perfect(&mut self, s: VertexSet) -> bool {
        if s.len() <= 4 {
            return true;
        }
        let g = self.g;
        *self
            .memo
            .entry(s)
            .or_insert_with(|| is_perfect_within(g, s))
    }

    fn place(&mut self, v: usize, a: VertexSet, b: VertexSet) -> Option<Partition2> {
        self.nodes += 1;
        if v == self.g.order() {
            return Some(Partition2 { a, b });
        }
        if self.perfect(a.with(v)) {
            if let Some(p) = self.place(v + 1, a.with(v), b) {
                return Some(p);
            }
        }
        if self.perfect(b.with(v)) {
            return self.place(v + 1, a, b.with(v));
        }
        None
    }
}

/// Stable-perfect: some stable set `S` (possibly empty) leaves `G - S`
/// perfect. Triangle-free graphs are decided by 3-colorability; others by
/// [`is_stable_perfect_search`].
pub fn is_stable_perfect(g: &Graph) -> Result<ClassVerdict> {
    check_cap("stable-perfect check", g.order(), limits::STABLE_PERFECT)?;
    if !g.is_triangle_free() {
        return is_stable_perfect_search(g);
    }
    Ok(match is_k_colorable(g, 3) {
        Some(col) => {
            // the remaining two classes induce a bipartite graph
            let s = col.classes().get(2).copied().unwrap_or(VertexSet::EMPTY);
            verdict(Class::StablePerfect, true, Certificate::StableSet(s), 1)
        }
        None => verdict(
            Class::StablePerfect,
            false,
            Certificate::NotColorable { k: 3 },
            1,
        ),
    })
}

/// Stable-perfect by direct search over stable sets in order of size, then
/// lexicographically; the certificate is the first that works.
pub fn is_stable_perfect_search(g: &Graph) -> Result<ClassVerdict> {
    check_cap("stable-perfect check", g.order(), limits::STABLE_PERFECT)?;
    let full = g.vertices();
    let mut nodes = 0u64;
    for size in 0..=g.order() {
        let mut any_of_size = false;
        let mut found = None;
        stable_sets_of_size(g, size, 0, VertexSet::EMPTY, &mut |s| {
            any_of_size = true;
            nodes += 1;
            if is_perfect_within(g, full - s) {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return Ok(verdict(
                Class::StablePerfect,
                true,
                Certificate::StableSet(s),
                nodes,
            ));
        }
        if !any_of_size {
            break;
        }
    }
    Ok(verdict(
        Class::StablePerfect,
        false,
        Certificate::Exhausted,
        nodes,
    ))
}

// Visits stable sets of exactly `size` vertices in lexicographic order;
// stops when `visit` returns true.
fn stable_sets_of_size(
    g: &Graph,
    size: usize,
    from: usize,
    cur: VertexSet,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    if cur.len() == size {
        return visit(cur);
    }
    let need = size - cur.len();
    for v in from..g.order() {
        if g.order() - v < need {
            break;
        }
        if (g.neighbours(v) & cur).is_empty()
            && stable_sets_of_size(g, size, v + 1, cur.with(v), visit)
        {
            return true;
        }
    }
    false
}

/// Perfectly divisible: every non-empty induced subgraph `H` splits into
/// `A`, `B` with `H[A]` perfect and `omega(B) < omega(H)`. Perfection of
/// parts is decided from the definition via the subset cache.
pub fn is_perfectly_divisible(g: &Graph, cache: &mut SubsetCache) -> Result<ClassVerdict> {
    check_cap(
        "perfectly-divisible check",
        g.order(),
        limits::PERFECTLY_DIVISIBLE,
    )?;
    ensure_owner(g, cache)?;
    let mut nodes = 0u64;
    let mut top = None;
    for h in SizeLexSubsets::starting_at(g.vertices(), 1) {
        let w = cache.omega(h);
        let mut split = None;
        for b in h.submasks() {
            nodes += 1;
            if cache.omega(b) < w && cache.is_perfect(h - b) {
                split = Some(Partition2 { a: h - b, b });
                break;
            }
        }
        match split {
            Some(p) => top = Some(p),
            None => {
                let chi = cache.chi(h);
                return Ok(verdict(
                    Class::PerfectlyDivisible,
                    false,
                    Certificate::Obstruction {
                        vertices: h,
                        chi: Some(chi),
                        omega: w,
                    },
                    nodes,
                ));
            }
        }
    }
    let cert = top.map_or(Certificate::Vacuous, Certificate::from);
    Ok(verdict(Class::PerfectlyDivisible, true, cert, nodes))
}

/// Nice: `chi(H) - omega(H) <= 1` for every non-empty induced subgraph.
/// Positive certificate: an optimal coloring of the whole graph.
pub fn is_nice(g: &Graph, cache: &mut SubsetCache) -> Result<ClassVerdict> {
    check_cap("nice check", g.order(), limits::NICE)?;
    ensure_owner(g, cache)?;
    let mut nodes = 0u64;
    for h in SizeLexSubsets::starting_at(g.vertices(), 1) {
        nodes += 1;
        let w = cache.omega(h);
        let ok = match cache.chi_if_known(h) {
            Some(c) => c <= w + 1,
            None => is_k_colorable_within(g, h, w + 1),
        };
        if !ok {
            let chi = cache.chi(h);
            return Ok(verdict(
                Class::Nice,
                false,
                Certificate::Obstruction {
                    vertices: h,
                    chi: Some(chi),
                    omega: w,
                },
                nodes,
            ));
        }
    }
    let coloring = optimal_coloring(g, g.vertices());
    Ok(verdict(
        Class::Nice,
        true,
        Certificate::coloring(&coloring, g.order()),
        nodes,
    ))
}

/// 2-divisible: every induced subgraph `H` with an edge splits into two
/// parts each of clique number below `omega(H)`.
pub fn is_2divisible(g: &Graph, cache: &mut SubsetCache) -> Result<ClassVerdict> {
    check_cap("2-divisible check", g.order(), limits::TWO_DIVISIBLE)?;
    ensure_owner(g, cache)?;
    let mut nodes = 0u64;
    let mut top = None;
    for h in SizeLexSubsets::starting_at(g.vertices(), 2) {
        let w = cache.omega(h);
        if w < 2 {
            continue;
        }
        let mut split = None;
        for a in h.submasks() {
            nodes += 1;
            if cache.omega(a) < w && cache.omega(h - a) < w {
                split = Some(Partition2 { a, b: h - a });
                break;
            }
        }
        match split {
            Some(p) => top = Some(p),
            None => {
                return Ok(verdict(
                    Class::TwoDivisible,
                    false,
                    Certificate::Obstruction {
                        vertices: h,
                        chi: None,
                        omega: w,
                    },
                    nodes,
                ));
            }
        }
    }
    // `top` is the split of the last subset visited, i.e. of V itself
    // whenever V has an edge
    let cert = match top {
        Some(p) if p.a | p.b == g.vertices() => p.into(),
        _ => Certificate::Vacuous,
    };
    Ok(verdict(Class::TwoDivisible, true, cert, nodes))
}

/// Runs one class checker.
pub fn check_class(g: &Graph, class: Class) -> Result<ClassVerdict> {
    classify(g, &[class]).map(|mut v| v.remove(0))
}

/// Verdicts for the requested classes, sharing one subset cache.
pub fn classify(g: &Graph, classes: &[Class]) -> Result<Vec<ClassVerdict>> {
    if let Some(&c) = classes.iter().find(|&&c| g.order() > cap_for(c)) {
        return Err(Error::SizeLimit {
            operation: c.name(),
            n: g.order(),
            cap: cap_for(c),
        });
    }
    let mut cache: Option<SubsetCache> = None;
    let mut out = Vec::with_capacity(classes.len());
    for &class in classes {
        let v = match class {
            Class::Perfect => is_perfect(g),
            Class::TwoPerfect => is_2perfect(g)?,
            Class::StablePerfect => is_stable_perfect(g)?,
            Class::PerfectlyDivisible => {
                is_perfectly_divisible(g, cache.get_or_insert_with(|| SubsetCache::new(g)))?
            }
            Class::Nice => is_nice(g, cache.get_or_insert_with(|| SubsetCache::new(g)))?,
            Class::TwoDivisible => {
                is_2divisible(g, cache.get_or_insert_with(|| SubsetCache::new(g)))?
            }
        };
        out.push(v);
    }
    Ok(out)
}

/// Every verdict for one graph, plus the structural flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub graph6: String,
    pub n: usize,
    pub triangle_free: bool,
    pub bipartite: bool,
    /// Perfect first, then the five generalizations.
    pub verdicts: Vec<ClassVerdict>,
}

impl Classification {
    pub fn get(&self, class: Class) -> Option<&ClassVerdict> {
        self.verdicts.iter().find(|v| v.class == class)
    }

    pub fn holds(&self, class: Class) -> bool {
        self.get(class).is_some_and(|v| v.holds)
    }
}

/// Classifies `g` into all six classes and checks the inclusion chain
/// perfect => stable-perfect => (2-perfect and perfectly divisible and
/// nice). A violation is reported as an internal error.
pub fn classify_all(g: &Graph) -> Result<Classification> {
    let verdicts = classify(g, &Class::ALL)?;
    let c = Classification {
        graph6: write_graph6(g),
        n: g.order(),
        triangle_free: g.is_triangle_free(),
        bipartite: g.is_bipartite().is_some(),
        verdicts,
    };
    if let Some(msg) = inclusion_violation(&c) {
        return Err(Error::Internal(format!("{msg} on {}", c.graph6)));
    }
    Ok(c)
}

/// First violated link of the inclusion chain, if any.
pub fn inclusion_violation(c: &Classification) -> Option<String> {
    if c.holds(Class::Perfect) && !c.holds(Class::StablePerfect) {
        return Some("perfect but not stable-perfect".into());
    }
    if c.holds(Class::StablePerfect) {
        for class in [Class::TwoPerfect, Class::PerfectlyDivisible, Class::Nice] {
            if !c.holds(class) {
                return Some(format!("stable-perfect but not {class}"));
            }
        }
    }
    None
}
