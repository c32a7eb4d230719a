//! Isomorph-free enumeration of small graphs by orderly generation, and
//! ingestion of graph6 files produced by other tools.
//!
//! The canonical form of a graph is its relabelling whose upper-triangle
//! adjacency string (graph6 bit order: column by column) is least. Because
//! that string for `n` vertices extends the string of the first `n - 1`
//! vertices, deleting the last vertex of a canonical graph leaves a canonical
//! graph. Orderly generation therefore extends each canonical graph by one
//! vertex in every possible way and keeps the extensions that are canonical.
//! Extensions are tried in increasing order of the new column, so graphs come
//! out in increasing canonical order without any deduplication table.

use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::format::{write_graph6, Graph6Lines};
use crate::graph::{Graph, VertexSet};

/// Largest order the built-in generator and [`canonical_form`] accept.
pub const BUILTIN_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    All,
    TriangleFree,
    Connected,
    TriangleFreeConnected,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::TriangleFree => g.is_triangle_free(),
            Filter::Connected => is_connected(g),
            Filter::TriangleFreeConnected => g.is_triangle_free() && is_connected(g),
        }
    }

    fn triangle_free(self) -> bool {
        matches!(self, Filter::TriangleFree | Filter::TriangleFreeConnected)
    }

    pub fn name(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::TriangleFree => "triangle-free",
            Filter::Connected => "connected",
            Filter::TriangleFreeConnected => "triangle-free-connected",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "all" => Ok(Filter::All),
            "triangle-free" | "tf" => Ok(Filter::TriangleFree),
            "connected" => Ok(Filter::Connected),
            "triangle-free-connected" | "tf-connected" => Ok(Filter::TriangleFreeConnected),
            _ => Err(Error::InvalidArgument(format!("unknown filter '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Builtin,
    File(PathBuf),
}

/// What to enumerate. For the built-in source `n` is the exact order
/// (at most [`BUILTIN_CAP`]); for a file source it is an upper bound and
/// graphs appear in file order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub n: usize,
    pub filter: Filter,
    pub source: Source,
}

impl EnumSpec {
    pub fn builtin(n: usize, filter: Filter) -> Self {
        EnumSpec {
            n,
            filter,
            source: Source::Builtin,
        }
    }
}

pub type GraphStream = Box<dyn Iterator<Item = Result<Graph>> + Send>;

/// One representative per isomorphism class satisfying the filter.
pub fn enumerate(spec: &EnumSpec) -> Result<GraphStream> {
    match &spec.source {
        Source::Builtin => {
            check_cap("built-in enumeration", spec.n, BUILTIN_CAP)?;
            Ok(Box::new(Orderly::new(spec.n, spec.filter).map(Ok)))
        }
        Source::File(path) => {
            let file = File::open(path).map_err(|e| {
                Error::InvalidArgument(format!("cannot open {}: {e}", path.display()))
            })?;
            let (n, filter) = (spec.n, spec.filter);
            let lines = Graph6Lines::new(BufReader::new(file));
            Ok(Box::new(lines.filter(move |r| match r {
                Ok(g) => g.order() <= n && filter.accepts(g),
                Err(_) => true,
            })))
        }
    }
}

/// Number of graphs on exactly `n` vertices up to isomorphism.
pub fn census(n: usize, filter: Filter) -> Result<usize> {
    check_cap("built-in enumeration", n, BUILTIN_CAP)?;
    Ok(Orderly::new(n, filter).count())
}

/// `n,filter,count` CSV with a header row.
pub fn census_csv(n_max: usize, filters: &[Filter]) -> Result<String> {
    let mut out = String::from("n,filter,count\n");
    for &filter in filters {
        for n in 0..=n_max {
            out.push_str(&format!("{n},{filter},{}\n", census(n, filter)?));
        }
    }
    Ok(out)
}

pub fn is_connected(g: &Graph) -> bool {
    let Some(start) = g.vertices().min() else {
        return true;
    };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next | g.neighbours(v);
        }
        frontier = next - seen;
        seen = seen | next;
    }
    seen == g.vertices()
}

/// Canonical form: graph6 bytes of the least relabelling.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(write_graph6(&canonical_labeling(g)?).into_bytes())
}

/// The relabelling of `g` with the least adjacency string.
pub fn canonical_labeling(g: &Graph) -> Result<Graph> {
    check_cap("canonical form", g.order(), BUILTIN_CAP)?;
    let mut search = CanonSearch::new(g, false);
    search.run();
    let perm = search.best_perm;
    // position i holds vertex perm[i]; `permute` wants vertex -> position
    let mut inverse = vec![0; perm.len()];
    for (pos, &v) in perm.iter().enumerate() {
        inverse[v] = pos;
    }
    Ok(g.permute(&inverse))
}

/// Whether `g`'s own labelling already has the least adjacency string.
pub fn is_canonical(g: &Graph) -> bool {
    let mut search = CanonSearch::new(g, true);
    search.run();
    !search.improved
}

/// Branch-and-bound over vertex orderings. Position `k`'s column is the
/// adjacency of the vertex placed there to the vertices at positions
/// `0..k`, read with position 0 as the most significant bit. Prefixes that
/// already exceed the best string are cut, and of several interchangeable
/// twins (same neighbourhood apart from each other) only the lowest
/// unplaced one is branched on, since swapping twins is an automorphism.
struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    twins_below: Vec<u32>,
    perm: Vec<usize>,
    cols: Vec<u32>,
    best_cols: Vec<u32>,
    best_perm: Vec<usize>,
    stop_on_improvement: bool,
    improved: bool,
}

impl<'a> CanonSearch<'a> {
    fn new(g: &'a Graph, stop_on_improvement: bool) -> Self {
        let n = g.order();
        let twins_below = (0..n)
            .map(|v| {
                (0..v)
                    .filter(|&u| g.neighbours(u).without(v) == g.neighbours(v).without(u))
                    .fold(0u32, |acc, u| acc | 1 << u)
            })
            .collect();
        let identity: Vec<usize> = (0..n).collect();
        let best_cols = columns_of(g, &identity);
        CanonSearch {
            g,
            n,
            twins_below,
            perm: Vec::with_capacity(n),
            cols: Vec::with_capacity(n),
            best_cols,
            best_perm: identity,
            stop_on_improvement,
            improved: false,
        }
    }

    fn run(&mut self) {
        if self.n > 1 {
            self.place(VertexSet::full(self.n));
        }
    }

    // returns true to abort the whole search
    fn place(&mut self, unplaced: VertexSet) -> bool {
        let k = self.perm.len();
        if k == self.n {
            if self.cols < self.best_cols {
                self.best_cols.clone_from(&self.cols);
                self.best_perm.clone_from(&self.perm);
                self.improved = true;
                return self.stop_on_improvement;
            }
            return false;
        }
        for v in unplaced {
            if self.twins_below[v] & unplaced.bits() != 0 {
                continue;
            }
            let nv = self.g.neighbours(v);
            let col = self
                .perm
                .iter()
                .enumerate()
                .filter(|&(_, &u)| nv.contains(u))
                .fold(0u32, |acc, (i, _)| acc | 1 << (k - 1 - i));
            self.cols.push(col);
            let prefix_ok = self.cols[..] <= self.best_cols[..=k];
            if prefix_ok {
                self.perm.push(v);
                let abort = self.place(unplaced.without(v));
                self.perm.pop();
                if abort {
                    self.cols.pop();
                    return true;
                }
            }
            self.cols.pop();
        }
        false
    }
}

fn columns_of(g: &Graph, perm: &[usize]) -> Vec<u32> {
    (0..perm.len())
        .map(|k| {
            (0..k)
                .filter(|&i| g.has_edge(perm[i], perm[k]))
                .fold(0u32, |acc, i| acc | 1 << (k - 1 - i))
        })
        .collect()
}

struct Frame {
    graph: Graph,
    next_col: u32,
}

/// Streaming orderly generator for graphs of one order.
pub struct Orderly {
    n: usize,
    filter: Filter,
    stack: Vec<Frame>,
    pending: Option<Graph>,
}

impl Orderly {
    pub fn new(n: usize, filter: Filter) -> Self {
        assert!(
            n <= BUILTIN_CAP,
            "orderly generation is capped at {BUILTIN_CAP}"
        );
        let mut gen = Orderly {
            n,
            filter,
            stack: Vec::new(),
            pending: None,
        };
        let seed = Graph::empty(n.min(1)).expect("tiny graph");
        if n <= 1 {
            gen.pending = Some(seed).filter(|g| filter.accepts(g));
        } else {
            gen.stack.push(Frame {
                graph: seed,
                next_col: 0,
            });
        }
        gen
    }
}

impl Iterator for Orderly {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.pending.take() {
            return Some(g);
        }
        loop {
            let top = self.stack.last_mut()?;
            let k = top.graph.order();
            if top.next_col == 1 << k {
                self.stack.pop();
                continue;
            }
            let col = top.next_col;
            top.next_col += 1;
            // column bit (k-1-i) is adjacency to vertex i
            let lower: VertexSet = (0..k).filter(|&i| col >> (k - 1 - i) & 1 == 1).collect();
            let parent = top.graph;
            if self.filter.triangle_free() && !parent.is_independent(lower) {
                continue;
            }
            let mut child = parent.with_extra_vertex();
            child.set_lower_neighbourhood(k, lower);
            if !is_canonical(&child) {
                continue;
            }
            if k + 1 == self.n {
                if self.filter.accepts(&child) {
                    return Some(child);
                }
            } else {
                self.stack.push(Frame {
                    graph: child,
                    next_col: 0,
                });
            }
        }
    }
}

/// Published counts for `n = 0..=10`: all graphs (OEIS A000088),
/// triangle-free (A006785), connected (A001349), connected triangle-free
/// (A024607).
pub mod published {
    pub const ALL: [usize; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];
    pub const TRIANGLE_FREE: [usize; 11] = [1, 1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172];
    pub const CONNECTED: [usize; 11] = [1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];
    pub const TRIANGLE_FREE_CONNECTED: [usize; 11] = [1, 1, 1, 1, 3, 6, 19, 59, 267, 1380, 9832];
}
