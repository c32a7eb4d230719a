use serde::{Deserialize, Serialize};

use super::clique::clique_number;
use super::independent::for_each_maximal_independent_set;
use crate::error::{check_cap, Result};
use crate::graph::{Graph, VertexSet};

/// A proper coloring given by its color classes; class `c` holds the
/// vertices colored `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    classes: Vec<VertexSet>,
}

impl Coloring {
    pub fn from_classes(classes: Vec<VertexSet>) -> Self {
        Coloring { classes }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn num_colors(&self) -> usize {
        self.classes.iter().filter(|c| !c.is_empty()).count()
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    pub fn domain(&self) -> VertexSet {
        self.classes
            .iter()
            .fold(VertexSet::EMPTY, |acc, &c| acc | c)
    }

    /// Per-vertex colors for vertices `0..n`; `None` for uncolored ones.
    pub fn to_vec(&self, n: usize) -> Vec<Option<usize>> {
        (0..n).map(|v| self.color_of(v)).collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &c in &self.classes {
            if !(seen & c).is_empty() || !g.is_independent(c) {
                return false;
            }
            seen = seen | c;
        }
        true
    }
}

/// Lexicographically least proper coloring of `G[s]` with at most `k`
/// colors, vertices taken in ascending order.
pub fn k_coloring_within(g: &Graph, s: VertexSet, k: usize) -> Option<Coloring> {
    let s = s & g.vertices();
    if s.is_empty() {
        return Some(Coloring::from_classes(Vec::new()));
    }
    if k == 0 || !dsatur_decide(g, s, k) {
        return None;
    }
    let order = s.to_vec();
    let mut classes = vec![VertexSet::EMPTY; k];
    if lex_extend(g, &order, 0, &mut classes, 0) {
        classes.retain(|c| !c.is_empty());
        Some(Coloring::from_classes(classes))
    } else {
        None
    }
}

/// `Some(coloring)` iff `g` has a proper coloring with at most `k` colors.
/// The coloring is the lexicographically least color vector under vertex order.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    k_coloring_within(g, g.vertices(), k)
}

/// Decides `chi(G[s]) <= k` without constructing a lexicographic witness.
pub fn is_k_colorable_within(g: &Graph, s: VertexSet, k: usize) -> bool {
    let s = s & g.vertices();
    s.is_empty() || (k > 0 && dsatur_decide(g, s, k))
}

/// Exact `chi(G[s])`: clique lower bound, DSATUR greedy upper bound, and
/// exact DSATUR branch-and-bound for each k in between.
pub fn chromatic_number(g: &Graph, s: VertexSet) -> usize {
    let s = s & g.vertices();
    if s.is_empty() {
        return 0;
    }
    let lower = clique_number(g, s);
    let upper = greedy_dsatur(g, s);
    (lower..upper)
        .find(|&k| dsatur_decide(g, s, k))
        .unwrap_or(upper)
}

/// An optimal coloring of `G[s]`, lexicographically least among optimal ones.
pub fn optimal_coloring(g: &Graph, s: VertexSet) -> Coloring {
    let k = chromatic_number(g, s);
    k_coloring_within(g, s, k).expect("chromatic number is attainable")
}

pub const SUBSET_DP_CAP: usize = 16;

/// Chromatic number by dynamic programming over all subsets, covering by
/// maximal independent sets: `chi(S) = 1 + min_I chi(S \ I)`. Independent of
/// the branch-and-bound route; used as a cross-check.
pub fn chromatic_number_subset_dp(g: &Graph, s: VertexSet) -> Result<usize> {
    check_cap("subset-DP chromatic number", g.order(), SUBSET_DP_CAP)?;
    let s = s & g.vertices();
    let (sub, _) = g.induced_with_labels(s);
    let m = sub.order();
    let mut table = vec![u8::MAX; 1 << m];
    table[0] = 0;
    for bits in 1u32..(1 << m) {
        let set = VertexSet::from_bits(bits);
        let mut best = u8::MAX;
        for_each_maximal_independent_set(&sub, set, |i| {
            best = best.min(table[(set - i).bits() as usize]);
        });
        table[bits as usize] = best + 1;
    }
    Ok(table[(1usize << m) - 1] as usize)
}

fn lex_extend(
    g: &Graph,
    order: &[usize],
    idx: usize,
    classes: &mut [VertexSet],
    used: usize,
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    let k = classes.len();
    let nv = g.neighbours(v);
    for c in 0..k.min(used + 1) {
        if !(classes[c] & nv).is_empty() {
            continue;
        }
        classes[c].insert(v);
        let now_used = used.max(c + 1);
        // with every color in use, each later vertex needs a free class
        let feasible = now_used < k
            || order[idx + 1..]
                .iter()
                .all(|&u| classes.iter().any(|cl| (*cl & g.neighbours(u)).is_empty()));
        if feasible && lex_extend(g, order, idx + 1, classes, now_used) {
            return true;
        }
        classes[c].remove(v);
    }
    false
}

struct Dsatur<'a> {
    g: &'a Graph,
    classes: Vec<VertexSet>,
    k: usize,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize, used: usize) -> usize {
        let nv = self.g.neighbours(v);
        self.classes[..used]
            .iter()
            .filter(|c| !(**c & nv).is_empty())
            .count()
    }

    // vertex with most distinct neighbour colors, then most uncolored
    // neighbours, then lowest label
    fn pick(&self, uncolored: VertexSet, used: usize) -> (usize, usize) {
        uncolored
            .iter()
            .map(|v| {
                let sat = self.saturation(v, used);
                let deg = (self.g.neighbours(v) & uncolored).len();
                (v, sat, deg)
            })
            .max_by_key(|&(v, sat, deg)| (sat, deg, std::cmp::Reverse(v)))
            .map(|(v, sat, _)| (v, sat))
            .expect("uncolored is non-empty")
    }

    fn search(&mut self, uncolored: VertexSet, used: usize) -> bool {
        if uncolored.is_empty() {
            return true;
        }
        let (v, sat) = self.pick(uncolored, used);
        if sat == self.k {
            return false;
        }
        let nv = self.g.neighbours(v);
        let rest = uncolored.without(v);
        for c in 0..used {
            if (self.classes[c] & nv).is_empty() {
                self.classes[c].insert(v);
                let ok = self.search(rest, used);
                self.classes[c].remove(v);
                if ok {
                    return true;
                }
            }
        }
        // a fresh color is interchangeable with any other unused one
        if used < self.k {
            self.classes[used].insert(v);
            let ok = self.search(rest, used + 1);
            self.classes[used].remove(v);
            return ok;
        }
        false
    }
}

fn dsatur_decide(g: &Graph, s: VertexSet, k: usize) -> bool {
    if k >= s.len() {
        return true;
    }
    let mut d = Dsatur {
        g,
        classes: vec![VertexSet::EMPTY; k],
        k,
    };
    d.search(s, 0)
}

/// Number of colors used by one greedy DSATUR pass over `G[s]`.
fn greedy_dsatur(g: &Graph, s: VertexSet) -> usize {
    let mut d = Dsatur {
        g,
        classes: vec![VertexSet::EMPTY; s.len()],
        k: s.len(),
    };
    let mut uncolored = s;
    let mut used = 0;
    while !uncolored.is_empty() {
        let (v, _) = d.pick(uncolored, used);
        let nv = g.neighbours(v);
        let c = (0..used)
            .find(|&c| (d.classes[c] & nv).is_empty())
            .unwrap_or(used);
        d.classes[c].insert(v);
        used = used.max(c + 1);
        uncolored.remove(v);
    }
    used
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn chromatic_examples() {
        let c5 = named::cycle(5);
        assert_eq!(chromatic_number(&c5, c5.vertices()), 3);
        let k4 = named::complete(4);
        assert_eq!(chromatic_number(&k4, k4.vertices()), 4);
        let gr = named::grotzsch();
        assert_eq!(chromatic_number(&gr, gr.vertices()), 4);
        assert_eq!(chromatic_number(&gr, VertexSet::EMPTY), 0);
        assert_eq!(chromatic_number(&named::petersen(), VertexSet::full(10)), 3);
        let m4 = named::mycielskian(&gr);
        assert_eq!(chromatic_number(&m4, m4.vertices()), 5);
    }

    #[test]
    fn k_colorable_examples() {
        let c5 = named::cycle(5);
        let col = is_k_colorable(&c5, 3).unwrap();
        assert!(col.is_proper(&c5));
        assert_eq!(
            col.to_vec(5),
            vec![Some(0), Some(1), Some(0), Some(1), Some(2)]
        );
        assert!(is_k_colorable(&c5, 2).is_none());
        let gr = named::grotzsch();
        let col = is_k_colorable(&gr, 4).unwrap();
        assert!(col.is_proper(&gr));
        assert_eq!(col.domain(), gr.vertices());
        assert!(is_k_colorable(&gr, 3).is_none());
        assert!(is_k_colorable(&named::edgeless(0), 0).is_some());
        assert!(is_k_colorable(&named::edgeless(1), 0).is_none());
    }

    #[test]
    fn subset_coloring_is_confined_to_subset() {
        let g = named::petersen();
        let s = VertexSet::from_bits(0b11_0001_1111);
        let col = k_coloring_within(&g, s, 3).unwrap();
        assert_eq!(col.domain(), s);
        assert!(col.is_proper(&g));
    }

    #[test]
    fn subset_dp_route_agrees() {
        for g in [
            named::cycle(5),
            named::cycle(7).complement(),
            named::petersen(),
            named::grotzsch(),
        ] {
            assert_eq!(
                chromatic_number_subset_dp(&g, g.vertices()).unwrap(),
                chromatic_number(&g, g.vertices()),
                "{g:?}"
            );
        }
        assert!(chromatic_number_subset_dp(&named::edgeless(17), VertexSet::full(17)).is_err());
    }
}
