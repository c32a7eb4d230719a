use crate::graph::{Graph, VertexSet};

/// Calls `emit` once for every maximal independent set of `G[s]`
/// (Bron–Kerbosch with pivoting, run on the complement). For empty `s` the
/// single maximal set is the empty set.
pub fn for_each_maximal_independent_set<F: FnMut(VertexSet)>(g: &Graph, s: VertexSet, mut emit: F) {
    let s = s & g.vertices();
    bron_kerbosch(g, s, VertexSet::EMPTY, s, VertexSet::EMPTY, &mut emit);
}

/// All maximal independent sets of `G[s]`, sorted lexicographically.
pub fn maximal_independent_sets(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, s, |i| out.push(i));
    out.sort_by(|a, b| a.cmp_lex(*b));
    out
}

fn non_neighbours(g: &Graph, s: VertexSet, v: usize) -> VertexSet {
    (s - g.neighbours(v)).without(v)
}

fn bron_kerbosch<F: FnMut(VertexSet)>(
    g: &Graph,
    s: VertexSet,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    emit: &mut F,
) {
    if p.is_empty() {
        if x.is_empty() {
            emit(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| ((p & non_neighbours(g, s, u)).len(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    for v in p - non_neighbours(g, s, pivot) {
        let nv = non_neighbours(g, s, v);
        bron_kerbosch(g, s, r.with(v), p & nv, x & nv, emit);
        p.remove(v);
        x.insert(v);
    }
}
