use crate::graph::{Graph, VertexSet};

/// Maximum clique of `G[s]`; among maximum cliques, the one whose ascending
/// vertex list is lexicographically least. Empty for empty `s`.
pub fn max_clique(g: &Graph, s: VertexSet) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, s & g.vertices(), &mut best);
    best
}

pub fn clique_number(g: &Graph, s: VertexSet) -> usize {
    max_clique(g, s).len()
}

// Preorder over cliques in lexicographic order: the first clique of a given
// size reached is the lex-least one, so only strict improvements are kept.
fn expand(g: &Graph, cur: VertexSet, mut cand: VertexSet, best: &mut VertexSet) {
    if cand.is_empty() {
        if cur.len() > best.len() {
            *best = cur;
        }
        return;
    }
    while let Some(v) = cand.min() {
        if cur.len() + cand.len() <= best.len() {
            return;
        }
        cand.remove(v);
        expand(g, cur.with(v), cand & g.neighbours(v), best);
    }
    if cur.len() > best.len() {
        *best = cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn examples() {
        let k4 = named::complete(4);
        assert_eq!(clique_number(&k4, k4.vertices()), 4);
        let c5 = named::cycle(5);
        assert_eq!(clique_number(&c5, c5.vertices()), 2);
        assert_eq!(max_clique(&c5, c5.vertices()).to_vec(), vec![0, 1]);
        let gr = named::grotzsch();
        assert_eq!(clique_number(&gr, gr.vertices()), 2);
        assert_eq!(clique_number(&gr, VertexSet::EMPTY), 0);
        assert_eq!(clique_number(&named::edgeless(4), VertexSet::full(4)), 1);
    }

    #[test]
    fn lex_least_witness() {
        // triangles {1,2,3} and {0,4,5}: {0,4,5} is lexicographically first
        let g =
            Graph::from_edge_list(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(max_clique(&g, g.vertices()).to_vec(), vec![0, 4, 5]);
        assert_eq!(
            max_clique(&g, VertexSet::from_bits(0b101110)).to_vec(),
            vec![1, 2, 3]
        );
    }
}
