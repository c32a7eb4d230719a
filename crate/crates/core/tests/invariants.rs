mod common;

use common::{chi_all_assignments, labeled, omega_all_subsets, pairs, Oracle};
use perflab::invariants::{
    chromatic_number, chromatic_number_subset_dp, clique_number, is_k_colorable,
    is_k_colorable_within, k_coloring_within, max_clique, maximal_independent_sets,
    optimal_coloring, SubsetCache,
};
use perflab::perfection::{
    find_odd_antihole_within, find_odd_hole, is_perfect, is_perfect_by_definition,
    is_perfect_by_spgt,
};
use perflab::{Graph, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let m = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), m))
        })
        .prop_map(|(n, bits)| {
            let edges: Vec<(usize, usize)> = pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
}

fn subset_strategy(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let full = g.vertices().bits();
        (
            Just(g),
            any::<u32>().prop_map(move |m| VertexSet::from_bits(m & full)),
        )
    })
}

#[test]
fn triangle_free_iff_omega_at_most_two() {
    for n in 0..=6 {
        let ps = pairs(n);
        for code in 0..1u64 << ps.len() {
            let g = labeled(n, code, &ps);
            assert_eq!(g.is_triangle_free(), clique_number(&g, g.vertices()) <= 2);
        }
    }
}

#[test]
fn brute_force_oracles_agree_with_tables() {
    for n in 0..=5 {
        let ps = pairs(n);
        for code in 0..1u64 << ps.len() {
            let g = labeled(n, code, &ps);
            let o = Oracle::new(&g);
            assert_eq!(o.chi[o.full()] as usize, chi_all_assignments(&g));
            assert_eq!(o.omega[o.full()] as usize, omega_all_subsets(&g));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn clique_and_chromatic_numbers((g, s) in subset_strategy(12)) {
        let o = Oracle::new(&g);
        let bits = s.bits() as usize;
        let omega = clique_number(&g, s);
        let chi = chromatic_number(&g, s);
        prop_assert_eq!(omega, o.omega[bits] as usize);
        prop_assert_eq!(chi, o.chi[bits] as usize);
        prop_assert!(omega <= chi && chi <= s.len());
        prop_assert_eq!(chromatic_number_subset_dp(&g, s).unwrap(), chi);

        let k = max_clique(&g, s);
        prop_assert!(k.is_subset(s) && g.is_clique(k) && k.len() == omega);

        let c = optimal_coloring(&g, s);
        prop_assert!(c.is_proper(&g));
        prop_assert_eq!(c.domain(), s);
        prop_assert_eq!(c.num_colors(), chi);

        prop_assert!(is_k_colorable_within(&g, s, chi));
        prop_assert!(chi == 0 || !is_k_colorable_within(&g, s, chi - 1));
        let lex = k_coloring_within(&g, s, chi).unwrap();
        prop_assert!(lex.is_proper(&g) && lex.domain() == s);
    }

    #[test]
    fn whole_graph_colorability(g in graph_strategy(10)) {
        let chi = chromatic_number(&g, g.vertices());
        let c = is_k_colorable(&g, chi).unwrap();
        prop_assert!(c.is_proper(&g));
        prop_assert!(c.num_colors() <= chi);
        if chi > 0 {
            prop_assert!(is_k_colorable(&g, chi - 1).is_none());
        }
    }

    #[test]
    fn maximal_independent_sets_are_maximal(g in graph_strategy(10)) {
        let sets = maximal_independent_sets(&g, g.vertices());
        let o = Oracle::new(&g);
        let mut expected = 0;
        for t in 0..=o.full() {
            if o.is_independent(t)
                && (0..g.order()).all(|v| t >> v & 1 == 1 || !o.is_independent(t | 1 << v))
            {
                expected += 1;
                prop_assert!(sets.contains(&VertexSet::from_bits(t as u32)));
            }
        }
        prop_assert_eq!(sets.len(), expected);
    }

    #[test]
    fn subset_cache_matches_oracle((g, s) in subset_strategy(11)) {
        let o = Oracle::new(&g);
        let mut cache = SubsetCache::new(&g);
        let bits = s.bits() as usize;
        prop_assert_eq!(cache.omega(s), o.omega[bits] as usize);
        prop_assert_eq!(cache.chi(s), o.chi[bits] as usize);
        prop_assert_eq!(cache.is_perfect(s), o.perfect[bits]);
    }

    #[test]
    fn perfection_routes_agree(g in graph_strategy(10)) {
        let o = Oracle::new(&g);
        let truth = o.perfect[o.full()];
        prop_assert_eq!(is_perfect_by_spgt(&g), truth);
        let def = is_perfect_by_definition(&g, &mut SubsetCache::new(&g)).unwrap();
        prop_assert_eq!(def.is_none(), truth);
        if let Some(w) = def {
            // the least violating set is a minimal imperfect graph
            prop_assert_eq!(w.chi, o.chi[w.subset.bits() as usize] as usize);
            prop_assert!(w.chi > w.omega);
            for v in w.subset {
                prop_assert!(o.perfect[w.subset.without(v).bits() as usize]);
            }
        }
        let report = is_perfect(&g);
        prop_assert_eq!(report.holds, truth);
        perflab::certificate::validate(&g, &report).unwrap();
        o.check(&report).unwrap();
        prop_assert_eq!(is_perfect_by_spgt(&g.complement()), truth);
    }

    #[test]
    fn odd_hole_search(g in graph_strategy(10)) {
        let o = Oracle::new(&g);
        let found = find_odd_hole(&g);
        prop_assert_eq!(found.as_ref().map(|h| h.len()), o.shortest_odd_hole());
        if let Some(h) = found {
            prop_assert!(h.is_valid_in(&g));
            prop_assert!(o.is_induced_odd_cycle(&h.vertices, false));
        }
        let (anti, _) = find_odd_antihole_within(&g, g.vertices());
        if let Some(a) = anti {
            prop_assert!(o.is_induced_odd_cycle(&a.vertices, true));
        } else {
            prop_assert_eq!(Oracle::new(&g.complement()).shortest_odd_hole(), None);
        }
    }
}
