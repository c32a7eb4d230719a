//! Exact clique number, chromatic number and independent-set structure.

mod cache;
mod clique;
mod coloring;
mod independent;

pub use cache::{SubsetCache, CACHE_CAP};
pub use clique::{clique_number, max_clique};
pub use coloring::{
    chromatic_number, chromatic_number_subset_dp, is_k_colorable, is_k_colorable_within,
    k_coloring_within, optimal_coloring, Coloring, SUBSET_DP_CAP,
};
pub use independent::{for_each_maximal_independent_set, maximal_independent_sets};
