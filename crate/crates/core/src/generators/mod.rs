//! Named families, seeded random graphs and exhaustive small-graph corpora.

pub mod canon;
pub mod enumerate;
pub mod named;
pub mod random;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic};
pub use enumerate::{
    enumerate_all_graphs, enumerate_levels, enumerate_triangle_free, items_from_graph6_lines, CorpusItem, Family,
    Provenance, MAX_ALL_GRAPHS_N, MAX_TRIANGLE_FREE_N,
};
pub use named::{complete, complete_bipartite, cycle, g1, g2, mobius_ladder, named_graph, path, turan};
pub use random::{
    complete_to_maximal_triangle_free, random_gnp, random_maximal_triangle_free, random_permutation, random_corpus, random_spanning_subgraph, random_triangle_free, RandomFamily,
};
