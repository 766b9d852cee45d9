//! Minimum common degree of graphs and the structure it forces.
//!
//! `δ₂(G)` is the least number of common neighbors over all non-adjacent
//! vertex pairs. For triangle-free graphs a large `δ₂` forces bipartiteness
//! (above `⌊n/5⌋`) or a homomorphism to `C_5` (above `⌊n/8⌋`). This crate
//! computes the invariant, builds the homomorphism explicitly, recognizes the
//! extremal blow-ups, and exposes every supporting statement as a checkable
//! predicate.
//!
//! Graphs are immutable dense bit matrices ([`Graph`]); use [`GraphBuilder`]
//! to construct them edge by edge.

pub mod bitset;
pub mod cycles;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod homomorphism;
pub mod invariants;
pub mod io;
pub mod structure;
pub mod theorems;

pub use bitset::VertexSet;
pub use cycles::{
    find_five_cycle, induced_five_cycles, is_bipartite, is_c5_free, odd_girth, shortest_odd_cycle, Bipartiteness,
    Cycle,
};
pub use embedding::{contains_subgraph, is_subgraph_embedding};
pub use error::{BlowupError, GeneratorError, Graph6Error, GraphError, HomomorphismError, StructureError};
pub use graph::{Graph, GraphBuilder, VertexId, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
pub use homomorphism::{
    balanced_blow_up, balanced_sizes, blow_up, find_homomorphism, recognize_blow_up, twin_classes,
    verify_homomorphism, BlowupSpec, HomCheck, HomMap, Recognition,
};
pub use invariants::{
    find_addable_edge, find_triangle, is_maximal_triangle_free, is_triangle_free, min_common_degree, min_degree,
    CommonDegree, VACUOUS_COMMON_DEGREE,
};
pub use structure::{
    c5_decomposition, construct_c5_homomorphism, C5Construction, C5Decomposition, C5Outcome, ClaimViolation,
};
pub use theorems::{
    check_bipartite_theorem, check_c5_hom_theorem, check_c5free_theorem, check_disjointness_lemma,
    check_equality_case, check_lemma_min_degree_implies_delta2, check_statement, EqualityCase, Statement, Verdict,
    Witness,
};
