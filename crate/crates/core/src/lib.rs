//! Exact graph-domination toolkit built on hypergraph transversals.
//!
//! The pipeline: build a graph ([`graph`], [`families`]), take its open or
//! closed neighborhood hypergraph ([`hypergraph`]), and run the exact
//! branch-and-bound transversal solver ([`transversal`]). The [`domination`]
//! module packages this into the four domination invariants (plain, total,
//! paired, total restrained) together with certificate checkers and an
//! independent brute-force oracle.
//!
//! Everything is deterministic: witnesses, node counts and tie-breaks are
//! reproducible across runs, and all structures are immutable after
//! construction and safe to share across threads.

pub mod domination;
pub mod families;
pub mod graph;
pub mod hypergraph;
pub mod transversal;
pub mod vertex_set;

pub use domination::{
    brute_force_minimum, domination_number, doubling_construction, has_perfect_matching,
    is_dominating, is_paired_dominating, is_total_dominating, is_total_restrained_dominating,
    paired_domination_number, total_domination_number, total_restrained_domination_number,
    DominationError, DominationKind, InvariantResult, Method,
};
pub use families::{
    chained_five_cycles, claim_b_witness, complete, cycle, doubled_code_dominating_set,
    hamming_perfect_code, hypercube, path, prop1_witness, FamilyError, FamilyKind, FamilySpec,
};
pub use graph::{
    cartesian_product, make_graph, prism, Bipartiteness, Bipartition, Graph, GraphError,
    ProductLabeling, MAX_VERTICES,
};
pub use hypergraph::{
    cnh, layer_isomorphism_check, onh, transversal_to_dominating, Hypergraph,
    HypergraphComponent, HypergraphError,
};
pub use transversal::{
    transversal_number, transversal_number_with, SolveOutcome, SolveStats, SolverOptions,
    TransversalResult, DEFAULT_NODE_BUDGET,
};
pub use vertex_set::VertexSet;
