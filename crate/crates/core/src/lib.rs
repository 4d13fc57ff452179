//! Recognition and structure of sesquicographs: the graphs generated from
//! `K1` by joins, disjoint unions (0-sums) and one-vertex gluings (1-sums).
//!
//! The crate provides
//!
//! * a labeled simple [`Graph`] type with the generating operations,
//!   complement, induced subgraphs, simple contraction, graph6 and
//!   edge-list codecs, and canonical forms for graphs on up to ten vertices;
//! * block / cut-vertex decomposition and vertex connectivity;
//! * a recognizer that returns a [`DecompositionTree`] certificate or the
//!   piece on which decomposition fails, alongside cograph and 2-cograph
//!   recognizers;
//! * the forbidden induced subgraphs (long cycles, house, domino, `H1`..`H5`)
//!   with witness search and an induced-minor checker;
//! * isomorph-free generation of small graphs and the exhaustive sweeps that
//!   cross-check all of the above.
//!
//! The sweeps run on rayon when the `parallel` feature is enabled (default)
//! and sequentially otherwise; see [`par::Execution`].

mod bits;
pub mod canon;
pub mod connectivity;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod graph;
pub mod obstructions;
pub mod par;
pub mod recognition;
pub mod tree;

pub use canon::{are_isomorphic, canonical_form, canonical_key, CanonicalKey};
pub use connectivity::{
    blocks_and_cut_vertices, components, is_2_connected, is_critically_2_connected, vertex_connectivity,
    BlockDecomposition,
};
pub use enumeration::{
    generate_graphs, minimal_non_sesquicographs, verify_closure, verify_theorem_equivalence, EnumerationReport,
    FilterMode,
};
pub use error::{Error, Result};
pub use format::{from_edge_list, from_graph6, to_edge_list, to_graph6};
pub use graph::{Graph, Vertex, VertexSet};
pub use obstructions::{
    catalog, find_catalog_obstruction, find_long_induced_cycle, has_induced_minor, is_sesquicograph_by_minor_criterion,
    obstruction_witness, CatalogEntry, ObstructionName, ObstructionWitness,
};
pub use par::Execution;
pub use recognition::{
    classify, decompose_sesquicograph, is_2_cograph, is_cograph, is_sesquicograph,
    is_sesquicograph_by_subgraph_criterion, ClassificationReport, Decomposition, FailurePiece,
};
pub use tree::{DecompositionTree, NodeKind};
