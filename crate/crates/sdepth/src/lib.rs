//! Exact Stanley depth of squarefree monomial ideals, and the machinery for
//! deciding when it exceeds the minimal generating degree.
//!
//! The pipeline, bottom up:
//!
//! - [`combinatorics`]: binomials, Macaulay representations, the
//!   Kruskal–Katona shadow-size function, the threshold `ξ_δ`, and
//!   reflection-principle path counts.
//! - [`complexes`]: squarefree monomial ideals and simplicial complexes as
//!   bitmask antichains, the complement duality between them, rev-lex
//!   compressed families, and generators for the named example objects.
//! - [`collapse`]: uniform collapsibility of a pure complex via maximum
//!   bipartite matching between facets and ridges, with SDR or
//!   Hall-violator certificates, and the translation of SDRs into interval
//!   partitions.
//! - [`poset`]: the degree-capped divisibility poset, exact partitionability
//!   by complete backtracking, Stanley depth, and the theorem/conjecture
//!   verifiers and probes.
//! - [`cli`]: the `sdepth` command-line tool over the text formats of
//!   [`format`].
//!
//! Ground sets are capped at 64 vertices so every face fits in one machine
//! word; all arithmetic is checked 64-bit. Decisions ship proof objects
//! (interval partitions, SDRs, Hall violators) that independent verifiers
//! re-check from scratch.

pub mod cli;
pub mod collapse;
pub mod combinatorics;
pub mod complexes;
pub mod error;
pub mod format;
pub mod poset;
pub mod sets;

pub use collapse::{
    build_facet_ridge_graph, complement_transfer, interval_partition_from_sdr,
    is_uniformly_collapsible, max_matching, verify_certificate, CollapseCertificate,
};
pub use combinatorics::{
    binomial, catalan, compare_by_macaulay, macaulay_rep, min_bound, path_count, shadow_size,
    verify_key_lemma, xi, MacaulayRep, MinBranch,
};
pub use complexes::{
    compressed_family, family_shadow, gen_compressed_ideal, gen_cycle_with_chord, gen_not_uc,
    gen_padded_counterexample, gen_veronese, FVector, MonomialIdeal, SimplicialComplex,
};
pub use error::{Error, Result};
pub use poset::{
    build_reduced_poset, check_minimal_in_xi, is_partitionable, is_partitionable_with_budget,
    probe_conjecture, probe_conjecture_ideal, stanley_depth, stanley_depth_with_budget,
    verify_main_theorem, verify_partition, IntervalPartition, ReducedPoset, DEFAULT_NODE_BUDGET,
};
pub use sets::{k_subsets, rev_lex_less, VertexSet};
