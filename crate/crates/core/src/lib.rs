//! Symplectic matroids over the signed ground set `E±n = {1..n} ∪ {1*..n*}`.
//!
//! The crate converts between bases and circuits, checks the Maximality
//! Property and the circuit axioms SC1–SC4, builds circuit families from
//! multigraphs through signed cycles, and ships exhaustive brute-force
//! generators for small ground sets.
//!
//! Sets are stored as bitmasks, so `n` is bounded by [`MAX_N`]. The
//! exhaustive checkers refuse anything above [`EXHAUSTIVE_LIMIT`].

pub mod axioms;
pub mod cli;
pub mod cryptomorphism;
pub mod error;
pub mod graph;
pub mod ground;
pub mod oracle;

pub use axioms::{
    check_bases, check_circuit_axioms, check_symmetric_exchange, AxiomId, CircuitReport, Status,
    Verdict, Witness,
};
pub use cryptomorphism::{
    bases_from_circuits, circuits_from_bases, dual, eliminate, fundamental_circuit, is_independent,
    spans, spans_all, strong_eliminate,
};
pub use error::{Error, Result};
pub use graph::{
    circuits_from_graph, enumerate_cycles, matroid_from_graph, signed_independent, EdgeSet,
    GraphMatroid, InducedSigning, Multigraph, Sign,
};
pub use ground::{
    enumerate_admissible_orderings, enumerate_admissible_subsets, gale_compare, greatest_member,
    is_admissible, AdmissibleOrdering, AdmissibleSet, Kind, SetCollection, SignedElement,
};

/// Largest ground size representable by [`AdmissibleSet`].
pub const MAX_N: usize = 32;

/// Largest ground size for which the ordering sweep in [`check_bases`] runs.
pub const EXHAUSTIVE_LIMIT: usize = 10;
