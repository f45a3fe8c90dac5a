//! Total k-cut complexes of finite simple graphs.
//!
//! The total k-cut complex of a graph `G` is the simplicial complex whose
//! facets are the complements of the independent sets of size `k` in `G`.
//! This crate builds these complexes (and the companion k-cut complexes),
//! reduces them with sequences of discrete Morse element matchings, computes
//! exact reduced homology over the rationals, decides vertex decomposability
//! and shellability at small scale, and ships a verification harness that
//! checks the structural theorems and Betti tables for whole graph families.
//!
//! Everything is exact: vertex sets are single-word bitmasks, homology ranks
//! are computed modulo two 62-bit primes with a rational fallback, and an
//! integer Smith-normal-form oracle cross-checks small instances for torsion.

pub mod complex;
pub mod cutgen;
pub mod decide;
pub mod error;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod io;
pub mod morse;
pub mod par;
#[cfg(test)]
pub(crate) mod testutil;
pub mod vset;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::Graph;
pub use vset::VertexSet;

/// Hard cap on vertex counts: one machine word per face.
pub const MAX_VERTICES: usize = 64;

/// Default cap on the number of faces materialized for homology and Morse
/// computations. Overridable through the `CUTCOMPLEX_FACE_CAP` environment
/// variable or the explicit `*_with_cap` entry points.
pub const DEFAULT_FACE_CAP: u64 = 1 << 22;

/// Face cap for the dense Smith-normal-form oracle.
pub const SNF_FACE_CAP: u64 = 1 << 16;

/// Face cap for the vertex-decomposability recursion.
pub const VD_FACE_CAP: u64 = 1 << 16;

/// Default facet cap for the shelling search.
pub const DEFAULT_FACET_CAP: usize = 12;

/// The face cap currently in effect: `CUTCOMPLEX_FACE_CAP` if set and
/// parseable, the built-in default otherwise.
pub fn face_cap() -> u64 {
    std::env::var("CUTCOMPLEX_FACE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_FACE_CAP)
}
