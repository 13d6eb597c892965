//! Graphs built from sums over subsets of `{1..n}`.
//!
//! The crate constructs four related graph families and the machinery to
//! interrogate them:
//!
//! - the *Fibonacci-sum graph* on `{1..n}` (vertices are integers, edges are
//!   pairs summing to a Fibonacci number),
//! - the *set-graph* on the non-empty subsets of `{1..n}` (edges join
//!   intersecting subsets),
//! - the *Fibonacci-sum set-graph*, a multigraph on the same subset vertices
//!   whose edge multiplicities count cross-subset element pairs with a
//!   Fibonacci sum and whose loops count such pairs inside one subset,
//! - the *popped graph* obtained by dropping loops and collapsing parallel
//!   edges.
//!
//! [`verify`] runs a registry of structural claims (connectivity, degree
//! parity, loop-count formulas, Hamiltonicity, size bounds) over a range of
//! `n` and reports pass/fail/skip per claim, and [`analysis`] houses the
//! exact clique / chromatic / Hamiltonian-cycle solvers used at desk scale.
//!
//! Definition of the cross-subset edge rule is ambiguous about element pairs
//! with equal values drawn from two different subsets; everything here is
//! therefore parameterized by [`generators::EdgeSemantics`].

pub mod analysis;
pub mod generators;
pub mod graphcore;
pub mod numseq;
pub mod setspace;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// A sum-sequence membership query exceeded the sequence's certified bound.
    #[error("bound error: query {query} exceeds sequence bound {bound}")]
    Bound { query: u64, bound: u64 },
    /// A ground-set size exceeded the materialization cap.
    #[error("capacity error: n = {n} exceeds cap {cap}")]
    Capacity { n: u32, cap: u32 },
    /// Two routes that must agree disagreed; indicates an internal bug.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
