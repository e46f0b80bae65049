//! Decide whether a graph can be made bipartite by at most `k` edge
//! contractions, and if so produce a verifiable witness.
//!
//! The solver works in three layers:
//!
//! * an exact odd cycle transversal front end ([`oct`]) that finds a small
//!   vertex set whose removal leaves the graph bipartite,
//! * a compression step ([`compression`]) that rewrites the contraction
//!   question as a family of rank-bounded edge cut problems, and
//! * cut solvers for those problems: a randomized one driven by edge
//!   coloring ([`rankcut`]), a deterministic one driven by splitter
//!   families ([`derand`]), and exhaustive reference solvers ([`oracle`]).
//!
//! [`pipeline::solve_bc`] glues the layers together. Everything here is
//! `no_std` + `alloc`; IO, file formats and the command line live in the
//! companion `bicontract-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod compression;
pub mod constrained;
pub mod derand;
mod flow;
pub mod graph;
pub mod impsep;
pub mod oct;
pub mod oracle;
pub mod pipeline;
pub mod rankcut;
pub mod rng;

pub use graph::{ContractionMap, EdgeSet, Graph, TwoColoring};
pub use pipeline::{solve_bc, Algo, SolveCaps, Verdict, Witness};

use core::fmt;

/// Errors reported by graph construction and by operations with explicit
/// preconditions. Algorithmic "no" answers are not errors; they are
/// `None`/verdict values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge with both endpoints equal.
    SelfLoop(usize),
    /// The same vertex pair listed twice.
    DuplicateEdge(usize, usize),
    /// A vertex id outside `0..n`.
    VertexOutOfRange { v: usize, n: usize },
    /// An edge id outside `0..m`.
    EdgeOutOfRange { e: usize, m: usize },
    /// Separator or cut terminals overlap.
    TerminalsOverlap,
    /// A graph required to be bipartite (or a claimed bipartition) is not.
    NotBipartite,
    /// The supplied edge set is not a bipartite modulator.
    NotAModulator,
    /// A rank or size budget stated as a precondition is violated.
    BudgetExceeded { have: usize, budget: usize },
    /// A block partition violates its structural preconditions.
    InvalidPartition(&'static str),
    /// Splitter parameters out of range (set size larger than domain).
    SplitterParams { domain: usize, set_size: usize },
    /// An exhaustive oracle refused to run above its safety budget.
    OracleBudget(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            Error::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for {n} vertices")
            }
            Error::EdgeOutOfRange { e, m } => write!(f, "edge {e} out of range for {m} edges"),
            Error::TerminalsOverlap => write!(f, "terminal sets overlap"),
            Error::NotBipartite => write!(f, "graph is not bipartite under the required split"),
            Error::NotAModulator => write!(f, "edge set is not a bipartite modulator"),
            Error::BudgetExceeded { have, budget } => {
                write!(f, "budget exceeded: {have} > {budget}")
            }
            Error::InvalidPartition(why) => write!(f, "invalid block partition: {why}"),
            Error::SplitterParams { domain, set_size } => {
                write!(f, "splitter set size {set_size} exceeds domain {domain}")
            }
            Error::OracleBudget(what) => write!(f, "oracle budget exceeded: {what}"),
        }
    }
}
