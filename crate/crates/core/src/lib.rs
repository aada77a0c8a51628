//! Kernel for computing with powers of paths and their extremal graphs.
//!
//! Everything here is `no_std` (with `alloc`): dense bit-row graphs, a
//! construction algebra, canonical labeling, graph6, subgraph containment,
//! exhaustive oracles (isomorph-free enumeration, brute-force Turán numbers,
//! chromatic number, decomposition families) and closed-form evaluators.
//!
//! IO, parallel fan-out and wall-clock budgets live in the `pathpower` crate.

#![no_std]

extern crate alloc;

pub mod budget;
pub mod canon;
pub mod constructions;
pub mod containment;
mod error;
pub mod formula;
pub mod graph;
pub mod graph6;
pub mod oracle;

pub use budget::{Budget, StepBudget, Unlimited};
pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use constructions::{LabeledConstruction, SParameter};
pub use containment::Embedding;
pub use error::Error;
pub use formula::TuranEvaluation;
pub use graph::{Algebra, Graph, VertexPartition, DEFAULT_ORDER_CAP};
pub use oracle::{DecompositionFamily, ExtremalResult};

pub type Result<T, E = Error> = core::result::Result<T, E>;
