//! Isometry invariants built from matrix algebras: canonical word bases,
//! trace tables, and their projection and quiver instances.

pub mod decide;
pub mod projection;
pub mod quiver;
pub mod traces;
pub mod words;

pub use decide::{subspaces_unitary_isomorphic, Method, UnitaryDecision};
pub use projection::projection_invariant;
pub use quiver::{cross_gramian_blocks, quiver_invariant, quiver_invariant_of_tuple};
pub use traces::{compare_trace_invariants, trace_tables, unitary_tuple_equivalent, TraceInvariant};
pub use words::{algebra_basis_words, block_algebra_basis_words, BlockElement, Init, Word, WordBasis};
