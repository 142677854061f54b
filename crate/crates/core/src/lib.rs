//! Deciding whether two tuples of subspaces are related by an isometry or by
//! an invertible linear map.
//!
//! Isometry classes are separated by canonical forms and trace invariants:
//! Bargmann products for lines, a canonical Gramian for real planes, and
//! traces over a canonical basis of the generated matrix algebra for
//! everything else. Invertible-map classes are decided by a homogeneous
//! linear system. The [`harness`] module generates test instances.
#![no_std]
// `!(x > t)` comparisons deliberately treat NaN as failing.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
extern crate alloc;

pub type C64 = num_complex::Complex64;

pub mod algebra;
pub mod error;
pub mod glauto;
pub mod harness;
pub mod lex;
pub mod linalg;
pub mod lines;
pub mod mat2;
pub mod matrix;
pub mod planes;
pub mod report;
pub mod tol;
pub mod tuple;

pub use error::{Error, Result};
pub use matrix::{Field, Matrix};
pub use report::Mismatch;
pub use tol::Tolerances;
pub use tuple::{BlockGramian, SubspaceTuple};
