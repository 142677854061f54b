//! Subspace tuples built from graphs. Isomorphic graphs give isomorphic
//! tuples, under isometries for [`graph_to_tuple_unitary`] and under
//! invertible maps for [`graph_to_tuple_gl`].

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::harness::graph::SimpleGraph;
use crate::matrix::{Field, Matrix};
use crate::tol::Tolerances;
use crate::tuple::SubspaceTuple;
use crate::C64;

/// One subspace per vertex in `F^{r|E|}`: the `i`-th `r x r` block of `A_j`
/// is `I_r` when vertex `j` lies on edge `i` and zero otherwise. Bases are
/// orthonormalized (the raw columns are orthogonal of norm `sqrt(deg j)`).
pub fn graph_to_tuple_unitary(g: &SimpleGraph, r: usize) -> Result<SubspaceTuple> {
    if g.edges().is_empty() {
        return Err(Error::EmptyGraph);
    }
    if r == 0 {
        return Err(Error::InvalidArgument("rank must be positive"));
    }
    if g.degrees().contains(&0) {
        return Err(Error::PreconditionFailed("every vertex must lie on an edge"));
    }
    let d = r * g.edges().len();
    let mut bases = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let mut a = Matrix::zeros(d, r);
        for (i, &(x, y)) in g.edges().iter().enumerate() {
            if x == v || y == v {
                for k in 0..r {
                    a[(i * r + k, k)] = C64::new(1.0, 0.0);
                }
            }
        }
        bases.push(a);
    }
    SubspaceTuple::new(Field::Real, d, bases)?.orthonormalized(&Tolerances::default())
}

/// One subspace per vertex of an `r`-regular graph in `F^{|E|}`, spanned by
/// the standard basis vectors of its incident edges.
pub fn graph_to_tuple_gl(g: &SimpleGraph) -> Result<SubspaceTuple> {
    if g.edges().is_empty() {
        return Err(Error::EmptyGraph);
    }
    let r = g.regular_degree().ok_or(Error::NotRegular)?;
    let d = g.edges().len();
    let mut bases = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let mut a = Matrix::zeros(d, r);
        let incident = g.edges().iter().enumerate().filter(|(_, &(x, y))| x == v || y == v);
        for (k, (i, _)) in incident.enumerate() {
            a[(i, k)] = C64::new(1.0, 0.0);
        }
        bases.push(a);
    }
    SubspaceTuple::new(Field::Real, d, bases)
}
