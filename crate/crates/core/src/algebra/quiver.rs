//! Trace invariant of the algebra generated by the blocks of the orthobasis
//! Gramian, each placed in its own position of an otherwise zero matrix.
//!
//! Every word of positive length evaluates to a matrix supported on one
//! block, so products, independence tests and traces all work blockwise.
//! The adjoint of the `(i, j)` generator is the `(j, i)` generator.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::traces::{sort_triples, InvariantKind, TraceInvariant, TripleTrace};
use crate::algebra::words::{block_algebra_basis_words, BlockElement};
use crate::error::{Error, Result};
use crate::tol::Tolerances;
use crate::tuple::{BlockGramian, SubspaceTuple};
use crate::C64;

const DIAGONAL_TOL: f64 = 1e-8;

fn check_gramian(gram: &BlockGramian) -> Result<()> {
    let n = gram.len();
    for i in 0..n {
        let b = gram.block(i, i);
        if b.shape() != (gram.ranks[i], gram.ranks[i])
            || b.max_abs_diff(&crate::matrix::Matrix::identity(gram.ranks[i])) > DIAGONAL_TOL
        {
            return Err(Error::InvalidGramian);
        }
    }
    Ok(())
}

/// Nonzero blocks of the Gramian, diagonal ones included, in `(i, j)`
/// lexicographic order.
pub fn cross_gramian_blocks(gram: &BlockGramian, tol: &Tolerances) -> Result<Vec<BlockElement>> {
    check_gramian(gram)?;
    Ok(all_blocks(gram).into_iter().filter(|e| e.payload.frobenius_norm() > tol.orth).collect())
}

fn all_blocks(gram: &BlockGramian) -> Vec<BlockElement> {
    let n = gram.len();
    (0..n * n).map(|p| BlockElement { row: p / n, col: p % n, payload: gram.block(p / n, p % n).clone() }).collect()
}

pub fn quiver_invariant(gram: &BlockGramian, tol: &Tolerances) -> Result<TraceInvariant> {
    check_gramian(gram)?;
    let n = gram.len();
    // Letters are pair ids i * n + j so that the same letter names the same
    // block in every tuple.
    let generators = all_blocks(gram);
    let basis = block_algebra_basis_words(&gram.ranks, &generators, tol)?;
    let m = basis.len();
    let el = &basis.elements;

    let mut by_support: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    for (w, e) in el.iter().enumerate() {
        by_support[e.row * n + e.col].push(w);
    }

    let mut pair_traces = vec![C64::new(0.0, 0.0); m * m];
    for group in &by_support {
        for &a in group {
            for &b in group {
                pair_traces[a * m + b] = el[a].payload.trace_inner(&el[b].payload);
            }
        }
    }

    // Possibly nonzero triples: tr(E_a^* E_b E_c) with a on (j, i), b on
    // (j, k) and c on (k, i).
    let mut triple_traces = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for &b in &by_support[j * n + k] {
                    for &c in &by_support[k * n + i] {
                        let bc = el[b].payload.mul(&el[c].payload);
                        for &a in &by_support[j * n + i] {
                            triple_traces.push(TripleTrace { i: a, j: b, k: c, value: el[a].payload.trace_inner(&bc) });
                        }
                    }
                }
            }
        }
    }
    sort_triples(&mut triple_traces);

    let g = generators.len();
    let mut generator_traces = vec![C64::new(0.0, 0.0); m * g];
    for (w, e) in el.iter().enumerate() {
        let p = e.row * n + e.col;
        generator_traces[w * g + p] = e.payload.trace_inner(&generators[p].payload);
    }

    Ok(TraceInvariant {
        kind: InvariantKind::Quiver,
        words: basis.words,
        supports: el.iter().map(|e| (e.row, e.col)).collect(),
        generator_count: g,
        pair_traces,
        triple_traces,
        generator_traces,
        passes: basis.passes,
        conditioning: basis.conditioning,
    })
}

pub fn quiver_invariant_of_tuple(t: &SubspaceTuple, tol: &Tolerances) -> Result<TraceInvariant> {
    quiver_invariant(&t.block_gramian(tol)?, tol)
}
