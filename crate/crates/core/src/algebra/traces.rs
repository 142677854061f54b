//! Trace tables over a word basis and the decision they support.
//!
//! Two star-closed generator tuples are unitarily equivalent exactly when
//! the canonical word lists agree and so do the traces `tr(E_i^* E_j)`,
//! `tr(E_i^* E_j E_k)` and `tr(E_i^* A_j)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::words::{algebra_basis_words, Conditioning, Init, Word, WordBasis};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::Mismatch;
use crate::tol::Tolerances;
use crate::C64;

/// Triple traces with magnitude at or below this are not stored in dense mode.
pub const SPARSE_CUTOFF: f64 = 1e-14;

/// Star-closure hypothesis check tolerance.
pub const STAR_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TripleTrace {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: C64,
}

impl TripleTrace {
    pub fn key(&self) -> (usize, usize, usize) {
        (self.i, self.j, self.k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    /// Arbitrary generators, dense evaluation.
    Generic,
    /// Orthogonal projections onto the subspaces.
    Projection,
    /// Blocks of the orthobasis Gramian.
    Quiver,
}

impl InvariantKind {
    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Generic => "generic",
            InvariantKind::Projection => "projection",
            InvariantKind::Quiver => "quiver",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TraceInvariant {
    pub kind: InvariantKind,
    pub words: Vec<Word>,
    /// Support block of each word; empty outside quiver mode.
    pub supports: Vec<(usize, usize)>,
    pub generator_count: usize,
    /// `tr(E_i^* E_j)`, row-major `m x m`.
    pub pair_traces: Vec<C64>,
    /// Sparse `tr(E_i^* E_j E_k)`, sorted by `(i, j, k)`.
    pub triple_traces: Vec<TripleTrace>,
    /// `tr(E_i^* A_j)`, row-major `m x generator_count`.
    pub generator_traces: Vec<C64>,
    pub passes: usize,
    pub conditioning: Conditioning,
}

impl TraceInvariant {
    pub fn m(&self) -> usize {
        self.words.len()
    }

    pub fn pair(&self, i: usize, j: usize) -> C64 {
        self.pair_traces[i * self.m() + j]
    }

    pub fn generator_trace(&self, w: usize, g: usize) -> C64 {
        self.generator_traces[w * self.generator_count + g]
    }

    /// Words per support block, row-major over `(i, j)`; empty outside
    /// quiver mode.
    pub fn block_counts(&self) -> Vec<usize> {
        if self.supports.is_empty() {
            return Vec::new();
        }
        let n = self.generator_count.isqrt();
        let mut counts = vec![0; n * n];
        for &(i, j) in &self.supports {
            counts[i * n + j] += 1;
        }
        counts
    }

    /// Looks up a stored triple; absent entries are zero.
    pub fn triple(&self, i: usize, j: usize, k: usize) -> C64 {
        self.triple_traces
            .binary_search_by(|t| t.key().cmp(&(i, j, k)))
            .map_or(C64::new(0.0, 0.0), |p| self.triple_traces[p].value)
    }
}

pub(crate) fn sort_triples(t: &mut [TripleTrace]) {
    t.sort_by_key(|a| a.key());
}

/// Dense trace tables of `generators` over `basis`.
pub fn trace_tables(generators: &[Matrix], basis: &WordBasis) -> TraceInvariant {
    let e = &basis.evaluations;
    let m = e.len();
    let mut pair_traces = vec![C64::new(0.0, 0.0); m * m];
    for i in 0..m {
        for j in 0..m {
            pair_traces[i * m + j] = e[i].trace_inner(&e[j]);
        }
    }
    let mut triple_traces = Vec::new();
    for j in 0..m {
        for k in 0..m {
            let p = e[j].mul(&e[k]);
            for (i, ei) in e.iter().enumerate() {
                let value = ei.trace_inner(&p);
                if value.norm() > SPARSE_CUTOFF {
                    triple_traces.push(TripleTrace { i, j, k, value });
                }
            }
        }
    }
    sort_triples(&mut triple_traces);
    let n = generators.len();
    let mut generator_traces = vec![C64::new(0.0, 0.0); m * n];
    for i in 0..m {
        for (j, g) in generators.iter().enumerate() {
            generator_traces[i * n + j] = e[i].trace_inner(g);
        }
    }
    TraceInvariant {
        kind: InvariantKind::Generic,
        words: basis.words.clone(),
        supports: Vec::new(),
        generator_count: n,
        pair_traces,
        triple_traces,
        generator_traces,
        passes: basis.passes,
        conditioning: basis.conditioning,
    }
}

/// First disagreement between two invariants: word lists must match
/// exactly, traces within `trace_cmp * max(1, |a|, |b|)`.
pub fn compare_trace_invariants(a: &TraceInvariant, b: &TraceInvariant, tol: &Tolerances) -> Option<Mismatch> {
    if a.m() != b.m() {
        return Some(Mismatch::WordCount { left: a.m(), right: b.m() });
    }
    if let Some(index) = (0..a.m()).find(|&w| a.words[w] != b.words[w] || a.supports.get(w) != b.supports.get(w)) {
        return Some(Mismatch::Word { index });
    }
    let m = a.m();
    for i in 0..m {
        for j in 0..m {
            let (x, y) = (a.pair(i, j), b.pair(i, j));
            if !tol.close(x, y) {
                return Some(Mismatch::PairTrace { i, j, left: x, right: y });
            }
        }
    }
    let zero = C64::new(0.0, 0.0);
    let (mut p, mut q) = (0, 0);
    while p < a.triple_traces.len() || q < b.triple_traces.len() {
        let ka = a.triple_traces.get(p).map(TripleTrace::key);
        let kb = b.triple_traces.get(q).map(TripleTrace::key);
        let (key, x, y) = match (ka, kb) {
            (Some(x), Some(y)) if x == y => {
                p += 1;
                q += 1;
                (x, a.triple_traces[p - 1].value, b.triple_traces[q - 1].value)
            }
            (Some(x), Some(y)) if x.cmp(&y) == Ordering::Less => {
                p += 1;
                (x, a.triple_traces[p - 1].value, zero)
            }
            (Some(x), None) => {
                p += 1;
                (x, a.triple_traces[p - 1].value, zero)
            }
            (_, Some(y)) => {
                q += 1;
                (y, zero, b.triple_traces[q - 1].value)
            }
            (None, None) => unreachable!(),
        };
        if !tol.close(x, y) {
            return Some(Mismatch::TripleTrace { key, left: x, right: y });
        }
    }
    if a.generator_count != b.generator_count {
        return Some(Mismatch::WordCount { left: a.generator_count, right: b.generator_count });
    }
    for w in 0..m {
        for g in 0..a.generator_count {
            let (x, y) = (a.generator_trace(w, g), b.generator_trace(w, g));
            if !tol.close(x, y) {
                return Some(Mismatch::GeneratorTrace { word: w, generator: g, left: x, right: y });
            }
        }
    }
    None
}

/// Checks `a_i^* = a_{perm[i]}` for every `i`.
pub fn check_star_closure(a: &[Matrix], star_perm: &[usize]) -> Result<()> {
    if star_perm.len() != a.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: star_perm.len() });
    }
    for (i, x) in a.iter().enumerate() {
        let p = star_perm[i];
        if p >= a.len() {
            return Err(Error::IndexOutOfRange { index: p, len: a.len() });
        }
        if x.adjoint().max_abs_diff(&a[p]) >= STAR_TOL {
            return Err(Error::StarClosureViolated { index: i });
        }
    }
    Ok(())
}

/// First reason `a` and `b` fail to be simultaneously unitarily similar, or
/// `None` when they are.
pub fn unitary_tuple_mismatch(
    a: &[Matrix],
    b: &[Matrix],
    star_perm: &[usize],
    tol: &Tolerances,
) -> Result<Option<Mismatch>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    check_star_closure(a, star_perm)?;
    check_star_closure(b, star_perm)?;
    if a.first().map(Matrix::shape) != b.first().map(Matrix::shape) {
        let shape = |x: &[Matrix]| x.first().map_or((0, 0), Matrix::shape);
        return Err(Error::ShapeMismatch { expected: shape(a), found: shape(b) });
    }
    let ba = algebra_basis_words(a, Init::IdentityWord, tol)?;
    let bb = algebra_basis_words(b, Init::IdentityWord, tol)?;
    Ok(compare_trace_invariants(&trace_tables(a, &ba), &trace_tables(b, &bb), tol))
}

/// Whether some unitary `U` has `U a_i U^* = b_i` for every `i`.
pub fn unitary_tuple_equivalent(a: &[Matrix], b: &[Matrix], star_perm: &[usize], tol: &Tolerances) -> Result<bool> {
    Ok(unitary_tuple_mismatch(a, b, star_perm, tol)?.is_none())
}
