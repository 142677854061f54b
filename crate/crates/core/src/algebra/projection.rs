//! Trace invariant of the algebra generated by the orthogonal projections
//! `P_i = T_i T_i^*` onto the subspaces.
//!
//! Traces of projection words never form `d x d` products. With
//! `C_ab = T_a^* T_b`, cyclicity gives
//! `tr(P_{a_1} ... P_{a_L}) = tr(C_{a_1 a_2} ... C_{a_{L-1} a_L} C_{a_L a_1})`,
//! a product of small `r x r` factors.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::traces::{sort_triples, InvariantKind, TraceInvariant, TripleTrace, SPARSE_CUTOFF};
use crate::algebra::words::{algebra_basis_words, Init, Word};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::tol::Tolerances;
use crate::tuple::SubspaceTuple;
use crate::C64;

/// Orthogonal projections onto the subspaces.
pub fn projections(t: &SubspaceTuple, tol: &Tolerances) -> Result<Vec<Matrix>> {
    let q = t.orthonormalized(tol)?;
    Ok(q.bases().iter().map(|b| b.mul(&b.adjoint())).collect())
}

/// `tr(X Y)` for `X` of shape `p x q` and `Y` of shape `q x p`.
fn trace_of_product(x: &Matrix, y: &Matrix) -> C64 {
    let (p, q) = x.shape();
    let (xs, ys) = (x.as_slice(), y.as_slice());
    let mut acc = C64::new(0.0, 0.0);
    for a in 0..p {
        for b in 0..q {
            acc += xs[a * q + b] * ys[b * p + a];
        }
    }
    acc
}

/// `C_ab = T_a^* T_b` for orthonormal bases `T`.
struct Factors {
    d: usize,
    n: usize,
    cross: Vec<Matrix>,
}

impl Factors {
    fn new(t: &SubspaceTuple, tol: &Tolerances) -> Result<Self> {
        let q = t.orthonormalized(tol)?;
        let n = q.len();
        let mut cross = Vec::with_capacity(n * n);
        for a in q.bases() {
            for b in q.bases() {
                cross.push(a.adjoint_mul(b));
            }
        }
        Ok(Factors { d: t.dim(), n, cross })
    }

    fn c(&self, a: usize, b: usize) -> &Matrix {
        &self.cross[a * self.n + b]
    }

    /// `C_{a_1 a_2} ... C_{a_{L-1} a_L}`; `C_aa = I` for a single letter.
    fn chain(&self, letters: &[usize]) -> Matrix {
        let mut k = self.c(letters[0], letters[0]).clone();
        for w in letters.windows(2) {
            k = k.mul(self.c(w[0], w[1]));
        }
        k
    }

    /// `tr(P_{a_1} ... P_{a_L})`, `d` for the empty word.
    fn word_trace(&self, letters: &[usize]) -> C64 {
        match (letters.first(), letters.last()) {
            (Some(&f), Some(&l)) => trace_of_product(&self.chain(letters), self.c(l, f)),
            _ => C64::new(self.d as f64, 0.0),
        }
    }
}

/// `tr(P_{a_1} ... P_{a_L})` evaluated through the small factors.
pub fn projection_word_trace(t: &SubspaceTuple, letters: &[usize], tol: &Tolerances) -> Result<C64> {
    if let Some(&bad) = letters.iter().find(|&&a| a >= t.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: t.len() });
    }
    Ok(Factors::new(t, tol)?.word_trace(letters))
}

/// Chain of a nonempty letter sequence with its end letters.
#[derive(Clone)]
struct Chain {
    k: Matrix,
    first: usize,
    last: usize,
}

pub fn projection_invariant(t: &SubspaceTuple, tol: &Tolerances) -> Result<TraceInvariant> {
    let f = Factors::new(t, tol)?;
    let p = projections(t, tol)?;
    let basis = algebra_basis_words(&p, Init::IdentityWord, tol)?;
    let words = basis.words;
    let m = words.len();
    let n = f.n;

    // Chains K(w) built incrementally: K(x_i w) = C_{i, first(w)} K(w). Words
    // only ever extend earlier words, so every suffix is already present.
    let mut chains: Vec<Option<Chain>> = Vec::with_capacity(m);
    for w in &words {
        chains.push(word_chain(&f, w, &words, &chains));
    }

    // X_ij = K(rev(w_i) w_j).
    let x_of = |i: usize, j: usize| -> Option<Chain> {
        match (&chains[i], &chains[j]) {
            (None, None) => None,
            (None, Some(cj)) => Some(cj.clone()),
            (Some(ci), None) => Some(Chain { k: ci.k.adjoint(), first: ci.last, last: ci.first }),
            (Some(ci), Some(cj)) => {
                Some(Chain { k: ci.k.adjoint().mul(f.c(ci.first, cj.first)).mul(&cj.k), first: ci.last, last: cj.last })
            }
        }
    };
    let closed = |c: &Option<Chain>| -> C64 {
        match c {
            None => C64::new(f.d as f64, 0.0),
            Some(c) => trace_of_product(&c.k, f.c(c.last, c.first)),
        }
    };

    // U_{k,a,b} = C_{a, first(w_k)} K(w_k) C_{last(w_k), b}.
    let mut u: Vec<Option<Vec<Matrix>>> = Vec::with_capacity(m);
    for c in &chains {
        u.push(c.as_ref().map(|c| {
            let mut out = Vec::with_capacity(n * n);
            for a in 0..n {
                let left = f.c(a, c.first).mul(&c.k);
                for b in 0..n {
                    out.push(left.mul(f.c(c.last, b)));
                }
            }
            out
        }));
    }

    let mut pair_traces = vec![C64::new(0.0, 0.0); m * m];
    let mut triple_traces = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let x = x_of(i, j);
            pair_traces[i * m + j] = closed(&x);
            for k in 0..m {
                let value = match (&x, &u[k]) {
                    (_, None) => closed(&x),
                    (None, Some(_)) => closed(&chains[k]),
                    (Some(x), Some(uk)) => trace_of_product(&x.k, &uk[x.last * n + x.first]),
                };
                if value.norm() > SPARSE_CUTOFF {
                    triple_traces.push(TripleTrace { i, j, k, value });
                }
            }
        }
    }
    sort_triples(&mut triple_traces);

    let mut generator_traces = vec![C64::new(0.0, 0.0); m * n];
    for i in 0..m {
        for g in 0..n {
            generator_traces[i * n + g] = match &chains[i] {
                None => closed(&Some(Chain { k: f.c(g, g).clone(), first: g, last: g })),
                Some(c) => {
                    let k = c.k.adjoint().mul(f.c(c.first, g));
                    trace_of_product(&k, f.c(g, c.last))
                }
            };
        }
    }

    Ok(TraceInvariant {
        kind: InvariantKind::Projection,
        words,
        supports: Vec::new(),
        generator_count: n,
        pair_traces,
        triple_traces,
        generator_traces,
        passes: basis.passes,
        conditioning: basis.conditioning,
    })
}

fn word_chain(f: &Factors, w: &Word, words: &[Word], done: &[Option<Chain>]) -> Option<Chain> {
    let letters = w.letters();
    let (&head, rest) = letters.split_first()?;
    if rest.is_empty() {
        return Some(Chain { k: f.c(head, head).clone(), first: head, last: head });
    }
    let suffix = words[..done.len()].iter().position(|v| v.letters() == rest);
    match suffix.and_then(|s| done[s].as_ref()) {
        Some(c) => Some(Chain { k: f.c(head, c.first).mul(&c.k), first: head, last: c.last }),
        None => Some(Chain { k: f.chain(letters), first: head, last: *letters.last().unwrap() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::traces::{compare_trace_invariants, trace_tables};
    use crate::harness::generators::{apply_isometry, random_tuple};
    use crate::lines::{bargmann_product, LineTuple};
    use crate::matrix::Field;

    #[test]
    fn single_line_in_the_plane() {
        let tol = Tolerances::default();
        let e1 = Matrix::from_rows(&[[1.0], [0.0]]);
        let t = SubspaceTuple::new(Field::Real, 2, vec![e1]).unwrap();
        let inv = projection_invariant(&t, &tol).unwrap();
        assert_eq!(inv.words, vec![Word::empty(), Word::letter(0)]);
        let expect = [2.0, 1.0, 1.0, 1.0];
        for (x, y) in inv.pair_traces.iter().zip(expect) {
            assert!((x - C64::new(y, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn rank_one_traces_are_bargmann_products() {
        let tol = Tolerances::default();
        let t = random_tuple(4, &[1; 5], Field::Complex, 8).unwrap();
        let lines = LineTuple::from_tuple(&t).unwrap();
        for cycle in [&[0usize, 1][..], &[0, 1, 2], &[3, 1, 4, 2], &[4, 0, 2, 1, 3], &[2, 2, 1]] {
            let via_traces = projection_word_trace(&t, cycle, &tol).unwrap();
            let direct = bargmann_product(&lines, cycle).unwrap();
            assert!((via_traces - direct).norm() < 1e-10);
        }
    }

    #[test]
    fn factorized_traces_match_dense_products() {
        let tol = Tolerances::default();
        for (seed, field) in [(1, Field::Real), (2, Field::Complex)] {
            let t = random_tuple(8, &[2; 4], field, seed).unwrap();
            let fast = projection_invariant(&t, &tol).unwrap();
            let p = projections(&t, &tol).unwrap();
            let basis = algebra_basis_words(&p, Init::IdentityWord, &tol).unwrap();
            let dense = trace_tables(&p, &basis);
            assert_eq!(fast.words, dense.words);
            for (x, y) in fast.pair_traces.iter().zip(&dense.pair_traces) {
                assert!((x - y).norm() < 1e-9);
            }
            for (x, y) in fast.generator_traces.iter().zip(&dense.generator_traces) {
                assert!((x - y).norm() < 1e-9);
            }
            let m = fast.m();
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        assert!((fast.triple(i, j, k) - dense.triple(i, j, k)).norm() < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn small_instance_against_dense_everywhere() {
        let tol = Tolerances::default();
        let t = random_tuple(3, &[1, 2], Field::Complex, 4).unwrap();
        let fast = projection_invariant(&t, &tol).unwrap();
        let p = projections(&t, &tol).unwrap();
        let dense = trace_tables(&p, &algebra_basis_words(&p, Init::IdentityWord, &tol).unwrap());
        assert!(compare_trace_invariants(&fast, &dense, &tol).is_none());
    }

    #[test]
    fn decides_round_trips() {
        let tol = Tolerances::default();
        let t = random_tuple(5, &[2, 1, 2], Field::Complex, 10).unwrap();
        let a = projection_invariant(&t, &tol).unwrap();
        let (moved, _) = apply_isometry(&t, 11, true);
        assert!(compare_trace_invariants(&a, &projection_invariant(&moved, &tol).unwrap(), &tol).is_none());
        let other = random_tuple(5, &[2, 1, 2], Field::Complex, 12).unwrap();
        assert!(compare_trace_invariants(&a, &projection_invariant(&other, &tol).unwrap(), &tol).is_some());
    }
}
