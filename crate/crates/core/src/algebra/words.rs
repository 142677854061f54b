//! Canonical word bases of finitely generated matrix algebras.
//!
//! Starting from the empty word (or from all nonzero length-one words in
//! block mode), every pass multiplies each generator, in ascending order,
//! against each word found so far and keeps the products whose evaluation is
//! independent of the current span. The loop stops after a pass that adds
//! nothing. Conjugating all generators by one isometry never changes which
//! words are kept.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::{inner, norm, Matrix};
use crate::tol::Tolerances;
use crate::C64;

/// A word in noncommuting variables. Letter `letters[0]` is applied last,
/// so `x_i w` is stored as `[i, w...]` and evaluates to `A_i w(A)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// `x_i w`.
    pub fn prepend(&self, i: usize) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(i);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Evaluates the word on `generators`; the empty word gives `I_k`.
    pub fn evaluate(&self, generators: &[Matrix], k: usize) -> Matrix {
        let mut m = Matrix::identity(k);
        for &i in self.0.iter().rev() {
            m = generators[i].mul(&m);
        }
        m
    }
}

impl fmt::Display for Word {
    /// `1` for the empty word, otherwise 1-based letters joined by `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

/// Residual norms, relative to the running scale, seen by the independence
/// test. A wide gap between the two means the word list is well determined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Conditioning {
    /// Smallest relative residual among accepted candidates.
    pub min_accepted: f64,
    /// Largest relative residual among rejected candidates.
    pub max_rejected: f64,
}

impl Default for Conditioning {
    fn default() -> Self {
        Conditioning { min_accepted: f64::INFINITY, max_rejected: 0.0 }
    }
}

/// Incrementally orthonormalized vectorizations.
pub(crate) struct IndependentSet {
    basis: Vec<Vec<C64>>,
    capacity: usize,
}

impl IndependentSet {
    pub(crate) fn new(capacity: usize) -> Self {
        IndependentSet { basis: Vec::new(), capacity }
    }

    pub(crate) fn is_full(&self) -> bool {
        self.basis.len() >= self.capacity
    }

    /// Relative residual of `v` against the span, with `scale` the norm it is
    /// measured against. Adds `v` when the residual exceeds `rank_rel`.
    pub(crate) fn try_add(&mut self, mut v: Vec<C64>, scale: f64, tol: &Tolerances, cond: &mut Conditioning) -> bool {
        if self.is_full() || !(scale > 0.0) {
            return false;
        }
        for _ in 0..2 {
            for q in &self.basis {
                let c = inner(q, &v);
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= c * y;
                }
            }
        }
        let nr = norm(&v);
        let ratio = nr / scale;
        if ratio > tol.rank_rel {
            v.iter_mut().for_each(|x| *x /= nr);
            self.basis.push(v);
            cond.min_accepted = cond.min_accepted.min(ratio);
            true
        } else {
            cond.max_rejected = cond.max_rejected.max(ratio);
            false
        }
    }
}

/// How the word list starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Init {
    /// The empty word.
    IdentityWord,
    /// Every generator with a nonzero evaluation, as a length-one word.
    LengthOneBlocks,
}

#[derive(Clone, Debug)]
pub struct WordBasis {
    pub words: Vec<Word>,
    pub evaluations: Vec<Matrix>,
    /// Passes of the outer loop, including the final one that adds nothing.
    pub passes: usize,
    pub conditioning: Conditioning,
}

impl WordBasis {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Rank of the stacked vectorized evaluations.
    pub fn rank(&self, tol: &Tolerances) -> usize {
        if self.evaluations.is_empty() {
            return 0;
        }
        let cols: Vec<Vec<C64>> = self.evaluations.iter().map(|e| e.as_slice().to_vec()).collect();
        crate::linalg::rank_tol(&Matrix::from_columns(cols[0].len(), &cols), tol)
    }

    /// Largest relative residual of `g E` against the span, over every
    /// generator `g` and evaluation `E`.
    pub fn closure_defect(&self, generators: &[Matrix], tol: &Tolerances) -> f64 {
        let mut set = IndependentSet::new(usize::MAX);
        let mut cond = Conditioning::default();
        let scale = self.evaluations.iter().map(Matrix::frobenius_norm).fold(0.0, f64::max);
        for e in &self.evaluations {
            set.try_add(e.as_slice().to_vec(), scale, &Tolerances { rank_rel: 0.0, ..*tol }, &mut cond);
        }
        let mut worst: f64 = 0.0;
        for g in generators {
            for e in &self.evaluations {
                let v = g.mul(e).as_slice().to_vec();
                worst = worst.max(residual(&set.basis, v) / scale);
            }
        }
        worst
    }
}

fn residual(basis: &[Vec<C64>], mut v: Vec<C64>) -> f64 {
    for _ in 0..2 {
        for q in basis {
            let c = inner(q, &v);
            for (x, y) in v.iter_mut().zip(q) {
                *x -= c * y;
            }
        }
    }
    norm(&v)
}

fn check_square(generators: &[Matrix]) -> Result<usize> {
    let k = generators.first().map_or(0, Matrix::rows);
    for g in generators {
        if g.shape() != (k, k) {
            return Err(Error::ShapeMismatch { expected: (k, k), found: g.shape() });
        }
    }
    Ok(k)
}

/// Canonical word basis of the unital algebra (identity init) or of the
/// algebra generated by the nonzero generators (length-one init).
pub fn algebra_basis_words(generators: &[Matrix], init: Init, tol: &Tolerances) -> Result<WordBasis> {
    let k = check_square(generators)?;
    let mut set = IndependentSet::new(k * k);
    let mut cond = Conditioning::default();
    let mut max_norm: f64 = 0.0;
    let mut words = Vec::new();
    let mut evaluations = Vec::new();

    let mut offer = |w: Word, e: Matrix, words: &mut Vec<Word>, evals: &mut Vec<Matrix>, max_norm: &mut f64| {
        let ne = e.frobenius_norm();
        let scale = max_norm.max(ne);
        if set.try_add(e.as_slice().to_vec(), scale, tol, &mut cond) {
            *max_norm = scale;
            words.push(w);
            evals.push(e);
        }
    };

    match init {
        Init::IdentityWord => offer(Word::empty(), Matrix::identity(k), &mut words, &mut evaluations, &mut max_norm),
        Init::LengthOneBlocks => {
            for (i, g) in generators.iter().enumerate() {
                if g.frobenius_norm() > tol.orth {
                    offer(Word::letter(i), g.clone(), &mut words, &mut evaluations, &mut max_norm);
                }
            }
        }
    }

    let mut passes = 0;
    let mut tested = 0;
    loop {
        let m_old = words.len();
        passes += 1;
        for (i, g) in generators.iter().enumerate() {
            // Products with words from earlier passes were already tested
            // against a smaller span, so they are dependent now.
            for j in tested..m_old {
                if words.len() >= k * k {
                    break;
                }
                let e = g.mul(&evaluations[j]);
                let w = words[j].prepend(i);
                offer(w, e, &mut words, &mut evaluations, &mut max_norm);
            }
        }
        tested = m_old;
        if words.len() == m_old {
            break;
        }
        if words.len() >= k * k {
            // A full span makes the next pass add nothing.
            passes += 1;
            break;
        }
    }
    Ok(WordBasis { words, evaluations, passes, conditioning: cond })
}

/// An `sum(r) x sum(r)` matrix supported on the single block `(row, col)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockElement {
    pub row: usize,
    pub col: usize,
    pub payload: Matrix,
}

impl BlockElement {
    pub fn to_dense(&self, ranks: &[usize]) -> Matrix {
        let offsets = crate::tuple::offsets(ranks);
        let total = ranks.iter().sum();
        let mut m = Matrix::zeros(total, total);
        m.set_block(offsets[self.row], offsets[self.col], &self.payload);
        m
    }
}

#[derive(Clone, Debug)]
pub struct BlockWordBasis {
    pub ranks: Vec<usize>,
    pub words: Vec<Word>,
    pub elements: Vec<BlockElement>,
    pub passes: usize,
    pub conditioning: Conditioning,
}

impl BlockWordBasis {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn support(&self, w: usize) -> (usize, usize) {
        (self.elements[w].row, self.elements[w].col)
    }

    /// `m_ij`: number of words supported on block `(i, j)`.
    pub fn block_counts(&self) -> Vec<usize> {
        let n = self.ranks.len();
        let mut counts = vec![0; n * n];
        for e in &self.elements {
            counts[e.row * n + e.col] += 1;
        }
        counts
    }
}

/// Block-sparse variant of [`algebra_basis_words`] with length-one init.
/// Generator `g` is the letter `g`; a product is formed only when the inner
/// block indices agree, and independence is tested within each support
/// block, against the same global scale the dense test uses.
pub fn block_algebra_basis_words(
    ranks: &[usize],
    generators: &[BlockElement],
    tol: &Tolerances,
) -> Result<BlockWordBasis> {
    let n = ranks.len();
    for g in generators {
        if g.row >= n || g.col >= n {
            return Err(Error::IndexOutOfRange { index: g.row.max(g.col), len: n });
        }
        if g.payload.shape() != (ranks[g.row], ranks[g.col]) {
            return Err(Error::ShapeMismatch { expected: (ranks[g.row], ranks[g.col]), found: g.payload.shape() });
        }
    }
    let mut sets: Vec<IndependentSet> = (0..n * n).map(|b| IndependentSet::new(ranks[b / n] * ranks[b % n])).collect();
    let mut cond = Conditioning::default();
    let mut max_norm: f64 = 0.0;
    let mut words = Vec::new();
    let mut elements: Vec<BlockElement> = Vec::new();

    let mut offer =
        |w: Word, e: BlockElement, words: &mut Vec<Word>, elements: &mut Vec<BlockElement>, max_norm: &mut f64| {
            let ne = e.payload.frobenius_norm();
            let scale = max_norm.max(ne);
            if sets[e.row * n + e.col].try_add(e.payload.as_slice().to_vec(), scale, tol, &mut cond) {
                *max_norm = scale;
                words.push(w);
                elements.push(e);
            }
        };

    for (i, g) in generators.iter().enumerate() {
        if g.payload.frobenius_norm() > tol.orth {
            offer(Word::letter(i), g.clone(), &mut words, &mut elements, &mut max_norm);
        }
    }

    let mut passes = 0;
    let mut tested = 0;
    loop {
        let m_old = words.len();
        passes += 1;
        for (i, g) in generators.iter().enumerate() {
            for j in tested..m_old {
                let e = &elements[j];
                if g.col != e.row {
                    continue;
                }
                let product = BlockElement { row: g.row, col: e.col, payload: g.payload.mul(&e.payload) };
                let w = words[j].prepend(i);
                offer(w, product, &mut words, &mut elements, &mut max_norm);
            }
        }
        tested = m_old;
        if words.len() == m_old {
            break;
        }
    }
    Ok(BlockWordBasis { ranks: ranks.to_vec(), words, elements, passes, conditioning: cond })
}
