use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{orthonormalize, rank_tol};
use crate::matrix::{Field, Matrix};
use crate::tol::Tolerances;

/// A tuple of subspaces of `F^d`, each given by a `d x r_i` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceTuple {
    field: Field,
    dim: usize,
    bases: Vec<Matrix>,
}

impl SubspaceTuple {
    /// Checks shapes and that real tuples carry real data. Full column rank
    /// is checked by [`SubspaceTuple::validate`] since it needs tolerances.
    pub fn new(field: Field, dim: usize, bases: Vec<Matrix>) -> Result<Self> {
        for b in &bases {
            if b.rows() != dim {
                return Err(Error::ShapeMismatch { expected: (dim, b.cols()), found: b.shape() });
            }
            if b.cols() == 0 || b.cols() > dim {
                return Err(Error::InvalidArgument("each rank must satisfy 1 <= r <= d"));
            }
            if field == Field::Real && !b.is_real() {
                return Err(Error::InvalidArgument("real tuple with complex entries"));
            }
        }
        Ok(SubspaceTuple { field, dim, bases })
    }

    pub fn validate(&self, tol: &Tolerances) -> Result<()> {
        for b in &self.bases {
            let r = rank_tol(b, tol);
            if r != b.cols() {
                return Err(Error::RankDeficient { expected: b.cols(), found: r });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn bases(&self) -> &[Matrix] {
        &self.bases
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Matrix::cols).collect()
    }

    /// The common rank, if all subspaces share one.
    pub fn uniform_rank(&self) -> Option<usize> {
        let r = self.bases.first()?.cols();
        self.bases.iter().all(|b| b.cols() == r).then_some(r)
    }

    /// Same subspaces with orthonormal bases.
    pub fn orthonormalized(&self, tol: &Tolerances) -> Result<SubspaceTuple> {
        let bases = self.bases.iter().map(|b| orthonormalize(b, tol)).collect::<Result<Vec<_>>>()?;
        Ok(SubspaceTuple { field: self.field, dim: self.dim, bases })
    }

    /// Applies `g` to every basis.
    pub fn transform(&self, g: &Matrix) -> SubspaceTuple {
        let bases = self.bases.iter().map(|b| g.mul(b)).collect();
        SubspaceTuple { field: self.field, dim: g.rows(), bases }
    }

    /// The tuple `(a_{perm[0]}, ..., a_{perm[n-1]})`.
    pub fn permuted(&self, perm: &[usize]) -> SubspaceTuple {
        let bases = perm.iter().map(|&i| self.bases[i].clone()).collect();
        SubspaceTuple { field: self.field, dim: self.dim, bases }
    }

    /// Block Gramian of orthonormalized bases.
    pub fn block_gramian(&self, tol: &Tolerances) -> Result<BlockGramian> {
        let q = self.orthonormalized(tol)?;
        let n = q.len();
        let mut blocks = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                blocks.push(q.bases[i].adjoint_mul(&q.bases[j]));
            }
        }
        Ok(BlockGramian { field: self.field, ranks: self.ranks(), blocks })
    }
}

/// `n x n` array of `r_i x r_j` blocks `<basis_i, basis_j>`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockGramian {
    pub field: Field,
    pub ranks: Vec<usize>,
    /// Row-major over `(i, j)`.
    pub blocks: Vec<Matrix>,
}

impl BlockGramian {
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn block(&self, i: usize, j: usize) -> &Matrix {
        &self.blocks[i * self.len() + j]
    }

    /// Assembles the full `sum(r) x sum(r)` matrix.
    pub fn to_matrix(&self) -> Matrix {
        let total: usize = self.ranks.iter().sum();
        let offsets = offsets(&self.ranks);
        let mut m = Matrix::zeros(total, total);
        for i in 0..self.len() {
            for j in 0..self.len() {
                m.set_block(offsets[i], offsets[j], self.block(i, j));
            }
        }
        m
    }
}

pub(crate) fn offsets(ranks: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(ranks.len());
    let mut acc = 0;
    for r in ranks {
        out.push(acc);
        acc += r;
    }
    out
}
