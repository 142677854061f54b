//! Isomorphism up to reordering, by exhaustion over `S_n` for small `n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{subspaces_unitary_isomorphic, Method};
use crate::error::{Error, Result};
use crate::glauto::{gl_isomorphism, gl_isomorphism_randomized, stabilizer_dimension};
use crate::linalg::{rank_tol, svd};
use crate::matrix::Matrix;
use crate::tol::Tolerances;
use crate::tuple::SubspaceTuple;

/// Largest `n` searched.
pub const MAX_BRUTE_FORCE_N: usize = 8;

/// Seed of the random solution used when the first tuple has a nontrivial
/// stabilizer.
const RANDOMIZED_SEED: u64 = 0x5eed;

/// Cosines of principal angles closer than this count as equal in the
/// isometry prefilter.
const ANGLE_PREFILTER_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Isometry,
    Gl,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::Isometry => "isometry",
            Group::Gl => "gl",
        }
    }

    pub fn parse(s: &str) -> Option<Group> {
        [Group::Isometry, Group::Gl].into_iter().find(|g| g.name() == s)
    }
}

/// Pairwise data preserved by the group: principal-angle cosines for
/// isometries, `dim(U_i + U_j)` for invertible maps.
enum PairTable {
    Cosines(Vec<Vec<f64>>),
    SumDims(Vec<usize>),
}

impl PairTable {
    fn new(t: &SubspaceTuple, group: Group, tol: &Tolerances) -> Result<PairTable> {
        let n = t.len();
        let q = t.orthonormalized(tol)?;
        let b = q.bases();
        Ok(match group {
            Group::Isometry => {
                PairTable::Cosines((0..n * n).map(|p| svd(&b[p / n].adjoint_mul(&b[p % n])).singular_values).collect())
            }
            Group::Gl => PairTable::SumDims(
                (0..n * n).map(|p| rank_tol(&Matrix::hstack(&[b[p / n].clone(), b[p % n].clone()]), tol)).collect(),
            ),
        })
    }

    fn agrees(&self, other: &PairTable, p: usize, q: usize) -> bool {
        match (self, other) {
            (PairTable::Cosines(x), PairTable::Cosines(y)) => {
                x[p].len() == y[q].len() && x[p].iter().zip(&y[q]).all(|(s, t)| (s - t).abs() <= ANGLE_PREFILTER_TOL)
            }
            (PairTable::SumDims(x), PairTable::SumDims(y)) => x[p] == y[q],
            _ => false,
        }
    }
}

/// First permutation `pi` in lexicographic order such that `a_i` and
/// `b_{pi(i)}` are related by one common group element for all `i`, or `None`.
///
/// Partial permutations whose pairwise data disagree are pruned; the order
/// of the surviving candidates is unchanged, so the answer is the same as a
/// plain scan of `S_n`.
pub fn brute_force_permutation_isomorphic(
    a: &SubspaceTuple,
    b: &SubspaceTuple,
    group: Group,
    tol: &Tolerances,
) -> Result<Option<Vec<usize>>> {
    let n = a.len();
    if n > MAX_BRUTE_FORCE_N {
        return Err(Error::TooLarge { n, max: MAX_BRUTE_FORCE_N });
    }
    if b.len() != n {
        return Err(Error::LengthMismatch { left: n, right: b.len() });
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if group == Group::Gl && a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    let mut ra = a.ranks();
    let mut rb = b.ranks();
    ra.sort_unstable();
    rb.sort_unstable();
    if ra != rb {
        return Ok(None);
    }

    let ta = PairTable::new(a, group, tol)?;
    let tb = PairTable::new(b, group, tol)?;
    let trivially_stabilized = group == Group::Gl && stabilizer_dimension(a, tol)?.trivially_stabilized;
    let accepts = |perm: &[usize]| -> Result<bool> {
        let pb = b.permuted(perm);
        match group {
            Group::Isometry => Ok(subspaces_unitary_isomorphic(a, &pb, Method::Auto, tol)?.isomorphic),
            Group::Gl if trivially_stabilized => Ok(gl_isomorphism(a, &pb, tol)?.is_isomorphic()),
            Group::Gl => Ok(gl_isomorphism_randomized(a, &pb, RANDOMIZED_SEED, tol)?.is_isomorphic()),
        }
    };

    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(n, &ta, &tb, &a.ranks(), &b.ranks(), &mut perm, &mut used, &accepts)
}

#[allow(clippy::too_many_arguments)]
fn search(
    n: usize,
    ta: &PairTable,
    tb: &PairTable,
    ra: &[usize],
    rb: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    accepts: &dyn Fn(&[usize]) -> Result<bool>,
) -> Result<Option<Vec<usize>>> {
    let i = perm.len();
    if i == n {
        return Ok(if accepts(perm)? { Some(perm.clone()) } else { None });
    }
    for j in 0..n {
        if used[j] || ra[i] != rb[j] {
            continue;
        }
        let consistent = ta.agrees(tb, i * n + i, j * n + j)
            && perm.iter().enumerate().all(|(k, &pk)| ta.agrees(tb, k * n + i, pk * n + j));
        if !consistent {
            continue;
        }
        perm.push(j);
        used[j] = true;
        let found = search(n, ta, tb, ra, rb, perm, used, accepts)?;
        perm.pop();
        used[j] = false;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
