//! Canonical Gramians for tuples of real, nowhere orthogonal planes.
//!
//! Two tuples of planes are related by an orthogonal map exactly when their
//! canonical Gramians agree. The canonical form rotates every orthobasis
//! into a normal position, determined either by the singular vectors of the
//! first cross block with distinct singular values or, when every pair is
//! isoclinic, by the orthogonal parts of the cross blocks. A final
//! lexicographic minimum removes the remaining reflection ambiguity.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::lex::lex_compare;
use crate::mat2::{polar_left_2x2, so2_inv_sqrt, svd_2x2, Mat2};
use crate::matrix::{Field, Matrix};
use crate::report::Mismatch;
use crate::tol::Tolerances;
use crate::tuple::SubspaceTuple;
use crate::C64;

/// Entrywise tolerance for comparing two canonical Gramians, as a multiple
/// of `lex_quantum`.
pub const COMPARE_QUANTA: f64 = 10.0;

const STRUCTURE_TOL: f64 = 1e-10;

/// `n x n` array of real 2x2 blocks `A_ij = Q_i^T Q_j` for orthobases `Q_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneGramian {
    n: usize,
    blocks: Vec<Mat2>,
}

impl PlaneGramian {
    /// Orthonormalizes the bases and assembles the Gramian.
    pub fn from_tuple(t: &SubspaceTuple, tol: &Tolerances) -> Result<Self> {
        if t.field() != Field::Real {
            return Err(Error::MethodNotApplicable("planes need a real tuple"));
        }
        if t.uniform_rank() != Some(2) {
            return Err(Error::MethodNotApplicable("planes need every rank to be 2"));
        }
        let g = t.block_gramian(tol)?;
        let n = g.len();
        let blocks = (0..n * n).map(|k| to_mat2(g.block(k / n, k % n))).collect();
        Ok(PlaneGramian { n, blocks })
    }

    /// Row-major blocks. Checks identity diagonal blocks, `A_ji = A_ij^T`
    /// and positive semidefiniteness.
    pub fn from_blocks(n: usize, blocks: Vec<Mat2>) -> Result<Self> {
        if blocks.len() != n * n {
            return Err(Error::LengthMismatch { left: n * n, right: blocks.len() });
        }
        let g = PlaneGramian { n, blocks };
        for i in 0..n {
            if g.block(i, i).max_abs_diff(&Mat2::IDENTITY) > STRUCTURE_TOL {
                return Err(Error::InvalidGramian);
            }
            for j in i + 1..n {
                if g.block(j, i).max_abs_diff(&g.block(i, j).transpose()) > STRUCTURE_TOL {
                    return Err(Error::InvalidGramian);
                }
            }
        }
        let mut shifted = g.to_matrix();
        for k in 0..2 * n {
            shifted[(k, k)] += C64::new(STRUCTURE_TOL, 0.0);
        }
        crate::linalg::cholesky(&shifted).map_err(|_| Error::InvalidGramian)?;
        Ok(g)
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() || !m.rows().is_multiple_of(2) || !m.is_real() {
            return Err(Error::InvalidGramian);
        }
        let n = m.rows() / 2;
        let blocks = (0..n * n).map(|k| to_mat2(&m.block(2 * (k / n), 2 * (k % n), 2, 2))).collect();
        Self::from_blocks(n, blocks)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn block(&self, i: usize, j: usize) -> Mat2 {
        self.blocks[i * self.n + j]
    }

    pub fn blocks(&self) -> &[Mat2] {
        &self.blocks
    }

    pub fn to_matrix(&self) -> Matrix {
        blocks_to_matrix(self.n, &self.blocks)
    }

    /// `diag(U_1, ..., U_n) A diag(U_1, ..., U_n)^T`.
    pub fn conjugated(&self, u: &[Mat2]) -> Result<PlaneGramian> {
        if u.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: u.len() });
        }
        let n = self.n;
        let blocks = (0..n * n).map(|k| u[k / n] * self.blocks[k] * u[k % n].transpose()).collect();
        Ok(PlaneGramian { n, blocks })
    }
}

fn to_mat2(b: &Matrix) -> Mat2 {
    Mat2::new(b[(0, 0)].re, b[(0, 1)].re, b[(1, 0)].re, b[(1, 1)].re)
}

fn blocks_to_matrix(n: usize, blocks: &[Mat2]) -> Matrix {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for (k, b) in blocks.iter().enumerate() {
        let (i, j) = (k / n, k % n);
        for p in 0..2 {
            for q in 0..2 {
                m[(2 * i + p, 2 * j + q)] = C64::new(b.get(p, q), 0.0);
            }
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Some cross block has distinct singular values.
    DistinctSv,
    /// All pairs isoclinic and some normalized block product is a reflection.
    IsoclinicReflection,
    /// All pairs isoclinic and all normalized block products are rotations.
    IsoclinicRotation,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::DistinctSv => "distinct_sv",
            Branch::IsoclinicReflection => "isoclinic_reflection",
            Branch::IsoclinicRotation => "isoclinic_rotation",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PlaneWarning {
    /// The relative singular value gap of this block is within a factor of
    /// 10 of `sv_distinct`, so the branch decision is fragile.
    NumericallyAmbiguousBranch { pair: (usize, usize), gap: f64 },
}

impl fmt::Display for PlaneWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneWarning::NumericallyAmbiguousBranch { pair, gap } => write!(
                f,
                "block ({}, {}) has relative singular value gap {gap:.3e}, close to the branch threshold",
                pair.0 + 1,
                pair.1 + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalPlaneGramian {
    pub gramian: PlaneGramian,
    pub branch: Branch,
    pub warning: Option<PlaneWarning>,
}

fn relative_gap(b: &Mat2) -> f64 {
    let (s1, s2) = b.singular_values();
    if s1 > 0.0 {
        (s1 - s2) / s1
    } else {
        0.0
    }
}

/// First off-diagonal block that is singular relative to its norm.
pub fn first_orthogonal_pair(g: &PlaneGramian, tol: &Tolerances) -> Option<(usize, usize)> {
    for i in 0..g.n {
        for j in i + 1..g.n {
            let (s1, s2) = g.block(i, j).singular_values();
            if !(s2 > tol.rank_rel * s1) || s1 == 0.0 {
                return Some((i, j));
            }
        }
    }
    None
}

/// Whether every cross block is invertible, i.e. no pair of planes contains
/// a vector orthogonal to the other plane.
pub fn check_nowhere_orthogonal(g: &PlaneGramian, tol: &Tolerances) -> bool {
    first_orthogonal_pair(g, tol).is_none()
}

pub fn canonical_plane_gramian(a: &PlaneGramian, tol: &Tolerances) -> Result<CanonicalPlaneGramian> {
    if let Some(pair) = first_orthogonal_pair(a, tol) {
        return Err(Error::NotNowhereOrthogonal { pair });
    }
    let n = a.n;
    let r = Mat2::REFLECT;

    let mut selected = None;
    let mut warning = None;
    'search: for k in 0..n {
        for l in 0..n {
            let gap = relative_gap(&a.block(k, l));
            if k != l && warning.is_none() && gap > tol.sv_distinct / 10.0 && gap < tol.sv_distinct * 10.0 {
                warning = Some(PlaneWarning::NumericallyAmbiguousBranch { pair: (k, l), gap });
            }
            if gap > tol.sv_distinct {
                selected = Some((k, l));
                break 'search;
            }
        }
    }

    if let Some((k, l)) = selected {
        let w_k = svd_2x2(&a.block(k, l)).w;
        let w_k_tilde = w_k * r;
        let frame = |wk: Mat2| -> Result<Vec<Mat2>> {
            (0..n)
                .map(|j| {
                    if j == k {
                        Ok(wk)
                    } else {
                        polar_left_2x2(&(wk.transpose() * a.block(k, j)), tol).map(|(_, w)| w)
                    }
                })
                .collect()
        };
        let d = frame(w_k)?;
        let d_tilde = frame(w_k_tilde)?;
        let x = congruence(a, |i| d[i].transpose(), |j| d[j]);
        let y = congruence(a, |i| d_tilde[i].transpose(), |j| d_tilde[j]);
        return finish(n, x, y, Branch::DistinctSv, warning, tol);
    }

    let h: Vec<Mat2> = a.blocks.iter().map(|b| b.scale(1.0 / libm::sqrt(libm::fabs(b.det())))).collect();
    let h_at = |i: usize, j: usize| h[i * n + j];
    let mut reflection = None;
    'det: for k in 0..n {
        for l in 0..n {
            let t = h_at(0, k) * h_at(k, l) * h_at(0, l).transpose();
            if t.det() < 0.0 {
                reflection = Some(t);
                break 'det;
            }
        }
    }
    let (x, branch) = match reflection {
        Some(t) => {
            let q = so2_inv_sqrt(&(t * r))?;
            let e: Vec<Mat2> = (0..n).map(|i| q * h_at(0, i)).collect();
            (congruence(a, |i| e[i], |j| e[j].transpose()), Branch::IsoclinicReflection)
        }
        None => (congruence(a, |i| h_at(0, i), |j| h_at(0, j).transpose()), Branch::IsoclinicRotation),
    };
    let sxs: Vec<Mat2> = x.iter().map(|b| r * *b * r).collect();
    finish(n, x, sxs, branch, warning, tol)
}

fn congruence(a: &PlaneGramian, left: impl Fn(usize) -> Mat2, right: impl Fn(usize) -> Mat2) -> Vec<Mat2> {
    let n = a.n;
    (0..n * n).map(|k| left(k / n) * a.blocks[k] * right(k % n)).collect()
}

fn finish(
    n: usize,
    x: Vec<Mat2>,
    y: Vec<Mat2>,
    branch: Branch,
    warning: Option<PlaneWarning>,
    tol: &Tolerances,
) -> Result<CanonicalPlaneGramian> {
    let order = lex_compare(&blocks_to_matrix(n, &x), &blocks_to_matrix(n, &y), tol)?;
    let blocks = if order == Ordering::Greater { y } else { x };
    Ok(CanonicalPlaneGramian { gramian: PlaneGramian { n, blocks }, branch, warning })
}

/// First entry where two canonical forms disagree by more than
/// `COMPARE_QUANTA * lex_quantum`.
pub fn compare_canonical(a: &CanonicalPlaneGramian, b: &CanonicalPlaneGramian, tol: &Tolerances) -> Option<Mismatch> {
    if a.branch != b.branch {
        return Some(Mismatch::Branch);
    }
    let (ma, mb) = (a.gramian.to_matrix(), b.gramian.to_matrix());
    let limit = COMPARE_QUANTA * tol.lex_quantum;
    for row in 0..ma.rows() {
        for col in 0..ma.cols() {
            let (x, y) = (ma[(row, col)].re, mb[(row, col)].re);
            if !(libm::fabs(x - y) <= limit) {
                return Some(Mismatch::CanonicalEntry { row, col, left: x, right: y });
            }
        }
    }
    None
}

pub fn planes_mismatch(a: &PlaneGramian, b: &PlaneGramian, tol: &Tolerances) -> Result<Option<Mismatch>> {
    if a.n != b.n {
        return Err(Error::LengthMismatch { left: a.n, right: b.n });
    }
    let ca = canonical_plane_gramian(a, tol)?;
    let cb = canonical_plane_gramian(b, tol)?;
    Ok(compare_canonical(&ca, &cb, tol))
}

/// Orthogonal isomorphism of two tuples of nowhere orthogonal planes.
pub fn planes_isomorphic(a: &PlaneGramian, b: &PlaneGramian, tol: &Tolerances) -> Result<bool> {
    Ok(planes_mismatch(a, b, tol)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::{
        apply_isometry, plane_gram_from_cross_blocks, random_isoclinic_planes, random_o2, random_tuple,
    };
    use crate::harness::rng::SeededSource;
    use alloc::vec;
    use nalgebra::Matrix2;

    fn gram(t: &SubspaceTuple) -> PlaneGramian {
        PlaneGramian::from_tuple(t, &Tolerances::default()).unwrap()
    }

    fn random_planes(n: usize, d: usize, seed: u64) -> PlaneGramian {
        gram(&random_tuple(d, &vec![2; n], Field::Real, seed).unwrap())
    }

    fn random_conjugation(n: usize, src: &mut SeededSource) -> Vec<Mat2> {
        (0..n).map(|_| random_o2(src)).collect()
    }

    fn max_diff(a: &PlaneGramian, b: &PlaneGramian) -> f64 {
        a.to_matrix().max_abs_diff(&b.to_matrix())
    }

    fn two_planes(t1: f64, t2: f64) -> PlaneGramian {
        let g = plane_gram_from_cross_blocks(2, &[Mat2::diag(libm::cos(t1), libm::cos(t2))]).unwrap();
        PlaneGramian::from_matrix(&g).unwrap()
    }

    // Straight transcription of the canonical form using nalgebra for every
    // decomposition, so the closed-form 2x2 kernels are not involved.
    fn oracle(a: &PlaneGramian, tol: &Tolerances) -> PlaneGramian {
        let n = a.len();
        let na = |m: Mat2| Matrix2::new(m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        let back = |m: Matrix2<f64>| Mat2::new(m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
        let r = Matrix2::new(1.0, 0.0, 0.0, -1.0);
        let blk = |i: usize, j: usize| na(a.block(i, j));
        let pick = |x: Vec<Matrix2<f64>>, y: Vec<Matrix2<f64>>| {
            let mx = blocks_to_matrix(n, &x.iter().map(|m| back(*m)).collect::<Vec<_>>());
            let my = blocks_to_matrix(n, &y.iter().map(|m| back(*m)).collect::<Vec<_>>());
            if lex_compare(&mx, &my, tol).unwrap() == Ordering::Greater {
                PlaneGramian::from_matrix(&my).unwrap()
            } else {
                PlaneGramian::from_matrix(&mx).unwrap()
            }
        };
        let mut chosen = None;
        'outer: for k in 0..n {
            for l in 0..n {
                let s = blk(k, l).svd(false, false).singular_values;
                let (s1, s2) = (s[0].max(s[1]), s[0].min(s[1]));
                if (s1 - s2) / s1 > tol.sv_distinct {
                    chosen = Some((k, l));
                    break 'outer;
                }
            }
        }
        if let Some((k, l)) = chosen {
            let svd = blk(k, l).svd(true, true);
            let mut u = svd.u.unwrap();
            if svd.singular_values[0] < svd.singular_values[1] {
                u.swap_columns(0, 1);
            }
            let polar_w = |m: Matrix2<f64>| {
                // m = P W^T with W^T = U V^T from m = U S V^T.
                let s = m.svd(true, true);
                (s.u.unwrap() * s.v_t.unwrap()).transpose()
            };
            let frame = |wk: Matrix2<f64>| -> Vec<Matrix2<f64>> {
                (0..n).map(|j| if j == k { wk } else { polar_w(wk.transpose() * blk(k, j)) }).collect()
            };
            let (d, dt) = (frame(u), frame(u * r));
            let cong = |d: &Vec<Matrix2<f64>>| -> Vec<Matrix2<f64>> {
                (0..n * n).map(|x| d[x / n].transpose() * blk(x / n, x % n) * d[x % n]).collect()
            };
            return pick(cong(&d), cong(&dt));
        }
        let h = |i: usize, j: usize| blk(i, j) / blk(i, j).determinant().abs().sqrt();
        let mut e: Vec<Matrix2<f64>> = (0..n).map(|i| h(0, i)).collect();
        'det: for k in 0..n {
            for l in 0..n {
                let t = h(0, k) * h(k, l) * h(0, l).transpose();
                if t.determinant() < 0.0 {
                    let m = t * r;
                    let theta = m[(1, 0)].atan2(m[(0, 0)]);
                    let half = -theta / 2.0;
                    let q = Matrix2::new(half.cos(), -half.sin(), half.sin(), half.cos());
                    e = (0..n).map(|i| q * h(0, i)).collect();
                    break 'det;
                }
            }
        }
        let x: Vec<_> = (0..n * n).map(|k| e[k / n] * blk(k / n, k % n) * e[k % n].transpose()).collect();
        let y: Vec<_> = x.iter().map(|m| r * m * r).collect();
        pick(x, y)
    }

    #[test]
    fn nowhere_orthogonality() {
        let tol = Tolerances::default();
        let same = PlaneGramian::from_blocks(2, vec![Mat2::IDENTITY; 4]).unwrap();
        assert!(check_nowhere_orthogonal(&same, &tol));
        let orth = PlaneGramian::from_blocks(2, vec![Mat2::IDENTITY, Mat2::ZERO, Mat2::ZERO, Mat2::IDENTITY]).unwrap();
        assert!(!check_nowhere_orthogonal(&orth, &tol));
        let half = two_planes(core::f64::consts::FRAC_PI_2, 0.0);
        assert!(!check_nowhere_orthogonal(&half, &tol));
        assert_eq!(canonical_plane_gramian(&half, &tol).unwrap_err(), Error::NotNowhereOrthogonal { pair: (0, 1) });
    }

    #[test]
    fn gramian_validation() {
        assert_eq!(PlaneGramian::from_blocks(1, vec![Mat2::diag(1.0, 2.0)]), Err(Error::InvalidGramian));
        let asym = vec![Mat2::IDENTITY, Mat2::diag(0.5, 0.5), Mat2::diag(0.4, 0.5), Mat2::IDENTITY];
        assert_eq!(PlaneGramian::from_blocks(2, asym), Err(Error::InvalidGramian));
        let indefinite = vec![Mat2::IDENTITY, Mat2::diag(2.0, 2.0), Mat2::diag(2.0, 2.0), Mat2::IDENTITY];
        assert_eq!(PlaneGramian::from_blocks(2, indefinite), Err(Error::InvalidGramian));
        let t = random_tuple(4, &[2, 3], Field::Real, 1).unwrap();
        assert!(PlaneGramian::from_tuple(&t, &Tolerances::default()).is_err());
    }

    #[test]
    fn single_plane() {
        let g = PlaneGramian::from_blocks(1, vec![Mat2::IDENTITY]).unwrap();
        let c = canonical_plane_gramian(&g, &Tolerances::default()).unwrap();
        assert_eq!(c.branch, Branch::IsoclinicRotation);
        assert!(c.gramian.block(0, 0).max_abs_diff(&Mat2::IDENTITY) < 1e-15);
    }

    #[test]
    fn principal_angle_pair_is_its_own_normal_form() {
        let tol = Tolerances::default();
        let a = two_planes(0.3, 0.7);
        let mut src = SeededSource::new(5);
        for _ in 0..20 {
            let moved = a.conjugated(&random_conjugation(2, &mut src)).unwrap();
            let c = canonical_plane_gramian(&moved, &tol).unwrap();
            assert_eq!(c.branch, Branch::DistinctSv);
            assert!(max_diff(&c.gramian, &a) < 1e-14);
            assert!(max_diff(&c.gramian, &oracle(&moved, &tol)) < 1e-14);
        }
    }

    #[test]
    fn matches_independent_transcription() {
        let tol = Tolerances::default();
        for seed in 0..60 {
            let n = 2 + (seed as usize % 3);
            let a = if seed % 2 == 0 {
                random_planes(n, 2 * n, seed)
            } else {
                gram(&random_isoclinic_planes(n, seed).unwrap())
            };
            let c = canonical_plane_gramian(&a, &tol).unwrap();
            assert!(max_diff(&c.gramian, &oracle(&a, &tol)) < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn isoclinic_pair_is_conjugation_invariant() {
        let tol = Tolerances::default();
        let a = two_planes(0.5, 0.5);
        let base = canonical_plane_gramian(&a, &tol).unwrap();
        assert_ne!(base.branch, Branch::DistinctSv);
        let mut src = SeededSource::new(6);
        for _ in 0..100 {
            let moved = a.conjugated(&random_conjugation(2, &mut src)).unwrap();
            let c = canonical_plane_gramian(&moved, &tol).unwrap();
            assert_eq!(c.branch, base.branch);
            assert!(max_diff(&c.gramian, &base.gramian) < 1e-8);
        }
    }

    #[test]
    fn conjugation_invariance_in_every_branch() {
        let tol = Tolerances::default();
        let mut seen = [false; 3];
        let mut src = SeededSource::new(7);
        for seed in 0..60u64 {
            let n = 2 + (seed as usize % 3);
            let a = if seed % 3 == 0 {
                random_planes(n, 2 * n + 1, seed)
            } else {
                gram(&random_isoclinic_planes(n, seed).unwrap())
            };
            let base = canonical_plane_gramian(&a, &tol).unwrap();
            seen[base.branch as usize] = true;
            for _ in 0..10 {
                let moved = a.conjugated(&random_conjugation(n, &mut src)).unwrap();
                let c = canonical_plane_gramian(&moved, &tol).unwrap();
                assert_eq!(c.branch, base.branch);
                assert!(max_diff(&c.gramian, &base.gramian) < 1e-8, "seed {seed}");
            }
        }
        assert_eq!(seen, [true; 3]);
    }

    #[test]
    fn isoclinic_families_never_take_the_singular_vector_branch() {
        let tol = Tolerances::default();
        for seed in 0..50 {
            let a = gram(&random_isoclinic_planes(2 + seed as usize % 3, seed).unwrap());
            let c = canonical_plane_gramian(&a, &tol).unwrap();
            assert_ne!(c.branch, Branch::DistinctSv);
            assert!(c.warning.is_none());
        }
    }

    #[test]
    fn forced_reflection() {
        // A_12 a scaled reflection, A_13 and A_23 scaled identities: the
        // normalized product over (2, 3) has determinant -1.
        let f = Mat2::REFLECT * Mat2::rotation(0.4);
        let g =
            plane_gram_from_cross_blocks(3, &[f.scale(0.3), Mat2::IDENTITY.scale(0.35), Mat2::IDENTITY.scale(0.25)])
                .unwrap();
        let a = PlaneGramian::from_matrix(&g).unwrap();
        let c = canonical_plane_gramian(&a, &Tolerances::default()).unwrap();
        assert_eq!(c.branch, Branch::IsoclinicReflection);
    }

    #[test]
    fn output_is_a_plane_gramian() {
        let tol = Tolerances::default();
        for seed in 0..20 {
            let a = random_planes(3, 6, seed);
            let c = canonical_plane_gramian(&a, &tol).unwrap();
            assert!(PlaneGramian::from_matrix(&c.gramian.to_matrix()).is_ok());
        }
    }

    #[test]
    fn decisions() {
        let tol = Tolerances::default();
        let t = random_tuple(6, &[2, 2, 2], Field::Real, 42).unwrap();
        let a = gram(&t);
        assert!(planes_isomorphic(&a, &a, &tol).unwrap());
        for seed in 0..20 {
            let (moved, _) = apply_isometry(&t, 100 + seed, true);
            assert!(planes_isomorphic(&a, &gram(&moved), &tol).unwrap());
            let other = random_planes(3, 6, 200 + seed);
            assert!(!planes_isomorphic(&a, &other, &tol).unwrap());
        }
        let short = random_planes(2, 6, 1);
        assert_eq!(planes_isomorphic(&a, &short, &tol), Err(Error::LengthMismatch { left: 3, right: 2 }));
    }

    #[test]
    fn ambiguous_gap_warns() {
        let tol = Tolerances::default();
        // Relative gap of about 5e-7, inside (1e-7, 1e-6).
        let a = two_planes(0.5, 0.5 + 5e-7 / libm::tan(0.5));
        let c = canonical_plane_gramian(&a, &tol).unwrap();
        assert_eq!(c.branch, Branch::DistinctSv);
        assert!(matches!(c.warning, Some(PlaneWarning::NumericallyAmbiguousBranch { pair: (0, 1), .. })));
    }
}
