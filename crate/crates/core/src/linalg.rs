//! Dense kernels: Gram–Schmidt, one-sided Jacobi SVD, numerical rank and
//! nullspace, principal angles and Cholesky.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{inner, norm, Matrix};
use crate::tol::Tolerances;
use crate::C64;

const JACOBI_TOL: f64 = 1e-15;
const JACOBI_MAX_SWEEPS: usize = 80;

/// Orthonormalizes the columns of `m` by modified Gram–Schmidt with one
/// reorthogonalization pass, left to right.
pub fn orthonormalize(m: &Matrix, tol: &Tolerances) -> Result<Matrix> {
    let cols = m.columns();
    let largest = cols.iter().map(|c| norm(c)).fold(0.0, f64::max);
    let threshold = tol.rank_rel * largest;
    let mut q: Vec<Vec<C64>> = Vec::with_capacity(cols.len());
    for col in cols {
        let mut v = col;
        for _ in 0..2 {
            for e in &q {
                let coef = inner(e, &v);
                for (x, y) in v.iter_mut().zip(e) {
                    *x -= coef * y;
                }
            }
        }
        let nv = norm(&v);
        if !(nv > threshold) || largest == 0.0 {
            return Err(Error::RankDeficient { expected: m.cols(), found: rank_tol(m, tol) });
        }
        v.iter_mut().for_each(|x| *x /= nv);
        q.push(v);
    }
    Ok(Matrix::from_columns(m.rows(), &q))
}

/// Thin singular value decomposition `A = U diag(s) V^*`.
///
/// `u` is `rows x cols`, `v` is `cols x cols`, singular values are sorted in
/// decreasing order (ties keep column order). Columns of `u` belonging to zero
/// singular values are zero.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: Matrix,
    pub singular_values: Vec<f64>,
    pub v: Matrix,
}

/// One-sided (Hestenes) Jacobi SVD. Wide inputs are padded with zero rows,
/// which leaves the singular values and right singular vectors unchanged.
pub fn svd(a: &Matrix) -> Svd {
    let (m, n) = a.shape();
    let rows = m.max(n);
    let mut w: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            let mut c = a.column(j);
            c.resize(rows, C64::new(0.0, 0.0));
            c
        })
        .collect();
    let mut v: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            let mut c = vec![C64::new(0.0, 0.0); n];
            c[j] = C64::new(1.0, 0.0);
            c
        })
        .collect();

    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = w[p].iter().map(|x| x.norm_sqr()).sum();
                let beta: f64 = w[q].iter().map(|x| x.norm_sqr()).sum();
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                let gamma = inner(&w[p], &w[q]);
                let g = gamma.norm();
                if g <= JACOBI_TOL * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                // Rotate the phase of column q so that <w_p, w_q> is real and positive.
                let phase = gamma.conj() / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let sign = if zeta >= 0.0 { 1.0 } else { -1.0 };
                let t = sign / (libm::fabs(zeta) + libm::sqrt(1.0 + zeta * zeta));
                let cs = 1.0 / libm::sqrt(1.0 + t * t);
                let sn = cs * t;
                rotate(&mut w, p, q, phase, cs, sn);
                rotate(&mut v, p, q, phase, cs, sn);
            }
        }
        if !rotated {
            break;
        }
    }

    let sigmas: Vec<f64> = w.iter().map(|c| norm(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sigmas[j].partial_cmp(&sigmas[i]).unwrap_or(core::cmp::Ordering::Equal));

    let mut u = Matrix::zeros(m, n);
    let mut vm = Matrix::zeros(n, n);
    let mut singular_values = Vec::with_capacity(n);
    for (k, &j) in order.iter().enumerate() {
        let s = sigmas[j];
        singular_values.push(s);
        if s > 0.0 {
            for i in 0..m {
                u[(i, k)] = w[j][i] / s;
            }
        }
        vm.set_column(k, &v[j]);
    }
    Svd { u, singular_values, v: vm }
}

fn rotate(cols: &mut [Vec<C64>], p: usize, q: usize, phase: C64, cs: f64, sn: f64) {
    let (head, tail) = cols.split_at_mut(q);
    let cp = &mut head[p];
    let cq = &mut tail[0];
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let yq = *y * phase;
        let xp = *x;
        *x = xp * cs - yq * sn;
        *y = xp * sn + yq * cs;
    }
}

/// Number of singular values above `rank_rel * s_max`.
pub fn rank_tol(m: &Matrix, tol: &Tolerances) -> usize {
    rank_from_values(&svd(m).singular_values, tol)
}

pub(crate) fn rank_from_values(s: &[f64], tol: &Tolerances) -> usize {
    let smax = s.first().copied().unwrap_or(0.0);
    if smax == 0.0 {
        return 0;
    }
    s.iter().filter(|&&x| x > tol.rank_rel * smax).count()
}

/// Orthonormal basis of the numerical nullspace: right singular vectors whose
/// singular value is at most `rank_rel * s_max`.
pub fn nullspace(m: &Matrix, tol: &Tolerances) -> Vec<Vec<C64>> {
    let d = svd(m);
    let rank = rank_from_values(&d.singular_values, tol);
    (rank..m.cols()).map(|j| d.v.column(j)).collect()
}

/// Largest principal angle between the column spans of `a` and `b`, computed
/// from sines so that tiny angles keep full relative accuracy.
pub fn max_principal_angle(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<f64> {
    let qa = orthonormalize(a, tol)?;
    let qb = orthonormalize(b, tol)?;
    let residual = qa.sub(&qb.mul(&qb.adjoint_mul(&qa)));
    let s = svd(&residual).singular_values.first().copied().unwrap_or(0.0);
    Ok(libm::asin(s.min(1.0)))
}

/// Lower-triangular `L` with `g = L L^*` for Hermitian positive definite `g`.
pub fn cholesky(g: &Matrix) -> Result<Matrix> {
    if !g.is_square() {
        return Err(Error::ShapeMismatch { expected: (g.rows(), g.rows()), found: g.shape() });
    }
    let n = g.rows();
    let mut l = Matrix::zeros(n, n);
    for j in 0..n {
        let mut d = g[(j, j)].re;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        if !(d > 0.0) {
            return Err(Error::Singular);
        }
        let djj = libm::sqrt(d);
        l[(j, j)] = C64::new(djj, 0.0);
        for i in j + 1..n {
            let mut s = g[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / djj;
        }
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::rng::SeededSource;
    use crate::matrix::Field;

    fn gaussian(rows: usize, cols: usize, field: Field, seed: u64) -> Matrix {
        SeededSource::new(seed).gaussian_matrix(rows, cols, field)
    }

    fn gram_error(q: &Matrix) -> f64 {
        q.adjoint_mul(q).max_abs_diff(&Matrix::identity(q.cols()))
    }

    #[test]
    fn orthonormalize_identity_is_fixed() {
        let i3 = Matrix::identity(3);
        assert_eq!(orthonormalize(&i3, &Tolerances::default()).unwrap(), i3);
    }

    #[test]
    fn orthonormalize_rescales_columns() {
        let m = Matrix::from_rows(&[[2.0, 0.0], [0.0, 0.0], [0.0, 3.0]]);
        let q = orthonormalize(&m, &Tolerances::default()).unwrap();
        assert_eq!(q, Matrix::from_rows(&[[1.0, 0.0], [0.0, 0.0], [0.0, 1.0]]));
    }

    #[test]
    fn orthonormalize_gaussian_seed_1() {
        let m = gaussian(5, 2, Field::Real, 1);
        let q = orthonormalize(&m, &Tolerances::default()).unwrap();
        assert!(gram_error(&q) < 1e-12);
        // Same span: m is recovered by projecting onto q.
        let back = q.mul(&q.adjoint_mul(&m));
        assert!(back.max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn orthonormalize_rejects_dependent_columns() {
        let m = Matrix::from_rows(&[[1.0, 2.0], [1.0, 2.0]]);
        let err = orthonormalize(&m, &Tolerances::default()).unwrap_err();
        assert_eq!(err, Error::RankDeficient { expected: 2, found: 1 });
    }

    #[test]
    fn rank_examples() {
        let tol = Tolerances::default();
        assert_eq!(rank_tol(&Matrix::identity(4), &tol), 4);
        assert_eq!(rank_tol(&Matrix::zeros(3, 3), &tol), 0);
        let near = Matrix::from_rows(&[[1.0, 1.0], [1.0, 1.0 + 1e-12]]);
        // Oracle: for a symmetric 2x2 the singular values are |eigenvalues|,
        // with product |det| = 1e-12 and sum tr = 2 + 1e-12.
        let det = 1e-12;
        let s1 = 2.0 + 1e-12;
        assert!(det / s1 / s1 < tol.rank_rel);
        assert_eq!(rank_tol(&near, &tol), 1);
    }

    #[test]
    fn nullspace_examples() {
        let tol = Tolerances::default();
        assert!(nullspace(&Matrix::identity(2), &tol).is_empty());
        let row = Matrix::from_rows(&[[1.0, 1.0]]);
        let ns = nullspace(&row, &tol);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert!((v[0] + v[1]).norm() < 1e-14);
        assert!((norm(v) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn svd_reconstructs_complex_rectangular() {
        for (r, c) in [(6, 4), (3, 5), (4, 4)] {
            let a = gaussian(r, c, Field::Complex, 11 + r as u64);
            let d = svd(&a);
            let mut us = d.u.clone();
            for j in 0..c {
                for i in 0..r {
                    us[(i, j)] *= d.singular_values[j];
                }
            }
            let rec = us.mul(&d.v.adjoint());
            assert!(rec.max_abs_diff(&a) < 1e-12, "{r}x{c}");
            assert!(gram_error(&d.v) < 1e-12);
            assert!(d.singular_values.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn principal_angle_of_same_span_is_zero() {
        let tol = Tolerances::default();
        let a = gaussian(6, 2, Field::Complex, 3);
        let mix = Matrix::from_rows(&[[2.0, 1.0], [0.5, -1.0]]);
        let b = a.mul(&mix);
        assert!(max_principal_angle(&a, &b, &tol).unwrap() < 1e-14);
        let e1 = Matrix::from_rows(&[[1.0], [0.0]]);
        let e2 = Matrix::from_rows(&[[1.0], [1.0]]);
        let ang = max_principal_angle(&e1, &e2, &tol).unwrap();
        assert!((ang - core::f64::consts::FRAC_PI_4).abs() < 1e-14);
    }

    #[test]
    fn cholesky_factors_gram_matrix() {
        let a = gaussian(5, 3, Field::Complex, 9);
        let g = a.adjoint_mul(&a);
        let l = cholesky(&g).unwrap();
        assert!(l.mul(&l.adjoint()).max_abs_diff(&g) < 1e-12);
        assert_eq!(cholesky(&Matrix::zeros(2, 2)), Err(Error::Singular));
    }
}
