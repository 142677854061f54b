//! Seeded instance generators: random tuples, random isometries and
//! invertible maps, the `L_eps` line family, and plane tuples with a
//! prescribed Gramian.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::harness::rng::SeededSource;
use crate::linalg::{cholesky, orthonormalize};
use crate::lines::LineTuple;
use crate::mat2::Mat2;
use crate::matrix::{Field, Matrix};
use crate::tol::Tolerances;
use crate::tuple::SubspaceTuple;
use crate::C64;

/// Orthonormalized i.i.d. Gaussian bases.
pub fn random_tuple(d: usize, ranks: &[usize], field: Field, seed: u64) -> Result<SubspaceTuple> {
    let mut src = SeededSource::new(seed);
    random_tuple_from(d, ranks, field, &mut src)
}

pub fn random_tuple_from(d: usize, ranks: &[usize], field: Field, src: &mut SeededSource) -> Result<SubspaceTuple> {
    let tol = Tolerances::default();
    let mut bases = Vec::with_capacity(ranks.len());
    for &r in ranks {
        if r == 0 || r > d {
            return Err(Error::InvalidArgument("each rank must satisfy 1 <= r <= d"));
        }
        bases.push(orthonormalize(&src.gaussian_matrix(d, r, field), &tol)?);
    }
    SubspaceTuple::new(field, d, bases)
}

/// Orthonormalized Gaussian `d x d` matrix: orthogonal or unitary per field.
pub fn random_isometry(d: usize, field: Field, src: &mut SeededSource) -> Matrix {
    loop {
        let g = src.gaussian_matrix(d, d, field);
        if let Ok(q) = orthonormalize(&g, &Tolerances::default()) {
            return q;
        }
    }
}

/// Gaussian `d x d` matrix, redrawn until comfortably invertible.
pub fn random_invertible(d: usize, field: Field, src: &mut SeededSource) -> Matrix {
    loop {
        let g = src.gaussian_matrix(d, d, field);
        let s = crate::linalg::svd(&g).singular_values;
        if s[d - 1] > 1e-3 * s[0] {
            return g;
        }
    }
}

/// `(g A_1, ..., g A_n)` for a random isometry `g`. With `scramble`, each
/// basis is also right-multiplied by an independent random isometry so the
/// representatives change while the subspaces do not.
pub fn apply_isometry(t: &SubspaceTuple, seed: u64, scramble: bool) -> (SubspaceTuple, Matrix) {
    let mut src = SeededSource::new(seed);
    let g = random_isometry(t.dim(), t.field(), &mut src);
    let mut moved = t.transform(&g);
    if scramble {
        let bases = moved.bases().iter().map(|b| b.mul(&random_isometry(b.cols(), t.field(), &mut src))).collect();
        moved = SubspaceTuple::new(t.field(), t.dim(), bases).expect("shapes are preserved");
    }
    (moved, g)
}

/// `(X_0 A_1 G_1, ..., X_0 A_n G_n)` for random invertible `X_0` and `G_i`.
pub fn apply_gl(t: &SubspaceTuple, seed: u64) -> (SubspaceTuple, Matrix) {
    let mut src = SeededSource::new(seed);
    let x0 = random_invertible(t.dim(), t.field(), &mut src);
    let bases = t.bases().iter().map(|b| x0.mul(b).mul(&random_invertible(b.cols(), t.field(), &mut src))).collect();
    (SubspaceTuple::new(t.field(), t.dim(), bases).expect("shapes are preserved"), x0)
}

/// Lines spanned by `e_1 + e_2, e_2 + e_3, ..., e_d + eps e_1`, normalized.
/// All 2-products agree for both signs while the `d`-cycle product is
/// `eps / 2^d`.
pub fn adversarial_line_family(d: usize, eps: i32) -> Result<LineTuple> {
    if d < 3 {
        return Err(Error::DimensionTooSmall { min: 3, found: d });
    }
    if eps != 1 && eps != -1 {
        return Err(Error::InvalidArgument("eps must be +1 or -1"));
    }
    let vectors = (0..d)
        .map(|i| {
            let mut v = alloc::vec![C64::new(0.0, 0.0); d];
            v[i] = C64::new(1.0, 0.0);
            if i + 1 < d {
                v[i + 1] = C64::new(1.0, 0.0);
            } else {
                v[0] = C64::new(eps as f64, 0.0);
            }
            v
        })
        .collect();
    LineTuple::new(Field::Real, d, vectors)
}

/// Planes in `R^{2n}` whose orthonormal bases have Gramian `g`: with
/// `g = L L^T`, the columns of `L^T` realize `g`.
pub fn plane_tuple_from_gram(g: &Matrix) -> Result<SubspaceTuple> {
    if !g.is_square() || !g.rows().is_multiple_of(2) || !g.is_real() {
        return Err(Error::InvalidArgument("a plane Gramian is a real 2n x 2n matrix"));
    }
    let lt = cholesky(g)?.adjoint();
    let d = g.rows();
    let bases = (0..d / 2).map(|i| lt.block(0, 2 * i, d, 2)).collect();
    SubspaceTuple::new(Field::Real, d, bases)
}

/// Gramian with identity diagonal blocks and the given cross blocks
/// `A_ij`, `i < j`, listed in lexicographic order.
pub fn plane_gram_from_cross_blocks(n: usize, cross: &[Mat2]) -> Result<Matrix> {
    if cross.len() != n * (n - 1) / 2 {
        return Err(Error::LengthMismatch { left: n * (n - 1) / 2, right: cross.len() });
    }
    let mut g = Matrix::identity(2 * n);
    let mut it = cross.iter();
    for i in 0..n {
        for j in i + 1..n {
            let b = it.next().expect("length checked");
            for p in 0..2 {
                for q in 0..2 {
                    g[(2 * i + p, 2 * j + q)] = C64::new(b.get(p, q), 0.0);
                    g[(2 * j + q, 2 * i + p)] = C64::new(b.get(p, q), 0.0);
                }
            }
        }
    }
    Ok(g)
}

/// Uniform element of `O(2)`: a rotation, times the reflection with
/// probability 1/2.
pub fn random_o2(src: &mut SeededSource) -> Mat2 {
    let rot = Mat2::rotation(src.uniform() * 2.0 * core::f64::consts::PI);
    if src.uniform() < 0.5 {
        rot
    } else {
        rot * Mat2::REFLECT
    }
}

/// `n` planes in `R^{2n}` whose cross blocks are all scalar multiples of
/// orthogonal matrices, so every pair is isoclinic. Scales stay below
/// `0.9 / (n - 1)` which keeps the Gramian positive definite.
pub fn random_isoclinic_planes(n: usize, seed: u64) -> Result<SubspaceTuple> {
    let mut src = SeededSource::new(seed);
    let cap = 0.9 / (n.max(2) - 1) as f64;
    let cross: Vec<Mat2> = (0..n * (n - 1) / 2)
        .map(|_| {
            let c = cap * (0.3 + 0.7 * src.uniform());
            random_o2(&mut src).scale(c)
        })
        .collect();
    plane_tuple_from_gram(&plane_gram_from_cross_blocks(n, &cross)?)
}
