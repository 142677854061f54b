//! Closed-form kernels on real 2×2 matrices: SVD, left polar decomposition
//! and the inverse square root of a rotation.

use core::f64::consts::PI;
use core::ops::Mul;

use crate::error::{Error, Result};
use crate::tol::Tolerances;

/// Orthogonality slack accepted by [`so2_inv_sqrt`]. Blocks reaching it are
/// rescaled cross Gramians that are isoclinic only up to the singular-value
/// gap tolerance.
pub const SO2_TOL: f64 = 1e-6;

/// A real 2×2 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[f64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1.0, 0.0], [0.0, 1.0]]);
    /// `diag(1, -1)`.
    pub const REFLECT: Mat2 = Mat2([[1.0, 0.0], [0.0, -1.0]]);
    pub const ZERO: Mat2 = Mat2([[0.0, 0.0], [0.0, 0.0]]);

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn diag(a: f64, b: f64) -> Self {
        Mat2([[a, 0.0], [0.0, b]])
    }

    /// Counter-clockwise rotation by `theta`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = libm::sincos(theta);
        Mat2([[c, -s], [s, c]])
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        let m = self.0;
        Mat2([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn det(&self) -> f64 {
        let m = self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn scale(&self, s: f64) -> Self {
        let m = self.0;
        Mat2([[m[0][0] * s, m[0][1] * s], [m[1][0] * s, m[1][1] * s]])
    }

    pub fn add(&self, o: &Mat2) -> Self {
        let (a, b) = (self.0, o.0);
        Mat2([[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]])
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == 0.0 {
            return None;
        }
        let m = self.0;
        Some(Mat2([[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]))
    }

    pub fn max_abs_diff(&self, o: &Mat2) -> f64 {
        let mut out = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                out = out.max(libm::fabs(self.0[i][j] - o.0[i][j]));
            }
        }
        out
    }

    pub fn frobenius(&self) -> f64 {
        let m = self.0;
        libm::sqrt(m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1])
    }

    /// Singular values `(s1, s2)` with `s1 >= s2 >= 0`.
    pub fn singular_values(&self) -> (f64, f64) {
        let (q, r, _, _) = self.blinn_terms();
        (q + r, libm::fabs(q - r))
    }

    // M = Rot(phi) diag(q + r, q - r) Rot(theta); returns (q, r, theta, phi).
    fn blinn_terms(&self) -> (f64, f64, f64, f64) {
        let m = self.0;
        let e = (m[0][0] + m[1][1]) / 2.0;
        let f = (m[0][0] - m[1][1]) / 2.0;
        let g = (m[1][0] + m[0][1]) / 2.0;
        let h = (m[1][0] - m[0][1]) / 2.0;
        let q = libm::hypot(e, h);
        let r = libm::hypot(f, g);
        let a1 = libm::atan2(g, f);
        let a2 = libm::atan2(h, e);
        (q, r, (a2 - a1) / 2.0, (a2 + a1) / 2.0)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, o: Mat2) -> Mat2 {
        let (a, b) = (self.0, o.0);
        Mat2([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }
}

/// `M = W diag(s1, s2) V^T`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Svd2 {
    pub w: Mat2,
    pub sigma: (f64, f64),
    pub v: Mat2,
}

/// Closed-form SVD of a real 2×2 matrix.
///
/// Sign convention: the first entry of each column of `W` whose magnitude
/// exceeds 1e-14 is positive; the matching column of `V` is flipped along
/// with it.
pub fn svd_2x2(m: &Mat2) -> Svd2 {
    let (q, r, theta, phi) = m.blinn_terms();
    let mut w = Mat2::rotation(phi);
    let mut v = Mat2::rotation(theta).transpose();
    let s1 = q + r;
    let mut s2 = q - r;
    if s2 < 0.0 {
        s2 = -s2;
        w.0[0][1] = -w.0[0][1];
        w.0[1][1] = -w.0[1][1];
    }
    for k in 0..2 {
        let lead = if libm::fabs(w.0[0][k]) > 1e-14 { w.0[0][k] } else { w.0[1][k] };
        if lead < 0.0 {
            for i in 0..2 {
                w.0[i][k] = -w.0[i][k];
                v.0[i][k] = -v.0[i][k];
            }
        }
    }
    Svd2 { w, sigma: (s1, s2), v }
}

/// Left polar decomposition `M = P W^T` with `P = (M M^T)^{1/2}` symmetric
/// positive definite and `W` orthogonal.
pub fn polar_left_2x2(m: &Mat2, tol: &Tolerances) -> Result<(Mat2, Mat2)> {
    let (s1, s2) = m.singular_values();
    if !(s2 > tol.rank_rel * s1) {
        return Err(Error::Singular);
    }
    let mmt = *m * m.transpose();
    let abs_det = libm::fabs(m.det());
    // sqrt of an SPD 2x2: (X + sqrt(det X) I) / sqrt(tr X + 2 sqrt(det X)).
    let p = mmt.add(&Mat2::IDENTITY.scale(abs_det)).scale(1.0 / libm::sqrt(mmt.trace() + 2.0 * abs_det));
    let p_inv = p.inverse().ok_or(Error::Singular)?;
    let w = m.transpose() * p_inv;
    Ok((p, w))
}

/// The principal inverse square root of a rotation: `R(-theta/2)` for
/// `M = R(theta)`, `theta` in `(-pi, pi]`.
pub fn so2_inv_sqrt(m: &Mat2) -> Result<Mat2> {
    let gram = m.transpose() * *m;
    if gram.max_abs_diff(&Mat2::IDENTITY) > SO2_TOL || libm::fabs(m.det() - 1.0) > SO2_TOL {
        return Err(Error::NotSO2);
    }
    let mut theta = libm::atan2(m.0[1][0], m.0[0][0]);
    if theta <= -PI {
        theta = PI;
    }
    Ok(Mat2::rotation(-theta / 2.0))
}
